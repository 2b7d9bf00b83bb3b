use legsurg_core::exactla::{self, Rational};
use legsurg_core::families::{self, FamilyParams};
use legsurg_core::invariants;
use num_bigint::BigInt;

fn grid() -> impl Iterator<Item = FamilyParams> {
    (2..=6).flat_map(|n| (2..=6).flat_map(move |s| FamilyParams::enumerate(n, s)))
}

#[test]
fn generic_pipeline_matches_closed_forms() {
    for fp in grid() {
        let d = families::exceptional_diagram(&fp).unwrap();
        let e = families::exceptional_expectations(&fp).unwrap();
        let m = d.linking_matrix().unwrap();

        assert_eq!(exactla::det(&m).unwrap(), BigInt::from(e.det_m), "{fp}");
        assert_eq!(exactla::det(&d.extended_matrix().unwrap()).unwrap(), BigInt::from(e.det_m0), "{fp}");
        assert_eq!(exactla::signature(&m).unwrap(), e.sigma, "{fp}");
        assert_eq!(d.chi(), e.chi, "{fp}");

        let x = exactla::solve_integer_rhs(&m, &d.rot_vector()).unwrap();
        let expected_x: Vec<Rational> = e.x.iter().map(|&v| Rational::from(v)).collect();
        assert_eq!(x, expected_x, "{fp}");

        assert_eq!(invariants::c_squared(&d).unwrap(), e.c_squared, "{fp}");
        let d3 = invariants::d3(&d).unwrap();
        assert_eq!(d3, e.d3, "{fp}");
        assert!(d3 > Rational::new(-1, 2), "{fp}");
        assert_eq!(invariants::tb_surgered(&d).unwrap(), Rational::from(e.tb), "{fp}");

        let order = fp.lens_order();
        let rot = invariants::rot_surgered(&d).unwrap().to_integer().expect("integral rot");
        let rot = i64::try_from(rot).unwrap().rem_euclid(order);
        assert_eq!(rot, e.rot_mod, "{fp}");

        let surgered = families::surgered_exceptional_diagram(&fp).unwrap();
        let class = invariants::euler_class(&surgered).unwrap();
        let cyc = class.cyclic.expect("cyclic H1");
        assert_eq!(cyc.order, BigInt::from(order), "{fp}");
        assert_eq!(cyc.generator, families::KNOT_ID);
        assert_eq!(cyc.residue, BigInt::from(e.euler), "{fp}");
    }
}

#[test]
fn lens_space_d3_of_exceptional_structures() {
    // The L(7,4) exceptional structure: cancelling one (+1)-surgery leaves the
    // reduced diagram with d3 = 0; the promoted six-component diagram must agree.
    let fp = FamilyParams::new(2, 2, 0, 0, 0, 1).unwrap();
    let d = families::surgered_exceptional_diagram(&fp).unwrap();
    assert_eq!(invariants::d3(&d).unwrap(), Rational::from(0));
}

#[test]
fn standard_realizations_through_generic_pipeline() {
    for n in 2..=6 {
        for s in 1..=6 {
            let order = families::lens_order(n, s);
            for r in families::standard_realizations(n, s).unwrap() {
                let d = families::standard_diagram(r);
                let e = invariants::euler_class(&d).unwrap();
                let c = e.cyclic.unwrap();
                assert_eq!(c.order, BigInt::from(order));
                assert_eq!(c.residue, BigInt::from(r.rot.rem_euclid(order)));
            }
        }
    }
}

#[test]
fn bounds_hold_on_grid() {
    for n in 2..=8 {
        for s in 2..=8 {
            let b = families::distinctness_bounds(n, s).unwrap();
            assert!(b.all_pass(), "n={n} s={s}: {b:?}");
        }
    }
}

#[test]
fn census_grid_for_s_at_least_two() {
    for c in families::census_grid(6, 6).unwrap() {
        if c.s == 1 {
            continue;
        }
        assert_eq!(c.standard.len() as i64, 2 * (c.n - 1));
        assert_eq!(c.exceptional.len() as i64, (c.s - 1) * (c.n - 1));
        assert!(c.passes(), "n={} s={}: {:?}", c.n, c.s, c.failures());
    }
}

#[test]
fn emitted_family_diagram_parses_back() {
    let fp = FamilyParams::new(4, 3, 1, 1, 1, 1).unwrap();
    let d = families::exceptional_diagram(&fp).unwrap();
    let back = legsurg_core::SurgeryDiagram::from_json(&d.to_json_pretty()).unwrap();
    assert_eq!(back, d);
    assert!(back.validate().is_empty());
}
