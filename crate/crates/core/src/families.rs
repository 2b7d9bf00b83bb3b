//! The exceptional surgery diagrams for the torus knots T(s, −(sn − 1)), their
//! closed-form invariants, and the census of tight contact structures on
//! L(ns² − s + 1, s²).
//!
//! An exceptional diagram has s + 3 surgered components, listed bottom to top:
//!
//! | id            | framing  | contact | rot      |
//! |---------------|----------|---------|----------|
//! | `mu1`, `mu2`  | 0        | +1      | 0        |
//! | `nu1`…`nu{s−1}` | −3     | −1      | 1        |
//! | `alpha`       | −(s + 1) | −1      | qStab − pStab |
//! | `beta`        | −n       | −1      | l − k    |
//!
//! Pairwise linking is −1 except: ν–ν pairs link −2, β links only α (−1).
//! The distinguished knot `L` has tb₀ = −1, rot₀ = 0 and links every
//! component −1 except β.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagram::{DistinguishedKnot, LegendrianComponent, SurgeryDiagram};
use crate::error::{Error, Result};
use crate::exactla::Rational;
use crate::invariants;
use crate::lens::{self, LensSpace};

pub const KNOT_ID: &str = "L";

/// Stabilization parameters of one exceptional diagram.
///
/// `k + l = n − 2` counts the zigzags on the β component and
/// `p_stab + q_stab = s − 1` (with `q_stab ≥ 1`) those on α.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyParams {
    pub n: i64,
    pub s: i64,
    pub k: i64,
    pub l: i64,
    pub p_stab: i64,
    pub q_stab: i64,
}

impl FamilyParams {
    pub fn new(n: i64, s: i64, k: i64, l: i64, p_stab: i64, q_stab: i64) -> Result<Self> {
        let fp = FamilyParams { n, s, k, l, p_stab, q_stab };
        fp.check()?;
        Ok(fp)
    }

    pub fn check(&self) -> Result<()> {
        let FamilyParams { n, s, k, l, p_stab, q_stab } = *self;
        let bad = |msg: String| Err(Error::InvalidParams(msg));
        if n < 2 || s < 2 {
            return bad(format!("need n >= 2 and s >= 2, got n = {n}, s = {s}"));
        }
        if k < 0 || l < 0 || k + l != n - 2 {
            return bad(format!("need k, l >= 0 with k + l = n - 2 = {}, got k = {k}, l = {l}", n - 2));
        }
        if p_stab < 0 || q_stab < 1 || p_stab + q_stab != s - 1 {
            return bad(format!(
                "need pStab >= 0, qStab >= 1 with pStab + qStab = s - 1 = {}, got pStab = {p_stab}, qStab = {q_stab}",
                s - 1
            ));
        }
        Ok(())
    }

    /// Every valid parameter set for (n, s), ordered by k, then pStab.
    pub fn enumerate(n: i64, s: i64) -> Vec<FamilyParams> {
        if n < 2 || s < 2 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for k in 0..=n - 2 {
            for p_stab in 0..=s - 2 {
                out.push(FamilyParams { n, s, k, l: n - 2 - k, p_stab, q_stab: s - 1 - p_stab });
            }
        }
        out
    }

    /// ns² − s + 1.
    pub fn lens_order(&self) -> i64 {
        lens_order(self.n, self.s)
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} s={} k={} l={} pStab={} qStab={}", self.n, self.s, self.k, self.l, self.p_stab, self.q_stab)
    }
}

pub fn lens_order(n: i64, s: i64) -> i64 {
    n * s * s - s + 1
}

/// tb of the maximal realizations of T(s, −(sn − 1)), and of the exceptional ones.
pub fn max_tb(n: i64, s: i64) -> i64 {
    -s * (s * n - 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StandardRealization {
    pub tb: i64,
    pub rot: i64,
}

/// The Legendrian realizations with maximal tb in the tight S³.
///
/// For s ≥ 2 the rotation numbers are −(n−1)s+1, (n−1)s−1 and js ± 1 for
/// j = −(n−3), −(n−5), …, n−3. For s = 1 they are the stabilized unknots with
/// rot ∈ {−n+2, −n+4, …, n−2}.
pub fn standard_realizations(n: i64, s: i64) -> Result<Vec<StandardRealization>> {
    if n < 2 || s < 1 {
        return Err(Error::InvalidParams(format!("need n >= 2 and s >= 1, got n = {n}, s = {s}")));
    }
    let tb = max_tb(n, s);
    let rots: Vec<i64> = if s == 1 {
        (0..n - 1).map(|i| -n + 2 + 2 * i).collect()
    } else {
        let mut r = vec![-(n - 1) * s + 1];
        let mut j = -(n - 3);
        while j <= n - 3 {
            r.push(j * s - 1);
            r.push(j * s + 1);
            j += 2;
        }
        r.push((n - 1) * s - 1);
        r
    };
    Ok(rots.into_iter().map(|rot| StandardRealization { tb, rot }).collect())
}

/// The one-component diagram of Legendrian surgery on a standard realization.
pub fn standard_diagram(r: StandardRealization) -> SurgeryDiagram {
    SurgeryDiagram::new(vec![LegendrianComponent::new("K", r.tb, r.rot, -1)])
}

/// The contact surgery diagram on S³ carrying the exceptional knot `L`.
pub fn exceptional_diagram(fp: &FamilyParams) -> Result<SurgeryDiagram> {
    fp.check()?;
    let FamilyParams { n, s, k, l, p_stab, q_stab } = *fp;

    let nus: Vec<String> = (1..s).map(|i| format!("nu{i}")).collect();
    let mut components = vec![LegendrianComponent::new("mu1", -1, 0, 1), LegendrianComponent::new("mu2", -1, 0, 1)];
    components.extend(nus.iter().map(|id| LegendrianComponent::new(id.clone(), -2, 1, -1)));
    components.push(LegendrianComponent::new("alpha", -s, q_stab - p_stab, -1));
    components.push(LegendrianComponent::new("beta", -n + 1, l - k, -1));

    let lk_between = |a: &str, b: &str| -> i64 {
        let nu = |x: &str| x.starts_with("nu");
        match (a, b) {
            (_, "beta") | ("beta", _) => {
                if a == "alpha" || b == "alpha" {
                    -1
                } else {
                    0
                }
            }
            _ if nu(a) && nu(b) => -2,
            _ => -1,
        }
    };

    let mut d = SurgeryDiagram::new(components.clone());
    for (i, a) in components.iter().enumerate() {
        for b in &components[i + 1..] {
            d = d.link(&a.id, &b.id, lk_between(&a.id, &b.id));
        }
    }
    let lk = components.iter().map(|c| (c.id.clone(), if c.id == "beta" { 0 } else { -1 })).collect();
    Ok(d.with_knot(DistinguishedKnot { id: KNOT_ID.into(), tb0: -1, rot0: 0, lk }))
}

/// The exceptional diagram with Legendrian surgery along `L` included; `L`
/// becomes the first component. Its boundary is L(ns² − s + 1, s²).
pub fn surgered_exceptional_diagram(fp: &FamilyParams) -> Result<SurgeryDiagram> {
    exceptional_diagram(fp)?.promote_knot(-1)
}

/// Closed forms for the invariants of an exceptional diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalExpectations {
    pub chi: i64,
    pub sigma: i64,
    pub det_m: i64,
    pub det_m0: i64,
    /// Solution of M·x = rot.
    pub x: Vec<i64>,
    pub c_squared: Rational,
    pub d3: Rational,
    pub tb: i64,
    /// rot of `L` in the surgered S³, reduced mod ns² − s + 1.
    pub rot_mod: i64,
    /// Euler class on the lens space as a residue times [μ_L].
    pub euler: i64,
}

pub fn exceptional_expectations(fp: &FamilyParams) -> Result<ExceptionalExpectations> {
    fp.check()?;
    let FamilyParams { n, s, k, l, p_stab: p, q_stab: q } = *fp;
    let sign = if (s - 1) % 2 == 0 { 1 } else { -1 };
    let u = k - l + 2 * q * n - 1;
    let mut x = vec![-1 - s * u, -1 - s * u];
    x.extend(std::iter::repeat_n(u, (s - 1) as usize));
    x.push(u + 1);
    x.push(-2 * q);
    let order = lens_order(n, s);
    let euler = ((p - q + 1) * n * s + (l - k) * s).rem_euclid(order);
    Ok(ExceptionalExpectations {
        chi: 4 + s,
        sigma: 1 - s,
        det_m: sign,
        det_m0: sign * (1 - s * (s * n - 1)),
        x,
        c_squared: Rational::from(4 * n * q * q + 4 * q * (k - l) - s + 1),
        d3: Rational::from(n * q * q + q * (k - l)) - Rational::new(1, 2),
        tb: max_tb(n, s),
        rot_mod: euler,
        euler,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StandardEntry {
    pub tb: i64,
    pub rot: i64,
    /// d₃ of the contact structure on the lens space.
    pub d3: Rational,
    pub residue: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalEntry {
    pub params: FamilyParams,
    /// d₃ of the contact structure on the lens space.
    pub d3: Rational,
    pub residue: i64,
}

/// Euler classes of the tight structures realized by Legendrian surgery on
/// standard and exceptional realizations, against the expected count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TightStructureCensus {
    pub n: i64,
    pub s: i64,
    pub lens: LensSpace,
    pub standard: Vec<StandardEntry>,
    pub exceptional: Vec<ExceptionalEntry>,
    pub expected_count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CensusFailure {
    Collision { first: String, second: String, residue: i64 },
    CountMismatch { found: u64, expected: u64 },
}

impl fmt::Display for CensusFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CensusFailure::Collision { first, second, residue } => {
                write!(f, "collision: {first} and {second} both have Euler residue {residue}")
            }
            CensusFailure::CountMismatch { found, expected } => {
                write!(f, "count mismatch: {found} structures found, {expected} expected")
            }
        }
    }
}

impl TightStructureCensus {
    pub fn len(&self) -> usize {
        self.standard.len() + self.exceptional.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// (label, residue) for every row, standard rows first.
    pub fn labeled_residues(&self) -> Vec<(String, i64)> {
        let std_rows = self.standard.iter().map(|e| (format!("standard rot={}", e.rot), e.residue));
        let exc_rows = self.exceptional.iter().map(|e| (format!("exceptional {}", e.params), e.residue));
        std_rows.chain(exc_rows).collect()
    }

    pub fn failures(&self) -> Vec<CensusFailure> {
        let mut out = Vec::new();
        let rows = self.labeled_residues();
        for (i, (a, ra)) in rows.iter().enumerate() {
            for (b, rb) in &rows[i + 1..] {
                if ra == rb {
                    out.push(CensusFailure::Collision { first: a.clone(), second: b.clone(), residue: *ra });
                }
            }
        }
        if rows.len() as u64 != self.expected_count {
            out.push(CensusFailure::CountMismatch { found: rows.len() as u64, expected: self.expected_count });
        }
        out
    }

    pub fn passes(&self) -> bool {
        self.failures().is_empty()
    }
}

/// Builds the census for L(ns² − s + 1, s²); s = 1 has standard rows only.
pub fn census(n: i64, s: i64) -> Result<TightStructureCensus> {
    let standard_rs = standard_realizations(n, s)?;
    let order = lens_order(n, s);
    let lens = LensSpace::family(n as u64, s as u64)?;

    let standard = standard_rs
        .iter()
        .map(|&r| {
            Ok(StandardEntry {
                tb: r.tb,
                rot: r.rot,
                d3: invariants::d3(&standard_diagram(r))?,
                residue: r.rot.rem_euclid(order),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let exceptional = FamilyParams::enumerate(n, s)
        .into_iter()
        .map(|fp| {
            let d3 = invariants::d3(&surgered_exceptional_diagram(&fp)?)?;
            Ok(ExceptionalEntry { params: fp, d3, residue: exceptional_expectations(&fp)?.euler })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(TightStructureCensus { n, s, lens, standard, exceptional, expected_count: lens::tight_count(lens) })
}

/// Censuses for 2 ≤ n ≤ n_max and 1 ≤ s ≤ s_max, in (n, s) order.
pub fn census_grid(n_max: i64, s_max: i64) -> Result<Vec<TightStructureCensus>> {
    let cells: Vec<(i64, i64)> = (2..=n_max).flat_map(|n| (1..=s_max).map(move |s| (n, s))).collect();
    cells.into_par_iter().map(|(n, s)| census(n, s)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub name: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistinctnessBounds {
    pub e_min: i64,
    pub e_max: i64,
    pub checks: Vec<BoundCheck>,
}

impl DistinctnessBounds {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// e(k, l, p, q) = (p − q + 1)ns + (l − k)s before reduction.
pub fn euler_number(fp: &FamilyParams) -> i64 {
    (fp.p_stab - fp.q_stab + 1) * fp.n * fp.s + (fp.l - fp.k) * fp.s
}

/// Evaluates the inequalities that separate the exceptional Euler numbers
/// from one another and from the standard ones, modulo ns² − s + 1.
pub fn distinctness_bounds(n: i64, s: i64) -> Result<DistinctnessBounds> {
    if n < 2 || s < 2 {
        return Err(Error::InvalidParams(format!("need n >= 2 and s >= 2, got n = {n}, s = {s}")));
    }
    let order = lens_order(n, s);
    let e_min = -n * s * s + (n + 2) * s;
    let e_max = n * s * s - (n + 2) * s;
    let es: Vec<i64> = FamilyParams::enumerate(n, s).iter().map(euler_number).collect();

    let mut sorted = es.clone();
    sorted.sort_unstable();
    sorted.dedup();

    let lower = e_min + order;
    let upper = -(n - 1) * s + 1 + order;
    let checks = vec![
        ("range", es.iter().all(|e| (e_min..=e_max).contains(e))),
        ("width", e_max - e_min < 2 * order),
        ("distinct-in-z", sorted.len() == es.len()),
        ("lower-gap", lower == (n + 1) * s + 1 && lower > (n - 1) * s - 1),
        ("upper-gap", upper == n * s * s - n * s + 2 && upper > e_max),
        ("negative-residues-1-mod-s", es.iter().filter(|&&e| e < 0).all(|e| (e + order).rem_euclid(s) == 1)),
        ("nonnegative-divisible-by-s", es.iter().filter(|&&e| e >= 0).all(|e| e % s == 0)),
    ];
    Ok(DistinctnessBounds {
        e_min,
        e_max,
        checks: checks.into_iter().map(|(name, passed)| BoundCheck { name: name.into(), passed }).collect(),
    })
}
