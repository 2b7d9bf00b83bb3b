use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{det, IntMatrix};
use crate::error::{Error, Result};

/// `u · m · v = d` with `u`, `v` unimodular and `d` diagonal in Smith form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// The diagonal d₁ | d₂ | … of `d`, `min(rows, cols)` entries, zeros last.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().iter().filter(|x| !x.is_zero()).count()
    }

    /// Checks every certificate property against the original matrix.
    pub fn verify(&self, m: &IntMatrix) -> bool {
        let (r, c) = (m.rows(), m.cols());
        if self.u.rows() != r || !self.u.is_square() || self.v.rows() != c || !self.v.is_square() {
            return false;
        }
        if self.d.rows() != r || self.d.cols() != c {
            return false;
        }
        if &(&self.u * m) * &self.v != self.d {
            return false;
        }
        let unimodular = |x: &IntMatrix| det(x).map(|d| d.abs().is_one()).unwrap_or(false);
        if !unimodular(&self.u) || !unimodular(&self.v) {
            return false;
        }
        for i in 0..r {
            for j in 0..c {
                if i != j && !self.d[(i, j)].is_zero() {
                    return false;
                }
            }
        }
        let f = self.invariant_factors();
        if f.iter().any(|x| x.is_negative()) {
            return false;
        }
        f.windows(2).all(|w| if w[0].is_zero() { w[1].is_zero() } else { w[1].is_multiple_of(&w[0]) })
    }
}

/// Smith normal form by elementary row and column operations.
///
/// The pivot is always an entry of minimal nonzero absolute value in the
/// remaining block. Entries the pivot does not divide are folded into the
/// pivot row, which forces a strictly smaller pivot on the next pass, so the
/// divisibility chain holds on exit.
pub fn smith(m: &IntMatrix) -> SmithDecomposition {
    let (r, c) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);

    'outer: for t in 0..r.min(c) {
        loop {
            let Some((pi, pj)) = min_entry(&a, t) else {
                break 'outer;
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut dirty = false;
            for i in t + 1..r {
                let q = &a[(i, t)] / &a[(t, t)];
                let neg_q = -q;
                a.add_row_multiple(i, t, &neg_q);
                u.add_row_multiple(i, t, &neg_q);
                dirty |= !a[(i, t)].is_zero();
            }
            if dirty {
                continue;
            }
            for j in t + 1..c {
                let q = &a[(t, j)] / &a[(t, t)];
                let neg_q = -q;
                a.add_col_multiple(j, t, &neg_q);
                v.add_col_multiple(j, t, &neg_q);
                dirty |= !a[(t, j)].is_zero();
            }
            if dirty {
                continue;
            }

            let pivot = a[(t, t)].clone();
            let offender = (t + 1..r).find(|&i| (t + 1..c).any(|j| !a[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        // Sign fixed on the column side so that `u`, and with it the
        // cokernel coordinates, is untouched.
        if a[(t, t)].is_negative() {
            a.negate_col(t);
            v.negate_col(t);
        }
    }

    let out = SmithDecomposition { d: a, u, v };
    // Cheap next to the reduction itself, so checked in every build.
    assert!(out.verify(m), "invalid Smith certificate for {m}");
    out
}

fn min_entry(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(_, b)| ax < *b) {
                best = Some(((i, j), ax));
            }
        }
    }
    best.map(|(idx, _)| idx)
}

/// The image of a vector in `coker(m)`, written in Smith coordinates.
///
/// `orders[i]` is the order of the i-th cyclic summand (0 for a free ℤ
/// summand); `coords[i]` lies in `[0, orders[i])` for finite summands. Unit
/// factors are dropped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CokernelClass {
    #[serde(with = "bigint_vec")]
    pub orders: Vec<BigInt>,
    #[serde(with = "bigint_vec")]
    pub coords: Vec<BigInt>,
}

impl CokernelClass {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

/// Presentation of `ℤ^rows / im(m)` from a Smith decomposition.
///
/// With `u·m·v = d`, the map `x ↦ u·x` carries `im(m)` onto `im(d)`, so the
/// rows of `u` give coordinates in `⊕ ℤ/dᵢ`.
#[derive(Debug, Clone)]
pub struct Cokernel {
    u: IntMatrix,
    /// (row of `u`, order) for each non-unit summand.
    summands: Vec<(usize, BigInt)>,
}

impl Cokernel {
    pub fn new(m: &IntMatrix) -> Self {
        let snf = smith(m);
        Self::from_smith(&snf)
    }

    pub fn from_smith(snf: &SmithDecomposition) -> Self {
        let rows = snf.d.rows();
        let factors = snf.invariant_factors();
        let summands =
            (0..rows).map(|i| (i, factors.get(i).cloned().unwrap_or_default())).filter(|(_, d)| !d.is_one()).collect();
        Cokernel { u: snf.u.clone(), summands }
    }

    pub fn orders(&self) -> Vec<BigInt> {
        self.summands.iter().map(|(_, d)| d.clone()).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.summands.iter().all(|(_, d)| !d.is_zero())
    }

    /// The order of the group if it is cyclic and nontrivial (0 for ℤ).
    pub fn cyclic_order(&self) -> Option<&BigInt> {
        match self.summands.as_slice() {
            [(_, d)] => Some(d),
            _ => None,
        }
    }

    pub fn class_of(&self, v: &[BigInt]) -> Result<CokernelClass> {
        if v.len() != self.u.cols() {
            return Err(Error::Dimension { expected: self.u.cols(), found: v.len() });
        }
        let y = self.u.mul_vec(v);
        let coords =
            self.summands.iter().map(|(i, d)| if d.is_zero() { y[*i].clone() } else { y[*i].mod_floor(d) }).collect();
        Ok(CokernelClass { orders: self.orders(), coords })
    }

    /// For a cyclic cokernel, the multiple of the class of basis vector `j`
    /// that equals the class of `v`, provided basis vector `j` generates.
    pub fn residue_wrt(&self, v: &[BigInt], j: usize) -> Result<Option<BigInt>> {
        let class = self.class_of(v)?;
        let Some(&(row, ref d)) = self.summands.first().filter(|_| self.summands.len() == 1) else {
            return Ok(None);
        };
        let g = &self.u[(row, j)];
        let y = &class.coords[0];
        if d.is_zero() {
            return Ok(g.abs().is_one().then(|| y * g));
        }
        let e = g.mod_floor(d).extended_gcd(d);
        if !e.gcd.is_one() {
            return Ok(None);
        }
        Ok(Some((y * e.x).mod_floor(d)))
    }

    /// The first basis vector whose class generates a cyclic cokernel.
    pub fn first_generator(&self) -> Option<usize> {
        let (row, d) = match self.summands.as_slice() {
            [(row, d)] => (*row, d),
            _ => return None,
        };
        (0..self.u.cols()).find(|&j| {
            let g = &self.u[(row, j)];
            if d.is_zero() {
                g.abs().is_one()
            } else {
                g.gcd(d).is_one()
            }
        })
    }
}

/// Torsion orders of `coker(m)` and the coordinates of the class of `v`.
pub fn cokernel_coordinates(m: &IntMatrix, v: &[BigInt]) -> Result<CokernelClass> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    Cokernel::new(m).class_of(v)
}

pub(crate) mod bigint_vec {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(ToString::to_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter().map(|s| s.parse().map_err(serde::de::Error::custom)).collect()
    }
}

pub(crate) mod bigint_str {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}
