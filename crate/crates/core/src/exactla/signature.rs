use serde::{Deserialize, Serialize};

use super::{IntMatrix, Rational};
use crate::error::{Error, Result};

/// Counts of positive, negative and zero entries in a diagonalization of a
/// symmetric matrix (Sylvester's law of inertia).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

/// Inertia of a symmetric integer matrix by rational congruence
/// diagonalization.
///
/// Nonzero diagonal pivots are eliminated one at a time. When the remaining
/// block has zero diagonal but a nonzero off-diagonal entry b, the pair spans
/// a hyperbolic plane [[0, b], [b, 0]] which contributes one positive and one
/// negative square and is split off by its Schur complement.
pub fn inertia(m: &IntMatrix) -> Result<Inertia> {
    if !m.is_symmetric() {
        return Err(if m.is_square() {
            Error::NotSymmetric
        } else {
            Error::NotSquare { rows: m.rows(), cols: m.cols() }
        });
    }
    let n = m.rows();
    let mut a: Vec<Vec<Rational>> = (0..n).map(|i| m.row(i).iter().map(Rational::from).collect()).collect();
    let mut out = Inertia { positive: 0, negative: 0, zero: 0 };

    let mut k = 0;
    while k < n {
        if let Some(i) = (k..n).find(|&i| !a[i][i].is_zero()) {
            sym_swap(&mut a, k, i);
            let d = a[k][k].clone();
            if d.is_positive() {
                out.positive += 1;
            } else {
                out.negative += 1;
            }
            for r in k + 1..n {
                if a[r][k].is_zero() {
                    continue;
                }
                let f = &a[r][k] / &d;
                for c in k + 1..n {
                    let delta = &f * &a[k][c];
                    a[r][c] = &a[r][c] - &delta;
                }
            }
            k += 1;
            continue;
        }

        let pair = (k..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero());
        let Some((i, j)) = pair else {
            out.zero += n - k;
            break;
        };
        // j > i >= k, so the first swap leaves index j in place.
        sym_swap(&mut a, k, i);
        sym_swap(&mut a, k + 1, j);

        let b = a[k][k + 1].clone();
        out.positive += 1;
        out.negative += 1;
        // C - R B^{-1} R^T with B^{-1} = [[0, 1/b], [1/b, 0]].
        for r in k + 2..n {
            for c in k + 2..n {
                let t = &a[r][k] * &a[c][k + 1] + &a[r][k + 1] * &a[c][k];
                if t.is_zero() {
                    continue;
                }
                a[r][c] = &a[r][c] - &(t / &b);
            }
        }
        k += 2;
    }
    Ok(out)
}

pub fn signature(m: &IntMatrix) -> Result<i64> {
    inertia(m).map(|i| i.signature())
}

fn sym_swap(a: &mut [Vec<Rational>], x: usize, y: usize) {
    if x == y {
        return;
    }
    a.swap(x, y);
    for row in a.iter_mut() {
        row.swap(x, y);
    }
}
