use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// Determinant by fraction-free Bareiss elimination.
///
/// Every intermediate division is exact, so entries stay integral and bounded
/// by minors of the input.
pub fn det(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.to_rows();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;

    // Laplace expansion along the first row.
    fn cofactor_det(m: &IntMatrix) -> BigInt {
        let n = m.rows();
        if n == 0 {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        for j in 0..n {
            if m[(0, j)].is_zero() {
                continue;
            }
            let rows: Vec<usize> = (1..n).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
            let minor = cofactor_det(&m.select(&rows, &cols));
            let term = &m[(0, j)] * minor;
            if j % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    #[test]
    fn linking_matrix_of_exceptional_trefoil() {
        let m = IntMatrix::from_rows(&[
            [0, -1, -1, -1, 0],
            [-1, 0, -1, -1, 0],
            [-1, -1, -3, -1, 0],
            [-1, -1, -1, -3, -1],
            [0, 0, 0, -1, -2],
        ]);
        assert_eq!(det(&m).unwrap(), BigInt::from(-1));
        assert_eq!(cofactor_det(&m), BigInt::from(-1));
    }

    #[test]
    fn extended_matrix_of_exceptional_trefoil() {
        let m0 = IntMatrix::from_rows(&[
            [0, -1, -1, -1, -1, 0],
            [-1, 0, -1, -1, -1, 0],
            [-1, -1, 0, -1, -1, 0],
            [-1, -1, -1, -3, -1, 0],
            [-1, -1, -1, -1, -3, -1],
            [0, 0, 0, 0, -1, -2],
        ]);
        assert_eq!(det(&m0).unwrap(), BigInt::from(5));
    }

    #[test]
    fn identity_and_empty() {
        assert_eq!(det(&IntMatrix::identity(4)).unwrap(), BigInt::one());
        assert_eq!(det(&IntMatrix::zeros(0, 0)).unwrap(), BigInt::one());
    }

    #[test]
    fn singular_and_non_square() {
        let m = IntMatrix::from_rows(&[[1, 2], [2, 4]]);
        assert!(det(&m).unwrap().is_zero());
        let z = IntMatrix::from_rows(&[[0, 0], [0, 5]]);
        assert!(det(&z).unwrap().is_zero());
        assert!(matches!(det(&IntMatrix::zeros(2, 3)), Err(Error::NotSquare { rows: 2, cols: 3 })));
    }

    #[test]
    fn needs_row_swap() {
        let m = IntMatrix::from_rows(&[[0, 1], [1, 0]]);
        assert_eq!(det(&m).unwrap(), BigInt::from(-1));
        let m = IntMatrix::from_rows(&[[0, 0, 1], [0, 2, 0], [3, 0, 0]]);
        assert_eq!(det(&m).unwrap(), BigInt::from(-6));
    }

    #[test]
    fn agrees_with_cofactor_expansion() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=6);
            let m = IntMatrix::from_fn(n, n, |_, _| BigInt::from(rng.gen_range(-3..=3)));
            assert_eq!(det(&m).unwrap(), cofactor_det(&m), "{m}");
        }
    }
}
