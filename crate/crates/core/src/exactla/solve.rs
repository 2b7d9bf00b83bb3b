use num_bigint::BigInt;

use super::{IntMatrix, Rational};
use crate::error::{Error, Result};

/// Solves `m · x = b` exactly over the rationals.
///
/// Returns [`Error::Singular`] when `m` has no inverse.
pub fn solve(m: &IntMatrix, b: &[Rational]) -> Result<Vec<Rational>> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if b.len() != n {
        return Err(Error::Dimension { expected: n, found: b.len() });
    }

    // Augmented system [m | b].
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = m.row(i).iter().map(Rational::from).collect();
            row.push(b[i].clone());
            row
        })
        .collect();

    for k in 0..n {
        let pivot = (k..n).find(|&i| !a[i][k].is_zero()).ok_or(Error::Singular)?;
        a.swap(k, pivot);
        let inv = a[k][k].recip();
        for j in k..=n {
            a[k][j] = &a[k][j] * &inv;
        }
        for i in 0..n {
            if i == k || a[i][k].is_zero() {
                continue;
            }
            let f = a[i][k].clone();
            for j in k..=n {
                let delta = &f * &a[k][j];
                a[i][j] = &a[i][j] - &delta;
            }
        }
    }
    Ok(a.into_iter().map(|mut row| row.pop().expect("augmented column")).collect())
}

pub fn solve_integer_rhs(m: &IntMatrix, b: &[BigInt]) -> Result<Vec<Rational>> {
    let b: Vec<Rational> = b.iter().map(Rational::from).collect();
    solve(m, &b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    fn residual_is_zero(m: &IntMatrix, x: &[Rational], b: &[Rational]) -> bool {
        (0..m.rows()).all(|i| {
            let lhs: Rational = m.row(i).iter().zip(x).map(|(a, xi)| Rational::from(a) * xi).sum();
            lhs == b[i]
        })
    }

    #[test]
    fn rotation_vector_of_exceptional_trefoil() {
        let m = IntMatrix::from_rows(&[
            [0, -1, -1, -1, 0],
            [-1, 0, -1, -1, 0],
            [-1, -1, -3, -1, 0],
            [-1, -1, -1, -3, -1],
            [0, 0, 0, -1, -2],
        ]);
        let x = solve(&m, &ints(&[0, 0, 1, 1, 0])).unwrap();
        assert_eq!(x, ints(&[-7, -7, 3, 4, -2]));
    }

    #[test]
    fn fractional_solution() {
        let m = IntMatrix::from_rows(&[[-7]]);
        let x = solve(&m, &ints(&[1])).unwrap();
        assert_eq!(x, vec![Rational::new(-1, 7)]);
    }

    #[test]
    fn zero_rhs() {
        let m = IntMatrix::from_rows(&[[2, 1], [1, 3]]);
        assert_eq!(solve(&m, &ints(&[0, 0])).unwrap(), ints(&[0, 0]));
    }

    #[test]
    fn errors() {
        let m = IntMatrix::from_rows(&[[1, 2], [2, 4]]);
        assert!(matches!(solve(&m, &ints(&[1, 0])), Err(Error::Singular)));
        assert!(matches!(solve(&m, &ints(&[1])), Err(Error::Dimension { expected: 2, found: 1 })));
        assert!(matches!(solve(&IntMatrix::zeros(1, 2), &ints(&[1])), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn residual_vanishes_on_random_systems() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut solved = 0;
        while solved < 100 {
            let n = rng.gen_range(1..=6);
            let m = IntMatrix::from_fn(n, n, |_, _| BigInt::from(rng.gen_range(-4..=4)));
            let b: Vec<Rational> = (0..n).map(|_| Rational::from(rng.gen_range(-5..=5))).collect();
            match solve(&m, &b) {
                Ok(x) => {
                    assert!(residual_is_zero(&m, &x, &b));
                    solved += 1;
                }
                Err(Error::Singular) => assert_eq!(super::super::det(&m).unwrap(), BigInt::from(0)),
                Err(e) => panic!("{e}"),
            }
        }
    }
}
