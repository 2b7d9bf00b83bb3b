//! Negative continued fractions and the count of tight contact structures on
//! lens spaces.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::Rational;

/// The lens space L(p, q) with p > q > 0 and gcd(p, q) = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LensSpace {
    p: u64,
    q: u64,
}

impl LensSpace {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if p > q && q > 0 && p.gcd(&q) == 1 {
            Ok(LensSpace { p, q })
        } else {
            Err(Error::InvalidLens { p, q })
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// L(ns² − s + 1, s²), or L(n, 1) when s = 1.
    pub fn family(n: u64, s: u64) -> Result<Self> {
        Self::new(n * s * s - s + 1, s * s)
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

/// [a₀, …, a_k] = a₀ − 1/(a₁ − 1/(… − 1/a_k)), every aᵢ ≥ 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NegContFrac {
    pub terms: Vec<u64>,
}

impl NegContFrac {
    pub fn evaluate(&self) -> Rational {
        evaluate_terms(&self.terms)
    }
}

impl fmt::Display for NegContFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.terms.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", terms.join(", "))
    }
}

/// Evaluates a negative continued fraction from the innermost term outward.
///
/// Panics on an empty list or when an intermediate value is zero, which
/// cannot happen when all terms are at least 2.
pub fn evaluate_terms(terms: &[u64]) -> Rational {
    let (last, rest) = terms.split_last().expect("at least one term");
    rest.iter().rev().fold(Rational::from(*last as i64), |acc, &a| {
        assert!(!acc.is_zero(), "zero denominator in continued fraction");
        Rational::from(a as i64) - acc.recip()
    })
}

/// The expansion p/q = [a₀, …, a_k] with a₀ = ⌈p/q⌉ at every step.
pub fn neg_contfrac(lens: LensSpace) -> NegContFrac {
    let (mut p, mut q) = (lens.p, lens.q);
    let mut terms = Vec::new();
    loop {
        let a = p.div_ceil(q);
        terms.push(a);
        let r = a * q - p;
        if r == 0 {
            break;
        }
        (p, q) = (q, r);
    }
    NegContFrac { terms }
}

/// (a₀ − 1)⋯(a_k − 1) over the negative continued fraction of p/q.
pub fn tight_count(lens: LensSpace) -> u64 {
    neg_contfrac(lens).terms.iter().map(|a| a - 1).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn l74() {
        let l = LensSpace::new(7, 4).unwrap();
        assert_eq!(neg_contfrac(l).terms, [2, 4]);
        assert_eq!(tight_count(l), 3);
        assert_eq!(evaluate_terms(&[2, 4]), Rational::new(7, 4));
    }

    #[test]
    fn integer_case() {
        for n in 2..20 {
            let l = LensSpace::new(n, 1).unwrap();
            assert_eq!(neg_contfrac(l).terms, [n]);
            assert_eq!(tight_count(l), n - 1);
        }
    }

    #[test]
    fn domain_errors() {
        assert!(LensSpace::new(4, 2).is_err());
        assert!(LensSpace::new(3, 3).is_err());
        assert!(LensSpace::new(3, 0).is_err());
        assert!(LensSpace::new(2, 5).is_err());
        assert!(LensSpace::family(1, 1).is_err());
    }

    #[test]
    fn chain_of_twos() {
        for s in 3..12u64 {
            let twos = vec![2; (s - 2) as usize];
            assert_eq!(evaluate_terms(&twos), Rational::new(s as i64 - 1, s as i64 - 2));
        }
    }

    #[test]
    fn family_expansion() {
        for n in 2..=8u64 {
            for s in 2..=8u64 {
                let l = LensSpace::family(n, s).unwrap();
                let mut expected = vec![n, s + 2];
                expected.extend(std::iter::repeat_n(2, (s - 2) as usize));
                assert_eq!(neg_contfrac(l).terms, expected, "n={n} s={s}");
                assert_eq!(tight_count(l), (s + 1) * (n - 1));
            }
        }
    }

    #[test]
    fn display() {
        let l = LensSpace::new(34, 9).unwrap();
        assert_eq!(l.to_string(), "L(34,9)");
        assert_eq!(neg_contfrac(l).to_string(), "[4, 5, 2]");
    }
}
