//! Exact integer and rational linear algebra.
//!
//! Everything here works over arbitrary-precision integers; no floating point
//! is involved anywhere. Matrices are small and dense.

#![allow(clippy::needless_range_loop)]

mod det;
mod matrix;
mod rational;
mod signature;
mod smith;
mod solve;

pub use det::det;
pub use matrix::IntMatrix;
pub use rational::Rational;
pub use signature::{inertia, signature, Inertia};
pub(crate) use smith::{bigint_str, bigint_vec};
pub use smith::{cokernel_coordinates, smith, Cokernel, CokernelClass, SmithDecomposition};
pub use solve::{solve, solve_integer_rhs};
