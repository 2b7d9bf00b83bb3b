use thiserror::Error;

use crate::diagram::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected length {expected}, got {found}")]
    Dimension { expected: usize, found: usize },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("matrix is singular")]
    Singular,

    #[error("linking matrix is singular, the Euler class is not torsion")]
    NonTorsion,

    #[error("component {0:?} has contact coefficient +1 and tb = 0, the d3 formula does not apply")]
    D3Precondition(String),

    #[error("diagram has no distinguished knot")]
    MissingKnot,

    #[error("invalid diagram: {}", format_violations(.0))]
    InvalidDiagram(Vec<Violation>),

    #[error("failed to parse diagram: {0}")]
    Parse(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("invalid lens space L({p},{q}): need p > q > 0 and gcd(p, q) = 1")]
    InvalidLens { p: u64, q: u64 },

    #[error("invalid family parameters: {0}")]
    InvalidParams(String),
}

fn format_violations(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}
