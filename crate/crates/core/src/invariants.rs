//! Invariants of the contact structure presented by a surgery diagram, and of
//! the distinguished knot in the surgered manifold.
//!
//! With M the linking matrix and rot the rotation vector, solve M·x = rot over
//! ℚ; then c² = xᵗ·M·x and
//!
//! ```text
//! d₃ = (c² − 3σ − 2χ) / 4 + q₊
//! ```
//!
//! where σ is the signature of M, χ = 1 + #components and q₊ counts the
//! contact (+1)-surgeries. The Euler class is the class of the rotation
//! vector in coker(M) = H₁ of the surgered manifold, written in meridians.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::diagram::{SurgeryDiagram, Violation};
use crate::error::{Error, Result};
use crate::exactla::{self, bigint_str, bigint_vec, Cokernel, CokernelClass, IntMatrix, Rational};

fn torsion_matrix(d: &SurgeryDiagram) -> Result<IntMatrix> {
    let m = d.linking_matrix()?;
    if exactla::det(&m)?.is_zero() {
        return Err(Error::NonTorsion);
    }
    Ok(m)
}

pub fn c_squared(d: &SurgeryDiagram) -> Result<Rational> {
    let m = torsion_matrix(d)?;
    let x = exactla::solve_integer_rhs(&m, &d.rot_vector())?;
    let mx: Vec<Rational> =
        (0..m.rows()).map(|i| m.row(i).iter().zip(&x).map(|(a, xi)| Rational::from(a) * xi).sum()).collect();
    Ok(x.iter().zip(&mx).map(|(a, b)| a * b).sum())
}

/// d₃ from its ingredients.
pub fn d3_formula(c_squared: &Rational, sigma: i64, chi: i64, q_plus: i64) -> Rational {
    (c_squared.clone() - 3 * sigma - 2 * chi) / 4 + q_plus
}

/// The d₃-invariant of the contact structure. Refuses diagrams with a
/// (+1)-component of tb = 0.
pub fn d3(d: &SurgeryDiagram) -> Result<Rational> {
    d.check()?;
    if let Some(c) = d.components.iter().find(|c| c.is_plus() && c.tb == 0) {
        return Err(Error::D3Precondition(c.id.clone()));
    }
    let c2 = c_squared(d)?;
    let sigma = exactla::signature(&d.linking_matrix()?)?;
    Ok(d3_formula(&c2, sigma, d.chi(), d.q_plus()))
}

/// tb of the distinguished knot after surgery: tb₀ + det M₀ / det M.
pub fn tb_surgered(d: &SurgeryDiagram) -> Result<Rational> {
    let knot = d.knot.as_ref().ok_or(Error::MissingKnot)?;
    let m = d.linking_matrix()?;
    let det_m = exactla::det(&m)?;
    if det_m.is_zero() {
        return Err(Error::Singular);
    }
    let det_m0 = exactla::det(&d.extended_matrix()?)?;
    Ok(Rational::from(knot.tb0) + Rational::new(det_m0, det_m))
}

/// rot of the distinguished knot after surgery: rot₀ − ⟨rot, M⁻¹·lk⟩.
pub fn rot_surgered(d: &SurgeryDiagram) -> Result<Rational> {
    let knot = d.knot.as_ref().ok_or(Error::MissingKnot)?;
    let m = d.linking_matrix()?;
    let y = exactla::solve_integer_rhs(&m, &d.lk_vector()?)?;
    let pairing: Rational = d.rot_vector().iter().zip(&y).map(|(r, yi)| Rational::from(r) * yi).sum();
    Ok(Rational::from(knot.rot0) - pairing)
}

/// A residue of the Euler class in a cyclic H₁, relative to the class of
/// the meridian of `generator`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicResidue {
    #[serde(with = "bigint_str")]
    pub order: BigInt,
    #[serde(with = "bigint_str")]
    pub residue: BigInt,
    pub generator: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerClass {
    /// Coordinates in the Smith decomposition of H₁.
    pub smith: CokernelClass,
    /// Present when H₁ is cyclic and nontrivial: the class as a multiple of
    /// the first meridian (in component order) that generates.
    pub cyclic: Option<CyclicResidue>,
}

impl EulerClass {
    pub fn is_zero(&self) -> bool {
        self.smith.is_zero()
    }

    pub fn is_torsion(&self) -> bool {
        self.smith.orders.iter().zip(&self.smith.coords).all(|(d, c)| !d.is_zero() || c.is_zero())
    }
}

/// The Euler class of the contact structure as the class of the rotation
/// vector in H₁ of the surgered manifold.
pub fn euler_class(d: &SurgeryDiagram) -> Result<EulerClass> {
    let m = d.linking_matrix()?;
    let coker = Cokernel::new(&m);
    let rot = d.rot_vector();
    let smith = coker.class_of(&rot)?;
    let cyclic = match (coker.cyclic_order(), coker.first_generator()) {
        (Some(order), Some(j)) => coker.residue_wrt(&rot, j)?.map(|residue| CyclicResidue {
            order: order.clone(),
            residue,
            generator: d.components[j].id.clone(),
        }),
        _ => None,
    };
    Ok(EulerClass { smith, cyclic })
}

/// The Euler class as a multiple of the meridian of the named component, when
/// H₁ is cyclic and that meridian generates it.
pub fn euler_residue_wrt(d: &SurgeryDiagram, id: &str) -> Result<Option<BigInt>> {
    let m = d.linking_matrix()?;
    let j = d.component_index(id).ok_or_else(|| {
        Error::InvalidDiagram(vec![Violation {
            code: "unknown-id".into(),
            severity: crate::diagram::Severity::Error,
            message: format!("no component named {id:?}"),
        }])
    })?;
    Cokernel::new(&m).residue_wrt(&d.rot_vector(), j)
}

/// A value that may be unavailable because a precondition failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Computed<T> {
    Value(T),
    Absent(String),
}

impl<T> Computed<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            Computed::Value(v) => Some(v),
            Computed::Absent(_) => None,
        }
    }

    pub fn is_absent(&self) -> bool {
        matches!(self, Computed::Absent(_))
    }
}

impl<T> From<Result<T>> for Computed<T> {
    fn from(r: Result<T>) -> Self {
        match r {
            Ok(v) => Computed::Value(v),
            Err(e) => Computed::Absent(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotReport {
    pub id: String,
    pub tb: Computed<Rational>,
    pub rot: Computed<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub chi: i64,
    pub sigma: i64,
    #[serde(with = "bigint_str")]
    pub det_m: BigInt,
    pub q_plus: i64,
    pub c_squared: Computed<Rational>,
    pub d3: Computed<Rational>,
    /// Orders of the cyclic summands of H₁; 0 stands for ℤ, an empty list for
    /// the trivial group.
    #[serde(with = "bigint_vec")]
    pub h1: Vec<BigInt>,
    pub euler_class: EulerClass,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub knot: Option<KnotReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<Violation>,
}

impl InvariantReport {
    /// Whether some field could not be computed.
    pub fn has_absent(&self) -> bool {
        self.c_squared.is_absent()
            || self.d3.is_absent()
            || self.knot.as_ref().is_some_and(|k| k.tb.is_absent() || k.rot.is_absent())
    }

    /// 4·(d₃ − q₊) = c² − 3σ − 2χ, when both sides are available.
    pub fn is_consistent(&self) -> bool {
        match (self.c_squared.value(), self.d3.value()) {
            (Some(c2), Some(d3)) => (d3.clone() - self.q_plus) * 4 == c2.clone() - 3 * self.sigma - 2 * self.chi,
            _ => true,
        }
    }
}

/// Computes every invariant of a valid diagram; fields whose preconditions
/// fail are reported as absent.
pub fn report(d: &SurgeryDiagram) -> Result<InvariantReport> {
    d.check()?;
    let m = d.linking_matrix()?;
    let euler = euler_class(d)?;
    let knot = d.knot.as_ref().map(|k| KnotReport {
        id: k.id.clone(),
        tb: tb_surgered(d).into(),
        rot: rot_surgered(d).into(),
    });
    Ok(InvariantReport {
        chi: d.chi(),
        sigma: exactla::signature(&m)?,
        det_m: exactla::det(&m)?,
        q_plus: d.q_plus(),
        c_squared: c_squared(d).into(),
        d3: d3(d).into(),
        h1: euler.smith.orders.clone(),
        euler_class: euler,
        knot,
        warnings: d.validate(),
    })
}
