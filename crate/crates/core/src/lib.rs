//! Exact invariants of contact (±1)-surgery diagrams on S³.
//!
//! The crate computes the homotopical and classical invariants of a Legendrian
//! surgery presentation (d₃, c², the Euler class of the induced contact
//! structure, Thurston–Bennequin and rotation numbers of a knot in the
//! surgered manifold) with exact integer and rational arithmetic, and uses
//! them to enumerate and separate the tight contact structures on the lens
//! spaces L(ns² − s + 1, s²).
//!
//! Module map:
//!
//! - [`exactla`]: determinants, rational solves, signatures, Smith normal form
//!   and cokernel coordinates.
//! - [`diagram`]: the surgery diagram data model and its JSON file format.
//! - [`invariants`]: c², d₃, tb/rot after surgery, Euler class, full reports.
//! - [`lens`]: negative continued fractions and the tight-structure count.
//! - [`families`]: the parametric exceptional diagrams, closed forms and the
//!   census of tight structures.

pub mod diagram;
pub mod error;
pub mod exactla;
pub mod families;
pub mod invariants;
pub mod lens;

pub use diagram::{DistinguishedKnot, LegendrianComponent, LinkingEntry, SurgeryDiagram, Violation};
pub use error::{Error, Result};
pub use exactla::{IntMatrix, Rational, SmithDecomposition};
pub use invariants::InvariantReport;
pub use lens::{LensSpace, NegContFrac};
