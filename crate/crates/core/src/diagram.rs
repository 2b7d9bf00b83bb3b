//! Contact (±1)-surgery diagrams on S³.
//!
//! A diagram is an ordered list of Legendrian link components, each carrying
//! its Thurston–Bennequin invariant, rotation number and contact surgery
//! coefficient, the pairwise linking numbers, and optionally a distinguished
//! Legendrian knot that is not surgered. Component order is the file order
//! and every derived vector (rotation numbers, linking with the knot,
//! solutions of linear systems) follows it.
//!
//! Orientations are not modeled. Reversing a component is done by negating
//! its rotation number and its linking numbers.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LegendrianComponent {
    pub id: String,
    pub tb: i64,
    pub rot: i64,
    #[serde(rename = "coeff")]
    pub contact_coeff: i64,
}

impl LegendrianComponent {
    pub fn new(id: impl Into<String>, tb: i64, rot: i64, contact_coeff: i64) -> Self {
        LegendrianComponent { id: id.into(), tb, rot, contact_coeff }
    }

    /// Topological surgery framing, tb + contact coefficient.
    pub fn framing(&self) -> i64 {
        self.tb + self.contact_coeff
    }

    pub fn is_plus(&self) -> bool {
        self.contact_coeff == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkingEntry {
    pub a: String,
    pub b: String,
    pub lk: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DistinguishedKnot {
    pub id: String,
    pub tb0: i64,
    pub rot0: i64,
    pub lk: BTreeMap<String, i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurgeryDiagram {
    pub components: Vec<LegendrianComponent>,
    #[serde(default)]
    pub linking: Vec<LinkingEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub knot: Option<DistinguishedKnot>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub code: String,
    pub severity: Severity,
    pub message: String,
}

impl Violation {
    fn error(code: &str, message: String) -> Self {
        Violation { code: code.to_string(), severity: Severity::Error, message }
    }

    fn warning(code: &str, message: String) -> Self {
        Violation { code: code.to_string(), severity: Severity::Warning, message }
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sev = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        write!(f, "{sev}[{}]: {}", self.code, self.message)
    }
}

impl SurgeryDiagram {
    pub fn new(components: Vec<LegendrianComponent>) -> Self {
        SurgeryDiagram { components, linking: Vec::new(), knot: None }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Adds a linking entry between two components.
    pub fn link(mut self, a: &str, b: &str, lk: i64) -> Self {
        self.linking.push(LinkingEntry { a: a.to_string(), b: b.to_string(), lk });
        self
    }

    pub fn with_knot(mut self, knot: DistinguishedKnot) -> Self {
        self.knot = Some(knot);
        self
    }

    /// Parses the JSON file format. Structural problems (unknown fields, wrong
    /// types) are parse errors; semantic ones are reported by [`validate`].
    ///
    /// [`validate`]: SurgeryDiagram::validate
    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json(&text)
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("diagram serializes")
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component_index(&self, id: &str) -> Option<usize> {
        self.components.iter().position(|c| c.id == id)
    }

    /// Euler characteristic of the 4-dimensional handlebody: one 0-handle
    /// plus one 2-handle per component.
    pub fn chi(&self) -> i64 {
        1 + self.components.len() as i64
    }

    /// Number of components with contact coefficient +1.
    pub fn q_plus(&self) -> i64 {
        self.components.iter().filter(|c| c.is_plus()).count() as i64
    }

    pub fn rot_vector(&self) -> Vec<BigInt> {
        self.components.iter().map(|c| BigInt::from(c.rot)).collect()
    }

    /// Linking numbers of the distinguished knot with each component.
    pub fn lk_vector(&self) -> Result<Vec<BigInt>> {
        let knot = self.knot.as_ref().ok_or(Error::MissingKnot)?;
        self.components
            .iter()
            .map(|c| {
                knot.lk.get(&c.id).map(|&v| BigInt::from(v)).ok_or_else(|| {
                    Error::InvalidDiagram(vec![Violation::error(
                        "knot-lk-missing",
                        format!("knot {:?} has no linking number with {:?}", knot.id, c.id),
                    )])
                })
            })
            .collect()
    }

    /// All violations of the diagram invariants. Warnings do not make a
    /// diagram invalid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();

        let mut ids = HashSet::new();
        for c in &self.components {
            if !ids.insert(c.id.as_str()) {
                out.push(Violation::error("duplicate-id", format!("component id {:?} is used twice", c.id)));
            }
            if c.contact_coeff != 1 && c.contact_coeff != -1 {
                out.push(Violation::error(
                    "contact-coeff",
                    format!("component {:?} has contact coefficient {}, expected +1 or -1", c.id, c.contact_coeff),
                ));
            }
            if c.contact_coeff == 1 && c.tb == 0 {
                out.push(Violation::warning(
                    "d3-precondition",
                    format!("component {:?} has contact coefficient +1 and tb = 0; d3 is not defined by the surgery formula", c.id),
                ));
            }
        }

        let mut seen: HashMap<(&str, &str), &LinkingEntry> = HashMap::new();
        for e in &self.linking {
            if e.a == e.b {
                out.push(Violation::error("linking-self", format!("linking entry pairs {:?} with itself", e.a)));
                continue;
            }
            let mut unknown = false;
            for id in [&e.a, &e.b] {
                if !ids.contains(id.as_str()) {
                    out.push(Violation::error(
                        "linking-unknown-id",
                        format!("linking entry names unknown component {id:?}"),
                    ));
                    unknown = true;
                }
            }
            if unknown {
                continue;
            }
            let key = if e.a < e.b { (e.a.as_str(), e.b.as_str()) } else { (e.b.as_str(), e.a.as_str()) };
            match seen.get(&key) {
                Some(prev) if prev.lk != e.lk => out.push(Violation::error(
                    "linking-symmetry",
                    format!("lk({}, {}) = {} but lk({}, {}) = {}", prev.a, prev.b, prev.lk, e.a, e.b, e.lk),
                )),
                Some(_) => out.push(Violation::error(
                    "linking-duplicate",
                    format!("pair ({}, {}) appears more than once", key.0, key.1),
                )),
                None => {
                    seen.insert(key, e);
                }
            }
        }
        for (i, a) in self.components.iter().enumerate() {
            for b in &self.components[i + 1..] {
                let key = if a.id < b.id { (a.id.as_str(), b.id.as_str()) } else { (b.id.as_str(), a.id.as_str()) };
                if a.id != b.id && !seen.contains_key(&key) {
                    out.push(Violation::error(
                        "linking-missing",
                        format!("no linking number for pair ({}, {})", a.id, b.id),
                    ));
                }
            }
        }

        if let Some(knot) = &self.knot {
            if ids.contains(knot.id.as_str()) {
                out.push(Violation::error("knot-id", format!("knot id {:?} collides with a component id", knot.id)));
            }
            for c in &self.components {
                if !knot.lk.contains_key(&c.id) {
                    out.push(Violation::error(
                        "knot-lk-missing",
                        format!("knot {:?} has no linking number with {:?}", knot.id, c.id),
                    ));
                }
            }
            for id in knot.lk.keys() {
                if !ids.contains(id.as_str()) {
                    out.push(Violation::error(
                        "knot-lk-unknown-id",
                        format!("knot linking names unknown component {id:?}"),
                    ));
                }
            }
        }
        out
    }

    pub fn errors(&self) -> Vec<Violation> {
        self.validate().into_iter().filter(Violation::is_error).collect()
    }

    /// Fails with [`Error::InvalidDiagram`] if any violation is an error.
    pub fn check(&self) -> Result<()> {
        let errors = self.errors();
        if errors.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidDiagram(errors))
        }
    }

    /// The symmetric linking matrix with topological framings on the diagonal.
    pub fn linking_matrix(&self) -> Result<IntMatrix> {
        self.check()?;
        let n = self.components.len();
        let index: HashMap<&str, usize> = self.components.iter().enumerate().map(|(i, c)| (c.id.as_str(), i)).collect();
        let mut m = IntMatrix::zeros(n, n);
        for (i, c) in self.components.iter().enumerate() {
            m[(i, i)] = BigInt::from(c.framing());
        }
        for e in &self.linking {
            let (i, j) = (index[e.a.as_str()], index[e.b.as_str()]);
            m[(i, j)] = BigInt::from(e.lk);
            m[(j, i)] = BigInt::from(e.lk);
        }
        Ok(m)
    }

    /// The linking matrix bordered by the distinguished knot: the knot comes
    /// first, with 0 on the diagonal.
    pub fn extended_matrix(&self) -> Result<IntMatrix> {
        if self.knot.is_none() {
            return Err(Error::MissingKnot);
        }
        let m = self.linking_matrix()?;
        let lk = self.lk_vector()?;
        let n = m.rows();
        Ok(IntMatrix::from_fn(n + 1, n + 1, |i, j| match (i, j) {
            (0, 0) => BigInt::from(0),
            (0, j) => lk[j - 1].clone(),
            (i, 0) => lk[i - 1].clone(),
            (i, j) => m[(i - 1, j - 1)].clone(),
        }))
    }

    /// Turns the distinguished knot into the first surgered component with the
    /// given contact coefficient. Its linking numbers become linking entries.
    pub fn promote_knot(&self, contact_coeff: i64) -> Result<SurgeryDiagram> {
        self.check()?;
        let knot = self.knot.as_ref().ok_or(Error::MissingKnot)?;
        let mut components = vec![LegendrianComponent::new(knot.id.clone(), knot.tb0, knot.rot0, contact_coeff)];
        components.extend(self.components.iter().cloned());
        let mut linking: Vec<LinkingEntry> = self
            .components
            .iter()
            .map(|c| LinkingEntry { a: knot.id.clone(), b: c.id.clone(), lk: knot.lk[&c.id] })
            .collect();
        linking.extend(self.linking.iter().cloned());
        Ok(SurgeryDiagram { components, linking, knot: None })
    }

    /// The same diagram with components listed in the order `perm`
    /// (new position i holds old component perm[i]).
    pub fn reordered(&self, perm: &[usize]) -> SurgeryDiagram {
        assert_eq!(perm.len(), self.components.len());
        SurgeryDiagram {
            components: perm.iter().map(|&i| self.components[i].clone()).collect(),
            linking: self.linking.clone(),
            knot: self.knot.clone(),
        }
    }
}
