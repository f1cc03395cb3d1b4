//! Per-identity verdicts with replayable counterexamples.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::field::Field;
use crate::tensor::{basis_tuples, Element};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The first basis tuple on which the two sides of an identity differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub basis: Vec<usize>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckItem {
    pub id: String,
    /// The identity in formula form.
    #[serde(rename = "paper_ref")]
    pub formula: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

impl CheckItem {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn pass(id: impl Into<String>, formula: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            formula: formula.into(),
            status: Status::Pass,
            witness: None,
        }
    }

    pub fn fail(id: impl Into<String>, formula: impl Into<String>, witness: Option<Witness>) -> Self {
        Self {
            id: id.into(),
            formula: formula.into(),
            status: Status::Fail,
            witness,
        }
    }

    /// A verdict on a yes/no property with no coordinates to report.
    pub fn from_bool(id: impl Into<String>, formula: impl Into<String>, ok: bool) -> Self {
        if ok {
            Self::pass(id, formula)
        } else {
            Self::fail(id, formula, None)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub suite: String,
    pub seed: u64,
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            seed: 0,
            items: Vec::new(),
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn push(&mut self, item: CheckItem) {
        self.items.push(item);
    }

    /// Appends another report's items, tagging each id with `context`.
    pub fn absorb(&mut self, other: CheckReport, context: &str) {
        for mut item in other.items {
            if !context.is_empty() {
                item.id = format!("{}[{}]", item.id, context);
            }
            self.items.push(item);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.items.iter().all(CheckItem::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.passed())
    }

    pub fn item(&self, id: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.id == id)
    }

    /// Whether the item with this exact id exists and passed.
    pub fn passed(&self, id: &str) -> bool {
        self.item(id).is_some_and(CheckItem::passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} (seed {})", self.suite, self.seed)?;
        for item in &self.items {
            let status = if item.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "{status} {}  {}", item.id, item.formula)?;
            if let Some(w) = &item.witness {
                writeln!(f, "     at basis {:?}", w.basis)?;
                writeln!(f, "     lhs = [{}]", w.lhs.join(", "))?;
                writeln!(f, "     rhs = [{}]", w.rhs.join(", "))?;
            }
        }
        let failed = self.failures().count();
        write!(f, "{} identities, {} failed", self.items.len(), failed)
    }
}

pub(crate) fn render<F: Field>(v: &[F]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// Compares two sides of a multilinear identity on every basis tuple of
/// `in_dims`, reporting the first tuple where they differ.
pub fn check_identity<F: Field>(
    id: &str,
    formula: &str,
    in_dims: &[usize],
    lhs: impl Fn(&Element<F>) -> Element<F>,
    rhs: impl Fn(&Element<F>) -> Element<F>,
) -> CheckItem {
    for idx in basis_tuples(in_dims) {
        let e = Element::basis(in_dims, &idx);
        let l = lhs(&e);
        let r = rhs(&e);
        let (lc, rc) = (l.to_coords(), r.to_coords());
        if lc != rc || l.dims() != r.dims() {
            return CheckItem::fail(
                id,
                formula,
                Some(Witness {
                    basis: idx,
                    lhs: render(&lc),
                    rhs: render(&rc),
                }),
            );
        }
    }
    CheckItem::pass(id, formula)
}

/// Compares two matrices column by column; a differing column is reported as
/// the witness basis index.
pub fn check_matrices<F: Field>(
    id: &str,
    formula: &str,
    lhs: &crate::exactlin::LinearMap<F>,
    rhs: &crate::exactlin::LinearMap<F>,
) -> CheckItem {
    match lhs.first_differing_column(rhs) {
        None => CheckItem::pass(id, formula),
        Some(col) => {
            let l = if col < lhs.cols() { lhs.column(col) } else { Vec::new() };
            let r = if col < rhs.cols() { rhs.column(col) } else { Vec::new() };
            CheckItem::fail(
                id,
                formula,
                Some(Witness {
                    basis: vec![col],
                    lhs: render(&l),
                    rhs: render(&r),
                }),
            )
        }
    }
}
