//! The `.alg` definition format: a line-oriented text file of sections that
//! list structure constants sparsely.
//!
//! ```text
//! # comments run to the end of the line
//! [params]
//! c = 2
//!
//! [hopf H]
//! basis: 1 g x gx
//! unit: -> 1
//! mul: x g -> -c * gx
//! comul: x -> 1/c * x 1 + 1/c * g x
//! counit: g -> 1
//! ```
//!
//! An entry `key: in… -> rhs` gives the image of one basis tuple. The right
//! hand side is a sum of terms `coef * out…`; the coefficient may be omitted
//! and is otherwise a product of rational expressions in the parameters.
//! `counit` entries have a scalar right hand side. Basis elements are written
//! by name or by position as `@k`.
//!
//! Inputs without an entry map to zero, except for the twisting maps
//! `alpha`, `mu`, `a` and `b`, which fix every basis element they do not
//! list.

mod parse;
mod resolve;
mod run;
mod serialize;

use std::fmt;

use num_rational::BigRational;
use thiserror::Error;

pub use parse::parse_definition;
pub use resolve::{resolve, Resolved};
pub use run::{emit_braiding, matrix_csv, run_checks, BraidingExport, ComponentExport, OutFormat, Suite};
pub use serialize::serialize;

/// A rational expression in named parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Num(BigRational),
    Param(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn int(n: i64) -> Self {
        Expr::Num(BigRational::from_integer(n.into()))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Expr::Num(q) if *q == BigRational::from_integer(1.into()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasisRef {
    Name(String),
    Index(usize),
}

impl fmt::Display for BasisRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisRef::Name(n) => write!(f, "{n}"),
            BasisRef::Index(i) => write!(f, "@{i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub coef: Expr,
    pub outputs: Vec<BasisRef>,
}

#[derive(Debug, Clone)]
pub struct Entry {
    pub key: String,
    pub inputs: Vec<BasisRef>,
    pub terms: Vec<Term>,
    pub line: usize,
}

impl PartialEq for Entry {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key && self.inputs == other.inputs && self.terms == other.terms
    }
}

/// One meaningful line of a section body. Blank lines are not kept.
#[derive(Debug, Clone)]
pub enum Line {
    Comment(String),
    /// `key: word word …`
    Property {
        key: String,
        values: Vec<String>,
        line: usize,
    },
    /// `name = expr`, only in `[params]`.
    Param {
        name: String,
        value: Expr,
        line: usize,
    },
    Entry(Entry),
}

impl PartialEq for Line {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Line::Comment(a), Line::Comment(b)) => a == b,
            (
                Line::Property {
                    key: k1, values: v1, ..
                },
                Line::Property {
                    key: k2, values: v2, ..
                },
            ) => k1 == k2 && v1 == v2,
            (
                Line::Param {
                    name: n1, value: v1, ..
                },
                Line::Param {
                    name: n2, value: v2, ..
                },
            ) => n1 == n2 && v1 == v2,
            (Line::Entry(a), Line::Entry(b)) => a == b,
            _ => false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SectionKind {
    Params,
    Algebra,
    Coalgebra,
    Hopf,
    Module,
    Comodule,
    YdModule,
    AutPair,
}

impl SectionKind {
    pub const ALL: [SectionKind; 8] = [
        SectionKind::Params,
        SectionKind::Algebra,
        SectionKind::Coalgebra,
        SectionKind::Hopf,
        SectionKind::Module,
        SectionKind::Comodule,
        SectionKind::YdModule,
        SectionKind::AutPair,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            SectionKind::Params => "params",
            SectionKind::Algebra => "algebra",
            SectionKind::Coalgebra => "coalgebra",
            SectionKind::Hopf => "hopf",
            SectionKind::Module => "module",
            SectionKind::Comodule => "comodule",
            SectionKind::YdModule => "ydmodule",
            SectionKind::AutPair => "autpair",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.keyword() == s)
    }
}

#[derive(Debug, Clone)]
pub struct Section {
    pub kind: SectionKind,
    /// Empty for `[params]`.
    pub name: String,
    pub lines: Vec<Line>,
    pub line: usize,
}

impl PartialEq for Section {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.name == other.name && self.lines == other.lines
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct DefinitionFile {
    /// Comments before the first section.
    pub preamble: Vec<String>,
    pub sections: Vec<Section>,
}

impl DefinitionFile {
    pub fn section(&self, name: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.name == name)
    }

    pub fn has_kind(&self, kind: SectionKind) -> bool {
        self.sections.iter().any(|s| s.kind == kind)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: expected {}, found {found}", expected.join(" or "))]
    Parse {
        line: usize,
        column: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("line {line}: unbound name `{name}`")]
    UnboundName { line: usize, name: String },
    #[error("line {line}: basis index {index} out of range for dimension {dim}")]
    OutOfRangeIndex { line: usize, index: usize, dim: usize },
    #[error("line {line}: zero denominator")]
    ZeroDenominator { line: usize },
    #[error("line {line}: {message}")]
    Invalid { line: usize, message: String },
    #[error("{0}")]
    Suite(String),
}
