use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{FormatError, Resolved};
use crate::exactlin::LinearMap;
use crate::hom_algebra::{check_automorphism, check_hom_algebra, check_hom_coalgebra, check_hom_hopf};
use crate::report::{CheckItem, CheckReport};
use crate::t_category::{braiding, check_t_category, AutPair};
use crate::yd_modules::{
    as_datum_module, build_bicomodule_algebra, build_entwining, check_bicomodule_algebra, check_entwined_module,
    check_entwining, check_hom_comodule, check_hom_module, check_yd_datum, check_yd_module, YDModule,
};
use crate::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Algebra,
    Coalgebra,
    Hopf,
    Yd,
    Tcat,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Algebra => "algebra",
            Suite::Coalgebra => "coalgebra",
            Suite::Hopf => "hopf",
            Suite::Yd => "yd",
            Suite::Tcat => "tcat",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [
            Suite::All,
            Suite::Algebra,
            Suite::Coalgebra,
            Suite::Hopf,
            Suite::Yd,
            Suite::Tcat,
        ]
        .into_iter()
        .find(|k| k.name() == s)
        .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Random group words added to the T-category suite per algebra.
const RANDOM_WORDS: usize = 1;

fn requires(section: &str) -> FormatError {
    FormatError::Suite(format!("suite requires {section} section"))
}

fn algebra_suite(r: &Resolved, out: &mut CheckReport) {
    for (name, a) in &r.algebras {
        out.absorb(check_hom_algebra(a), name);
    }
    for (name, h) in &r.hopfs {
        out.absorb(check_hom_algebra(h.algebra()), name);
    }
}

fn coalgebra_suite(r: &Resolved, out: &mut CheckReport) {
    for (name, c) in &r.coalgebras {
        out.absorb(check_hom_coalgebra(c), name);
    }
    for (name, h) in &r.hopfs {
        out.absorb(check_hom_coalgebra(h.coalgebra()), name);
    }
}

fn hopf_suite(r: &Resolved, out: &mut CheckReport) {
    for (name, h) in &r.hopfs {
        out.absorb(check_hom_hopf(h), name);
    }
    for (name, over, pair) in &r.pairs {
        let h = r.hopf(over).expect("resolved pairs name a hopf section");
        out.absorb(check_automorphism(h, pair.a().matrix()), &format!("{name}.a"));
        out.absorb(check_automorphism(h, pair.b().matrix()), &format!("{name}.b"));
    }
}

fn yd_suite(r: &Resolved, out: &mut CheckReport) {
    for (name, m) in &r.modules {
        out.absorb(check_hom_module(m), name);
    }
    for (name, c) in &r.comodules {
        out.absorb(check_hom_comodule(c), name);
    }
    for (name, _, m) in &r.ydmodules {
        out.absorb(check_yd_module(m), name);
        out.absorb(yd_routes(m), name);
    }
}

/// The entwined-module and bicomodule descriptions of the same condition.
fn yd_routes(m: &YDModule<Scalar>) -> CheckReport {
    let mut r = CheckReport::new("yd-routes");
    let h = m.hopf_arc();
    let (a, b) = (m.pair().a(), m.pair().b());
    match build_entwining(&h, a, b) {
        Ok(e) => {
            r.absorb(check_entwining(&e), "");
            r.absorb(check_entwined_module(m.module(), m.comodule(), &e), "");
        }
        Err(e) => r.push(CheckItem::fail("entwining-built", e.to_string(), None)),
    }
    match build_bicomodule_algebra(&h, a, b) {
        Ok(n) => {
            r.absorb(check_bicomodule_algebra(&n), "");
            match as_datum_module(m, &n) {
                Ok(dm) => r.absorb(check_yd_datum(&dm, m.comodule(), &n), ""),
                Err(e) => r.push(CheckItem::fail("yd-datum-built", e.to_string(), None)),
            }
        }
        Err(e) => r.push(CheckItem::fail("bicomodule-algebra-built", e.to_string(), None)),
    }
    r
}

fn tcat_suite(r: &Resolved, seed: u64, out: &mut CheckReport) {
    for (hname, h) in &r.hopfs {
        let modules: Vec<YDModule<Scalar>> = r
            .ydmodules
            .iter()
            .filter(|(_, over, _)| over == hname)
            .map(|(_, _, m)| m.clone())
            .collect();
        if modules.is_empty() {
            continue;
        }
        let mut pairs: Vec<AutPair<Scalar>> = Vec::new();
        for p in r
            .pairs
            .iter()
            .filter(|(_, over, _)| over == hname)
            .map(|(_, _, p)| p)
            .chain(modules.iter().map(|m| m.pair()))
        {
            if !pairs.contains(p) {
                pairs.push(p.clone());
            }
        }
        out.absorb(check_t_category(h, &modules, &pairs, seed, RANDOM_WORDS), hname);
    }
}

/// Runs `suite` over every applicable section. Identity ids are tagged with
/// the section they were checked on.
pub fn run_checks(r: &Resolved, suite: Suite, seed: u64) -> Result<CheckReport, FormatError> {
    let has_alg = !r.algebras.is_empty() || !r.hopfs.is_empty();
    let has_coalg = !r.coalgebras.is_empty() || !r.hopfs.is_empty();
    let has_yd = !r.modules.is_empty() || !r.comodules.is_empty() || !r.ydmodules.is_empty();
    let name = suite.name();
    match suite {
        Suite::Algebra if !has_alg => return Err(requires("algebra")),
        Suite::Coalgebra if !has_coalg => return Err(requires("coalgebra")),
        Suite::Hopf if r.hopfs.is_empty() => return Err(requires("hopf")),
        Suite::Yd if !has_yd => return Err(requires("module, comodule or ydmodule")),
        Suite::Tcat if r.ydmodules.is_empty() => return Err(requires("ydmodule")),
        _ => {}
    }
    let mut out = CheckReport::new(name).with_seed(seed);
    match suite {
        Suite::Algebra => algebra_suite(r, &mut out),
        Suite::Coalgebra => coalgebra_suite(r, &mut out),
        Suite::Hopf => hopf_suite(r, &mut out),
        Suite::Yd => yd_suite(r, &mut out),
        Suite::Tcat => tcat_suite(r, seed, &mut out),
        Suite::All => {
            // `check_hom_hopf` already covers the algebra and coalgebra
            // laws of hopf sections
            for (n, a) in &r.algebras {
                out.absorb(check_hom_algebra(a), n);
            }
            for (n, c) in &r.coalgebras {
                out.absorb(check_hom_coalgebra(c), n);
            }
            hopf_suite(r, &mut out);
            yd_suite(r, &mut out);
            tcat_suite(r, seed, &mut out);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutFormat {
    Csv,
    Json,
}

impl FromStr for OutFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(OutFormat::Csv),
            "json" => Ok(OutFormat::Json),
            _ => Err(format!("unknown output format `{s}`")),
        }
    }
}

/// A component `(A, B)` written out as two row-major matrices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentExport {
    pub a: Vec<Vec<String>>,
    pub b: Vec<Vec<String>>,
}

/// The braiding `M ⊗ N → ^M N ⊗ M` as exported. `matrix[i][j]` is the
/// coefficient of `basis_out[i]` in the image of `basis_in[j]`, unless
/// `layout` is `"printed"`, in which case rows and columns are swapped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidingExport {
    pub source: [String; 2],
    pub target: [String; 2],
    pub source_components: [ComponentExport; 2],
    pub target_components: [ComponentExport; 2],
    pub basis_in: Vec<String>,
    pub basis_out: Vec<String>,
    pub layout: String,
    pub matrix: Vec<Vec<String>>,
}

fn rows_of(m: &LinearMap<Scalar>) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(ToString::to_string).collect())
        .collect()
}

fn component(p: &AutPair<Scalar>) -> ComponentExport {
    ComponentExport {
        a: rows_of(p.a().matrix()),
        b: rows_of(p.b().matrix()),
    }
}

fn tensor_labels(left: &[String], right: &[String]) -> Vec<String> {
    left.iter()
        .flat_map(|l| right.iter().map(move |r| format!("{l}⊗{r}")))
        .collect()
}

impl BraidingExport {
    pub fn new(
        m: &YDModule<Scalar>,
        n: &YDModule<Scalar>,
        mbasis: &[String],
        nbasis: &[String],
        printed: bool,
    ) -> Self {
        let b = braiding(m, n);
        let (t0, t1) = b.target();
        let matrix = if printed {
            b.matrix().transpose()
        } else {
            b.matrix().clone()
        };
        Self {
            source: [m.label().to_string(), n.label().to_string()],
            target: [t0.label().to_string(), t1.label().to_string()],
            source_components: [component(m.pair()), component(n.pair())],
            target_components: [component(t0.pair()), component(t1.pair())],
            basis_in: tensor_labels(mbasis, nbasis),
            basis_out: tensor_labels(nbasis, mbasis),
            layout: if printed { "printed" } else { "columns" }.to_string(),
            matrix: rows_of(&matrix),
        }
    }

    /// The matrix in the column convention, whatever the layout.
    pub fn to_matrix(&self) -> Result<LinearMap<Scalar>, String> {
        let rows = self
            .matrix
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| s.parse::<Scalar>().map_err(|e| format!("`{s}`: {e}")))
                    .collect()
            })
            .collect::<Result<Vec<Vec<Scalar>>, String>>()?;
        let m = LinearMap::from_rows(rows).map_err(|e| e.to_string())?;
        Ok(if self.layout == "printed" { m.transpose() } else { m })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("export serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn to_csv(&self) -> String {
        matrix_csv(&self.matrix)
    }
}

/// Rows as RFC 4180 records, each field a `p/q` or integer string.
pub fn matrix_csv(rows: &[Vec<String>]) -> String {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii fields")
}

fn module_basis(file_basis: Option<Vec<String>>, m: &YDModule<Scalar>) -> Vec<String> {
    file_basis.unwrap_or_else(|| crate::hom_algebra::default_basis(m.dim()))
}

/// Serializes `c_{M,N}` for two modules of a resolved file.
pub fn emit_braiding(
    r: &Resolved,
    file: &super::DefinitionFile,
    m_name: &str,
    n_name: &str,
    format: OutFormat,
    printed: bool,
) -> Result<String, FormatError> {
    let get = |name: &str| {
        r.ydmodules
            .iter()
            .find(|(n, _, _)| n == name)
            .ok_or_else(|| FormatError::UnboundName {
                line: 0,
                name: name.to_string(),
            })
    };
    let (_, mh, m) = get(m_name)?;
    let (_, nh, n) = get(n_name)?;
    if mh != nh {
        return Err(FormatError::Suite(format!(
            "`{m_name}` is over `{mh}` but `{n_name}` is over `{nh}`"
        )));
    }
    let basis_of = |name: &str| {
        file.section(name).and_then(|s| {
            s.lines.iter().find_map(|l| match l {
                super::Line::Property { key, values, .. } if key == "basis" => Some(values.clone()),
                _ => None,
            })
        })
    };
    let export = BraidingExport::new(
        m,
        n,
        &module_basis(basis_of(m_name), m),
        &module_basis(basis_of(n_name), n),
        printed,
    );
    Ok(match format {
        OutFormat::Csv => export.to_csv(),
        OutFormat::Json => export.to_json(),
    })
}
