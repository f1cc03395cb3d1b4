use std::collections::HashMap;
use std::sync::Arc;

use num_traits::Zero;

use super::{BasisRef, DefinitionFile, Entry, Expr, FormatError, Line, Section, SectionKind};
use crate::exactlin::LinearMap;
use crate::hom_algebra::{HomAlgebra, HomCoalgebra, HomHopfAlgebra, HopfAutomorphism, StructureError};
use crate::t_category::AutPair;
use crate::yd_modules::{HomComodule, HomModule, Side, YDModule};
use crate::Scalar;

/// A definition file with parameters substituted and every section built,
/// without any axiom checked. Each list keeps file order.
#[derive(Debug, Clone, Default)]
pub struct Resolved {
    pub params: Vec<(String, Scalar)>,
    pub algebras: Vec<(String, Arc<HomAlgebra<Scalar>>)>,
    pub coalgebras: Vec<(String, Arc<HomCoalgebra<Scalar>>)>,
    pub hopfs: Vec<(String, Arc<HomHopfAlgebra<Scalar>>)>,
    pub modules: Vec<(String, HomModule<Scalar>)>,
    pub comodules: Vec<(String, HomComodule<Scalar>)>,
    /// `(name, hopf name, pair)`.
    pub pairs: Vec<(String, String, AutPair<Scalar>)>,
    /// `(name, hopf name, module)`.
    pub ydmodules: Vec<(String, String, YDModule<Scalar>)>,
}

impl Resolved {
    pub fn hopf(&self, name: &str) -> Option<&Arc<HomHopfAlgebra<Scalar>>> {
        lookup(&self.hopfs, name)
    }

    pub fn ydmodule(&self, name: &str) -> Option<&YDModule<Scalar>> {
        self.ydmodules.iter().find(|(n, _, _)| n == name).map(|(_, _, m)| m)
    }

    fn algebra(&self, name: &str) -> Option<Arc<HomAlgebra<Scalar>>> {
        lookup(&self.algebras, name)
            .cloned()
            .or_else(|| self.hopf(name).map(|h| h.algebra_arc()))
    }

    fn coalgebra(&self, name: &str) -> Option<Arc<HomCoalgebra<Scalar>>> {
        lookup(&self.coalgebras, name)
            .cloned()
            .or_else(|| self.hopf(name).map(|h| h.coalgebra_arc()))
    }
}

fn lookup<'a, T>(list: &'a [(String, T)], name: &str) -> Option<&'a T> {
    list.iter().find(|(n, _)| n == name).map(|(_, v)| v)
}

fn invalid(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Invalid {
        line,
        message: message.into(),
    }
}

fn structure(line: usize, e: StructureError) -> FormatError {
    invalid(line, e.to_string())
}

fn eval(e: &Expr, params: &HashMap<String, Scalar>, line: usize) -> Result<Scalar, FormatError> {
    let go = |x: &Expr| eval(x, params, line);
    Ok(match e {
        Expr::Num(q) => q.clone(),
        Expr::Param(p) => params
            .get(p)
            .cloned()
            .ok_or_else(|| FormatError::UnboundName { line, name: p.clone() })?,
        Expr::Neg(a) => -go(a)?,
        Expr::Add(a, b) => go(a)? + go(b)?,
        Expr::Sub(a, b) => go(a)? - go(b)?,
        Expr::Mul(a, b) => go(a)? * go(b)?,
        Expr::Div(a, b) => {
            let d = go(b)?;
            if d.is_zero() {
                return Err(FormatError::ZeroDenominator { line });
            }
            go(a)? / d
        }
    })
}

/// The basis of one tensor leg.
type Leg<'a> = &'a [String];

fn index_of(r: &BasisRef, basis: Leg, line: usize) -> Result<usize, FormatError> {
    match r {
        BasisRef::Index(i) if *i < basis.len() => Ok(*i),
        BasisRef::Index(i) => Err(FormatError::OutOfRangeIndex {
            line,
            index: *i,
            dim: basis.len(),
        }),
        BasisRef::Name(n) => basis
            .iter()
            .position(|b| b == n)
            .ok_or_else(|| FormatError::UnboundName { line, name: n.clone() }),
    }
}

fn flat_index(refs: &[BasisRef], legs: &[Leg], line: usize, what: &str) -> Result<usize, FormatError> {
    if refs.len() != legs.len() {
        return Err(invalid(
            line,
            format!("{what} takes {} basis elements, got {}", legs.len(), refs.len()),
        ));
    }
    let mut flat = 0;
    for (r, leg) in refs.iter().zip(legs) {
        flat = flat * leg.len() + index_of(r, leg, line)?;
    }
    Ok(flat)
}

/// Builds the matrix of the map `key`, or `None` when the section has no
/// such entry. Unlisted input tuples map to zero.
fn build_map(
    section: &Section,
    key: &str,
    inputs: &[Leg],
    outputs: &[Leg],
    params: &HashMap<String, Scalar>,
) -> Result<Option<LinearMap<Scalar>>, FormatError> {
    Ok(build_listed(section, key, inputs, outputs, params)?.0)
}

/// A twisting map: unlisted basis elements are fixed.
fn build_twist(
    section: &Section,
    key: &str,
    leg: Leg,
    params: &HashMap<String, Scalar>,
) -> Result<LinearMap<Scalar>, FormatError> {
    let (m, seen) = build_listed(section, key, &[leg], &[leg], params)?;
    let mut m = m.unwrap_or_else(|| LinearMap::zeros(leg.len(), leg.len()));
    for (j, listed) in seen.into_iter().enumerate() {
        if !listed {
            m.set(j, j, Scalar::from_integer(1.into()));
        }
    }
    Ok(m)
}

fn build_listed(
    section: &Section,
    key: &str,
    inputs: &[Leg],
    outputs: &[Leg],
    params: &HashMap<String, Scalar>,
) -> Result<(Option<LinearMap<Scalar>>, Vec<bool>), FormatError> {
    let rows: usize = outputs.iter().map(|l| l.len()).product();
    let cols: usize = inputs.iter().map(|l| l.len()).product();
    let mut m = LinearMap::zeros(rows, cols);
    let mut seen = vec![false; cols];
    let mut any = false;
    for e in entries(section).filter(|e| e.key == key) {
        any = true;
        let col = flat_index(&e.inputs, inputs, e.line, key)?;
        if std::mem::replace(&mut seen[col], true) {
            return Err(invalid(e.line, format!("duplicate `{key}` entry")));
        }
        for t in &e.terms {
            let coef = eval(&t.coef, params, e.line)?;
            let row = if outputs.is_empty() {
                if !t.outputs.is_empty() {
                    return Err(invalid(e.line, format!("`{key}` has a scalar value")));
                }
                0
            } else {
                flat_index(&t.outputs, outputs, e.line, key)?
            };
            let v = m.get(row, col) + coef;
            m.set(row, col, v);
        }
    }
    Ok((any.then_some(m), seen))
}

fn entries(section: &Section) -> impl Iterator<Item = &Entry> {
    section.lines.iter().filter_map(|l| match l {
        Line::Entry(e) => Some(e),
        _ => None,
    })
}

fn property<'a>(section: &'a Section, key: &str) -> Option<(&'a [String], usize)> {
    section.lines.iter().find_map(|l| match l {
        Line::Property { key: k, values, line } if k == key => Some((values.as_slice(), *line)),
        _ => None,
    })
}

fn single(section: &Section, key: &str) -> Result<Option<(String, usize)>, FormatError> {
    match property(section, key) {
        None => Ok(None),
        Some(([v], line)) => Ok(Some((v.clone(), line))),
        Some((_, line)) => Err(invalid(line, format!("`{key}` takes exactly one name"))),
    }
}

fn required(section: &Section, key: &str) -> Result<(String, usize), FormatError> {
    single(section, key)?.ok_or_else(|| invalid(section.line, format!("section `{}` needs `{key}:`", section.name)))
}

fn basis(section: &Section) -> Result<Vec<String>, FormatError> {
    let (values, line) = property(section, "basis")
        .ok_or_else(|| invalid(section.line, format!("section `{}` needs `basis:`", section.name)))?;
    if values.is_empty() {
        return Err(invalid(line, "empty basis"));
    }
    for (i, v) in values.iter().enumerate() {
        if values[..i].contains(v) {
            return Err(invalid(line, format!("basis element `{v}` listed twice")));
        }
    }
    Ok(values.to_vec())
}

const ALLOWED: &[(SectionKind, &[&str])] = &[
    (SectionKind::Algebra, &["basis", "unit", "mul", "alpha"]),
    (SectionKind::Coalgebra, &["basis", "comul", "counit", "alpha"]),
    (
        SectionKind::Hopf,
        &["basis", "unit", "mul", "alpha", "comul", "counit", "antipode"],
    ),
    (SectionKind::Module, &["over", "basis", "act", "mu"]),
    (SectionKind::Comodule, &["over", "side", "basis", "coact", "mu"]),
    (SectionKind::YdModule, &["over", "pair", "basis", "act", "coact", "mu"]),
    (SectionKind::AutPair, &["over", "a", "b"]),
];

fn check_keys(section: &Section) -> Result<(), FormatError> {
    let allowed = ALLOWED
        .iter()
        .find(|(k, _)| *k == section.kind)
        .map_or(&[][..], |(_, keys)| *keys);
    for l in &section.lines {
        let (key, line) = match l {
            Line::Property { key, line, .. } => (key, *line),
            Line::Entry(e) => (&e.key, e.line),
            _ => continue,
        };
        if !allowed.contains(&key.as_str()) {
            return Err(invalid(
                line,
                format!("unknown key `{key}` in a {} section", section.kind.keyword()),
            ));
        }
    }
    Ok(())
}

fn algebra_part(
    s: &Section,
    basis: &[String],
    params: &HashMap<String, Scalar>,
) -> Result<(HomAlgebra<Scalar>, LinearMap<Scalar>), FormatError> {
    let b: Leg = basis;
    let d = basis.len();
    let mul = build_map(s, "mul", &[b, b], &[b], params)?.unwrap_or_else(|| LinearMap::zeros(d, d * d));
    let unit = build_map(s, "unit", &[], &[b], params)?.map_or_else(|| vec![Scalar::zero(); d], |u| u.column(0));
    let alpha = build_twist(s, "alpha", b, params)?;
    let a =
        HomAlgebra::from_maps_unchecked(basis.to_vec(), mul, unit, alpha.clone()).map_err(|e| structure(s.line, e))?;
    Ok((a, alpha))
}

fn coalgebra_part(
    s: &Section,
    basis: &[String],
    params: &HashMap<String, Scalar>,
) -> Result<HomCoalgebra<Scalar>, FormatError> {
    let b: Leg = basis;
    let d = basis.len();
    let comul = build_map(s, "comul", &[b], &[b, b], params)?.unwrap_or_else(|| LinearMap::zeros(d * d, d));
    let counit = build_map(s, "counit", &[b], &[], params)?.unwrap_or_else(|| LinearMap::zeros(1, d));
    let gamma = build_twist(s, "alpha", b, params)?;
    HomCoalgebra::from_maps_unchecked(comul, counit, gamma).map_err(|e| structure(s.line, e))
}

type Params = (Vec<(String, Scalar)>, HashMap<String, Scalar>);

fn resolve_params(file: &DefinitionFile) -> Result<Params, FormatError> {
    let mut list = Vec::new();
    let mut map = HashMap::new();
    for s in file.sections.iter().filter(|s| s.kind == SectionKind::Params) {
        for l in &s.lines {
            if let Line::Param { name, value, line } = l {
                if map.contains_key(name) {
                    return Err(invalid(*line, format!("parameter `{name}` bound twice")));
                }
                let v = eval(value, &map, *line)?;
                map.insert(name.clone(), v.clone());
                list.push((name.clone(), v));
            }
        }
    }
    Ok((list, map))
}

/// Substitutes parameters and builds every section. Structure maps are
/// only checked for shape and the invertibility of twisting maps and
/// antipodes; axioms are left to [`super::run_checks`].
pub fn resolve(file: &DefinitionFile) -> Result<Resolved, FormatError> {
    let mut names: HashMap<&str, usize> = HashMap::new();
    for s in &file.sections {
        if s.kind == SectionKind::Params {
            continue;
        }
        if let Some(first) = names.insert(&s.name, s.line) {
            return Err(invalid(
                s.line,
                format!("section name `{}` already used on line {first}", s.name),
            ));
        }
        check_keys(s)?;
    }
    let (plist, params) = resolve_params(file)?;
    let mut r = Resolved {
        params: plist,
        ..Resolved::default()
    };
    let of_kind = |k: SectionKind| file.sections.iter().filter(move |s| s.kind == k);

    for s in of_kind(SectionKind::Algebra) {
        let basis = basis(s)?;
        let (a, _) = algebra_part(s, &basis, &params)?;
        r.algebras.push((s.name.clone(), Arc::new(a)));
    }
    for s in of_kind(SectionKind::Coalgebra) {
        let basis = basis(s)?;
        let c = coalgebra_part(s, &basis, &params)?;
        r.coalgebras.push((s.name.clone(), Arc::new(c)));
    }
    for s in of_kind(SectionKind::Hopf) {
        let basis = basis(s)?;
        let (a, _) = algebra_part(s, &basis, &params)?;
        let c = coalgebra_part(s, &basis, &params)?;
        let b: Leg = &basis;
        let antipode = build_map(s, "antipode", &[b], &[b], &params)?
            .ok_or_else(|| invalid(s.line, format!("section `{}` needs `antipode` entries", s.name)))?;
        let h = HomHopfAlgebra::new_unchecked(a, c, antipode).map_err(|e| structure(s.line, e))?;
        r.hopfs.push((s.name.clone(), Arc::new(h)));
    }
    for s in of_kind(SectionKind::AutPair) {
        let (over, line) = required(s, "over")?;
        let h = r.hopf(&over).ok_or(FormatError::UnboundName {
            line,
            name: over.clone(),
        })?;
        let b: Leg = h.basis();
        let aut = |key: &str| -> Result<HopfAutomorphism<Scalar>, FormatError> {
            let m = build_twist(s, key, b, &params)?;
            HopfAutomorphism::new_unchecked(m).map_err(|e| structure(s.line, e))
        };
        let pair = AutPair::new(aut("a")?, aut("b")?);
        r.pairs.push((s.name.clone(), over, pair));
    }
    for s in of_kind(SectionKind::Module) {
        let (over, line) = required(s, "over")?;
        let alg = r.algebra(&over).ok_or(FormatError::UnboundName { line, name: over })?;
        let basis = basis(s)?;
        let m: Leg = &basis;
        let action = build_map(s, "act", &[alg.basis(), m], &[m], &params)?
            .unwrap_or_else(|| LinearMap::zeros(m.len(), alg.dim() * m.len()));
        let mu = build_twist(s, "mu", m, &params)?;
        let module = HomModule::new_unchecked(alg, action, mu).map_err(|e| structure(s.line, e))?;
        r.modules.push((s.name.clone(), module));
    }
    for s in of_kind(SectionKind::Comodule) {
        let (over, line) = required(s, "over")?;
        let coalg = r.coalgebra(&over).ok_or(FormatError::UnboundName {
            line,
            name: over.clone(),
        })?;
        let hbasis = match r.hopf(&over) {
            Some(h) => h.basis().to_vec(),
            None => basis(file.section(&over).expect("coalgebra sections are named"))?,
        };
        let side = match single(s, "side")? {
            None => Side::Right,
            Some((v, _)) if v == "right" => Side::Right,
            Some((v, _)) if v == "left" => Side::Left,
            Some((v, line)) => return Err(invalid(line, format!("side must be `left` or `right`, not `{v}`"))),
        };
        let basis = basis(s)?;
        let m: Leg = &basis;
        let h: Leg = &hbasis;
        let outputs: [Leg; 2] = match side {
            Side::Right => [m, h],
            Side::Left => [h, m],
        };
        let coaction = build_map(s, "coact", &[m], &outputs, &params)?
            .unwrap_or_else(|| LinearMap::zeros(m.len() * h.len(), m.len()));
        let mu = build_twist(s, "mu", m, &params)?;
        let comodule = HomComodule::new_unchecked(coalg, side, coaction, mu).map_err(|e| structure(s.line, e))?;
        r.comodules.push((s.name.clone(), comodule));
    }
    for s in of_kind(SectionKind::YdModule) {
        let (over, line) = required(s, "over")?;
        let hopf = r.hopf(&over).cloned().ok_or(FormatError::UnboundName {
            line,
            name: over.clone(),
        })?;
        let pair = match single(s, "pair")? {
            None => AutPair::identity(hopf.dim()),
            Some((p, line)) => {
                let (_, h, pair) = r
                    .pairs
                    .iter()
                    .find(|(n, _, _)| *n == p)
                    .ok_or(FormatError::UnboundName { line, name: p.clone() })?;
                if *h != over {
                    return Err(invalid(line, format!("pair `{p}` is over `{h}`, not `{over}`")));
                }
                pair.clone()
            }
        };
        let basis = basis(s)?;
        let m: Leg = &basis;
        let h: Leg = hopf.basis();
        let (dm, dh) = (m.len(), h.len());
        let action = build_map(s, "act", &[h, m], &[m], &params)?.unwrap_or_else(|| LinearMap::zeros(dm, dh * dm));
        let coaction = build_map(s, "coact", &[m], &[m, h], &params)?.unwrap_or_else(|| LinearMap::zeros(dm * dh, dm));
        let mu = build_twist(s, "mu", m, &params)?;
        let module = YDModule::new_unchecked(s.name.clone(), hopf, action, coaction, mu, pair)
            .map_err(|e| structure(s.line, e))?;
        r.ydmodules.push((s.name.clone(), over, module));
    }
    Ok(r)
}
