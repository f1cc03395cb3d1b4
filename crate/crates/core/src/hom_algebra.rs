//! Monoidal Hom-algebras, Hom-coalgebras and Hom-Hopf algebras given by
//! structure constants, with their axiom checks.
//!
//! A Hom-algebra `(A, α)` has a product `m: A ⊗ A → A`, a unit `1_A` and an
//! automorphism `α` with
//!
//! ```text
//! α(a)(bc) = (ab)α(c),   α(ab) = α(a)α(b),   a1 = 1a = α(a),   α(1) = 1.
//! ```
//!
//! Dually a Hom-coalgebra `(C, γ)` satisfies
//! `γ⁻¹(c₁) ⊗ Δ(c₂) = Δ(c₁) ⊗ γ⁻¹(c₂)` and `c₁ε(c₂) = γ⁻¹(c) = ε(c₁)c₂`.

use std::sync::Arc;

use thiserror::Error;

use crate::exactlin::{compose, compose_all, invert, kron, LinalgError, LinearMap, Tensor3};
use crate::field::Field;
use crate::report::{check_identity, check_matrices, CheckItem, CheckReport};
use crate::tensor::Element;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StructureError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("{0} is not invertible")]
    NotInvertible(&'static str),
    #[error("{structure} fails {}", failed.join(", "))]
    AxiomsFailed {
        structure: &'static str,
        failed: Vec<String>,
    },
    #[error("parameter {0} must be nonzero")]
    ZeroParameter(&'static str),
}

fn expect_shape<F: Field>(what: &str, m: &LinearMap<F>, rows: usize, cols: usize) -> Result<(), StructureError> {
    if m.rows() != rows || m.cols() != cols {
        return Err(StructureError::Shape(format!(
            "{what} is {}x{}, expected {rows}x{cols}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

pub(crate) fn invert_named<F: Field>(what: &'static str, m: &LinearMap<F>) -> Result<LinearMap<F>, StructureError> {
    invert(m).map_err(|e| match e {
        LinalgError::SingularMap => StructureError::NotInvertible(what),
        other => other.into(),
    })
}

pub(crate) fn require_pass(structure: &'static str, report: &CheckReport) -> Result<(), StructureError> {
    if report.all_passed() {
        Ok(())
    } else {
        Err(StructureError::AxiomsFailed {
            structure,
            failed: report.failures().map(|i| i.id.clone()).collect(),
        })
    }
}

/// Default basis labels `e0, e1, …`.
pub fn default_basis(dim: usize) -> Vec<String> {
    (0..dim).map(|i| format!("e{i}")).collect()
}

/// A monoidal Hom-algebra `(A, m, 1_A, α)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HomAlgebra<F: Field> {
    basis: Vec<String>,
    mul: LinearMap<F>,
    unit: Vec<F>,
    alpha: LinearMap<F>,
    alpha_inv: LinearMap<F>,
}

impl<F: Field> HomAlgebra<F> {
    /// Validates shapes, invertibility of `α` and every Hom-algebra axiom.
    pub fn new(
        basis: Vec<String>,
        mul: &Tensor3<F>,
        unit: Vec<F>,
        alpha: LinearMap<F>,
    ) -> Result<Self, StructureError> {
        let a = Self::new_unchecked(basis, mul, unit, alpha)?;
        require_pass("hom-algebra", &check_hom_algebra(&a))?;
        Ok(a)
    }

    /// Validates shapes and invertibility of `α` only.
    pub fn new_unchecked(
        basis: Vec<String>,
        mul: &Tensor3<F>,
        unit: Vec<F>,
        alpha: LinearMap<F>,
    ) -> Result<Self, StructureError> {
        let d = basis.len();
        if mul.dims() != (d, d, d) {
            return Err(StructureError::Shape(format!(
                "multiplication constants have dims {:?}, expected ({d}, {d}, {d})",
                mul.dims()
            )));
        }
        Self::from_maps_unchecked(basis, mul.to_product_map(), unit, alpha)
    }

    /// Like [`HomAlgebra::new_unchecked`] with the product given as a
    /// `d × d²` matrix.
    pub fn from_maps_unchecked(
        basis: Vec<String>,
        mul: LinearMap<F>,
        unit: Vec<F>,
        alpha: LinearMap<F>,
    ) -> Result<Self, StructureError> {
        let d = basis.len();
        expect_shape("multiplication", &mul, d, d * d)?;
        expect_shape("alpha", &alpha, d, d)?;
        if unit.len() != d {
            return Err(StructureError::Shape(format!(
                "unit has {} coordinates, expected {d}",
                unit.len()
            )));
        }
        let alpha_inv = invert_named("alpha", &alpha)?;
        Ok(Self {
            basis,
            mul,
            unit,
            alpha,
            alpha_inv,
        })
    }

    pub fn from_maps(
        basis: Vec<String>,
        mul: LinearMap<F>,
        unit: Vec<F>,
        alpha: LinearMap<F>,
    ) -> Result<Self, StructureError> {
        let a = Self::from_maps_unchecked(basis, mul, unit, alpha)?;
        require_pass("hom-algebra", &check_hom_algebra(&a))?;
        Ok(a)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    /// The product as a `d × d²` matrix.
    pub fn mul(&self) -> &LinearMap<F> {
        &self.mul
    }

    pub fn mul_tensor(&self) -> Tensor3<F> {
        Tensor3::from_product_map(&self.mul, self.dim(), self.dim())
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn alpha(&self) -> &LinearMap<F> {
        &self.alpha
    }

    pub fn alpha_inv(&self) -> &LinearMap<F> {
        &self.alpha_inv
    }

    /// `α^k` for any integer `k`.
    pub fn alpha_pow(&self, k: i32) -> LinearMap<F> {
        let base = if k >= 0 { &self.alpha } else { &self.alpha_inv };
        (0..k.unsigned_abs()).fold(LinearMap::identity(self.dim()), |acc, _| {
            compose(base, &acc).expect("square")
        })
    }

    /// Product of two coordinate vectors.
    pub fn product(&self, a: &[F], b: &[F]) -> Vec<F> {
        Element::vector(a)
            .tensor(&Element::vector(b))
            .merge(0, &self.mul)
            .to_coords()
    }
}

/// A monoidal Hom-coalgebra `(C, Δ, ε, γ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HomCoalgebra<F: Field> {
    dim: usize,
    comul: LinearMap<F>,
    counit: LinearMap<F>,
    gamma: LinearMap<F>,
    gamma_inv: LinearMap<F>,
}

impl<F: Field> HomCoalgebra<F> {
    /// `comul` holds `Δ(e_k) = Σ Δ_k^{ij} e_i ⊗ e_j` at `(k, i, j)`.
    pub fn new(comul: &Tensor3<F>, counit: Vec<F>, gamma: LinearMap<F>) -> Result<Self, StructureError> {
        let c = Self::new_unchecked(comul, counit, gamma)?;
        require_pass("hom-coalgebra", &check_hom_coalgebra(&c))?;
        Ok(c)
    }

    pub fn new_unchecked(comul: &Tensor3<F>, counit: Vec<F>, gamma: LinearMap<F>) -> Result<Self, StructureError> {
        let (d, d1, d2) = comul.dims();
        if d1 != d || d2 != d {
            return Err(StructureError::Shape(format!(
                "comultiplication constants have dims {:?}, expected ({d}, {d}, {d})",
                comul.dims()
            )));
        }
        Self::from_maps_unchecked(comul.to_coproduct_map(), LinearMap::row_vector(&counit), gamma)
    }

    /// `comul` is `d² × d`, `counit` is `1 × d`.
    pub fn from_maps_unchecked(
        comul: LinearMap<F>,
        counit: LinearMap<F>,
        gamma: LinearMap<F>,
    ) -> Result<Self, StructureError> {
        let d = gamma.rows();
        expect_shape("gamma", &gamma, d, d)?;
        expect_shape("comultiplication", &comul, d * d, d)?;
        expect_shape("counit", &counit, 1, d)?;
        let gamma_inv = invert_named("gamma", &gamma)?;
        Ok(Self {
            dim: d,
            comul,
            counit,
            gamma,
            gamma_inv,
        })
    }

    pub fn from_maps(comul: LinearMap<F>, counit: LinearMap<F>, gamma: LinearMap<F>) -> Result<Self, StructureError> {
        let c = Self::from_maps_unchecked(comul, counit, gamma)?;
        require_pass("hom-coalgebra", &check_hom_coalgebra(&c))?;
        Ok(c)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The comultiplication as a `d² × d` matrix.
    pub fn comul(&self) -> &LinearMap<F> {
        &self.comul
    }

    pub fn comul_tensor(&self) -> Tensor3<F> {
        Tensor3::from_coproduct_map(&self.comul, self.dim, self.dim)
    }

    /// The counit as a `1 × d` covector.
    pub fn counit(&self) -> &LinearMap<F> {
        &self.counit
    }

    pub fn gamma(&self) -> &LinearMap<F> {
        &self.gamma
    }

    pub fn gamma_inv(&self) -> &LinearMap<F> {
        &self.gamma_inv
    }
}

/// A monoidal Hom-Hopf algebra with bijective antipode. The twisting map of
/// the algebra and of the coalgebra coincide.
#[derive(Debug, Clone, PartialEq)]
pub struct HomHopfAlgebra<F: Field> {
    algebra: Arc<HomAlgebra<F>>,
    coalgebra: Arc<HomCoalgebra<F>>,
    antipode: LinearMap<F>,
    antipode_inv: LinearMap<F>,
}

impl<F: Field> HomHopfAlgebra<F> {
    /// Validates every bialgebra and antipode law.
    pub fn new(
        algebra: HomAlgebra<F>,
        coalgebra: HomCoalgebra<F>,
        antipode: LinearMap<F>,
    ) -> Result<Self, StructureError> {
        let h = Self::new_unchecked(algebra, coalgebra, antipode)?;
        require_pass("hom-hopf-algebra", &check_hom_hopf(&h))?;
        Ok(h)
    }

    /// Checks shapes, that the two twisting maps agree and that `S` is
    /// invertible, nothing else.
    pub fn new_unchecked(
        algebra: HomAlgebra<F>,
        coalgebra: HomCoalgebra<F>,
        antipode: LinearMap<F>,
    ) -> Result<Self, StructureError> {
        let d = algebra.dim();
        if coalgebra.dim() != d {
            return Err(StructureError::Shape(format!(
                "algebra has dimension {d}, coalgebra {}",
                coalgebra.dim()
            )));
        }
        if algebra.alpha() != coalgebra.gamma() {
            return Err(StructureError::Shape(
                "algebra and coalgebra twisting maps differ".into(),
            ));
        }
        expect_shape("antipode", &antipode, d, d)?;
        let antipode_inv = invert_named("antipode", &antipode)?;
        Ok(Self {
            algebra: Arc::new(algebra),
            coalgebra: Arc::new(coalgebra),
            antipode,
            antipode_inv,
        })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn basis(&self) -> &[String] {
        self.algebra.basis()
    }

    pub fn algebra(&self) -> &HomAlgebra<F> {
        &self.algebra
    }

    pub fn algebra_arc(&self) -> Arc<HomAlgebra<F>> {
        Arc::clone(&self.algebra)
    }

    pub fn coalgebra(&self) -> &HomCoalgebra<F> {
        &self.coalgebra
    }

    pub fn coalgebra_arc(&self) -> Arc<HomCoalgebra<F>> {
        Arc::clone(&self.coalgebra)
    }

    pub fn mul(&self) -> &LinearMap<F> {
        self.algebra.mul()
    }

    pub fn unit(&self) -> &[F] {
        self.algebra.unit()
    }

    pub fn comul(&self) -> &LinearMap<F> {
        self.coalgebra.comul()
    }

    pub fn counit(&self) -> &LinearMap<F> {
        self.coalgebra.counit()
    }

    pub fn alpha(&self) -> &LinearMap<F> {
        self.algebra.alpha()
    }

    pub fn alpha_inv(&self) -> &LinearMap<F> {
        self.algebra.alpha_inv()
    }

    pub fn alpha_pow(&self, k: i32) -> LinearMap<F> {
        self.algebra.alpha_pow(k)
    }

    pub fn antipode(&self) -> &LinearMap<F> {
        &self.antipode
    }

    pub fn antipode_inv(&self) -> &LinearMap<F> {
        &self.antipode_inv
    }

    /// The map `h ↦ ε(h)1_H`.
    pub fn unit_counit(&self) -> LinearMap<F> {
        compose(&LinearMap::column_vector(self.unit()), self.counit()).expect("shapes")
    }
}

/// An automorphism of a monoidal Hom-Hopf algebra: bijective, an algebra and
/// coalgebra map, commuting with `α` and `S`.
#[derive(Debug, Clone, PartialEq)]
pub struct HopfAutomorphism<F: Field> {
    matrix: LinearMap<F>,
    inverse: LinearMap<F>,
}

impl<F: Field> HopfAutomorphism<F> {
    pub fn new(h: &HomHopfAlgebra<F>, matrix: LinearMap<F>) -> Result<Self, StructureError> {
        require_pass("hopf-automorphism", &check_automorphism(h, &matrix))?;
        Self::new_unchecked(matrix)
    }

    /// Only checks invertibility.
    pub fn new_unchecked(matrix: LinearMap<F>) -> Result<Self, StructureError> {
        let inverse = invert_named("automorphism", &matrix)?;
        Ok(Self { matrix, inverse })
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            matrix: LinearMap::identity(dim),
            inverse: LinearMap::identity(dim),
        }
    }

    pub fn matrix(&self) -> &LinearMap<F> {
        &self.matrix
    }

    pub fn inverse_matrix(&self) -> &LinearMap<F> {
        &self.inverse
    }

    pub fn inverse(&self) -> Self {
        Self {
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
        }
    }

    /// `self ∘ other`.
    pub fn then_after(&self, other: &Self) -> Self {
        Self {
            matrix: compose(&self.matrix, &other.matrix).expect("same dimension"),
            inverse: compose(&other.inverse, &self.inverse).expect("same dimension"),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }
}

/// Composes a word of automorphisms right to left: `compose_auts(&[A, B]) = A∘B`.
pub fn compose_auts<F: Field>(auts: &[&HopfAutomorphism<F>]) -> HopfAutomorphism<F> {
    let (last, rest) = auts.split_last().expect("nonempty word");
    rest.iter().rev().fold((*last).clone(), |acc, a| a.then_after(&acc))
}

pub fn check_hom_algebra<F: Field>(a: &HomAlgebra<F>) -> CheckReport {
    let d = a.dim();
    let m = a.mul();
    let al = a.alpha();
    let ai = a.alpha_inv();
    let unit = a.unit();
    let mut r = CheckReport::new("algebra");
    r.push(check_identity(
        "hom-associativity",
        "α(a)(bc) = (ab)α(c)",
        &[d, d, d],
        |e| e.merge(1, m).map1(0, al).merge(0, m),
        |e| e.merge(0, m).map1(1, al).merge(0, m),
    ));
    r.push(check_identity(
        "hom-associativity-inverse-form",
        "a(bα⁻¹(c)) = (α⁻¹(a)b)c",
        &[d, d, d],
        |e| e.map1(2, ai).merge(1, m).merge(0, m),
        |e| e.map1(0, ai).merge(0, m).merge(0, m),
    ));
    r.push(check_identity(
        "alpha-multiplicative",
        "α(ab) = α(a)α(b)",
        &[d, d],
        |e| e.merge(0, m).map1(0, al),
        |e| e.map1(0, al).map1(1, al).merge(0, m),
    ));
    r.push(check_identity(
        "unit-left",
        "1_A a = α(a)",
        &[d],
        |e| e.insert(0, unit).merge(0, m),
        |e| e.map1(0, al),
    ));
    r.push(check_identity(
        "unit-right",
        "a 1_A = α(a)",
        &[d],
        |e| e.insert(1, unit).merge(0, m),
        |e| e.map1(0, al),
    ));
    r.push(check_identity(
        "alpha-unit",
        "α(1_A) = 1_A",
        &[],
        |e| e.insert(0, unit).map1(0, al),
        |e| e.insert(0, unit),
    ));
    r
}

pub fn check_hom_coalgebra<F: Field>(c: &HomCoalgebra<F>) -> CheckReport {
    let d = c.dim();
    let dl = c.comul();
    let eps = c.counit();
    let g = c.gamma();
    let gi = c.gamma_inv();
    let mut r = CheckReport::new("coalgebra");
    r.push(check_identity(
        "hom-coassociativity",
        "γ⁻¹(c₁) ⊗ Δ(c₂) = Δ(c₁) ⊗ γ⁻¹(c₂)",
        &[d],
        |e| e.split(0, dl, d, d).map1(0, gi).split(1, dl, d, d),
        |e| e.split(0, dl, d, d).map1(1, gi).split(0, dl, d, d),
    ));
    r.push(check_identity(
        "hom-coassociativity-expanded-form",
        "c₁ ⊗ c₂₁ ⊗ γ(c₂₂) = γ(c₁₁) ⊗ c₁₂ ⊗ c₂",
        &[d],
        |e| e.split(0, dl, d, d).split(1, dl, d, d).map1(2, g),
        |e| e.split(0, dl, d, d).split(0, dl, d, d).map1(0, g),
    ));
    r.push(check_identity(
        "gamma-comultiplicative",
        "Δ(γ(c)) = γ(c₁) ⊗ γ(c₂)",
        &[d],
        |e| e.map1(0, g).split(0, dl, d, d),
        |e| e.split(0, dl, d, d).map1(0, g).map1(1, g),
    ));
    r.push(check_identity(
        "counit-left",
        "ε(c₁)c₂ = γ⁻¹(c)",
        &[d],
        |e| e.split(0, dl, d, d).contract(0, eps),
        |e| e.map1(0, gi),
    ));
    r.push(check_identity(
        "counit-right",
        "c₁ε(c₂) = γ⁻¹(c)",
        &[d],
        |e| e.split(0, dl, d, d).contract(1, eps),
        |e| e.map1(0, gi),
    ));
    r.push(check_identity(
        "counit-gamma",
        "ε(γ(c)) = ε(c)",
        &[d],
        |e| e.map1(0, g).contract(0, eps),
        |e| e.contract(0, eps),
    ));
    r
}

/// Multiplies `H ⊗ H` componentwise: `(a ⊗ b)(a' ⊗ b') = aa' ⊗ bb'`, where
/// the four legs start at `leg`.
fn mul_pairs<F: Field>(e: &Element<F>, leg: usize, m: &LinearMap<F>) -> Element<F> {
    let n = e.legs();
    let mut order: Vec<usize> = (0..n).collect();
    order.swap(leg + 1, leg + 2);
    e.permute(&order).merge(leg, m).merge(leg + 1, m)
}

pub fn check_hom_bialgebra<F: Field>(h: &HomHopfAlgebra<F>) -> CheckReport {
    let d = h.dim();
    let m = h.mul();
    let dl = h.comul();
    let eps = h.counit();
    let unit = h.unit();
    let mut r = CheckReport::new("bialgebra");
    r.push(check_identity(
        "comul-multiplicative",
        "Δ(hg) = Δ(h)Δ(g)",
        &[d, d],
        |e| e.merge(0, m).split(0, dl, d, d),
        |e| mul_pairs(&e.split(1, dl, d, d).split(0, dl, d, d), 0, m),
    ));
    r.push(check_identity(
        "comul-unit",
        "Δ(1_H) = 1_H ⊗ 1_H",
        &[],
        |e| e.insert(0, unit).split(0, dl, d, d),
        |e| e.insert(0, unit).insert(1, unit),
    ));
    r.push(check_identity(
        "counit-multiplicative",
        "ε(hg) = ε(h)ε(g)",
        &[d, d],
        |e| e.merge(0, m).contract(0, eps),
        |e| e.contract(1, eps).contract(0, eps),
    ));
    r.push(check_identity(
        "counit-unit",
        "ε(1_H) = 1",
        &[],
        |e| e.insert(0, unit).contract(0, eps),
        |e| e.clone(),
    ));
    r
}

pub fn check_antipode<F: Field>(h: &HomHopfAlgebra<F>) -> CheckReport {
    let d = h.dim();
    let m = h.mul();
    let dl = h.comul();
    let eps = h.counit();
    let unit = h.unit();
    let s = h.antipode();
    let al = h.alpha();
    let ai = h.alpha_inv();
    let mut r = CheckReport::new("antipode");
    r.push(check_identity(
        "antipode-left",
        "S(h₁)h₂ = ε(h)1_H",
        &[d],
        |e| e.split(0, dl, d, d).map1(0, s).merge(0, m),
        |e| e.contract(0, eps).insert(0, unit),
    ));
    r.push(check_identity(
        "antipode-right",
        "h₁S(h₂) = ε(h)1_H",
        &[d],
        |e| e.split(0, dl, d, d).map1(1, s).merge(0, m),
        |e| e.contract(0, eps).insert(0, unit),
    ));
    r.push(check_identity(
        "antipode-alpha",
        "S∘α = α∘S",
        &[d],
        |e| e.map1(0, al).map1(0, s),
        |e| e.map1(0, s).map1(0, al),
    ));
    r.push(check_identity(
        "antipode-alpha-inverse",
        "S∘α⁻¹ = α⁻¹∘S",
        &[d],
        |e| e.map1(0, ai).map1(0, s),
        |e| e.map1(0, s).map1(0, ai),
    ));
    r.push(check_identity(
        "antipode-anti-multiplicative",
        "S(hg) = S(g)S(h)",
        &[d, d],
        |e| e.merge(0, m).map1(0, s),
        |e| e.map1(0, s).map1(1, s).swap(0, 1).merge(0, m),
    ));
    r.push(check_identity(
        "antipode-unit",
        "S(1_H) = 1_H",
        &[],
        |e| e.insert(0, unit).map1(0, s),
        |e| e.insert(0, unit),
    ));
    r.push(check_identity(
        "antipode-anti-comultiplicative",
        "Δ(S(h)) = S(h₂) ⊗ S(h₁)",
        &[d],
        |e| e.map1(0, s).split(0, dl, d, d),
        |e| e.split(0, dl, d, d).map1(0, s).map1(1, s).swap(0, 1),
    ));
    r.push(check_identity(
        "antipode-counit",
        "ε∘S = ε",
        &[d],
        |e| e.map1(0, s).contract(0, eps),
        |e| e.contract(0, eps),
    ));
    r.push(CheckItem::from_bool(
        "antipode-bijective",
        "S is invertible",
        invert(s).is_ok(),
    ));
    r
}

/// Every check on a Hom-Hopf algebra: algebra, coalgebra, bialgebra and
/// antipode laws.
pub fn check_hom_hopf<F: Field>(h: &HomHopfAlgebra<F>) -> CheckReport {
    let mut r = CheckReport::new("hopf");
    r.absorb(check_hom_algebra(h.algebra()), "");
    r.absorb(check_hom_coalgebra(h.coalgebra()), "");
    r.absorb(check_hom_bialgebra(h), "");
    r.absorb(check_antipode(h), "");
    r
}

pub fn check_automorphism<F: Field>(h: &HomHopfAlgebra<F>, phi: &LinearMap<F>) -> CheckReport {
    let d = h.dim();
    let mut r = CheckReport::new("automorphism");
    if phi.rows() != d || phi.cols() != d {
        r.push(CheckItem::fail("aut-shape", "φ is an endomorphism of H", None));
        return r;
    }
    let m = h.mul();
    let dl = h.comul();
    let eps = h.counit();
    let unit = h.unit();
    r.push(CheckItem::from_bool(
        "aut-bijective",
        "φ is invertible",
        invert(phi).is_ok(),
    ));
    r.push(check_identity(
        "aut-multiplicative",
        "φ(ab) = φ(a)φ(b)",
        &[d, d],
        |e| e.merge(0, m).map1(0, phi),
        |e| e.map1(0, phi).map1(1, phi).merge(0, m),
    ));
    r.push(check_identity(
        "aut-unit",
        "φ(1_H) = 1_H",
        &[],
        |e| e.insert(0, unit).map1(0, phi),
        |e| e.insert(0, unit),
    ));
    r.push(check_identity(
        "aut-comultiplicative",
        "Δ(φ(h)) = φ(h₁) ⊗ φ(h₂)",
        &[d],
        |e| e.map1(0, phi).split(0, dl, d, d),
        |e| e.split(0, dl, d, d).map1(0, phi).map1(1, phi),
    ));
    r.push(check_identity(
        "aut-counit",
        "ε∘φ = ε",
        &[d],
        |e| e.map1(0, phi).contract(0, eps),
        |e| e.contract(0, eps),
    ));
    r.push(check_matrices(
        "aut-commutes-alpha",
        "φ∘α = α∘φ",
        &compose(phi, h.alpha()).expect("square"),
        &compose(h.alpha(), phi).expect("square"),
    ));
    r.push(check_matrices(
        "aut-commutes-antipode",
        "φ∘S = S∘φ",
        &compose(phi, h.antipode()).expect("square"),
        &compose(h.antipode(), phi).expect("square"),
    ));
    r
}

/// The convolution `f ∗ g = m∘(f ⊗ g)∘Δ`.
pub fn convolution<F: Field>(
    h: &HomHopfAlgebra<F>,
    f: &LinearMap<F>,
    g: &LinearMap<F>,
) -> Result<LinearMap<F>, LinalgError> {
    compose_all(&[h.mul(), &kron(f, g), h.comul()])
}
