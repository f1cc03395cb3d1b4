//! Hom-modules, Hom-comodules, twisted Yetter–Drinfeld Hom-modules and the two
//! equivalent descriptions of them: entwined modules over `ψ(A,B)` and
//! Yetter–Drinfeld data over the bicomodule algebra `H_(A,B)`.
//!
//! Notation in formulas: `h·m` is the action, `ρ(m) = m₀ ⊗ m₁` a right
//! coaction, `ρ(n) = n₋₁ ⊗ n₀` a left one, `μ` the twist of the carrier.

use std::sync::Arc;

use crate::exactlin::{invert, LinearMap};
use crate::field::Field;
use crate::hom_algebra::{
    check_automorphism, invert_named, require_pass, HomAlgebra, HomCoalgebra, HomHopfAlgebra, HopfAutomorphism,
    StructureError,
};
use crate::report::{check_identity, check_matrices, CheckItem, CheckReport};
use crate::t_category::AutPair;
use crate::tensor::Element;

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

/// A left Hom-module `(M, ·, μ)` over a Hom-algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct HomModule<F: Field> {
    algebra: Arc<HomAlgebra<F>>,
    dim: usize,
    action: LinearMap<F>,
    mu: LinearMap<F>,
    mu_inv: LinearMap<F>,
}

impl<F: Field> HomModule<F> {
    /// `action` is the `dim × (dim(A)·dim)` matrix of `a ⊗ m ↦ a·m`.
    pub fn new(algebra: Arc<HomAlgebra<F>>, action: LinearMap<F>, mu: LinearMap<F>) -> Result<Self, StructureError> {
        let m = Self::new_unchecked(algebra, action, mu)?;
        require_pass("hom-module", &check_hom_module(&m))?;
        Ok(m)
    }

    pub fn new_unchecked(
        algebra: Arc<HomAlgebra<F>>,
        action: LinearMap<F>,
        mu: LinearMap<F>,
    ) -> Result<Self, StructureError> {
        let dim = mu.rows();
        expect_shape("mu", &mu, dim, dim)?;
        expect_shape("action", &action, dim, algebra.dim() * dim)?;
        let mu_inv = invert_named("mu", &mu)?;
        Ok(Self {
            algebra,
            dim,
            action,
            mu,
            mu_inv,
        })
    }

    /// Like [`HomModule::new_unchecked`] with `μ⁻¹` supplied by the caller.
    pub(crate) fn with_inverse(
        algebra: Arc<HomAlgebra<F>>,
        action: LinearMap<F>,
        mu: LinearMap<F>,
        mu_inv: LinearMap<F>,
    ) -> Result<Self, StructureError> {
        let dim = mu.rows();
        expect_shape("mu", &mu, dim, dim)?;
        expect_shape("mu inverse", &mu_inv, dim, dim)?;
        expect_shape("action", &action, dim, algebra.dim() * dim)?;
        Ok(Self {
            algebra,
            dim,
            action,
            mu,
            mu_inv,
        })
    }

    /// The algebra acting on itself by its product.
    pub fn regular(algebra: Arc<HomAlgebra<F>>) -> Self {
        let action = algebra.mul().clone();
        let mu = algebra.alpha().clone();
        let mu_inv = algebra.alpha_inv().clone();
        Self {
            dim: algebra.dim(),
            algebra,
            action,
            mu,
            mu_inv,
        }
    }

    pub fn algebra(&self) -> &HomAlgebra<F> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &LinearMap<F> {
        &self.action
    }

    pub fn mu(&self) -> &LinearMap<F> {
        &self.mu
    }

    pub fn mu_inv(&self) -> &LinearMap<F> {
        &self.mu_inv
    }

    /// `a·m` on basis vectors.
    pub fn act(&self, a: usize, m: usize) -> Vec<F> {
        self.action.column(a * self.dim + m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `ρ: M → C ⊗ M`, `m ↦ m₋₁ ⊗ m₀`.
    Left,
    /// `ρ: M → M ⊗ C`, `m ↦ m₀ ⊗ m₁`.
    Right,
}

/// A Hom-comodule `(M, ρ, μ)` over a Hom-coalgebra, on either side.
#[derive(Debug, Clone, PartialEq)]
pub struct HomComodule<F: Field> {
    coalgebra: Arc<HomCoalgebra<F>>,
    side: Side,
    dim: usize,
    coaction: LinearMap<F>,
    mu: LinearMap<F>,
    mu_inv: LinearMap<F>,
}

impl<F: Field> HomComodule<F> {
    pub fn new(
        coalgebra: Arc<HomCoalgebra<F>>,
        side: Side,
        coaction: LinearMap<F>,
        mu: LinearMap<F>,
    ) -> Result<Self, StructureError> {
        let c = Self::new_unchecked(coalgebra, side, coaction, mu)?;
        require_pass("hom-comodule", &check_hom_comodule(&c))?;
        Ok(c)
    }

    pub fn new_unchecked(
        coalgebra: Arc<HomCoalgebra<F>>,
        side: Side,
        coaction: LinearMap<F>,
        mu: LinearMap<F>,
    ) -> Result<Self, StructureError> {
        let dim = mu.rows();
        expect_shape("mu", &mu, dim, dim)?;
        expect_shape("coaction", &coaction, dim * coalgebra.dim(), dim)?;
        let mu_inv = invert_named("mu", &mu)?;
        Ok(Self {
            coalgebra,
            side,
            dim,
            coaction,
            mu,
            mu_inv,
        })
    }

    pub(crate) fn with_inverse(
        coalgebra: Arc<HomCoalgebra<F>>,
        side: Side,
        coaction: LinearMap<F>,
        mu: LinearMap<F>,
        mu_inv: LinearMap<F>,
    ) -> Result<Self, StructureError> {
        let dim = mu.rows();
        expect_shape("mu", &mu, dim, dim)?;
        expect_shape("mu inverse", &mu_inv, dim, dim)?;
        expect_shape("coaction", &coaction, dim * coalgebra.dim(), dim)?;
        Ok(Self {
            coalgebra,
            side,
            dim,
            coaction,
            mu,
            mu_inv,
        })
    }

    /// The coalgebra coacting on itself by its comultiplication.
    pub fn regular(coalgebra: Arc<HomCoalgebra<F>>, side: Side) -> Self {
        Self {
            dim: coalgebra.dim(),
            side,
            coaction: coalgebra.comul().clone(),
            mu: coalgebra.gamma().clone(),
            mu_inv: coalgebra.gamma_inv().clone(),
            coalgebra,
        }
    }

    pub fn coalgebra(&self) -> &HomCoalgebra<F> {
        &self.coalgebra
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coaction(&self) -> &LinearMap<F> {
        &self.coaction
    }

    pub fn mu(&self) -> &LinearMap<F> {
        &self.mu
    }

    pub fn mu_inv(&self) -> &LinearMap<F> {
        &self.mu_inv
    }

    /// Applies the coaction to leg `leg`, producing two legs in the order
    /// of the side (`m₀, m₁` or `m₋₁, m₀`).
    pub fn coact(&self, e: &Element<F>, leg: usize) -> Element<F> {
        let c = self.coalgebra.dim();
        match self.side {
            Side::Right => e.split(leg, &self.coaction, self.dim, c),
            Side::Left => e.split(leg, &self.coaction, c, self.dim),
        }
    }
}

pub fn check_hom_module<F: Field>(m: &HomModule<F>) -> CheckReport {
    let a = m.algebra();
    let (d, n) = (a.dim(), m.dim());
    let act = m.action();
    let mul = a.mul();
    let (al, mu) = (a.alpha(), m.mu());
    let mut r = CheckReport::new("module");
    r.push(check_identity(
        "module-hom-associativity",
        "α(a)·(b·m) = (ab)·μ(m)",
        &[d, d, n],
        |e| e.merge(1, act).map1(0, al).merge(0, act),
        |e| e.merge(0, mul).map1(1, mu).merge(0, act),
    ));
    r.push(check_identity(
        "module-twist",
        "μ(a·m) = α(a)·μ(m)",
        &[d, n],
        |e| e.merge(0, act).map1(0, mu),
        |e| e.map1(0, al).map1(1, mu).merge(0, act),
    ));
    r.push(check_identity(
        "module-unit",
        "1_A·m = μ(m)",
        &[n],
        |e| e.insert(0, a.unit()).merge(0, act),
        |e| e.map1(0, mu),
    ));
    r
}

pub fn check_hom_comodule<F: Field>(m: &HomComodule<F>) -> CheckReport {
    let c = m.coalgebra();
    let (d, n) = (c.dim(), m.dim());
    let dl = c.comul();
    let (g, gi) = (c.gamma(), c.gamma_inv());
    let (mu, mi) = (m.mu(), m.mu_inv());
    let eps = c.counit();
    let mut r = CheckReport::new("comodule");
    match m.side() {
        Side::Right => {
            r.push(check_identity(
                "comodule-hom-coassociativity",
                "μ⁻¹(m₀) ⊗ Δ(m₁) = m₀₀ ⊗ m₀₁ ⊗ γ⁻¹(m₁)",
                &[n],
                |e| m.coact(e, 0).map1(0, mi).split(1, dl, d, d),
                |e| m.coact(&m.coact(e, 0), 0).map1(2, gi),
            ));
            r.push(check_identity(
                "comodule-twist",
                "ρ(μ(m)) = μ(m₀) ⊗ γ(m₁)",
                &[n],
                |e| m.coact(&e.map1(0, mu), 0),
                |e| m.coact(e, 0).map1(0, mu).map1(1, g),
            ));
            r.push(check_identity(
                "comodule-counit",
                "m₀ε(m₁) = μ⁻¹(m)",
                &[n],
                |e| m.coact(e, 0).contract(1, eps),
                |e| e.map1(0, mi),
            ));
        }
        Side::Left => {
            r.push(check_identity(
                "comodule-hom-coassociativity",
                "Δ(m₋₁) ⊗ μ⁻¹(m₀) = γ⁻¹(m₋₁) ⊗ m₀₋₁ ⊗ m₀₀",
                &[n],
                |e| m.coact(e, 0).map1(1, mi).split(0, dl, d, d),
                |e| m.coact(&m.coact(e, 0), 1).map1(0, gi),
            ));
            r.push(check_identity(
                "comodule-twist",
                "ρ(μ(m)) = γ(m₋₁) ⊗ μ(m₀)",
                &[n],
                |e| m.coact(&e.map1(0, mu), 0),
                |e| m.coact(e, 0).map1(0, g).map1(1, mu),
            ));
            r.push(check_identity(
                "comodule-counit",
                "ε(m₋₁)m₀ = μ⁻¹(m)",
                &[n],
                |e| m.coact(e, 0).contract(0, eps),
                |e| e.map1(0, mi),
            ));
        }
    }
    r
}

/// The module-algebra laws `h·(ab) = (h₁·a)(h₂·b)` and `h·1_B = ε(h)1_B` for
/// an action of `h` on the carrier algebra `b`.
pub fn check_module_algebra<F: Field>(h: &HomHopfAlgebra<F>, b: &HomAlgebra<F>, m: &HomModule<F>) -> CheckReport {
    let (d, n) = (h.dim(), b.dim());
    let act = m.action();
    let mut r = CheckReport::new("module-algebra");
    r.push(CheckItem::from_bool(
        "module-algebra-carrier",
        "the module is carried by the algebra, with μ = β",
        m.dim() == n && m.mu() == b.alpha(),
    ));
    if m.dim() != n {
        return r;
    }
    r.push(check_identity(
        "module-algebra-product",
        "h·(ab) = (h₁·a)(h₂·b)",
        &[d, n, n],
        |e| e.merge(1, b.mul()).merge(0, act),
        |e| {
            e.split(0, h.comul(), d, d)
                .swap(1, 2)
                .merge(0, act)
                .merge(1, act)
                .merge(0, b.mul())
        },
    ));
    r.push(check_identity(
        "module-algebra-unit",
        "h·1_B = ε(h)1_B",
        &[d],
        |e| e.insert(1, b.unit()).merge(0, act),
        |e| e.contract(0, h.counit()).insert(0, b.unit()),
    ));
    r
}

/// The comodule-algebra laws: the coaction is multiplicative and sends `1_B`
/// to `1_B ⊗ 1_H` (or `1_H ⊗ 1_B` on the left).
pub fn check_comodule_algebra<F: Field>(h: &HomHopfAlgebra<F>, b: &HomAlgebra<F>, c: &HomComodule<F>) -> CheckReport {
    let n = b.dim();
    let hm = h.mul();
    let bm = b.mul();
    let mut r = CheckReport::new("comodule-algebra");
    r.push(CheckItem::from_bool(
        "comodule-algebra-carrier",
        "the comodule is carried by the algebra, with μ = β",
        c.dim() == n && c.mu() == b.alpha(),
    ));
    if c.dim() != n {
        return r;
    }
    let (first, second) = match c.side() {
        Side::Right => (bm, hm),
        Side::Left => (hm, bm),
    };
    let (formula, unit_formula) = match c.side() {
        Side::Right => ("ρ(ab) = a₀b₀ ⊗ a₁b₁", "ρ(1_B) = 1_B ⊗ 1_H"),
        Side::Left => ("ρ(ab) = a₋₁b₋₁ ⊗ a₀b₀", "ρ(1_B) = 1_H ⊗ 1_B"),
    };
    r.push(check_identity(
        "comodule-algebra-product",
        formula,
        &[n, n],
        |e| c.coact(&e.merge(0, bm), 0),
        |e| c.coact(&c.coact(e, 1), 0).swap(1, 2).merge(0, first).merge(1, second),
    ));
    let units = match c.side() {
        Side::Right => (b.unit(), h.unit()),
        Side::Left => (h.unit(), b.unit()),
    };
    r.push(check_identity(
        "comodule-algebra-unit",
        unit_formula,
        &[],
        |e| c.coact(&e.insert(0, b.unit()), 0),
        |e| e.insert(0, units.0).insert(1, units.1),
    ));
    r
}

/// A left-right `(A,B)`-Yetter–Drinfeld Hom-module: a left Hom-module and
/// right Hom-comodule over `H` sharing the twist `μ`, with
///
/// ```text
/// ρ(h·m) = α(h₂₁)·m₀ ⊗ (B(h₂₂)α⁻¹(m₁))A(S⁻¹(h₁)).
/// ```
#[derive(Debug, Clone, PartialEq)]
pub struct YDModule<F: Field> {
    label: String,
    hopf: Arc<HomHopfAlgebra<F>>,
    module: HomModule<F>,
    comodule: HomComodule<F>,
    pair: AutPair<F>,
}

impl<F: Field> YDModule<F> {
    /// Validates the module and comodule axioms and the compatibility
    /// condition for `pair`.
    pub fn new(
        label: impl Into<String>,
        hopf: Arc<HomHopfAlgebra<F>>,
        action: LinearMap<F>,
        coaction: LinearMap<F>,
        mu: LinearMap<F>,
        pair: AutPair<F>,
    ) -> Result<Self, StructureError> {
        let m = Self::new_unchecked(label, hopf, action, coaction, mu, pair)?;
        let mut r = check_hom_module(&m.module);
        r.absorb(check_hom_comodule(&m.comodule), "");
        r.absorb(check_yd(&m), "");
        require_pass("yd-module", &r)?;
        Ok(m)
    }

    /// Checks shapes and invertibility of `μ` only.
    pub fn new_unchecked(
        label: impl Into<String>,
        hopf: Arc<HomHopfAlgebra<F>>,
        action: LinearMap<F>,
        coaction: LinearMap<F>,
        mu: LinearMap<F>,
        pair: AutPair<F>,
    ) -> Result<Self, StructureError> {
        let d = hopf.dim();
        if pair.a().matrix().rows() != d || pair.b().matrix().rows() != d {
            return Err(StructureError::Shape(
                "automorphism pair has the wrong dimension".into(),
            ));
        }
        let module = HomModule::new_unchecked(hopf.algebra_arc(), action, mu.clone())?;
        let comodule = HomComodule::new_unchecked(hopf.coalgebra_arc(), Side::Right, coaction, mu)?;
        Ok(Self {
            label: label.into(),
            hopf,
            module,
            comodule,
            pair,
        })
    }

    /// Like [`YDModule::new_unchecked`] with `μ⁻¹` supplied by the caller.
    pub(crate) fn with_inverse(
        label: String,
        hopf: Arc<HomHopfAlgebra<F>>,
        action: LinearMap<F>,
        coaction: LinearMap<F>,
        (mu, mu_inv): (LinearMap<F>, LinearMap<F>),
        pair: AutPair<F>,
    ) -> Result<Self, StructureError> {
        let module = HomModule::with_inverse(hopf.algebra_arc(), action, mu.clone(), mu_inv.clone())?;
        let comodule = HomComodule::with_inverse(hopf.coalgebra_arc(), Side::Right, coaction, mu, mu_inv)?;
        Ok(Self {
            label,
            hopf,
            module,
            comodule,
            pair,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn hopf(&self) -> &HomHopfAlgebra<F> {
        &self.hopf
    }

    pub fn hopf_arc(&self) -> Arc<HomHopfAlgebra<F>> {
        Arc::clone(&self.hopf)
    }

    pub fn module(&self) -> &HomModule<F> {
        &self.module
    }

    pub fn comodule(&self) -> &HomComodule<F> {
        &self.comodule
    }

    pub fn pair(&self) -> &AutPair<F> {
        &self.pair
    }

    /// The same structure maps tagged with another pair.
    pub fn with_pair(&self, pair: AutPair<F>) -> Self {
        Self { pair, ..self.clone() }
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn action(&self) -> &LinearMap<F> {
        self.module.action()
    }

    pub fn coaction(&self) -> &LinearMap<F> {
        self.comodule.coaction()
    }

    pub fn mu(&self) -> &LinearMap<F> {
        self.module.mu()
    }

    pub fn mu_inv(&self) -> &LinearMap<F> {
        self.module.mu_inv()
    }

    /// Equality of carriers and structure maps, ignoring labels.
    pub fn same_structure(&self, other: &Self) -> bool {
        self.dim() == other.dim()
            && self.action() == other.action()
            && self.coaction() == other.coaction()
            && self.mu() == other.mu()
            && self.pair == other.pair
    }
}

/// Module axioms, comodule axioms and both compatibility forms.
pub fn check_yd_module<F: Field>(m: &YDModule<F>) -> CheckReport {
    let mut r = CheckReport::new("yd");
    r.absorb(check_hom_module(m.module()), "");
    r.absorb(check_hom_comodule(m.comodule()), "");
    r.absorb(check_yd(m), "");
    r.absorb(check_yd_alt(m), "");
    r
}

/// `ρ(h·m) = α(h₂₁)·m₀ ⊗ (B(h₂₂)α⁻¹(m₁))A(S⁻¹(h₁))`.
pub fn check_yd<F: Field>(m: &YDModule<F>) -> CheckReport {
    let h = m.hopf();
    let (d, n) = (h.dim(), m.dim());
    let (act, co) = (m.action(), m.comodule());
    let mul = h.mul();
    let a = m.pair().a().matrix();
    let b = m.pair().b().matrix();
    let mut r = CheckReport::new("yd");
    r.push(check_identity(
        "yd-compatibility",
        "ρ(h·m) = α(h₂₁)·m₀ ⊗ (B(h₂₂)α⁻¹(m₁))A(S⁻¹(h₁))",
        &[d, n],
        |e| co.coact(&e.merge(0, act), 0),
        |e| {
            let t = e.split(0, h.comul(), d, d).split(1, h.comul(), d, d);
            co.coact(&t, 3)
                .map1(1, h.alpha())
                .map1(2, b)
                .map1(4, h.alpha_inv())
                .map1(0, h.antipode_inv())
                .map1(0, a)
                .permute(&[1, 3, 2, 4, 0])
                .merge(0, act)
                .merge(1, mul)
                .merge(1, mul)
        },
    ));
    r
}

/// `h₁·m₀ ⊗ B(h₂)m₁ = μ((h₂·μ⁻¹(m))₀) ⊗ (h₂·μ⁻¹(m))₁A(h₁)`, the form of the
/// compatibility condition that avoids the antipode.
pub fn check_yd_alt<F: Field>(m: &YDModule<F>) -> CheckReport {
    let h = m.hopf();
    let (d, n) = (h.dim(), m.dim());
    let (act, co) = (m.action(), m.comodule());
    let mul = h.mul();
    let a = m.pair().a().matrix();
    let b = m.pair().b().matrix();
    let mut r = CheckReport::new("yd");
    r.push(check_identity(
        "yd-compatibility-antipode-free",
        "h₁·m₀ ⊗ B(h₂)m₁ = μ((h₂·μ⁻¹(m))₀) ⊗ (h₂·μ⁻¹(m))₁A(h₁)",
        &[d, n],
        |e| {
            co.coact(&e.split(0, h.comul(), d, d), 2)
                .permute(&[0, 2, 1, 3])
                .merge(0, act)
                .map1(1, b)
                .merge(1, mul)
        },
        |e| {
            let t = e.map1(1, m.mu_inv()).split(0, h.comul(), d, d).merge(1, act);
            co.coact(&t, 1)
                .map1(1, m.mu())
                .map1(0, a)
                .permute(&[1, 2, 0])
                .merge(1, mul)
        },
    ));
    r
}

/// `H_(A,B)`: the carrier `H` with coaction `Δ`, twist `α` and action
/// `h·x = (B(h₂)α⁻¹(x))A(S⁻¹(α(h₁)))`.
pub fn build_canonical_yd<F: Field>(
    h: &Arc<HomHopfAlgebra<F>>,
    a: &HopfAutomorphism<F>,
    b: &HopfAutomorphism<F>,
) -> Result<YDModule<F>, StructureError> {
    for phi in [a, b] {
        require_pass("hopf-automorphism", &check_automorphism(h, phi.matrix()))?;
    }
    let action = canonical_action(h, a.matrix(), b.matrix());
    YDModule::new(
        "H(A,B)",
        Arc::clone(h),
        action,
        h.comul().clone(),
        h.alpha().clone(),
        AutPair::new(a.clone(), b.clone()),
    )
}

/// The action matrix of `h·x = (B(h₂)α⁻¹(x))A(S⁻¹(α(h₁)))`.
pub fn canonical_action<F: Field>(h: &HomHopfAlgebra<F>, a: &LinearMap<F>, b: &LinearMap<F>) -> LinearMap<F> {
    let d = h.dim();
    let mul = h.mul();
    LinearMap::from_basis_images(&[d, d], d, |idx| {
        Element::basis(&[d, d], idx)
            .split(0, h.comul(), d, d)
            .map1(0, h.alpha())
            .map1(0, h.antipode_inv())
            .map1(0, a)
            .map1(1, b)
            .map1(2, h.alpha_inv())
            .permute(&[1, 2, 0])
            .merge(0, mul)
            .merge(0, mul)
    })
}

/// The trivial Yetter–Drinfeld module `k`: `h·1 = ε(h)`, `ρ(1) = 1 ⊗ 1_H`,
/// `μ = id`, in the component `(id, id)`.
pub fn trivial_yd<F: Field>(h: &Arc<HomHopfAlgebra<F>>) -> YDModule<F> {
    let d = h.dim();
    let action = h.counit().clone();
    let coaction = LinearMap::column_vector(h.unit());
    YDModule::new_unchecked(
        "k",
        Arc::clone(h),
        action,
        coaction,
        LinearMap::identity(1),
        AutPair::identity(d),
    )
    .expect("trivial module shapes")
}

/// A monoidal Hom-entwining structure `(H, C, ψ)`, `ψ: H ⊗ C → H ⊗ C`,
/// `h ⊗ c ↦ ψh ⊗ c^ψ`.
#[derive(Debug, Clone, PartialEq)]
pub struct Entwining<F: Field> {
    algebra: Arc<HomAlgebra<F>>,
    coalgebra: Arc<HomCoalgebra<F>>,
    psi: LinearMap<F>,
}

impl<F: Field> Entwining<F> {
    pub fn new(
        algebra: Arc<HomAlgebra<F>>,
        coalgebra: Arc<HomCoalgebra<F>>,
        psi: LinearMap<F>,
    ) -> Result<Self, StructureError> {
        let e = Self::new_unchecked(algebra, coalgebra, psi)?;
        require_pass("entwining", &check_entwining(&e))?;
        Ok(e)
    }

    pub fn new_unchecked(
        algebra: Arc<HomAlgebra<F>>,
        coalgebra: Arc<HomCoalgebra<F>>,
        psi: LinearMap<F>,
    ) -> Result<Self, StructureError> {
        let n = algebra.dim() * coalgebra.dim();
        expect_shape("psi", &psi, n, n)?;
        Ok(Self {
            algebra,
            coalgebra,
            psi,
        })
    }

    pub fn algebra(&self) -> &HomAlgebra<F> {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &HomCoalgebra<F> {
        &self.coalgebra
    }

    pub fn psi(&self) -> &LinearMap<F> {
        &self.psi
    }

    fn apply_psi(&self, e: &Element<F>, leg: usize) -> Element<F> {
        e.apply(leg, 2, &self.psi, &[self.algebra.dim(), self.coalgebra.dim()])
    }
}

/// `ψ(A,B)(a ⊗ c) = α²(a₂₁) ⊗ (B(a₂₂)α⁻²(c))AS⁻¹(a₁)`.
pub fn build_entwining<F: Field>(
    h: &HomHopfAlgebra<F>,
    a: &HopfAutomorphism<F>,
    b: &HopfAutomorphism<F>,
) -> Result<Entwining<F>, StructureError> {
    for phi in [a, b] {
        require_pass("hopf-automorphism", &check_automorphism(h, phi.matrix()))?;
    }
    let d = h.dim();
    let mul = h.mul();
    let (al2, ai2) = (h.alpha_pow(2), h.alpha_pow(-2));
    let psi = LinearMap::from_basis_images(&[d, d], d * d, |idx| {
        Element::basis(&[d, d], idx)
            .split(0, h.comul(), d, d)
            .split(1, h.comul(), d, d)
            .map1(1, &al2)
            .map1(2, b.matrix())
            .map1(3, &ai2)
            .map1(0, h.antipode_inv())
            .map1(0, a.matrix())
            .permute(&[1, 2, 3, 0])
            .merge(1, mul)
            .merge(1, mul)
    });
    Entwining::new(h.algebra_arc(), h.coalgebra_arc(), psi)
}

pub fn check_entwining<F: Field>(e: &Entwining<F>) -> CheckReport {
    let a = e.algebra();
    let c = e.coalgebra();
    let (dh, dc) = (a.dim(), c.dim());
    let mul = a.mul();
    let dl = c.comul();
    let mut r = CheckReport::new("entwining");
    r.push(check_identity(
        "entwining-product",
        "ψ(hg) ⊗ c^ψ = φh ψg ⊗ γ(γ⁻¹(c)^ψφ)",
        &[dh, dh, dc],
        |x| e.apply_psi(&x.merge(0, mul), 0),
        |x| {
            let t = e.apply_psi(&x.map1(2, c.gamma_inv()), 1).swap(1, 2);
            e.apply_psi(&t, 0).swap(1, 2).merge(0, mul).map1(1, c.gamma())
        },
    ));
    r.push(check_identity(
        "entwining-unit",
        "ψ1 ⊗ c^ψ = 1 ⊗ c",
        &[dc],
        |x| e.apply_psi(&x.insert(0, a.unit()), 0),
        |x| x.insert(0, a.unit()),
    ));
    r.push(check_identity(
        "entwining-coproduct",
        "ψh ⊗ Δ(c^ψ) = α(φψα⁻¹(h)) ⊗ c₁^φ ⊗ c₂^ψ",
        &[dh, dc],
        |x| e.apply_psi(x, 0).split(1, dl, dc, dc),
        |x| {
            let t = x.map1(0, a.alpha_inv()).split(1, dl, dc, dc).swap(0, 1);
            let t = e.apply_psi(&t, 1).swap(0, 1);
            e.apply_psi(&t, 0).map1(0, a.alpha())
        },
    ));
    r.push(check_identity(
        "entwining-counit",
        "ε(c^ψ) ψh = ε(c)h",
        &[dh, dc],
        |x| e.apply_psi(x, 0).contract(1, c.counit()),
        |x| x.contract(1, c.counit()),
    ));
    r
}

/// The entwined-module law `ρ(h·m) = ψα⁻¹(h)·m₀ ⊗ γ(m₁^ψ)`, where `ψ` acts on
/// `α⁻¹(h) ⊗ m₁` and `γ` is applied to its coalgebra output.
pub fn check_entwined_module<F: Field>(
    module: &HomModule<F>,
    comodule: &HomComodule<F>,
    e: &Entwining<F>,
) -> CheckReport {
    entwined_module_report(module, comodule, e, false)
}

/// The entwined-module law with `α` applied to `m₁` before `ψ`:
/// `ρ(h·m) = ψα⁻¹(h)·m₀ ⊗ α(m₁)^ψ`. Kept to show that it is not equivalent
/// to the Yetter–Drinfeld condition when `α ≠ id`.
pub fn check_entwined_module_pre_twisted<F: Field>(
    module: &HomModule<F>,
    comodule: &HomComodule<F>,
    e: &Entwining<F>,
) -> CheckReport {
    entwined_module_report(module, comodule, e, true)
}

fn entwined_module_report<F: Field>(
    module: &HomModule<F>,
    comodule: &HomComodule<F>,
    e: &Entwining<F>,
    pre_twisted: bool,
) -> CheckReport {
    let a = e.algebra();
    let c = e.coalgebra();
    let (dh, n) = (a.dim(), module.dim());
    let act = module.action();
    let mut r = CheckReport::new("entwined-module");
    let (id, formula) = if pre_twisted {
        ("entwined-module-pre-twisted", "ρ(h·m) = ψα⁻¹(h)·m₀ ⊗ α(m₁)^ψ")
    } else {
        ("entwined-module", "ρ(h·m) = ψα⁻¹(h)·m₀ ⊗ γ(m₁^ψ)")
    };
    r.push(check_identity(
        id,
        formula,
        &[dh, n],
        |x| comodule.coact(&x.merge(0, act), 0),
        |x| {
            let t = comodule.coact(&x.map1(0, a.alpha_inv()), 1);
            let t = if pre_twisted { t.map1(2, c.gamma()) } else { t };
            let t = e.apply_psi(&t.swap(1, 2), 0).swap(1, 2).merge(0, act);
            if pre_twisted {
                t
            } else {
                t.map1(1, c.gamma())
            }
        },
    ));
    r
}

/// An `H`-Hom-bicomodule algebra `(N, ν)` with left coaction
/// `n ↦ n₍₋₁₎ ⊗ n₍₀₎` and right coaction `n ↦ n₍₀₎ ⊗ n₍₁₎`.
#[derive(Debug, Clone, PartialEq)]
pub struct BicomoduleAlgebra<F: Field> {
    hopf: Arc<HomHopfAlgebra<F>>,
    algebra: Arc<HomAlgebra<F>>,
    left: HomComodule<F>,
    right: HomComodule<F>,
}

impl<F: Field> BicomoduleAlgebra<F> {
    pub fn new(
        hopf: Arc<HomHopfAlgebra<F>>,
        algebra: Arc<HomAlgebra<F>>,
        left_coaction: LinearMap<F>,
        right_coaction: LinearMap<F>,
    ) -> Result<Self, StructureError> {
        let n = Self::new_unchecked(hopf, algebra, left_coaction, right_coaction)?;
        require_pass("bicomodule-algebra", &check_bicomodule_algebra(&n))?;
        Ok(n)
    }

    pub fn new_unchecked(
        hopf: Arc<HomHopfAlgebra<F>>,
        algebra: Arc<HomAlgebra<F>>,
        left_coaction: LinearMap<F>,
        right_coaction: LinearMap<F>,
    ) -> Result<Self, StructureError> {
        let nu = algebra.alpha().clone();
        let left = HomComodule::new_unchecked(hopf.coalgebra_arc(), Side::Left, left_coaction, nu.clone())?;
        let right = HomComodule::new_unchecked(hopf.coalgebra_arc(), Side::Right, right_coaction, nu)?;
        Ok(Self {
            hopf,
            algebra,
            left,
            right,
        })
    }

    pub fn hopf(&self) -> &HomHopfAlgebra<F> {
        &self.hopf
    }

    pub fn algebra(&self) -> &HomAlgebra<F> {
        &self.algebra
    }

    pub fn algebra_arc(&self) -> Arc<HomAlgebra<F>> {
        Arc::clone(&self.algebra)
    }

    pub fn left(&self) -> &HomComodule<F> {
        &self.left
    }

    pub fn right(&self) -> &HomComodule<F> {
        &self.right
    }

    /// Exchanges the two coaction matrices, reading the old left coaction
    /// as a right one after swapping its legs and vice versa.
    pub fn swapped(&self) -> Self {
        let (d, n) = (self.hopf.dim(), self.algebra.dim());
        let flip = |m: &LinearMap<F>, from: [usize; 2]| {
            LinearMap::from_basis_images(&[n], from[0] * from[1], |idx| {
                Element::basis(&[n], idx).split(0, m, from[0], from[1]).swap(0, 1)
            })
        };
        let left = flip(self.right.coaction(), [n, d]);
        let right = flip(self.left.coaction(), [d, n]);
        Self::new_unchecked(self.hopf_arc(), self.algebra_arc(), left, right).expect("same shapes")
    }

    fn hopf_arc(&self) -> Arc<HomHopfAlgebra<F>> {
        Arc::clone(&self.hopf)
    }
}

/// `H_(A,B)` as a bicomodule algebra: `h ↦ A(h₁) ⊗ h₂` and `h ↦ h₁ ⊗ B(h₂)`.
pub fn build_bicomodule_algebra<F: Field>(
    h: &Arc<HomHopfAlgebra<F>>,
    a: &HopfAutomorphism<F>,
    b: &HopfAutomorphism<F>,
) -> Result<BicomoduleAlgebra<F>, StructureError> {
    for phi in [a, b] {
        require_pass("hopf-automorphism", &check_automorphism(h, phi.matrix()))?;
    }
    let d = h.dim();
    let left = LinearMap::from_basis_images(&[d], d * d, |idx| {
        Element::basis(&[d], idx).split(0, h.comul(), d, d).map1(0, a.matrix())
    });
    let right = LinearMap::from_basis_images(&[d], d * d, |idx| {
        Element::basis(&[d], idx).split(0, h.comul(), d, d).map1(1, b.matrix())
    });
    BicomoduleAlgebra::new(Arc::clone(h), h.algebra_arc(), left, right)
}

pub fn check_bicomodule_algebra<F: Field>(n: &BicomoduleAlgebra<F>) -> CheckReport {
    let h = n.hopf();
    let nd = n.algebra().dim();
    let ai = h.alpha_inv();
    let mut r = CheckReport::new("bicomodule-algebra");
    r.absorb(check_hom_comodule(n.left()), "left");
    r.absorb(check_hom_comodule(n.right()), "right");
    r.absorb(check_comodule_algebra(h, n.algebra(), n.left()), "left");
    r.absorb(check_comodule_algebra(h, n.algebra(), n.right()), "right");
    r.push(check_identity(
        "bicomodule-compatibility",
        "n₍₀₎₍₋₁₎ ⊗ n₍₀₎₍₀₎ ⊗ α⁻¹(n₍₁₎) = α⁻¹(n₍₋₁₎) ⊗ n₍₀₎₍₀₎ ⊗ n₍₀₎₍₁₎",
        &[nd],
        |e| n.left().coact(&n.right().coact(e, 0), 0).map1(2, ai),
        |e| n.right().coact(&n.left().coact(e, 0), 1).map1(0, ai),
    ));
    r
}

/// Both compatibility conditions of a Yetter–Drinfeld Hom-module over the
/// datum `(H, N, H)`:
///
/// ```text
/// (n·m)₀ ⊗ (n·m)₁ = ν(n₍₀₎₍₀₎)·m₀ ⊗ (n₍₀₎₍₁₎α⁻¹(m₁))S⁻¹(n₍₋₁₎)
/// n₍₀₎·m₀ ⊗ n₍₁₎m₁ = μ((n₍₀₎·μ⁻¹(m))₀) ⊗ (n₍₀₎·μ⁻¹(m))₁n₍₋₁₎
/// ```
pub fn check_yd_datum<F: Field>(
    module: &HomModule<F>,
    comodule: &HomComodule<F>,
    n: &BicomoduleAlgebra<F>,
) -> CheckReport {
    let h = n.hopf();
    let (nd, md) = (n.algebra().dim(), module.dim());
    let act = module.action();
    let mul = h.mul();
    let mut r = CheckReport::new("yd-datum");
    r.push(CheckItem::from_bool(
        "yd-datum-carrier",
        "module and comodule share the carrier and μ",
        module.dim() == comodule.dim() && module.mu() == comodule.mu() && module.algebra() == n.algebra(),
    ));
    if module.dim() != comodule.dim() {
        return r;
    }
    r.push(check_identity(
        "yd-datum-compatibility",
        "(n·m)₀ ⊗ (n·m)₁ = ν(n₍₀₎₍₀₎)·m₀ ⊗ (n₍₀₎₍₁₎α⁻¹(m₁))S⁻¹(n₍₋₁₎)",
        &[nd, md],
        |e| comodule.coact(&e.merge(0, act), 0),
        |e| {
            let t = n.right().coact(&n.left().coact(e, 0), 1);
            comodule
                .coact(&t, 3)
                .map1(1, n.algebra().alpha())
                .map1(4, h.alpha_inv())
                .map1(0, h.antipode_inv())
                .permute(&[1, 3, 2, 4, 0])
                .merge(0, act)
                .merge(1, mul)
                .merge(1, mul)
        },
    ));
    r.push(check_identity(
        "yd-datum-compatibility-antipode-free",
        "n₍₀₎·m₀ ⊗ n₍₁₎m₁ = μ((n₍₀₎·μ⁻¹(m))₀) ⊗ (n₍₀₎·μ⁻¹(m))₁n₍₋₁₎",
        &[nd, md],
        |e| {
            comodule
                .coact(&n.right().coact(e, 0), 2)
                .permute(&[0, 2, 1, 3])
                .merge(0, act)
                .merge(1, mul)
        },
        |e| {
            let t = n.left().coact(&e.map1(1, module.mu_inv()), 0).merge(1, act);
            comodule
                .coact(&t, 1)
                .map1(1, module.mu())
                .permute(&[1, 2, 0])
                .merge(1, mul)
        },
    ));
    r
}

/// Reads a Yetter–Drinfeld module's action as an action of the algebra
/// underlying `n` (the carrier of `H_(A,B)` is `H` itself).
pub fn as_datum_module<F: Field>(m: &YDModule<F>, n: &BicomoduleAlgebra<F>) -> Result<HomModule<F>, StructureError> {
    HomModule::new_unchecked(n.algebra_arc(), m.action().clone(), m.mu().clone())
}

/// Whether `S` is invertible, for callers that build data by hand.
pub fn antipode_is_bijective<F: Field>(h: &HomHopfAlgebra<F>) -> bool {
    invert(h.antipode()).is_ok()
}

/// Compares two modules' structure maps entry by entry.
pub fn compare_structures<F: Field>(id: &str, lhs: &YDModule<F>, rhs: &YDModule<F>) -> CheckReport {
    let mut r = CheckReport::new("structure-equality");
    r.push(check_matrices(
        &format!("{id}-action"),
        "actions agree",
        lhs.action(),
        rhs.action(),
    ));
    r.push(check_matrices(
        &format!("{id}-coaction"),
        "coactions agree",
        lhs.coaction(),
        rhs.coaction(),
    ));
    r.push(check_matrices(
        &format!("{id}-twist"),
        "twists agree",
        lhs.mu(),
        rhs.mu(),
    ));
    r.push(CheckItem::from_bool(
        format!("{id}-component"),
        "automorphism pairs agree",
        lhs.pair() == rhs.pair(),
    ));
    r
}
