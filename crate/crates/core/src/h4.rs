//! The four-dimensional Hom-Hopf algebra `H₄` on the basis `(1, g, x, gx)`,
//! its automorphisms `diag(1,1,λ,λ)`, and the Yetter–Drinfeld modules,
//! conjugate and braiding built from them.
//!
//! Two kinds of module data live here. *Golden* tables are transcribed
//! verbatim and built without validation; *canonical* modules come from
//! [`build_canonical_yd`] and are checked on construction. The two disagree,
//! see [`build_h4_yd_table`].

use std::sync::Arc;

use crate::exactlin::LinearMap;
use crate::field::Field;
use crate::hom_algebra::{HomAlgebra, HomCoalgebra, HomHopfAlgebra, HopfAutomorphism, StructureError};
use crate::t_category::{braiding, AutPair};
use crate::yd_modules::{build_canonical_yd, YDModule};

pub const H4_BASIS: [&str; 4] = ["1", "g", "x", "gx"];

const ONE: usize = 0;
const G: usize = 1;
const X: usize = 2;
const GX: usize = 3;

#[derive(Debug, Clone, PartialEq)]
pub struct H4Params<F: Field> {
    pub c: F,
    pub c_prime: F,
    pub c_double_prime: F,
}

impl<F: Field> H4Params<F> {
    pub fn new(c: F, c_prime: F, c_double_prime: F) -> Result<Self, StructureError> {
        nonzero(&c, "c")?;
        nonzero(&c_prime, "c'")?;
        nonzero(&c_double_prime, "c''")?;
        Ok(Self {
            c,
            c_prime,
            c_double_prime,
        })
    }

    /// Shorthand for integer parameters; panics on zero.
    pub fn ints(c: i64, c_prime: i64, c_double_prime: i64) -> Self {
        Self::new(F::from_i64(c), F::from_i64(c_prime), F::from_i64(c_double_prime)).expect("nonzero parameters")
    }
}

fn nonzero<F: Field>(v: &F, name: &'static str) -> Result<(), StructureError> {
    if v.is_zero() {
        Err(StructureError::ZeroParameter(name))
    } else {
        Ok(())
    }
}

fn e<F: Field>(i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); 4];
    v[i] = F::one();
    v
}

fn sc<F: Field>(s: F, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); 4];
    v[i] = s;
    v
}

/// The untwisted Sweedler product `g² = 1`, `x² = 0`, `xg = -gx`.
fn sweedler_product<F: Field>(a: usize, b: usize) -> Vec<F> {
    let neg = |i| sc(-F::one(), i);
    match (a, b) {
        (ONE, b) => e(b),
        (a, ONE) => e(a),
        (G, G) => e(ONE),
        (G, X) => e(GX),
        (G, GX) => e(X),
        (X, G) => neg(GX),
        (GX, G) => neg(X),
        _ => vec![F::zero(); 4],
    }
}

/// `α = diag(1, 1, c, c)`.
pub fn h4_alpha<F: Field>(c: &F) -> LinearMap<F> {
    LinearMap::diagonal(&[F::one(), F::one(), c.clone(), c.clone()])
}

/// `S(1) = 1, S(g) = g, S(x) = -gx, S(gx) = x`.
pub fn h4_antipode<F: Field>() -> LinearMap<F> {
    LinearMap::from_columns(4, 4, |j| match j {
        X => sc(-F::one(), GX),
        GX => e(X),
        j => e(j),
    })
}

/// The antipode as printed, with `S(gx) = -x`. It fails the antipode axiom.
pub fn h4_printed_antipode<F: Field>() -> LinearMap<F> {
    LinearMap::from_columns(4, 4, |j| match j {
        X => sc(-F::one(), GX),
        GX => sc(-F::one(), X),
        j => e(j),
    })
}

fn h4_parts<F: Field>(c: &F) -> Result<(HomAlgebra<F>, HomCoalgebra<F>), StructureError> {
    nonzero(c, "c")?;
    let alpha = h4_alpha(c);
    let mul = LinearMap::from_columns(4, 16, |j| {
        alpha.apply(&sweedler_product::<F>(j / 4, j % 4)).expect("dim 4")
    });
    let basis = H4_BASIS.iter().map(|s| s.to_string()).collect();
    let algebra = HomAlgebra::from_maps(basis, mul, e(ONE), alpha.clone())?;
    let ci = c.try_inv().expect("nonzero");
    let comul = LinearMap::from_columns(16, 4, |j| {
        let mut v = vec![F::zero(); 16];
        let mut put = |a: usize, b: usize, s: F| v[a * 4 + b] = s;
        match j {
            ONE => put(ONE, ONE, F::one()),
            G => put(G, G, F::one()),
            X => {
                put(X, ONE, ci.clone());
                put(G, X, ci.clone());
            }
            _ => {
                put(GX, G, ci.clone());
                put(ONE, GX, ci.clone());
            }
        }
        v
    });
    let counit = LinearMap::row_vector(&[F::one(), F::one(), F::zero(), F::zero()]);
    let coalgebra = HomCoalgebra::from_maps(comul, counit, alpha)?;
    Ok((algebra, coalgebra))
}

/// `H₄` with twist `α = diag(1,1,c,c)`, validated against every Hom-Hopf axiom.
pub fn build_h4<F: Field>(c: &F) -> Result<HomHopfAlgebra<F>, StructureError> {
    let (a, co) = h4_parts(c)?;
    HomHopfAlgebra::new(a, co, h4_antipode())
}

/// `H₄` carrying the printed antipode, unvalidated.
pub fn build_h4_printed_antipode<F: Field>(c: &F) -> Result<HomHopfAlgebra<F>, StructureError> {
    let (a, co) = h4_parts(c)?;
    HomHopfAlgebra::new_unchecked(a, co, h4_printed_antipode())
}

/// `diag(1, 1, λ, λ)`, checked as an automorphism of `h`.
pub fn h4_automorphism<F: Field>(h: &HomHopfAlgebra<F>, lambda: &F) -> Result<HopfAutomorphism<F>, StructureError> {
    nonzero(lambda, "lambda")?;
    HopfAutomorphism::new(h, h4_diag(lambda.clone(), lambda.clone()))
}

/// `diag(1, 1, λ, μ)`, for probing which diagonal maps are automorphisms.
pub fn h4_diag<F: Field>(lambda: F, mu: F) -> LinearMap<F> {
    LinearMap::diagonal(&[F::one(), F::one(), lambda, mu])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum H4Table {
    /// Over `(A, id)` with `A = diag(1,1,c′,c′)`.
    H4A,
    /// Over `(id, B)` with `B = diag(1,1,c″,c″)`.
    H4B,
    /// Over `(A, B)`.
    H4AB,
}

impl H4Table {
    pub const ALL: [H4Table; 3] = [H4Table::H4A, H4Table::H4B, H4Table::H4AB];

    pub fn label(self) -> &'static str {
        match self {
            H4Table::H4A => "H4A",
            H4Table::H4B => "H4B",
            H4Table::H4AB => "H4AB",
        }
    }
}

/// `H₄` for one parameter triple together with `A` and `B`.
#[derive(Debug, Clone)]
pub struct H4Family<F: Field> {
    pub params: H4Params<F>,
    pub hopf: Arc<HomHopfAlgebra<F>>,
    pub a: HopfAutomorphism<F>,
    pub b: HopfAutomorphism<F>,
}

impl<F: Field> H4Family<F> {
    pub fn new(params: &H4Params<F>) -> Result<Self, StructureError> {
        let hopf = Arc::new(build_h4(&params.c)?);
        let a = h4_automorphism(&hopf, &params.c_prime)?;
        let b = h4_automorphism(&hopf, &params.c_double_prime)?;
        Ok(Self {
            params: params.clone(),
            hopf,
            a,
            b,
        })
    }

    pub fn pair(&self, which: H4Table) -> AutPair<F> {
        let id = HopfAutomorphism::identity(4);
        match which {
            H4Table::H4A => AutPair::new(self.a.clone(), id),
            H4Table::H4B => AutPair::new(id, self.b.clone()),
            H4Table::H4AB => AutPair::new(self.a.clone(), self.b.clone()),
        }
    }

    /// `H_(A,B)` for the pair of `which`.
    pub fn canonical(&self, which: H4Table) -> YDModule<F> {
        let p = self.pair(which);
        build_canonical_yd(&self.hopf, p.a(), p.b())
            .expect("canonical modules are Yetter-Drinfeld")
            .with_label(which.label())
    }

    /// The transcribed table, without validation.
    pub fn golden(&self, which: H4Table) -> YDModule<F> {
        let H4Params {
            c,
            c_prime: cp,
            c_double_prime: cpp,
        } = &self.params;
        let one = F::one();
        // (x·1 coefficient of gx, x·g coefficient of x); gx·1 and gx·g repeat
        // them with the roles swapped.
        let (minus_x1, xg) = match which {
            H4Table::H4A => (one.clone() + cp.clone(), one.clone() - cp.clone()),
            H4Table::H4B => (one.clone() + cpp.clone(), cpp.clone() - one.clone()),
            H4Table::H4AB => (cp.clone() + cpp.clone(), cpp.clone() - cp.clone()),
        };
        let action = golden_action(c, -(c.clone() * minus_x1), c.clone() * xg);
        YDModule::new_unchecked(
            which.label(),
            Arc::clone(&self.hopf),
            action,
            self.hopf.comul().clone(),
            self.hopf.alpha().clone(),
            self.pair(which),
        )
        .expect("golden shapes")
    }

    /// The transcribed `^(A,id)H₄B`, without validation.
    pub fn twisted_h4b(&self) -> YDModule<F> {
        let H4Params {
            c,
            c_prime: cp,
            c_double_prime: cpp,
        } = &self.params;
        let one = F::one();
        let x1 = -(c.clone() * (one.clone() + cpp.clone())) / cp.clone();
        let xg = c.clone() * (cpp.clone() - one) / cp.clone();
        let action = golden_action(c, x1, xg);
        let ci = c.try_inv().expect("nonzero");
        let cic = ci.clone() * cp.clone();
        let coaction = LinearMap::from_columns(16, 4, |j| {
            let mut v = vec![F::zero(); 16];
            match j {
                ONE => v[ONE * 4 + ONE] = F::one(),
                G => v[G * 4 + G] = F::one(),
                X => {
                    v[X * 4 + ONE] = ci.clone();
                    v[G * 4 + X] = cic.clone();
                }
                _ => {
                    v[GX * 4 + G] = ci.clone();
                    v[ONE * 4 + GX] = cic.clone();
                }
            }
            v
        });
        YDModule::new_unchecked(
            "^H4B",
            Arc::clone(&self.hopf),
            action,
            coaction,
            self.hopf.alpha().clone(),
            self.pair(H4Table::H4B),
        )
        .expect("golden shapes")
    }
}

/// A table of the shared shape: rows for `1` and `g` fixed, `x·1 = x1·gx`,
/// `x·g = xg·x`, `gx·1 = xg·gx`, `gx·g = x1·x`, all else zero.
fn golden_action<F: Field>(c: &F, x1: F, xg: F) -> LinearMap<F> {
    LinearMap::from_columns(4, 16, |j| match (j / 4, j % 4) {
        (ONE, ONE) | (G, ONE) => e(ONE),
        (ONE, G) | (G, G) => e(G),
        (ONE, m) => sc(c.clone(), m),
        (G, m) => sc(-c.clone(), m),
        (X, ONE) => sc(x1.clone(), GX),
        (X, G) => sc(xg.clone(), X),
        (GX, ONE) => sc(xg.clone(), GX),
        (GX, G) => sc(x1.clone(), X),
        _ => vec![F::zero(); 4],
    })
}

/// The transcribed module `which` over `H₄`. The tables are not
/// Yetter–Drinfeld modules; compare [`H4Family::canonical`].
pub fn build_h4_yd_table<F: Field>(which: H4Table, p: &H4Params<F>) -> Result<YDModule<F>, StructureError> {
    Ok(H4Family::new(p)?.golden(which))
}

/// The transcribed `^(A,id)H₄B`.
pub fn build_twisted_h4b<F: Field>(p: &H4Params<F>) -> Result<YDModule<F>, StructureError> {
    Ok(H4Family::new(p)?.twisted_h4b())
}

/// `c_{H₄A,H₄B}` on the canonical modules, column `j` the image of `e_j`
/// in the order `1⊗1, 1⊗g, …, gx⊗gx`.
pub fn h4_braiding_matrix<F: Field>(p: &H4Params<F>) -> Result<LinearMap<F>, StructureError> {
    let f = H4Family::new(p)?;
    Ok(braiding(&f.canonical(H4Table::H4A), &f.canonical(H4Table::H4B))
        .matrix()
        .clone())
}

/// `c_{H₄A,H₄B}` on the transcribed tables.
pub fn h4_golden_braiding_matrix<F: Field>(p: &H4Params<F>) -> Result<LinearMap<F>, StructureError> {
    let f = H4Family::new(p)?;
    Ok(braiding(&f.golden(H4Table::H4A), &f.golden(H4Table::H4B))
        .matrix()
        .clone())
}

/// The printed layout writes the image of `e_i` as row `i`; that is the
/// transpose of the column convention.
pub fn printed_layout<F: Field>(m: &LinearMap<F>) -> LinearMap<F> {
    m.transpose()
}

/// The four parameterized entries of the braiding matrix in printed layout,
/// 1-based: `(3,8)`, `(8,3)`, `(4,4)`, `(7,7)`.
pub const PARAMETER_CELLS: [(usize, usize); 4] = [(3, 8), (8, 3), (4, 4), (7, 7)];

/// The entries of the printed layout that do not depend on parameters,
/// 1-based `(row, col, value)`.
pub const FIXED_CELLS: [(usize, usize, i64); 16] = [
    (1, 1, 1),
    (2, 5, 1),
    (3, 9, 1),
    (4, 13, 1),
    (5, 2, 1),
    (6, 6, 1),
    (7, 10, 1),
    (8, 14, 1),
    (9, 3, 1),
    (10, 7, -1),
    (11, 11, 1),
    (12, 15, -1),
    (13, 4, 1),
    (14, 8, -1),
    (15, 12, 1),
    (16, 16, -1),
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom_algebra::{check_antipode, check_hom_hopf};
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(n: i64, d: i64) -> Q {
        Q::ratio(n, d)
    }

    #[test]
    fn h4_is_hom_hopf() {
        for c in [q(1, 1), q(2, 1), q(-2, 3)] {
            let h = build_h4(&c).unwrap();
            assert!(check_hom_hopf(&h).all_passed());
        }
    }

    #[test]
    fn printed_antipode_fails() {
        let h = build_h4_printed_antipode(&q(2, 1)).unwrap();
        let r = check_antipode(&h);
        assert!(!r.passed("antipode-left"));
    }

    #[test]
    fn twisted_product_matches_table() {
        let h = build_h4(&q(2, 1)).unwrap();
        assert_eq!(h.algebra().product(&e(ONE), &e(X)), sc(q(2, 1), X));
        assert_eq!(h.algebra().product(&e(X), &e(G)), sc(q(-2, 1), GX));
        assert_eq!(h.algebra().product(&e(GX), &e(G)), sc(q(-2, 1), X));
        assert_eq!(h.algebra().product(&e(G), &e(GX)), sc(q(2, 1), X));
    }

    #[test]
    fn zero_parameter_rejected() {
        assert!(matches!(build_h4(&q(0, 1)), Err(StructureError::ZeroParameter(_))));
        let h = build_h4(&q(1, 1)).unwrap();
        assert!(h4_automorphism(&h, &q(0, 1)).is_err());
    }

    #[test]
    fn golden_tables_transcribed() {
        let f = H4Family::new(&H4Params::<Q>::ints(1, 2, 3)).unwrap();
        let a = f.golden(H4Table::H4A);
        assert_eq!(a.module().act(X, ONE), sc(q(-3, 1), GX));
        assert_eq!(a.module().act(X, G), sc(q(-1, 1), X));
        let b = f.golden(H4Table::H4B);
        assert_eq!(b.module().act(X, G), sc(q(2, 1), X));
        let t = f.twisted_h4b();
        assert_eq!(t.module().act(X, ONE), sc(q(-2, 1), GX));
        assert_eq!(t.module().act(GX, G), sc(q(-2, 1), X));
    }
}
