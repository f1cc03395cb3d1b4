//! Dense exact linear algebra for the small coordinate spaces used everywhere
//! else in the crate.
//!
//! Conventions, fixed for the whole crate:
//!
//! * a [`LinearMap`] acts on column vectors, so column `j` holds the image of
//!   basis vector `e_j`, and `compose(f, g)` is `f ∘ g` (apply `g` first);
//! * the basis of `V ⊗ W` is flattened as `(i, j) ↦ i·dim(W) + j`, which makes
//!   [`kron`] the coordinate form of `f ⊗ g`. Longer tensor products flatten
//!   lexicographically, so `(U ⊗ V) ⊗ W` and `U ⊗ (V ⊗ W)` share coordinates.

use std::fmt;

use thiserror::Error;

use crate::field::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch in {op}: {left} vs {right}")]
    DimensionMismatch {
        op: &'static str,
        left: usize,
        right: usize,
    },
    #[error("{op} needs a square map, got {rows}x{cols}")]
    NotSquare { op: &'static str, rows: usize, cols: usize },
    #[error("map is singular (determinant 0)")]
    SingularMap,
}

/// A `rows × cols` matrix over `F`, stored row-major.
#[derive(Clone, PartialEq)]
pub struct LinearMap<F> {
    rows: usize,
    cols: usize,
    entries: Vec<F>,
}

impl<F: Field> LinearMap<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = F::one();
        }
        m
    }

    pub fn diagonal(diag: &[F]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, d) in diag.iter().enumerate() {
            m.entries[i * n + i] = d.clone();
        }
        m
    }

    /// Builds a map from its row-major entries.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<F>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch {
                op: "from_entries",
                left: rows * cols,
                right: entries.len(),
            });
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(LinalgError::DimensionMismatch {
                    op: "from_rows",
                    left: c,
                    right: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Self {
            rows: r,
            cols: c,
            entries,
        })
    }

    /// Builds a map column by column: `image(j)` is the image of `e_j` and must
    /// have length `rows`.
    pub fn from_columns(rows: usize, cols: usize, mut image: impl FnMut(usize) -> Vec<F>) -> Self {
        let mut m = Self::zeros(rows, cols);
        for j in 0..cols {
            let col = image(j);
            assert_eq!(col.len(), rows, "column {j} has the wrong length");
            for (i, x) in col.into_iter().enumerate() {
                m.entries[i * cols + j] = x;
            }
        }
        m
    }

    /// A `1 × n` covector.
    pub fn row_vector(v: &[F]) -> Self {
        Self {
            rows: 1,
            cols: v.len(),
            entries: v.to_vec(),
        }
    }

    /// An `n × 1` column vector, i.e. the map `k → V` sending `1` to `v`.
    pub fn column_vector(v: &[F]) -> Self {
        Self {
            rows: v.len(),
            cols: 1,
            entries: v.to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &F {
        &self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: F) {
        self.entries[row * self.cols + col] = value;
    }

    pub fn entries(&self) -> &[F] {
        &self.entries
    }

    pub fn column(&self, col: usize) -> Vec<F> {
        (0..self.rows).map(|r| self.get(r, col).clone()).collect()
    }

    pub fn row(&self, row: usize) -> &[F] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    /// Nonzero entries of column `col` as `(row, value)` pairs.
    pub fn column_support(&self, col: usize) -> impl Iterator<Item = (usize, &F)> + '_ {
        (0..self.rows)
            .map(move |r| (r, self.get(r, col)))
            .filter(|(_, x)| !x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn apply(&self, v: &[F]) -> Result<Vec<F>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                op: "apply",
                left: self.cols,
                right: v.len(),
            });
        }
        let mut out = vec![F::zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !a.is_zero() {
                    *o = o.clone() + a.clone() * x.clone();
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &F) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x.clone() * s.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, LinalgError> {
        self.same_shape(other, "add")?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, LinalgError> {
        self.same_shape(other, "sub")?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    /// First column on which `self` and `other` differ.
    pub fn first_differing_column(&self, other: &Self) -> Option<usize> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some(0);
        }
        (0..self.cols).find(|&c| (0..self.rows).any(|r| self.get(r, c) != other.get(r, c)))
    }

    fn same_shape(&self, other: &Self, op: &'static str) -> Result<(), LinalgError> {
        if self.rows != other.rows {
            return Err(LinalgError::DimensionMismatch {
                op,
                left: self.rows,
                right: other.rows,
            });
        }
        if self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch {
                op,
                left: self.cols,
                right: other.cols,
            });
        }
        Ok(())
    }

    /// Determinant by Bareiss fraction-free elimination.
    pub fn determinant(&self) -> Result<F, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                op: "determinant",
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(F::one());
        }
        let mut a: Vec<Vec<F>> = (0..n).map(|r| self.row(r).to_vec()).collect();
        let mut sign = F::one();
        let mut prev = F::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(F::zero());
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone()) / prev.clone();
                    a[i][j] = v;
                }
                a[i][k] = F::zero();
            }
            prev = a[k][k].clone();
        }
        Ok(sign * prev)
    }
}

impl<F: fmt::Display> fmt::Debug for LinearMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinearMap {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.entries[r * self.cols..(r + 1) * self.cols]
                .iter()
                .map(|x| x.to_string())
                .collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// `f ∘ g`: apply `g`, then `f`.
pub fn compose<F: Field>(f: &LinearMap<F>, g: &LinearMap<F>) -> Result<LinearMap<F>, LinalgError> {
    if f.cols != g.rows {
        return Err(LinalgError::DimensionMismatch {
            op: "compose",
            left: f.cols,
            right: g.rows,
        });
    }
    let mut out = LinearMap::<F>::zeros(f.rows, g.cols);
    for i in 0..f.rows {
        for k in 0..f.cols {
            let a = f.get(i, k);
            if a.is_zero() {
                continue;
            }
            for j in 0..g.cols {
                let b = g.get(k, j);
                if b.is_zero() {
                    continue;
                }
                let idx = i * g.cols + j;
                let acc = std::mem::replace(&mut out.entries[idx], F::zero());
                out.entries[idx] = acc + a.clone() * b.clone();
            }
        }
    }
    Ok(out)
}

/// Composes a chain right to left: `compose_all(&[f, g, h]) = f ∘ g ∘ h`.
pub fn compose_all<F: Field>(maps: &[&LinearMap<F>]) -> Result<LinearMap<F>, LinalgError> {
    let (last, rest) = maps.split_last().expect("compose_all needs at least one map");
    rest.iter().rev().try_fold((*last).clone(), |acc, f| compose(f, &acc))
}

/// Kronecker product, the coordinate form of `f ⊗ g`.
pub fn kron<F: Field>(f: &LinearMap<F>, g: &LinearMap<F>) -> LinearMap<F> {
    let rows = f.rows * g.rows;
    let cols = f.cols * g.cols;
    let mut out = LinearMap::zeros(rows, cols);
    for fr in 0..f.rows {
        for fc in 0..f.cols {
            let a = f.get(fr, fc);
            if a.is_zero() {
                continue;
            }
            for gr in 0..g.rows {
                for gc in 0..g.cols {
                    let b = g.get(gr, gc);
                    if b.is_zero() {
                        continue;
                    }
                    let r = fr * g.rows + gr;
                    let c = fc * g.cols + gc;
                    out.entries[r * cols + c] = a.clone() * b.clone();
                }
            }
        }
    }
    out
}

/// `f₁ ⊗ f₂ ⊗ … ⊗ fₙ`.
pub fn kron_all<F: Field>(maps: &[&LinearMap<F>]) -> LinearMap<F> {
    maps.iter().fold(LinearMap::identity(1), |acc, f| kron(&acc, f))
}

/// Exact inverse. Forward elimination is fraction-free (Bareiss) on the
/// augmented matrix `[f | I]`; back substitution divides by the pivots.
pub fn invert<F: Field>(f: &LinearMap<F>) -> Result<LinearMap<F>, LinalgError> {
    if !f.is_square() {
        return Err(LinalgError::NotSquare {
            op: "invert",
            rows: f.rows,
            cols: f.cols,
        });
    }
    let n = f.rows;
    let w = 2 * n;
    let mut a: Vec<Vec<F>> = (0..n)
        .map(|r| {
            let mut row = f.row(r).to_vec();
            row.extend((0..n).map(|c| if c == r { F::one() } else { F::zero() }));
            row
        })
        .collect();
    let mut prev = F::one();
    for k in 0..n {
        let p = (k..n).find(|&r| !a[r][k].is_zero()).ok_or(LinalgError::SingularMap)?;
        a.swap(p, k);
        for i in k + 1..n {
            for j in k + 1..w {
                a[i][j] = (a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone()) / prev.clone();
            }
            a[i][k] = F::zero();
        }
        prev = a[k][k].clone();
    }
    let mut inv = LinearMap::<F>::zeros(n, n);
    for c in 0..n {
        for r in (0..n).rev() {
            let mut acc = a[r][n + c].clone();
            for (j, arj) in a[r].iter().enumerate().take(n).skip(r + 1) {
                acc = acc - arj.clone() * inv.get(j, c).clone();
            }
            inv.set(r, c, acc / a[r][r].clone());
        }
    }
    Ok(inv)
}

/// Reorders tensor factors. The factor dimensions of the source are `dims`,
/// and factor `k` of the target is factor `order[k]` of the source.
pub fn permutation<F: Field>(dims: &[usize], order: &[usize]) -> LinearMap<F> {
    assert_eq!(dims.len(), order.len(), "permutation arity");
    let n: usize = dims.iter().product();
    let out_dims: Vec<usize> = order.iter().map(|&o| dims[o]).collect();
    let mut m = LinearMap::zeros(n, n);
    let mut idx = vec![0usize; dims.len()];
    for src in 0..n {
        unflatten_into(src, dims, &mut idx);
        let permuted: Vec<usize> = order.iter().map(|&o| idx[o]).collect();
        let dst = flatten(&permuted, &out_dims);
        m.set(dst, src, F::one());
    }
    m
}

/// `V ⊗ W → W ⊗ V`.
pub fn swap<F: Field>(dim_v: usize, dim_w: usize) -> LinearMap<F> {
    permutation(&[dim_v, dim_w], &[1, 0])
}

/// Flattened index of a multi-index under the lexicographic convention.
pub fn flatten(idx: &[usize], dims: &[usize]) -> usize {
    idx.iter().zip(dims).fold(0, |acc, (&i, &d)| {
        debug_assert!(i < d);
        acc * d + i
    })
}

pub fn unflatten(mut flat: usize, dims: &[usize]) -> Vec<usize> {
    let mut idx = vec![0; dims.len()];
    for (slot, &d) in idx.iter_mut().zip(dims).rev() {
        *slot = flat % d;
        flat /= d;
    }
    idx
}

fn unflatten_into(mut flat: usize, dims: &[usize], out: &mut [usize]) {
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = flat % d;
        flat /= d;
    }
}

/// A three-index array of structure constants, e.g. `m(eᵢ ⊗ eⱼ) = Σₖ mᵢⱼᵏ eₖ`
/// stored at `(i, j, k)`.
#[derive(Clone, PartialEq, Debug)]
pub struct Tensor3<F> {
    dims: (usize, usize, usize),
    entries: Vec<F>,
}

impl<F: Field> Tensor3<F> {
    pub fn zeros(d0: usize, d1: usize, d2: usize) -> Self {
        Self {
            dims: (d0, d1, d2),
            entries: vec![F::zero(); d0 * d1 * d2],
        }
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &F {
        let (_, d1, d2) = self.dims;
        &self.entries[(i * d1 + j) * d2 + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: F) {
        let (_, d1, d2) = self.dims;
        self.entries[(i * d1 + j) * d2 + k] = value;
    }

    pub fn entries(&self) -> &[F] {
        &self.entries
    }

    /// Structure constants of a product-shaped map `V₀ ⊗ V₁ → V₂`.
    pub fn from_product_map(map: &LinearMap<F>, d0: usize, d1: usize) -> Self {
        assert_eq!(map.cols(), d0 * d1);
        let d2 = map.rows();
        let mut t = Self::zeros(d0, d1, d2);
        for i in 0..d0 {
            for j in 0..d1 {
                for k in 0..d2 {
                    t.set(i, j, k, map.get(k, i * d1 + j).clone());
                }
            }
        }
        t
    }

    /// Inverse of [`Tensor3::from_product_map`].
    pub fn to_product_map(&self) -> LinearMap<F> {
        let (d0, d1, d2) = self.dims;
        LinearMap::from_columns(d2, d0 * d1, |c| {
            let (i, j) = (c / d1, c % d1);
            (0..d2).map(|k| self.get(i, j, k).clone()).collect()
        })
    }

    /// Structure constants of a coproduct-shaped map `V₀ → V₁ ⊗ V₂`, stored at
    /// `(k, i, j)` for `e_k ↦ Σ c e_i ⊗ e_j`.
    pub fn from_coproduct_map(map: &LinearMap<F>, d1: usize, d2: usize) -> Self {
        assert_eq!(map.rows(), d1 * d2);
        let d0 = map.cols();
        let mut t = Self::zeros(d0, d1, d2);
        for k in 0..d0 {
            for i in 0..d1 {
                for j in 0..d2 {
                    t.set(k, i, j, map.get(i * d2 + j, k).clone());
                }
            }
        }
        t
    }

    /// Inverse of [`Tensor3::from_coproduct_map`].
    pub fn to_coproduct_map(&self) -> LinearMap<F> {
        let (d0, d1, d2) = self.dims;
        LinearMap::from_columns(d1 * d2, d0, |k| {
            let mut col = Vec::with_capacity(d1 * d2);
            for i in 0..d1 {
                for j in 0..d2 {
                    col.push(self.get(k, i, j).clone());
                }
            }
            col
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::Zero;

    type Q = BigRational;

    fn q(n: i64, d: i64) -> Q {
        Q::ratio(n, d)
    }

    fn diag(v: &[(i64, i64)]) -> LinearMap<Q> {
        LinearMap::diagonal(&v.iter().map(|&(n, d)| q(n, d)).collect::<Vec<_>>())
    }

    #[test]
    fn identity_composes_to_identity() {
        let id = LinearMap::<Q>::identity(4);
        assert!(compose(&id, &id).unwrap().is_identity());
    }

    #[test]
    fn compose_rejects_mismatched_dimensions() {
        let f = LinearMap::<Q>::zeros(2, 3);
        let g = LinearMap::<Q>::zeros(2, 2);
        assert_eq!(
            compose(&f, &g),
            Err(LinalgError::DimensionMismatch {
                op: "compose",
                left: 3,
                right: 2
            })
        );
    }

    #[test]
    fn compose_applies_right_factor_first() {
        // f sends e0 -> e1, g sends e0 -> 2 e0; f∘g sends e0 -> 2 e1.
        let f = LinearMap::from_rows(vec![vec![q(0, 1), q(0, 1)], vec![q(1, 1), q(0, 1)]]).unwrap();
        let g = diag(&[(2, 1), (1, 1)]);
        let fg = compose(&f, &g).unwrap();
        assert_eq!(fg.column(0), vec![q(0, 1), q(2, 1)]);
    }

    #[test]
    fn kron_of_identities_is_identity() {
        let k = kron(&LinearMap::<Q>::identity(2), &LinearMap::identity(3));
        assert!(k.is_identity());
        assert_eq!(k.rows(), 6);
    }

    #[test]
    fn kron_with_one_by_one_identity_is_noop() {
        let a = LinearMap::from_rows(vec![vec![q(1, 2), q(3, 1)], vec![q(-1, 1), q(0, 1)]]).unwrap();
        assert_eq!(kron(&a, &LinearMap::identity(1)), a);
        assert_eq!(kron(&LinearMap::identity(1), &a), a);
    }

    #[test]
    fn kron_of_twisting_diagonals() {
        // diag(1,1,c,c) ⊗ diag(1,1,c,c): c where exactly one factor index is
        // x or gx, c² where both are.
        let c = q(5, 3);
        let a = LinearMap::diagonal(&[q(1, 1), q(1, 1), c.clone(), c.clone()]);
        let k = kron(&a, &a);
        for i in 0..4 {
            for j in 0..4 {
                let expected = match (i >= 2, j >= 2) {
                    (false, false) => q(1, 1),
                    (true, true) => c.clone() * c.clone(),
                    _ => c.clone(),
                };
                assert_eq!(k.get(i * 4 + j, i * 4 + j), &expected);
            }
        }
        let off_diagonal_nonzero = (0..16)
            .flat_map(|r| (0..16).map(move |c| (r, c)))
            .filter(|(r, c)| r != c && !k.get(*r, *c).is_zero())
            .count();
        assert_eq!(off_diagonal_nonzero, 0);
    }

    #[test]
    fn inverse_of_diagonal() {
        let inv = invert(&diag(&[(1, 1), (1, 1), (3, 1), (3, 1)])).unwrap();
        assert_eq!(inv, diag(&[(1, 1), (1, 1), (1, 3), (1, 3)]));
        assert!(invert(&LinearMap::<Q>::identity(4)).unwrap().is_identity());
    }

    #[test]
    fn singular_map_is_reported() {
        let m = LinearMap::from_rows(vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]]).unwrap();
        assert_eq!(invert(&m), Err(LinalgError::SingularMap));
        assert_eq!(m.determinant().unwrap(), q(0, 1));
    }

    #[test]
    fn inverse_needs_pivoting() {
        let m = LinearMap::from_rows(vec![
            vec![q(0, 1), q(1, 1), q(2, 1)],
            vec![q(1, 1), q(0, 1), q(3, 1)],
            vec![q(4, 1), q(-3, 1), q(8, 1)],
        ])
        .unwrap();
        let inv = invert(&m).unwrap();
        assert!(compose(&m, &inv).unwrap().is_identity());
        assert!(compose(&inv, &m).unwrap().is_identity());
        assert_eq!(m.determinant().unwrap(), q(-2, 1));
    }

    #[test]
    fn permutation_matches_swap_and_kron() {
        let a = LinearMap::from_rows(vec![vec![q(1, 1), q(2, 1)], vec![q(0, 1), q(3, 1)]]).unwrap();
        let b = LinearMap::from_rows(vec![
            vec![q(1, 1), q(0, 1), q(1, 1)],
            vec![q(0, 1), q(1, 2), q(0, 1)],
            vec![q(2, 1), q(0, 1), q(1, 1)],
        ])
        .unwrap();
        let lhs = compose(&swap(2, 3), &kron(&a, &b)).unwrap();
        let rhs = compose(&kron(&b, &a), &swap(2, 3)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn flatten_roundtrip() {
        let dims = [4, 1, 3, 2];
        for flat in 0..24 {
            assert_eq!(flatten(&unflatten(flat, &dims), &dims), flat);
        }
    }

    #[test]
    fn tensor3_map_roundtrip() {
        let m = LinearMap::from_columns(2, 6, |c| vec![q(c as i64, 1), q(1, c as i64 + 1)]);
        let t = Tensor3::from_product_map(&m, 2, 3);
        assert_eq!(t.get(1, 2, 0), &q(5, 1));
        assert_eq!(t.to_product_map(), m);
        let d = m.transpose();
        let t = Tensor3::from_coproduct_map(&d, 2, 3);
        assert_eq!(t.to_coproduct_map(), d);
    }
}
