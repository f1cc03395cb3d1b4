//! Elements of iterated tensor products `V₁ ⊗ … ⊗ Vₙ`, stored as sparse sums
//! of pure basis tensors.
//!
//! Axiom checks push one basis tuple at a time through a pipeline of
//! structure maps ("apply Δ to leg 1, then α to leg 0, then multiply legs 0
//! and 1"), which is how Sweedler-notation identities read. The result of a
//! pipeline can be flattened with [`Element::to_coords`] under the same
//! lexicographic convention as [`crate::exactlin::kron`].

use std::collections::BTreeMap;

use crate::exactlin::{flatten, unflatten, LinearMap};
use crate::field::Field;

#[derive(Clone, Debug, PartialEq)]
pub struct Element<F> {
    dims: Vec<usize>,
    terms: BTreeMap<Vec<usize>, F>,
}

impl<F: Field> Element<F> {
    pub fn zero(dims: &[usize]) -> Self {
        Self {
            dims: dims.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    /// The pure tensor `e_{idx[0]} ⊗ … ⊗ e_{idx[n-1]}`.
    pub fn basis(dims: &[usize], idx: &[usize]) -> Self {
        assert_eq!(dims.len(), idx.len(), "basis arity");
        for (i, d) in idx.iter().zip(dims) {
            assert!(i < d, "basis index {i} out of range {d}");
        }
        let mut terms = BTreeMap::new();
        terms.insert(idx.to_vec(), F::one());
        Self {
            dims: dims.to_vec(),
            terms,
        }
    }

    /// The scalar `1 ∈ k`, an element with no legs.
    pub fn one() -> Self {
        Self::basis(&[], &[])
    }

    /// A single-leg element from its coordinates.
    pub fn vector(coords: &[F]) -> Self {
        let mut terms = BTreeMap::new();
        for (i, x) in coords.iter().enumerate() {
            if !x.is_zero() {
                terms.insert(vec![i], x.clone());
            }
        }
        Self {
            dims: vec![coords.len()],
            terms,
        }
    }

    /// Reads flattened coordinates back into an element with the given legs.
    pub fn from_coords(dims: &[usize], coords: &[F]) -> Self {
        assert_eq!(coords.len(), dims.iter().product::<usize>());
        let mut terms = BTreeMap::new();
        for (flat, x) in coords.iter().enumerate() {
            if !x.is_zero() {
                terms.insert(unflatten(flat, dims), x.clone());
            }
        }
        Self {
            dims: dims.to_vec(),
            terms,
        }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn legs(&self) -> usize {
        self.dims.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &F)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn coefficient(&self, idx: &[usize]) -> F {
        self.terms.get(idx).cloned().unwrap_or_else(F::zero)
    }

    fn add_term(terms: &mut BTreeMap<Vec<usize>, F>, idx: Vec<usize>, x: F) {
        if x.is_zero() {
            return;
        }
        match terms.entry(idx) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(x);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + x;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dims, other.dims, "adding elements of different spaces");
        let mut terms = self.terms.clone();
        for (k, v) in &other.terms {
            Self::add_term(&mut terms, k.clone(), v.clone());
        }
        Self {
            dims: self.dims.clone(),
            terms,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-F::one()))
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return Self::zero(&self.dims);
        }
        Self {
            dims: self.dims.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v.clone() * s.clone()))
                .collect(),
        }
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        let mut terms = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut idx = a.clone();
                idx.extend_from_slice(b);
                terms.insert(idx, x.clone() * y.clone());
            }
        }
        Self { dims, terms }
    }

    /// Applies `map` to the `arity` consecutive legs starting at `start`,
    /// replacing them by legs of dimensions `out`. The map's columns are
    /// indexed by the flattened input legs and its rows by the flattened
    /// output legs; `arity = 0` inserts legs, `out = []` contracts them.
    pub fn apply(&self, start: usize, arity: usize, map: &LinearMap<F>, out: &[usize]) -> Self {
        let end = start + arity;
        assert!(end <= self.dims.len(), "leg range {start}..{end} out of bounds");
        let in_dims = &self.dims[start..end];
        assert_eq!(map.cols(), in_dims.iter().product::<usize>(), "map input size");
        assert_eq!(map.rows(), out.iter().product::<usize>(), "map output size");
        let mut dims = self.dims[..start].to_vec();
        dims.extend_from_slice(out);
        dims.extend_from_slice(&self.dims[end..]);
        let mut terms = BTreeMap::new();
        for (idx, x) in &self.terms {
            let col = flatten(&idx[start..end], in_dims);
            for (row, a) in map.column_support(col) {
                let mut new_idx = idx[..start].to_vec();
                new_idx.extend(unflatten(row, out));
                new_idx.extend_from_slice(&idx[end..]);
                Self::add_term(&mut terms, new_idx, a.clone() * x.clone());
            }
        }
        Self { dims, terms }
    }

    /// Applies an endomorphism-shaped map `V → W` to one leg.
    pub fn map1(&self, leg: usize, map: &LinearMap<F>) -> Self {
        self.apply(leg, 1, map, &[map.rows()])
    }

    /// Applies a product-shaped map `V ⊗ W → U` to legs `leg, leg+1`.
    pub fn merge(&self, leg: usize, map: &LinearMap<F>) -> Self {
        self.apply(leg, 2, map, &[map.rows()])
    }

    /// Applies a coproduct-shaped map `V → U ⊗ W` to one leg.
    pub fn split(&self, leg: usize, map: &LinearMap<F>, d1: usize, d2: usize) -> Self {
        self.apply(leg, 1, map, &[d1, d2])
    }

    /// Applies a covector `V → k` to one leg, removing it.
    pub fn contract(&self, leg: usize, covector: &LinearMap<F>) -> Self {
        self.apply(leg, 1, covector, &[])
    }

    /// Inserts the vector `v` as a new leg at position `leg`.
    pub fn insert(&self, leg: usize, v: &[F]) -> Self {
        self.apply(leg, 0, &LinearMap::column_vector(v), &[v.len()])
    }

    /// Reorders legs: new leg `k` is old leg `order[k]`.
    pub fn permute(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.dims.len(), "permutation arity");
        let dims = order.iter().map(|&o| self.dims[o]).collect();
        let terms = self
            .terms
            .iter()
            .map(|(idx, x)| (order.iter().map(|&o| idx[o]).collect(), x.clone()))
            .collect();
        Self { dims, terms }
    }

    /// Exchanges legs `i` and `j`.
    pub fn swap(&self, i: usize, j: usize) -> Self {
        let mut order: Vec<usize> = (0..self.dims.len()).collect();
        order.swap(i, j);
        self.permute(&order)
    }

    /// Flattened coordinates.
    pub fn to_coords(&self) -> Vec<F> {
        let n = self.dims.iter().product();
        let mut v = vec![F::zero(); n];
        for (idx, x) in &self.terms {
            v[flatten(idx, &self.dims)] = x.clone();
        }
        v
    }

    /// Forgets the leg structure, keeping a single flattened leg.
    pub fn flatten_legs(&self) -> Self {
        let n = self.dims.iter().product();
        let terms = self
            .terms
            .iter()
            .map(|(idx, x)| (vec![flatten(idx, &self.dims)], x.clone()))
            .collect();
        Self { dims: vec![n], terms }
    }

    /// Replaces the leg at `leg` by legs of dimensions `parts`; the inverse
    /// of [`Element::group_legs`].
    pub fn unflatten_leg(&self, leg: usize, parts: &[usize]) -> Self {
        assert_eq!(self.dims[leg], parts.iter().product::<usize>());
        self.apply(leg, 1, &LinearMap::identity(self.dims[leg]), parts)
    }

    /// Merges the `arity` legs starting at `start` into one flattened leg.
    pub fn group_legs(&self, start: usize, arity: usize) -> Self {
        let n: usize = self.dims[start..start + arity].iter().product();
        self.apply(start, arity, &LinearMap::identity(n), &[n])
    }
}

impl<F: Field> LinearMap<F> {
    /// The matrix of the linear map determined by its values on basis tuples
    /// of `V₁ ⊗ … ⊗ Vₙ` (dimensions `in_dims`). The images must all live in a
    /// space of total dimension `out_dim`.
    pub fn from_basis_images(in_dims: &[usize], out_dim: usize, mut image: impl FnMut(&[usize]) -> Element<F>) -> Self {
        let n: usize = in_dims.iter().product();
        LinearMap::from_columns(out_dim, n, |col| {
            let v = image(&unflatten(col, in_dims)).to_coords();
            assert_eq!(v.len(), out_dim, "image has the wrong dimension");
            v
        })
    }
}

/// Every multi-index of the given dimensions in lexicographic order.
pub fn basis_tuples(dims: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let n: usize = dims.iter().product();
    (0..n).map(move |flat| unflatten(flat, dims))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{kron, swap};
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    fn sample(rows: usize, cols: usize, seed: i64) -> LinearMap<Q> {
        LinearMap::from_columns(rows, cols, |j| {
            (0..rows)
                .map(|i| q((i as i64 * 7 + j as i64 * 3 + seed) % 5 - 2))
                .collect()
        })
    }

    #[test]
    fn apply_on_two_legs_matches_kron() {
        let f = sample(3, 2, 1);
        let g = sample(2, 4, 2);
        let fg = kron(&f, &g);
        for idx in basis_tuples(&[2, 4]) {
            let e = Element::<Q>::basis(&[2, 4], &idx);
            let via_legs = e.map1(0, &f).map1(1, &g).to_coords();
            let via_kron = fg.column(flatten(&idx, &[2, 4]));
            assert_eq!(via_legs, via_kron);
        }
    }

    #[test]
    fn permute_matches_swap_matrix() {
        let s = swap::<Q>(2, 3);
        for idx in basis_tuples(&[2, 3]) {
            let e = Element::<Q>::basis(&[2, 3], &idx);
            assert_eq!(e.swap(0, 1).to_coords(), s.column(flatten(&idx, &[2, 3])));
        }
    }

    #[test]
    fn contract_and_insert_change_arity() {
        let e = Element::<Q>::basis(&[2, 3], &[1, 2]);
        let eps = LinearMap::row_vector(&[q(0), q(0), q(5)]);
        let c = e.contract(1, &eps);
        assert_eq!(c.dims(), &[2]);
        assert_eq!(c.to_coords(), vec![q(0), q(5)]);
        let i = c.insert(0, &[q(1), q(2)]);
        assert_eq!(i.dims(), &[2, 2]);
        assert_eq!(i.coefficient(&[1, 1]), q(10));
    }

    #[test]
    fn cancellation_removes_terms() {
        let e = Element::<Q>::basis(&[2], &[0]);
        assert!(e.sub(&e).is_zero());
    }

    #[test]
    fn group_and_unflatten_are_inverse() {
        let e = Element::<Q>::basis(&[2, 3, 4], &[1, 2, 3]).add(&Element::basis(&[2, 3, 4], &[0, 1, 0]));
        let g = e.group_legs(1, 2);
        assert_eq!(g.dims(), &[2, 12]);
        assert_eq!(g.unflatten_leg(1, &[3, 4]), e);
    }
}
