//! Order-3 tensors over exact rationals and the symmetry actions on them.
//!
//! Entries are stored flat in lexicographic order of the index triple
//! `(i, j, k)` with `i` slowest and `k` fastest; indices are 0-based
//! throughout the crate. The same order fixes the column order of the
//! constraint matrices in [`crate::polytope`], so `flatten` is literally the
//! coordinate vector of the tensor in the polytope's ambient space.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::rational::Rational;

/// Errors from tensor construction and the permutation actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TensorError {
    /// Entry vector length does not equal `n^3`.
    EntryCount { n: usize, got: usize },
    /// Permutation length does not match the tensor dimension.
    DimensionMismatch { tensor_n: usize, perm_n: usize },
    /// Sequence is not a bijection on `{0..n-1}`.
    NotAPermutation,
}

impl fmt::Display for TensorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TensorError::EntryCount { n, got } => {
                write!(f, "expected {}^3 = {} entries, got {}", n, n * n * n, got)
            }
            TensorError::DimensionMismatch { tensor_n, perm_n } => {
                write!(
                    f,
                    "tensor dimension {tensor_n} vs permutation length {perm_n}"
                )
            }
            TensorError::NotAPermutation => write!(f, "sequence is not a permutation"),
        }
    }
}

impl core::error::Error for TensorError {}

/// A permutation of `{0..n-1}`, stored as the image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// Validates that `images` is a bijection on `{0..n-1}`.
    pub fn new(images: Vec<usize>) -> Result<Self, TensorError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(TensorError::NotAPermutation);
            }
            seen[v] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// The transposition swapping `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Permutation(images)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// Composition acting as `self` after `other`: `(self ∘ other)(i) =
    /// self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i;
        }
        Permutation(inv)
    }
}

/// A triple of permutations acting independently on the three index axes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermTriple {
    pub alpha: Permutation,
    pub beta: Permutation,
    pub gamma: Permutation,
}

impl PermTriple {
    /// All three permutations must have the same length.
    pub fn new(
        alpha: Permutation,
        beta: Permutation,
        gamma: Permutation,
    ) -> Result<Self, TensorError> {
        if alpha.len() != beta.len() || beta.len() != gamma.len() {
            return Err(TensorError::DimensionMismatch {
                tensor_n: alpha.len(),
                perm_n: beta.len().max(gamma.len()),
            });
        }
        Ok(PermTriple { alpha, beta, gamma })
    }

    pub fn identity(n: usize) -> Self {
        PermTriple {
            alpha: Permutation::identity(n),
            beta: Permutation::identity(n),
            gamma: Permutation::identity(n),
        }
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    /// Axis-wise composition: applying `other` then `self` to a tensor
    /// equals applying `self.compose_after(other)` once.
    pub fn compose_after(&self, other: &PermTriple) -> PermTriple {
        // Index chasing: applying `other` gives entries at other(idx); then
        // `self` reads those at self(idx), so the net lookup is
        // other(self(idx)).
        PermTriple {
            alpha: other.alpha.compose(&self.alpha),
            beta: other.beta.compose(&self.beta),
            gamma: other.gamma.compose(&self.gamma),
        }
    }
}

/// An `n×n×n` tensor of exact rationals.
///
/// Sorting and equality are entrywise in the fixed flat order, which makes
/// `Ord` the canonical vertex order used by enumeration reports.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tensor3 {
    n: usize,
    entries: Vec<Rational>,
}

/// Flat position of `(i, j, k)` in the lexicographic layout.
pub fn flat_index(n: usize, i: usize, j: usize, k: usize) -> usize {
    debug_assert!(i < n && j < n && k < n);
    (i * n + j) * n + k
}

/// Inverse of [`flat_index`].
pub fn unflatten_index(n: usize, v: usize) -> (usize, usize, usize) {
    debug_assert!(v < n * n * n);
    (v / (n * n), (v / n) % n, v % n)
}

impl Tensor3 {
    /// Builds a tensor from its flat entry list; `entries.len()` must be
    /// `n^3`.
    pub fn new(n: usize, entries: Vec<Rational>) -> Result<Self, TensorError> {
        if entries.len() != n * n * n {
            return Err(TensorError::EntryCount {
                n,
                got: entries.len(),
            });
        }
        Ok(Tensor3 { n, entries })
    }

    /// The constant tensor with every entry equal to `value`.
    pub fn constant(n: usize, value: Rational) -> Self {
        Tensor3 {
            n,
            entries: vec![value; n * n * n],
        }
    }

    /// Zero tensor.
    pub fn zeros(n: usize) -> Self {
        Self::constant(n, Rational::zero())
    }

    /// The (0,1) tensor with ones exactly at the given `(i, j, k)` triples.
    pub fn from_ones(n: usize, ones: &[(usize, usize, usize)]) -> Self {
        let mut t = Self::zeros(n);
        for &(i, j, k) in ones {
            t.entries[flat_index(n, i, j, k)] = Rational::one();
        }
        t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// Entry at `(i, j, k)`, 0-based. Panics when out of range.
    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.entries[flat_index(self.n, i, j, k)]
    }

    /// The coordinate vector in the fixed lexicographic order.
    pub fn flatten(&self) -> Vec<Rational> {
        self.entries.clone()
    }

    /// Rebuilds a tensor from a flat coordinate vector.
    pub fn unflatten(n: usize, flat: Vec<Rational>) -> Result<Self, TensorError> {
        Self::new(n, flat)
    }

    /// True iff every entry is nonnegative and all `3n^2` line sums (one
    /// free index, the other two fixed) equal exactly 1.
    pub fn is_line_stochastic(&self) -> bool {
        let n = self.n;
        if self.entries.iter().any(|e| e < &Rational::zero()) {
            return false;
        }
        let one = Rational::one();
        for a in 0..n {
            for b in 0..n {
                let mut si = Rational::zero();
                let mut sj = Rational::zero();
                let mut sk = Rational::zero();
                for t in 0..n {
                    si += self.get(t, a, b);
                    sj += self.get(a, t, b);
                    sk += self.get(a, b, t);
                }
                if si != one || sj != one || sk != one {
                    return false;
                }
            }
        }
        true
    }

    /// True iff every entry is nonnegative and all `3n` plane sums (two
    /// free indices, one fixed) equal exactly 1.
    pub fn is_plane_stochastic(&self) -> bool {
        let n = self.n;
        if self.entries.iter().any(|e| e < &Rational::zero()) {
            return false;
        }
        let one = Rational::one();
        for f in 0..n {
            let mut sk = Rational::zero();
            let mut si = Rational::zero();
            let mut sj = Rational::zero();
            for a in 0..n {
                for b in 0..n {
                    sk += self.get(a, b, f);
                    si += self.get(f, a, b);
                    sj += self.get(a, f, b);
                }
            }
            if sk != one || si != one || sj != one {
                return false;
            }
        }
        true
    }

    /// Entrywise scaling by `c`.
    pub fn scale(&self, c: &Rational) -> Tensor3 {
        Tensor3 {
            n: self.n,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    /// True iff every entry is 0 or 1.
    pub fn is_zero_one(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero() || e.is_one())
    }

    /// Flat indices of the nonzero entries, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(v, _)| v)
            .collect()
    }

    /// Largest entry, by value. Panics on `n == 0`.
    pub fn max_entry(&self) -> &Rational {
        self.entries.iter().max().expect("nonempty tensor")
    }

    /// True iff some entry equals `value` exactly.
    pub fn contains_entry(&self, value: &Rational) -> bool {
        self.entries.iter().any(|e| e == value)
    }

    /// The relabeled tensor `R` with `R(i,j,k) = T(α(i), β(j), γ(k))`.
    ///
    /// Relabeling preserves line- and plane-stochasticity and extremality.
    pub fn apply_perm_triple(&self, p: &PermTriple) -> Result<Tensor3, TensorError> {
        let n = self.n;
        if p.n() != n {
            return Err(TensorError::DimensionMismatch {
                tensor_n: n,
                perm_n: p.n(),
            });
        }
        let mut entries = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    entries.push(
                        self.get(p.alpha.apply(i), p.beta.apply(j), p.gamma.apply(k))
                            .clone(),
                    );
                }
            }
        }
        Ok(Tensor3 { n, entries })
    }

    /// Simultaneous row/column relabeling of every k-slice: each page `A_k`
    /// becomes `P^t A_k P` for the permutation matrix of `p`.
    pub fn conjugate_pages(&self, p: &Permutation) -> Result<Tensor3, TensorError> {
        let triple = PermTriple {
            alpha: p.clone(),
            beta: p.clone(),
            gamma: Permutation::identity(p.len()),
        };
        self.apply_perm_triple(&triple)
    }
}

/// The support-4 (0,1) tensor that is one of the two vertices of the `n=2`
/// line polytope; its half is a vertex of the `n=2` plane polytope. Used all
/// over the test suites.
pub fn two_vertex_example() -> Tensor3 {
    // a111 = a221 = a122 = a212 = 1, 1-based.
    Tensor3::from_ones(2, &[(0, 0, 0), (1, 1, 0), (0, 1, 1), (1, 0, 1)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn example_tensor_is_line_stochastic() {
        assert!(two_vertex_example().is_line_stochastic());
    }

    #[test]
    fn constant_third_is_line_stochastic() {
        for n in 1..=4 {
            let t = Tensor3::constant(n, rat(1, n as i64));
            assert!(t.is_line_stochastic());
        }
    }

    #[test]
    fn bad_line_sum_detected() {
        let mut entries = vec![rat_int(0); 8];
        entries[0] = rat_int(2);
        let t = Tensor3::new(2, entries).unwrap();
        assert!(!t.is_line_stochastic());
        assert!(!t.is_plane_stochastic());
    }

    #[test]
    fn negative_entries_rejected_by_predicates() {
        // Line sums all 1 but one entry negative.
        let t = Tensor3::new(1, vec![rat_int(1)]).unwrap();
        assert!(t.is_line_stochastic());
        let neg = Tensor3::new(
            2,
            vec![
                rat_int(2),
                rat_int(-1),
                rat_int(-1),
                rat_int(2),
                rat_int(-1),
                rat_int(2),
                rat_int(2),
                rat_int(-1),
            ],
        )
        .unwrap();
        assert!(!neg.is_line_stochastic());
    }

    #[test]
    fn scaled_example_is_plane_stochastic() {
        let t = two_vertex_example().scale(&rat(1, 2));
        assert!(t.is_plane_stochastic());
        assert!(!t.is_line_stochastic());
    }

    #[test]
    fn constant_inverse_square_is_plane_stochastic() {
        for n in 1..=4 {
            let t = Tensor3::constant(n, rat(1, (n * n) as i64));
            assert!(t.is_plane_stochastic());
        }
    }

    #[test]
    fn line_stochastic_is_not_plane_stochastic_unscaled() {
        // Plane sums of a line-stochastic tensor equal n.
        let t = two_vertex_example();
        assert!(!t.is_plane_stochastic());
    }

    #[test]
    fn scaling_line_by_inverse_n_gives_plane() {
        for t in [two_vertex_example(), Tensor3::constant(3, rat(1, 3))] {
            let n = t.n() as i64;
            assert!(t.is_line_stochastic());
            assert!(t.scale(&rat(1, n)).is_plane_stochastic());
        }
    }

    #[test]
    fn flatten_matches_fixed_order() {
        let t = two_vertex_example();
        let flat: Vec<i64> = [1, 0, 0, 1, 0, 1, 1, 0].into();
        assert_eq!(
            t.flatten(),
            flat.iter().map(|&v| rat_int(v)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn flatten_n1() {
        let t = Tensor3::new(1, vec![rat_int(1)]).unwrap();
        assert_eq!(t.flatten(), vec![rat_int(1)]);
    }

    #[test]
    fn unflatten_round_trip() {
        let t = two_vertex_example();
        assert_eq!(Tensor3::unflatten(2, t.flatten()).unwrap(), t);
    }

    #[test]
    fn identity_triple_is_noop() {
        let t = two_vertex_example();
        assert_eq!(t.apply_perm_triple(&PermTriple::identity(2)).unwrap(), t);
    }

    #[test]
    fn perm_triple_preserves_stochasticity() {
        let t = two_vertex_example();
        let p = PermTriple::new(
            Permutation::transposition(2, 0, 1),
            Permutation::identity(2),
            Permutation::identity(2),
        )
        .unwrap();
        let swapped = t.apply_perm_triple(&p).unwrap();
        assert!(swapped.is_line_stochastic());
        assert_ne!(swapped, t);
        // Swapping the i-axis again restores the original.
        assert_eq!(swapped.apply_perm_triple(&p).unwrap(), t);
    }

    #[test]
    fn perm_triple_composes() {
        let t = two_vertex_example();
        let p = PermTriple::new(
            Permutation::transposition(2, 0, 1),
            Permutation::identity(2),
            Permutation::transposition(2, 0, 1),
        )
        .unwrap();
        let q = PermTriple::new(
            Permutation::identity(2),
            Permutation::transposition(2, 0, 1),
            Permutation::transposition(2, 0, 1),
        )
        .unwrap();
        let two_step = t
            .apply_perm_triple(&q)
            .unwrap()
            .apply_perm_triple(&p)
            .unwrap();
        let composed = t.apply_perm_triple(&p.compose_after(&q)).unwrap();
        assert_eq!(two_step, composed);
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let t = two_vertex_example();
        let p = PermTriple::identity(3);
        assert!(matches!(
            t.apply_perm_triple(&p),
            Err(TensorError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn conjugate_identity_is_noop() {
        let t = two_vertex_example();
        assert_eq!(t.conjugate_pages(&Permutation::identity(2)).unwrap(), t);
    }

    #[test]
    fn conjugate_fixes_symmetric_tensor() {
        let t = Tensor3::constant(2, rat(1, 2));
        let p = Permutation::transposition(2, 0, 1);
        assert_eq!(t.conjugate_pages(&p).unwrap(), t);
    }

    #[test]
    fn conjugate_preserves_line_stochasticity() {
        let t = two_vertex_example();
        let p = Permutation::transposition(2, 0, 1);
        assert!(t.conjugate_pages(&p).unwrap().is_line_stochastic());
    }

    #[test]
    fn scale_by_one_is_noop() {
        let t = two_vertex_example();
        assert_eq!(t.scale(&rat_int(1)), t);
    }

    #[test]
    fn zero_one_predicate() {
        assert!(two_vertex_example().is_zero_one());
        assert!(!Tensor3::constant(3, rat(1, 3)).is_zero_one());
    }

    #[test]
    fn support_and_max_entry() {
        let t = two_vertex_example();
        assert_eq!(t.support(), vec![0, 3, 5, 6]);
        assert_eq!(t.max_entry(), &rat_int(1));
        assert!(t.contains_entry(&rat_int(1)));
        assert!(!t.contains_entry(&rat(1, 2)));
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![1, 0, 2]).is_ok());
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
    }

    #[test]
    fn permutation_inverse_composes_to_identity() {
        let p = Permutation::new(vec![2, 0, 3, 1]).unwrap();
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(4));
        assert_eq!(p.inverse().compose(&p), Permutation::identity(4));
    }
}
