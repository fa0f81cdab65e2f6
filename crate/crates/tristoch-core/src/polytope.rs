//! Constraint systems for the two tensor polytopes and derived geometry.
//!
//! The line-stochastic polytope in ambient dimension n³ is cut out by the
//! 3n² line-sum equations `Lx = 1` together with `x ≥ 0`; the
//! plane-stochastic polytope by the 3n plane-sum equations `Px = 1`. Both
//! coefficient matrices are (0,1)-matrices whose columns follow the
//! lexicographic flattening of [`crate::tensor::Tensor3`].

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::linalg::{self, RationalMatrix};
use crate::rational::Rational;
use crate::tensor::flat_index;

/// Which family of constraints a system encodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    /// Row, column and pillar sums (3n² equations).
    Line,
    /// The three axis-aligned plane sums (3n equations).
    Plane,
}

impl Kind {
    /// Number of equality rows for side length `n`.
    pub fn constraint_rows(self, n: usize) -> usize {
        match self {
            Kind::Line => 3 * n * n,
            Kind::Plane => 3 * n,
        }
    }

    /// Exact rank of the coefficient matrix for side length `n`.
    pub fn matrix_rank(self, n: usize) -> usize {
        match self {
            Kind::Line => 3 * n * n - 3 * n + 1,
            Kind::Plane => 3 * n - 2,
        }
    }

    /// Dimension of the polytope for side length `n`.
    pub fn polytope_dim(self, n: usize) -> usize {
        let ambient = n * n * n;
        ambient - self.matrix_rank(n)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Line => write!(f, "line"),
            Kind::Plane => write!(f, "plane"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolytopeError {
    /// The computed matrix rank disagrees with the closed form; this can
    /// only happen through an implementation bug.
    FormulaMismatch {
        kind: Kind,
        n: usize,
        computed: usize,
        expected: usize,
    },
    /// A zero-set index was at least n³.
    IndexOutOfRange { index: usize, ambient: usize },
}

impl fmt::Display for PolytopeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolytopeError::FormulaMismatch {
                kind,
                n,
                computed,
                expected,
            } => write!(
                f,
                "{kind} system for n={n}: computed rank {computed}, closed form gives {expected}"
            ),
            PolytopeError::IndexOutOfRange { index, ambient } => {
                write!(
                    f,
                    "variable index {index} out of range for {ambient} variables"
                )
            }
        }
    }
}

impl core::error::Error for PolytopeError {}

/// The equality part `Mx = 1` of a polytope description, with `x ≥ 0`
/// implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintSystem {
    kind: Kind,
    n: usize,
    matrix: RationalMatrix,
    rhs: Vec<Rational>,
}

/// The 3n² × n³ line-sum system: first the n² rows summing over the first
/// axis (indexed by (j,k) lexicographically), then over the second axis
/// (indexed by (i,k)), then over the third (indexed by (i,j)).
pub fn build_line_system(n: usize) -> ConstraintSystem {
    assert!(n >= 1, "n must be positive");
    let rows = 3 * n * n;
    let cols = n * n * n;
    let mut m = RationalMatrix::zeros(rows, cols);
    for j in 0..n {
        for k in 0..n {
            let r = j * n + k;
            for i in 0..n {
                *m.at_mut(r, flat_index(n, i, j, k)) = Rational::one();
            }
        }
    }
    for i in 0..n {
        for k in 0..n {
            let r = n * n + i * n + k;
            for j in 0..n {
                *m.at_mut(r, flat_index(n, i, j, k)) = Rational::one();
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let r = 2 * n * n + i * n + j;
            for k in 0..n {
                *m.at_mut(r, flat_index(n, i, j, k)) = Rational::one();
            }
        }
    }
    ConstraintSystem {
        kind: Kind::Line,
        n,
        matrix: m,
        rhs: vec![Rational::one(); rows],
    }
}

/// The 3n × n³ plane-sum system: n rows fixing the third index k, then n
/// fixing i, then n fixing j.
pub fn build_plane_system(n: usize) -> ConstraintSystem {
    assert!(n >= 1, "n must be positive");
    let rows = 3 * n;
    let cols = n * n * n;
    let mut m = RationalMatrix::zeros(rows, cols);
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                *m.at_mut(k, flat_index(n, i, j, k)) = Rational::one();
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                *m.at_mut(n + i, flat_index(n, i, j, k)) = Rational::one();
            }
        }
    }
    for j in 0..n {
        for i in 0..n {
            for k in 0..n {
                *m.at_mut(2 * n + j, flat_index(n, i, j, k)) = Rational::one();
            }
        }
    }
    ConstraintSystem {
        kind: Kind::Plane,
        n,
        matrix: m,
        rhs: vec![Rational::one(); rows],
    }
}

/// Builds the system of the given kind.
pub fn build_system(kind: Kind, n: usize) -> ConstraintSystem {
    match kind {
        Kind::Line => build_line_system(n),
        Kind::Plane => build_plane_system(n),
    }
}

impl ConstraintSystem {
    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ambient_dim(&self) -> usize {
        self.n * self.n * self.n
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn rhs(&self) -> &[Rational] {
        &self.rhs
    }

    /// The (row, column) positions of the unit entries, row-major.
    pub fn unit_entries(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 0..self.matrix.rows() {
            for c in 0..self.matrix.cols() {
                if self.matrix.at(r, c).is_one() {
                    out.push((r, c));
                }
            }
        }
        out
    }

    /// True iff `x` is a point of the polytope: nonnegative and satisfying
    /// every equality exactly.
    pub fn contains(&self, x: &[Rational]) -> bool {
        if x.len() != self.ambient_dim() {
            return false;
        }
        if x.iter().any(|v| v < &Rational::zero()) {
            return false;
        }
        self.matrix.mul_vec(x) == self.rhs
    }
}

/// Measured and derived size data for one system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeStats {
    pub kind: Kind,
    pub n: usize,
    pub ambient_dim: usize,
    pub matrix_rank: usize,
    pub polytope_dim: usize,
    pub facet_count_claimed: usize,
}

/// Computes the rank exactly and cross-checks it against the closed form
/// before deriving the dimension.
pub fn polytope_stats(sys: &ConstraintSystem) -> Result<PolytopeStats, PolytopeError> {
    let computed = linalg::rank(sys.matrix());
    let expected = sys.kind().matrix_rank(sys.n());
    if computed != expected {
        return Err(PolytopeError::FormulaMismatch {
            kind: sys.kind(),
            n: sys.n(),
            computed,
            expected,
        });
    }
    let ambient = sys.ambient_dim();
    Ok(PolytopeStats {
        kind: sys.kind(),
        n: sys.n(),
        ambient_dim: ambient,
        matrix_rank: computed,
        polytope_dim: ambient - computed,
        facet_count_claimed: ambient,
    })
}

/// Dimension of a coordinate face, or `Empty` if no polytope point
/// vanishes on all of `zero_set`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaceDimension {
    Dim(usize),
    Empty,
}

/// Dimension of `{x in polytope : x_v = 0 for v in zero_set}`.
///
/// Nonemptiness is decided by searching for a vertex supported off
/// `zero_set`; every nonempty face of a bounded polyhedron contains one.
/// For a nonempty face the dimension is `n³ − rank(M augmented with the
/// unit rows of zero_set)`.
pub fn face_dimension(
    sys: &ConstraintSystem,
    zero_set: &BTreeSet<usize>,
) -> Result<FaceDimension, PolytopeError> {
    let ambient = sys.ambient_dim();
    for &v in zero_set {
        if v >= ambient {
            return Err(PolytopeError::IndexOutOfRange { index: v, ambient });
        }
    }
    if crate::vertex::find_feasible_on_face(sys, zero_set).is_none() {
        return Ok(FaceDimension::Empty);
    }
    let mut unit_rows = RationalMatrix::zeros(zero_set.len(), ambient);
    for (r, &v) in zero_set.iter().enumerate() {
        *unit_rows.at_mut(r, v) = Rational::one();
    }
    let stacked = sys.matrix().vstack(&unit_rows);
    Ok(FaceDimension::Dim(ambient - linalg::rank(&stacked)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::tensor::{two_vertex_example, Tensor3};

    #[test]
    fn line_system_n1_is_three_ones() {
        let sys = build_line_system(1);
        assert_eq!(sys.matrix().rows(), 3);
        assert_eq!(sys.matrix().cols(), 1);
        assert!((0..3).all(|r| sys.matrix().at(r, 0).is_one()));
    }

    #[test]
    fn plane_system_n1_is_three_ones() {
        let sys = build_plane_system(1);
        assert_eq!(sys.matrix().rows(), 3);
        assert_eq!(sys.matrix().cols(), 1);
        assert!((0..3).all(|r| sys.matrix().at(r, 0).is_one()));
    }

    #[test]
    fn line_system_n2_shape_and_sums() {
        let sys = build_line_system(2);
        let m = sys.matrix();
        assert_eq!((m.rows(), m.cols()), (12, 8));
        for r in 0..12 {
            let row_sum: usize = (0..8).filter(|&c| m.at(r, c).is_one()).count();
            assert_eq!(row_sum, 2);
        }
        for c in 0..8 {
            let col_sum: usize = (0..12).filter(|&r| m.at(r, c).is_one()).count();
            assert_eq!(col_sum, 3);
        }
    }

    #[test]
    fn plane_system_n2_column_sums() {
        let sys = build_plane_system(2);
        let m = sys.matrix();
        assert_eq!((m.rows(), m.cols()), (6, 8));
        for c in 0..8 {
            let col_sum: usize = (0..6).filter(|&r| m.at(r, c).is_one()).count();
            assert_eq!(col_sum, 3);
        }
    }

    #[test]
    fn line_row_blocks_follow_fixed_index_order() {
        let n = 2;
        let sys = build_line_system(n);
        let m = sys.matrix();
        // Row 0 of the first block sums over i at (j,k) = (0,0).
        assert!(m.at(0, flat_index(n, 0, 0, 0)).is_one());
        assert!(m.at(0, flat_index(n, 1, 0, 0)).is_one());
        // Row n² sums over j at (i,k) = (0,0).
        assert!(m.at(4, flat_index(n, 0, 0, 0)).is_one());
        assert!(m.at(4, flat_index(n, 0, 1, 0)).is_one());
        // Row 2n² sums over k at (i,j) = (0,0).
        assert!(m.at(8, flat_index(n, 0, 0, 0)).is_one());
        assert!(m.at(8, flat_index(n, 0, 0, 1)).is_one());
    }

    #[test]
    fn plane_row_blocks_follow_fixed_index_order() {
        let n = 2;
        let sys = build_plane_system(n);
        let m = sys.matrix();
        // Row 0 fixes k = 0.
        assert!(m.at(0, flat_index(n, 1, 1, 0)).is_one());
        assert!(m.at(0, flat_index(n, 0, 0, 1)).is_zero());
        // Row n fixes i = 0.
        assert!(m.at(2, flat_index(n, 0, 1, 1)).is_one());
        assert!(m.at(2, flat_index(n, 1, 0, 0)).is_zero());
        // Row 2n fixes j = 0.
        assert!(m.at(4, flat_index(n, 1, 0, 1)).is_one());
        assert!(m.at(4, flat_index(n, 0, 1, 0)).is_zero());
    }

    #[test]
    fn line_rank_n3() {
        assert_eq!(linalg::rank(build_line_system(3).matrix()), 19);
    }

    #[test]
    fn plane_rank_n4() {
        assert_eq!(linalg::rank(build_plane_system(4).matrix()), 10);
    }

    #[test]
    fn ranks_match_closed_forms_up_to_5() {
        for n in 1..=5 {
            let line = build_line_system(n);
            assert_eq!(
                linalg::rank(line.matrix()),
                3 * n * n - 3 * n + 1,
                "line rank, n={n}"
            );
            let plane = build_plane_system(n);
            assert_eq!(linalg::rank(plane.matrix()), 3 * n - 2, "plane rank, n={n}");
        }
    }

    #[test]
    fn stats_line_n2() {
        let s = polytope_stats(&build_line_system(2)).unwrap();
        assert_eq!(s.matrix_rank, 7);
        assert_eq!(s.polytope_dim, 1);
        assert_eq!(s.ambient_dim, 8);
        assert_eq!(s.facet_count_claimed, 8);
    }

    #[test]
    fn stats_plane_n2() {
        let s = polytope_stats(&build_plane_system(2)).unwrap();
        assert_eq!(s.matrix_rank, 4);
        assert_eq!(s.polytope_dim, 4);
    }

    #[test]
    fn stats_line_n4() {
        let s = polytope_stats(&build_line_system(4)).unwrap();
        assert_eq!(s.matrix_rank, 37);
        assert_eq!(s.polytope_dim, 27);
    }

    #[test]
    fn stochastic_tensors_satisfy_their_system() {
        let uniform3 = Tensor3::constant(3, rat(1, 3));
        let sys = build_line_system(3);
        assert!(sys.contains(&uniform3.flatten()));
        assert!(build_line_system(2).contains(&two_vertex_example().flatten()));

        let plane_uniform = Tensor3::constant(3, rat(1, 9));
        let psys = build_plane_system(3);
        assert!(psys.contains(&plane_uniform.flatten()));
        // A line-stochastic tensor scaled by 1/n is plane-stochastic.
        assert!(build_plane_system(2).contains(&two_vertex_example().scale(&rat(1, 2)).flatten()));
    }

    #[test]
    fn contains_rejects_negative_and_unbalanced() {
        let sys = build_line_system(2);
        let mut x = two_vertex_example().flatten();
        x[0] = rat(-1, 1);
        x[1] = rat(2, 1);
        assert!(!sys.contains(&x));
        assert!(!sys.contains(&alloc::vec![Rational::zero(); 8]));
    }

    #[test]
    fn unit_entries_match_matrix() {
        let sys = build_plane_system(2);
        let entries = sys.unit_entries();
        assert_eq!(entries.len(), 6 * 4);
        assert!(entries.contains(&(0, flat_index(2, 0, 0, 0))));
    }

    #[test]
    fn face_empty_zero_set_is_whole_polytope() {
        let sys = build_line_system(2);
        assert_eq!(
            face_dimension(&sys, &BTreeSet::new()).unwrap(),
            FaceDimension::Dim(1)
        );
    }

    #[test]
    fn face_single_entry_line_n3_is_facet() {
        let sys = build_line_system(3);
        let zero: BTreeSet<usize> = [flat_index(3, 0, 0, 0)].into_iter().collect();
        assert_eq!(face_dimension(&sys, &zero).unwrap(), FaceDimension::Dim(7));
    }

    #[test]
    fn face_single_entry_plane_n2() {
        let sys = build_plane_system(2);
        let zero: BTreeSet<usize> = [flat_index(2, 0, 0, 0)].into_iter().collect();
        assert_eq!(face_dimension(&sys, &zero).unwrap(), FaceDimension::Dim(3));
    }

    #[test]
    fn face_all_variables_zero_is_empty() {
        let sys = build_line_system(2);
        let zero: BTreeSet<usize> = (0..8).collect();
        assert_eq!(face_dimension(&sys, &zero).unwrap(), FaceDimension::Empty);
    }

    #[test]
    fn face_index_out_of_range() {
        let sys = build_line_system(2);
        let zero: BTreeSet<usize> = [99].into_iter().collect();
        assert!(matches!(
            face_dimension(&sys, &zero),
            Err(PolytopeError::IndexOutOfRange { index: 99, .. })
        ));
    }
}
