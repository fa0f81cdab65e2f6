//! The two extremality tests for a single feasible tensor.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::linalg::{self, RationalMatrix};
use crate::polytope::ConstraintSystem;
use crate::rational::Rational;
use crate::tensor::Tensor3;

use super::VertexError;

/// Proof that a tensor is a vertex: its support columns are linearly
/// independent, extended to a full column basis of the constraint matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCertificate {
    pub tensor: Tensor3,
    /// Ascending variable indices with nonzero value.
    pub support: Vec<usize>,
    /// The support followed by greedily added columns; always independent,
    /// always rank(M) long. Strictly larger than the support exactly for
    /// degenerate vertices.
    pub witness_columns: Vec<usize>,
}

/// Proof that a tensor is not a vertex: a direction in the constraint
/// nullspace, supported on the tensor's support, along which both
/// perturbations stay feasible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonVertexWitness {
    pub tensor: Tensor3,
    /// Nonzero vector with M·d = 0, zero wherever the tensor is zero.
    pub direction: Vec<Rational>,
    /// Half the largest step keeping both `tensor ± ε·d` nonnegative.
    pub epsilon: Rational,
}

impl NonVertexWitness {
    /// The two feasible points averaging back to the tensor.
    pub fn perturbed_pair(&self) -> (Tensor3, Tensor3) {
        let n = self.tensor.n();
        let x = self.tensor.entries();
        let plus: Vec<Rational> = x
            .iter()
            .zip(&self.direction)
            .map(|(v, d)| v + &self.epsilon * d)
            .collect();
        let minus: Vec<Rational> = x
            .iter()
            .zip(&self.direction)
            .map(|(v, d)| v - &self.epsilon * d)
            .collect();
        (
            Tensor3::new(n, plus).expect("same length as the tensor"),
            Tensor3::new(n, minus).expect("same length as the tensor"),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtremeVerdict {
    Vertex(VertexCertificate),
    NotVertex(NonVertexWitness),
}

impl ExtremeVerdict {
    pub fn is_vertex(&self) -> bool {
        matches!(self, ExtremeVerdict::Vertex(_))
    }
}

/// Validates shape and membership, returning the flattened entries.
pub(crate) fn ensure_feasible(
    sys: &ConstraintSystem,
    t: &Tensor3,
) -> Result<Vec<Rational>, VertexError> {
    if t.n() != sys.n() {
        return Err(VertexError::ShapeMismatch {
            system_n: sys.n(),
            tensor_n: t.n(),
        });
    }
    let x = t.flatten();
    if !sys.contains(&x) {
        return Err(VertexError::NotFeasible);
    }
    Ok(x)
}

/// Support-column independence test: a feasible point is a vertex exactly
/// when the columns of the constraint matrix indexed by its support are
/// linearly independent.
pub fn check_extreme(sys: &ConstraintSystem, t: &Tensor3) -> Result<ExtremeVerdict, VertexError> {
    let x = ensure_feasible(sys, t)?;
    Ok(verdict_for_feasible(sys, t.clone(), &x))
}

/// The test proper, for callers that already validated feasibility.
pub(crate) fn verdict_for_feasible(
    sys: &ConstraintSystem,
    tensor: Tensor3,
    x: &[Rational],
) -> ExtremeVerdict {
    let support: Vec<usize> = (0..x.len()).filter(|&c| !x[c].is_zero()).collect();
    let extended = linalg::extend_to_basis(sys.matrix(), &support)
        .expect("support indices lie within the matrix");
    if let Some(witness_columns) = extended {
        return ExtremeVerdict::Vertex(VertexCertificate {
            tensor,
            support,
            witness_columns,
        });
    }
    // Dependent support: any nullspace vector of the support submatrix,
    // embedded with zeros, is a feasible perturbation direction.
    let sub = sys
        .matrix()
        .select_columns(&support)
        .expect("support indices lie within the matrix");
    let basis = linalg::nullspace_basis(&sub);
    let v = basis
        .first()
        .expect("dependent columns have a nontrivial nullspace");
    let mut direction = vec![Rational::zero(); x.len()];
    for (pos, &c) in support.iter().enumerate() {
        direction[c] = v[pos].clone();
    }
    // Largest ε with x ± ε·d ≥ 0 is min x_c/|d_c|; halve it so both
    // perturbed points stay strictly positive on the support.
    let mut bound: Option<Rational> = None;
    for (pos, &c) in support.iter().enumerate() {
        if v[pos].is_zero() {
            continue;
        }
        let ratio = (&x[c] / &v[pos]).abs();
        if bound.as_ref().is_none_or(|b| &ratio < b) {
            bound = Some(ratio);
        }
    }
    let epsilon = bound.expect("nullspace vector is nonzero") / Rational::from_integer(2.into());
    ExtremeVerdict::NotVertex(NonVertexWitness {
        tensor,
        direction,
        epsilon,
    })
}

/// Halfspace test: a feasible point is a vertex exactly when its active
/// inequality rows (the unit rows of its zero coordinates) together with
/// the equality rows span all of ambient space.
pub fn check_extreme_halfspace(sys: &ConstraintSystem, t: &Tensor3) -> Result<bool, VertexError> {
    let x = ensure_feasible(sys, t)?;
    let ambient = sys.ambient_dim();
    let zeros: Vec<usize> = (0..ambient).filter(|&c| x[c].is_zero()).collect();
    let mut active = RationalMatrix::zeros(zeros.len(), ambient);
    for (r, &c) in zeros.iter().enumerate() {
        *active.at_mut(r, c) = Rational::one();
    }
    let stacked = active.vstack(sys.matrix());
    Ok(linalg::rank(&stacked) == ambient)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{build_line_system, build_plane_system};
    use crate::rational::rat;
    use crate::tensor::two_vertex_example;

    #[test]
    fn two_vertex_example_is_a_line_vertex() {
        let sys = build_line_system(2);
        let verdict = check_extreme(&sys, &two_vertex_example()).unwrap();
        let ExtremeVerdict::Vertex(cert) = verdict else {
            panic!("expected a vertex");
        };
        assert_eq!(cert.support.len(), 4);
        assert_eq!(cert.witness_columns.len(), 7); // rank of the n=2 system
        assert!(cert.witness_columns.starts_with(&cert.support));
        assert!(linalg::columns_independent(sys.matrix(), &cert.witness_columns).unwrap());
    }

    #[test]
    fn segment_midpoint_is_not_a_vertex() {
        let sys = build_line_system(2);
        let mid = Tensor3::constant(2, rat(1, 2));
        let ExtremeVerdict::NotVertex(w) = check_extreme(&sys, &mid).unwrap() else {
            panic!("expected a non-vertex");
        };
        assert!(w.direction.iter().any(|d| !d.is_zero()));
        assert!(w.epsilon > Rational::zero());
        // The direction stays in the constraint nullspace.
        let md = sys.matrix().mul_vec(&w.direction);
        assert!(md.iter().all(|e| e.is_zero()));
        // Both perturbations are points of the polytope and average back.
        let (plus, minus) = w.perturbed_pair();
        assert!(sys.contains(&plus.flatten()));
        assert!(sys.contains(&minus.flatten()));
        let avg: Vec<Rational> = plus
            .entries()
            .iter()
            .zip(minus.entries())
            .map(|(a, b)| (a + b) / Rational::from_integer(2.into()))
            .collect();
        assert_eq!(avg, mid.flatten());
    }

    #[test]
    fn scaled_example_is_a_plane_vertex() {
        let sys = build_plane_system(2);
        let half = two_vertex_example().scale(&rat(1, 2));
        assert!(check_extreme(&sys, &half).unwrap().is_vertex());
    }

    #[test]
    fn infeasible_tensor_rejected() {
        let sys = build_line_system(2);
        let not_stochastic = Tensor3::constant(2, rat(1, 3));
        assert_eq!(
            check_extreme(&sys, &not_stochastic),
            Err(VertexError::NotFeasible)
        );
        assert_eq!(
            check_extreme_halfspace(&sys, &not_stochastic),
            Err(VertexError::NotFeasible)
        );
    }

    #[test]
    fn shape_mismatch_rejected() {
        let sys = build_line_system(3);
        assert_eq!(
            check_extreme(&sys, &two_vertex_example()),
            Err(VertexError::ShapeMismatch {
                system_n: 3,
                tensor_n: 2
            })
        );
    }

    #[test]
    fn halfspace_agrees_on_the_segment() {
        let sys = build_line_system(2);
        assert!(check_extreme_halfspace(&sys, &two_vertex_example()).unwrap());
        let mid = Tensor3::constant(2, rat(1, 2));
        assert!(!check_extreme_halfspace(&sys, &mid).unwrap());
    }

    #[test]
    fn uniform_tensor_is_interior_for_small_n() {
        for n in 2..=3usize {
            let sys = build_line_system(n);
            let uniform = Tensor3::constant(n, rat(1, n as i64));
            assert!(!check_extreme_halfspace(&sys, &uniform).unwrap(), "n={n}");
            assert!(!check_extreme(&sys, &uniform).unwrap().is_vertex());
        }
    }

    #[test]
    fn degenerate_support_smaller_than_rank_is_allowed() {
        // A plane vertex has support 2 while the n=2 system has rank 4, so
        // the certificate must extend the support.
        let sys = build_plane_system(2);
        let t = Tensor3::from_ones(2, &[(0, 0, 0), (1, 1, 1)]).scale(&rat(1, 1));
        let ExtremeVerdict::Vertex(cert) = check_extreme(&sys, &t).unwrap() else {
            panic!("expected a vertex");
        };
        assert_eq!(cert.support.len(), 2);
        assert_eq!(cert.witness_columns.len(), 4);
    }
}
