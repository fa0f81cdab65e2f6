//! Convex decomposition into vertices, and the scaled-vertex search.

use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::polytope::{build_line_system, build_plane_system, ConstraintSystem};
use crate::rational::{rat, Rational};
use crate::tensor::Tensor3;

use super::certify::{self, ExtremeVerdict};
use super::enumerate::enumerate_vertices_with_budget;
use super::VertexError;

/// A convex combination of vertices reconstructing a point exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// Positive weights summing to 1, each with a certified vertex.
    pub terms: Vec<(Rational, Tensor3)>,
}

impl Decomposition {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn weight_sum(&self) -> Rational {
        self.terms
            .iter()
            .fold(Rational::zero(), |acc, (w, _)| acc + w)
    }

    /// The weighted sum of the terms, exactly.
    pub fn reconstruct(&self) -> Tensor3 {
        let (_, first) = self.terms.first().expect("decompositions are nonempty");
        let n = first.n();
        let mut acc = alloc::vec![Rational::zero(); n * n * n];
        for (w, v) in &self.terms {
            for (slot, e) in acc.iter_mut().zip(v.entries()) {
                *slot += w * e;
            }
        }
        Tensor3::new(n, acc).expect("accumulator has ambient length")
    }
}

/// The largest step `t ≥ 0` with `x + t·d ≥ 0`, reached at a coordinate
/// where d is negative; errors if d never decreases (impossible for a
/// nullspace direction of these systems, whose row sums are zero).
fn max_step(x: &[Rational], d: &[Rational]) -> Result<Rational, VertexError> {
    let mut best: Option<Rational> = None;
    for (xv, dv) in x.iter().zip(d) {
        if dv < &Rational::zero() {
            let ratio = xv / -dv;
            if best.as_ref().is_none_or(|b| &ratio < b) {
                best = Some(ratio);
            }
        }
    }
    best.ok_or_else(|| {
        VertexError::Internal(String::from(
            "perturbation direction never decreases; polytope would be unbounded",
        ))
    })
}

/// Walks from `x` to a vertex of the smallest face containing `x`: each
/// step follows the witness direction with the maximal feasible step,
/// gaining at least one zero, until the support certifies a vertex.
/// The walk never leaves the support of `x`.
fn descend_to_vertex(
    sys: &ConstraintSystem,
    mut x: Vec<Rational>,
    mut verdict: ExtremeVerdict,
) -> Result<(Vec<Rational>, Tensor3), VertexError> {
    loop {
        match verdict {
            ExtremeVerdict::Vertex(cert) => return Ok((x, cert.tensor)),
            ExtremeVerdict::NotVertex(w) => {
                let step = max_step(&x, &w.direction)?;
                for (xv, dv) in x.iter_mut().zip(&w.direction) {
                    if !dv.is_zero() {
                        *xv += &step * dv;
                    }
                }
                let t = Tensor3::new(sys.n(), x.clone()).expect("ambient length preserved");
                verdict = certify::verdict_for_feasible(sys, t, &x);
            }
        }
    }
}

/// Writes a feasible point as a convex combination of at most dim+1
/// certified vertices, exactly.
///
/// Peeling step: find a vertex `v` on the minimal face containing `x`,
/// shoot the ray from `v` through `x` to the boundary point `y` (which has
/// strictly fewer nonzeros than `x`), record `v` with the induced weight,
/// and continue from `y`.
pub fn caratheodory_decompose(
    sys: &ConstraintSystem,
    t: &Tensor3,
) -> Result<Decomposition, VertexError> {
    let mut x = certify::ensure_feasible(sys, t)?;
    let mut terms: Vec<(Rational, Tensor3)> = Vec::new();
    let mut carry = Rational::one();
    loop {
        let tensor = Tensor3::new(sys.n(), x.clone()).expect("ambient length");
        match certify::verdict_for_feasible(sys, tensor, &x) {
            ExtremeVerdict::Vertex(cert) => {
                push_term(&mut terms, carry, cert.tensor);
                break;
            }
            verdict @ ExtremeVerdict::NotVertex(_) => {
                let (v, v_tensor) = descend_to_vertex(sys, x.clone(), verdict)?;
                // Ray from v through x: y = v + s·(x−v) at the largest
                // feasible s. Since v's support is inside x's, s > 1, and
                // the limiting coordinate gives y a fresh zero.
                let dir: Vec<Rational> = x.iter().zip(&v).map(|(a, b)| a - b).collect();
                let s = max_step(&v, &dir)?;
                debug_assert!(s > Rational::one());
                let theta = s.recip();
                push_term(
                    &mut terms,
                    carry.clone() * (Rational::one() - &theta),
                    v_tensor,
                );
                carry *= theta;
                for ((y, vv), dv) in x.iter_mut().zip(&v).zip(&dir) {
                    *y = vv + &s * dv;
                }
            }
        }
    }
    let decomposition = Decomposition { terms };
    verify_decomposition(sys, t, &decomposition)?;
    Ok(decomposition)
}

fn push_term(terms: &mut Vec<(Rational, Tensor3)>, weight: Rational, vertex: Tensor3) {
    if weight.is_zero() {
        return;
    }
    // Fold repeats of the same vertex into one term.
    if let Some((w, _)) = terms.iter_mut().find(|(_, v)| *v == vertex) {
        *w += weight;
    } else {
        terms.push((weight, vertex));
    }
}

fn verify_decomposition(
    sys: &ConstraintSystem,
    original: &Tensor3,
    d: &Decomposition,
) -> Result<(), VertexError> {
    let dim = sys.ambient_dim() - sys.kind().matrix_rank(sys.n());
    if d.len() > dim + 1 {
        return Err(VertexError::Internal(alloc::format!(
            "{} terms exceed the Carathéodory bound {}",
            d.len(),
            dim + 1
        )));
    }
    if d.terms.iter().any(|(w, _)| w <= &Rational::zero()) {
        return Err(VertexError::Internal(String::from(
            "nonpositive weight in decomposition",
        )));
    }
    if !d.weight_sum().is_one() {
        return Err(VertexError::Internal(String::from(
            "decomposition weights do not sum to 1",
        )));
    }
    if &d.reconstruct() != original {
        return Err(VertexError::Internal(String::from(
            "decomposition does not reconstruct its input",
        )));
    }
    Ok(())
}

/// Finds every vertex `A` of the line polytope whose scaling `A/n` is a
/// vertex of the plane polytope. For n ≥ 3 no 0/1 vertex can qualify (its
/// scaled support, n², exceeds the plane system's rank 3n−2), and that
/// exclusion is asserted.
pub fn search_scaled_extremes(n: usize, budget: u64) -> Result<Vec<Tensor3>, VertexError> {
    let line = build_line_system(n);
    let report = enumerate_vertices_with_budget(&line, budget)?;
    let plane = build_plane_system(n);
    let inv_n = rat(1, n as i64);
    let mut out = Vec::new();
    for v in &report.vertices {
        let scaled = v.scale(&inv_n);
        if certify::check_extreme(&plane, &scaled)?.is_vertex() {
            if n >= 3 && v.is_zero_one() {
                return Err(VertexError::Internal(String::from(
                    "scaled 0/1 vertex certified extreme despite oversized support",
                )));
            }
            out.push(v.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;
    use crate::tensor::two_vertex_example;

    #[test]
    fn vertex_decomposes_to_itself() {
        let sys = build_line_system(2);
        let d = caratheodory_decompose(&sys, &two_vertex_example()).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d.terms[0].0, rat_int(1));
        assert_eq!(d.terms[0].1, two_vertex_example());
    }

    #[test]
    fn segment_midpoint_splits_into_halves() {
        let sys = build_line_system(2);
        let mid = Tensor3::constant(2, rat(1, 2));
        let d = caratheodory_decompose(&sys, &mid).unwrap();
        assert_eq!(d.len(), 2);
        assert!(d.terms.iter().all(|(w, _)| w == &rat(1, 2)));
        assert_eq!(d.reconstruct(), mid);
        // The two terms are the two distinct segment endpoints.
        assert_ne!(d.terms[0].1, d.terms[1].1);
    }

    #[test]
    fn uneven_segment_point_recovers_weights() {
        let sys = build_line_system(2);
        let a = two_vertex_example();
        let b = Tensor3::from_ones(2, &[(0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1)]);
        let mix: Vec<Rational> = a
            .entries()
            .iter()
            .zip(b.entries())
            .map(|(x, y)| rat(1, 3) * x + rat(2, 3) * y)
            .collect();
        let mix = Tensor3::new(2, mix).unwrap();
        let d = caratheodory_decompose(&sys, &mix).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d.reconstruct(), mix);
        for (w, v) in &d.terms {
            if *v == a {
                assert_eq!(w, &rat(1, 3));
            } else {
                assert_eq!(v, &b);
                assert_eq!(w, &rat(2, 3));
            }
        }
    }

    #[test]
    fn uniform_line_n3_point_decomposes_within_bound() {
        let sys = build_line_system(3);
        let uniform = Tensor3::constant(3, rat(1, 3));
        let d = caratheodory_decompose(&sys, &uniform).unwrap();
        assert!(d.len() <= 9, "got {} terms", d.len());
        assert_eq!(d.reconstruct(), uniform);
        assert!(d.weight_sum().is_one());
        for (_, v) in &d.terms {
            assert!(certify::check_extreme(&sys, v).unwrap().is_vertex());
        }
    }

    #[test]
    fn uniform_plane_n2_point_decomposes() {
        let sys = build_plane_system(2);
        let uniform = Tensor3::constant(2, rat(1, 4));
        let d = caratheodory_decompose(&sys, &uniform).unwrap();
        assert!(d.len() <= 5);
        assert_eq!(d.reconstruct(), uniform);
    }

    #[test]
    fn infeasible_point_rejected() {
        let sys = build_line_system(2);
        assert_eq!(
            caratheodory_decompose(&sys, &Tensor3::zeros(2)),
            Err(VertexError::NotFeasible)
        );
    }

    #[test]
    fn scaled_search_n2_finds_both_vertices() {
        let found = search_scaled_extremes(2, 1_000_000).unwrap();
        assert!(found.contains(&two_vertex_example()));
        // Both segment endpoints scale to plane vertices by symmetry.
        assert_eq!(found.len(), 2);
    }
}
