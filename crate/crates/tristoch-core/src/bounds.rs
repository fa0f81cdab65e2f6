//! Exact evaluation of the known vertex-count bounds for both polytopes.
//!
//! Everything is big-integer or big-rational arithmetic; no floating point.
//! Binomials follow the convention C(a,b) = 0 for b > a, which keeps the
//! formulas total at the n = 1 edge cases.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::latin::{self, LatinError};
use crate::polytope::Kind;
use crate::rational::Rational;
use crate::vertex::{self, VertexError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundsError {
    /// The upper-bound-theorem formula needs at least as many facets as
    /// dimensions.
    InvalidArgs { dim: usize, facets: usize },
}

impl fmt::Display for BoundsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundsError::InvalidArgs { dim, facets } => {
                write!(f, "facet count {facets} smaller than dimension {dim}")
            }
        }
    }
}

impl core::error::Error for BoundsError {}

/// C(a, b), exactly; 0 when b > a.
pub fn binomial(a: u64, b: u64) -> BigUint {
    if b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b);
    let mut res = BigUint::one();
    for i in 0..b {
        res *= a - i;
        res /= i + 1;
    }
    res
}

pub fn factorial(n: u64) -> BigUint {
    let mut res = BigUint::one();
    for i in 2..=n {
        res *= i;
    }
    res
}

fn cube(n: usize) -> u64 {
    (n * n * n) as u64
}

/// The two rational bounds for the line polytope:
/// lower (n!)^(2n) / n^(n²), upper C(n³+6n²−6n+2, n³−1) / n³.
pub fn line_rational_bounds(n: usize) -> (Rational, Rational) {
    assert!(n >= 1);
    let lower = Rational::new(
        BigInt::from(factorial(n as u64).pow(2 * n as u32)),
        BigInt::from(n).pow((n * n) as u32),
    );
    let p = (n * n * n + 6 * n * n - 6 * n + 2) as u64;
    let upper = Rational::new(
        BigInt::from(binomial(p, cube(n) - 1)),
        BigInt::from(cube(n)),
    );
    (lower, upper)
}

/// Upper bound for the line polytope as a sum of two binomials keyed to the
/// guaranteed zero count (n−1)³ + 1 of any vertex.
pub fn line_upper_two_binomial(n: usize) -> BigUint {
    assert!(n >= 1);
    let c = ((n - 1) * (n - 1) * (n - 1)) as u64;
    let r = (3 * n * n - 3 * n + 1) as u64;
    binomial(cube(n) - c.div_ceil(2), r) + binomial(cube(n) - c / 2 - 1, r)
}

/// Upper bound counting basic solutions by support size:
/// Σ_{k=n²}^{3n²−3n+1} C(n³, k).
pub fn line_upper_basis_sum(n: usize) -> BigUint {
    assert!(n >= 1);
    let mut sum = BigUint::zero();
    for k in (n * n) as u64..=(3 * n * n - 3 * n + 1) as u64 {
        sum += binomial(cube(n), k);
    }
    sum
}

/// Upper bound from the halfspace description: C(n³+3n²−3n+1, n³).
pub fn line_upper_halfspace(n: usize) -> BigUint {
    assert!(n >= 1);
    binomial((n * n * n + 3 * n * n - 3 * n + 1) as u64, cube(n))
}

/// Lower bound 5n³−9n²−2n+3 + L(n), where L(n) counts Latin squares.
/// Negative for n = 1.
pub fn line_lower_latin(n: usize) -> Result<BigInt, LatinError> {
    assert!(n >= 1);
    let ln = latin::count_latin(n, latin::DEFAULT_BUDGET)?;
    let ni = n as i64;
    Ok(BigInt::from(5 * ni * ni * ni - 9 * ni * ni - 2 * ni + 3) + BigInt::from(ln))
}

/// McMullen's upper bound theorem: the most vertices a d-polytope with the
/// given facet count can have, C(f−⌊(d+1)/2⌋, f−d) + C(f−⌊(d+2)/2⌋, f−d).
pub fn mcmullen_ubt(dim: usize, facets: usize) -> Result<BigUint, BoundsError> {
    if facets < dim {
        return Err(BoundsError::InvalidArgs { dim, facets });
    }
    let (d, f) = (dim as u64, facets as u64);
    let b = f - d;
    let term = |half: u64| {
        if f >= half {
            binomial(f - half, b)
        } else {
            BigUint::zero()
        }
    };
    Ok(term(d.div_ceil(2)) + term(d / 2 + 1))
}

/// The three bounds for the plane polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneBounds {
    /// (n!)², the number of plane-permutation tensors.
    pub lower: BigUint,
    /// Upper bound theorem at dimension n³−3n+2 with n³ facets.
    pub upper_mcmullen: BigUint,
    /// Σ_{k=n}^{3n−2} C(n³, k), counting basic solutions by support size.
    pub upper_basis_sum: BigUint,
}

pub fn plane_bounds(n: usize) -> PlaneBounds {
    assert!(n >= 1);
    let fact = factorial(n as u64);
    let dim = n * n * n + 2 - 3 * n;
    let upper_mcmullen = mcmullen_ubt(dim, n * n * n).expect("n³ ≥ n³−3n+2 for n ≥ 1");
    let mut upper_basis_sum = BigUint::zero();
    for k in n as u64..=(3 * n - 2) as u64 {
        upper_basis_sum += binomial(cube(n), k);
    }
    PlaneBounds {
        lower: &fact * &fact,
        upper_mcmullen,
        upper_basis_sum,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Lower,
    Upper,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Lower => write!(f, "lower"),
            Side::Upper => write!(f, "upper"),
        }
    }
}

/// A bound's exact value. Non-integer bounds carry the effective integer
/// form as well: the ceiling for lower bounds, the floor for upper bounds,
/// since a vertex count is an integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundValue {
    Integer(BigInt),
    Ratio { exact: Rational, effective: BigInt },
}

impl BoundValue {
    fn ratio(exact: Rational, side: Side) -> BoundValue {
        let effective = match side {
            Side::Lower => exact.ceil().to_integer(),
            Side::Upper => exact.floor().to_integer(),
        };
        if exact.is_integer() {
            BoundValue::Integer(effective)
        } else {
            BoundValue::Ratio { exact, effective }
        }
    }

    /// The integer form used for comparisons against enumerated counts.
    pub fn effective(&self) -> BigInt {
        match self {
            BoundValue::Integer(v) => v.clone(),
            BoundValue::Ratio { effective, .. } => effective.clone(),
        }
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Integer(v) => write!(f, "{v}"),
            BoundValue::Ratio { exact, effective } => write!(f, "{exact} (effective {effective})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundEntry {
    pub name: &'static str,
    pub target: Kind,
    pub side: Side,
    pub value: BoundValue,
}

/// All bounds for one n, with enumerated truth attached when requested.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub entries: Vec<BoundEntry>,
    pub truth_line: Option<BigUint>,
    pub truth_plane: Option<BigUint>,
    /// Human-readable notes for every observed inconsistency, such as a
    /// lower bound exceeding the enumerated count.
    pub flags: Vec<String>,
}

/// Evaluates every bound at the given n; when `with_truth`, also runs the
/// vertex enumerations (propagating their budget refusal) and flags any
/// bound the measured counts violate.
pub fn bound_report(
    n: usize,
    with_truth: bool,
    enumeration_budget: u64,
) -> Result<BoundReport, VertexError> {
    let mut entries = Vec::new();
    let mut flags = Vec::new();

    let (lo, hi) = line_rational_bounds(n);
    entries.push(BoundEntry {
        name: "factorial-ratio",
        target: Kind::Line,
        side: Side::Lower,
        value: BoundValue::ratio(lo, Side::Lower),
    });
    match line_lower_latin(n) {
        Ok(v) => entries.push(BoundEntry {
            name: "latin-augmented",
            target: Kind::Line,
            side: Side::Lower,
            value: BoundValue::Integer(v),
        }),
        Err(LatinError::BudgetExceeded { n, budget }) => flags.push(alloc::format!(
            "latin-augmented lower omitted: order {n} beyond Latin budget {budget}"
        )),
        Err(e) => flags.push(alloc::format!("latin-augmented lower unavailable: {e}")),
    }
    entries.push(BoundEntry {
        name: "scaled-binomial",
        target: Kind::Line,
        side: Side::Upper,
        value: BoundValue::ratio(hi, Side::Upper),
    });
    entries.push(BoundEntry {
        name: "two-binomial",
        target: Kind::Line,
        side: Side::Upper,
        value: BoundValue::Integer(line_upper_two_binomial(n).into()),
    });
    entries.push(BoundEntry {
        name: "basis-count-sum",
        target: Kind::Line,
        side: Side::Upper,
        value: BoundValue::Integer(line_upper_basis_sum(n).into()),
    });
    entries.push(BoundEntry {
        name: "halfspace-count",
        target: Kind::Line,
        side: Side::Upper,
        value: BoundValue::Integer(line_upper_halfspace(n).into()),
    });

    let pb = plane_bounds(n);
    entries.push(BoundEntry {
        name: "permutation-pairs",
        target: Kind::Plane,
        side: Side::Lower,
        value: BoundValue::Integer(pb.lower.into()),
    });
    entries.push(BoundEntry {
        name: "cyclic-polytope",
        target: Kind::Plane,
        side: Side::Upper,
        value: BoundValue::Integer(pb.upper_mcmullen.into()),
    });
    entries.push(BoundEntry {
        name: "basis-count-sum",
        target: Kind::Plane,
        side: Side::Upper,
        value: BoundValue::Integer(pb.upper_basis_sum.into()),
    });

    let mut truth_line = None;
    let mut truth_plane = None;
    if with_truth {
        let line = vertex::enumerate_vertices_with_budget(
            &crate::polytope::build_line_system(n),
            enumeration_budget,
        )?;
        truth_line = Some(BigUint::from(line.count as u64));
        let plane = vertex::enumerate_vertices_with_budget(
            &crate::polytope::build_plane_system(n),
            enumeration_budget,
        )?;
        truth_plane = Some(BigUint::from(plane.count as u64));
        for entry in &entries {
            let truth = match entry.target {
                Kind::Line => truth_line.as_ref(),
                Kind::Plane => truth_plane.as_ref(),
            };
            let Some(truth) = truth else { continue };
            let truth = BigInt::from(truth.clone());
            let effective = entry.value.effective();
            let violated = match entry.side {
                Side::Lower => effective > truth,
                Side::Upper => effective < truth,
            };
            if violated {
                flags.push(alloc::format!(
                    "{} {} bound {} violates enumerated count {} for the {} polytope",
                    entry.name,
                    entry.side,
                    effective,
                    truth,
                    entry.target,
                ));
            }
        }
    }

    Ok(BoundReport {
        n,
        entries,
        truth_line,
        truth_plane,
        flags,
    })
}
