//! Dense exact linear algebra over the rationals.
//!
//! Everything here is ordinary Gauss-Jordan elimination with the first
//! nonzero entry as pivot; exact arithmetic needs no numerical pivoting, and
//! the fixed rule keeps every result deterministic. Rationals stay reduced
//! after each step, which keeps intermediate values small at the matrix
//! sizes this crate works with (a few thousand entries).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinalgError {
    /// A column index was at least `cols`.
    IndexOutOfRange { index: usize, cols: usize },
    /// Right-hand side length does not match the row count.
    RhsLength { expected: usize, got: usize },
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::IndexOutOfRange { index, cols } => {
                write!(f, "column index {index} out of range for {cols} columns")
            }
            LinalgError::RhsLength { expected, got } => {
                write!(f, "right-hand side has length {got}, expected {expected}")
            }
        }
    }
}

impl core::error::Error for LinalgError {}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    /// `data` is row-major and must have length `rows * cols`.
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        RationalMatrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        RationalMatrix {
            rows: r,
            cols: c,
            data,
        }
    }

    /// Convenience constructor from machine integers, row-major.
    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Self {
        assert_eq!(data.len(), rows * cols);
        RationalMatrix {
            rows,
            cols,
            data: data.iter().map(|&v| crate::rational::rat_int(v)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut t = RationalMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        t
    }

    /// Matrix-vector product; `x.len()` must equal `cols`.
    pub fn mul_vec(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for (e, xc) in self.row(r).iter().zip(x) {
                    if !e.is_zero() && !xc.is_zero() {
                        acc += e * xc;
                    }
                }
                acc
            })
            .collect()
    }

    /// The submatrix made of the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Result<RationalMatrix, LinalgError> {
        for &c in cols {
            if c >= self.cols {
                return Err(LinalgError::IndexOutOfRange {
                    index: c,
                    cols: self.cols,
                });
            }
        }
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            for &c in cols {
                data.push(self.at(r, c).clone());
            }
        }
        Ok(RationalMatrix {
            rows: self.rows,
            cols: cols.len(),
            data,
        })
    }

    /// Stacks `self` on top of `other`; column counts must agree.
    pub fn vstack(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.cols, "column count mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        RationalMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }
}

/// Reduced row echelon form together with its pivot positions.
///
/// Pivot `t` sits at row `t`, column `pivot_cols[t]`, holds the value 1 and
/// is the only nonzero entry of its column.
pub(crate) struct Rref {
    pub m: RationalMatrix,
    pub pivot_cols: Vec<usize>,
}

pub(crate) fn rref(mut m: RationalMatrix) -> Rref {
    let mut pivot_cols = Vec::new();
    let mut pr = 0;
    for c in 0..m.cols {
        if pr == m.rows {
            break;
        }
        let Some(r) = (pr..m.rows).find(|&r| !m.at(r, c).is_zero()) else {
            continue;
        };
        m.swap_rows(pr, r);
        let piv = m.at(pr, c).clone();
        if !piv.is_one() {
            for cc in c..m.cols {
                let v = m.at(pr, cc) / &piv;
                *m.at_mut(pr, cc) = v;
            }
        }
        for r2 in 0..m.rows {
            if r2 == pr || m.at(r2, c).is_zero() {
                continue;
            }
            let factor = m.at(r2, c).clone();
            for cc in c..m.cols {
                let v = m.at(r2, cc) - &factor * m.at(pr, cc);
                *m.at_mut(r2, cc) = v;
            }
        }
        pivot_cols.push(c);
        pr += 1;
    }
    Rref { m, pivot_cols }
}

/// Exact rank by Gaussian elimination.
pub fn rank(m: &RationalMatrix) -> usize {
    rref(m.clone()).pivot_cols.len()
}

/// True iff the listed columns are linearly independent.
///
/// Duplicate indices select the same column twice and therefore report
/// dependent. The empty set is independent.
pub fn columns_independent(m: &RationalMatrix, cols: &[usize]) -> Result<bool, LinalgError> {
    let sub = m.select_columns(cols)?;
    Ok(rank(&sub) == cols.len())
}

/// Result of [`solve_on_support`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    /// The unique solution over the selected columns, in their given order.
    Unique(Vec<Rational>),
    /// The selected columns are linearly dependent.
    Underdetermined,
    /// No assignment to the selected columns satisfies every row.
    Inconsistent,
}

/// Solves `M_S y = b` where `M_S` is the column submatrix selected by
/// `support`.
///
/// Consistency is checked against every row of `M`, not just an independent
/// subset: the constraint systems this crate builds are rank-deficient and
/// each original equation must hold.
pub fn solve_on_support(
    m: &RationalMatrix,
    b: &[Rational],
    support: &[usize],
) -> Result<SolveOutcome, LinalgError> {
    if b.len() != m.rows {
        return Err(LinalgError::RhsLength {
            expected: m.rows,
            got: b.len(),
        });
    }
    let sub = m.select_columns(support)?;
    // Augment with b as a final column and reduce.
    let mut data = Vec::with_capacity(m.rows * (support.len() + 1));
    for (r, rhs) in b.iter().enumerate() {
        data.extend_from_slice(sub.row(r));
        data.push(rhs.clone());
    }
    let aug = RationalMatrix::new(m.rows, support.len() + 1, data);
    let reduced = rref(aug);
    let coeff_pivots = reduced
        .pivot_cols
        .iter()
        .filter(|&&c| c < support.len())
        .count();
    if coeff_pivots < support.len() {
        return Ok(SolveOutcome::Underdetermined);
    }
    if reduced.pivot_cols.contains(&support.len()) {
        return Ok(SolveOutcome::Inconsistent);
    }
    // Full column rank and consistent: the reduced system is the identity on
    // the selected columns, so the solution is the reduced rhs.
    let y = (0..support.len())
        .map(|t| reduced.m.at(t, support.len()).clone())
        .collect();
    Ok(SolveOutcome::Unique(y))
}

/// A basis of `{ v : Mv = 0 }` with `cols - rank(M)` vectors, one per free
/// column of the reduced form, in ascending free-column order.
pub fn nullspace_basis(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    let reduced = rref(m.clone());
    let pivot_cols = &reduced.pivot_cols;
    let mut is_pivot = vec![false; m.cols];
    for &c in pivot_cols {
        is_pivot[c] = true;
    }
    let mut basis = Vec::with_capacity(m.cols - pivot_cols.len());
    for f in 0..m.cols {
        if is_pivot[f] {
            continue;
        }
        let mut v = vec![Rational::zero(); m.cols];
        v[f] = Rational::one();
        for (t, &c) in pivot_cols.iter().enumerate() {
            v[c] = -reduced.m.at(t, f).clone();
        }
        basis.push(v);
    }
    basis
}

/// Greedily extends the independent column set `start` to a maximal
/// independent set, trying the remaining columns in ascending order.
///
/// Returns `start` followed by the added columns; the result always has
/// `rank(m)` elements. Returns `None` if `start` itself is dependent.
pub fn extend_to_basis(
    m: &RationalMatrix,
    start: &[usize],
) -> Result<Option<Vec<usize>>, LinalgError> {
    for &c in start {
        if c >= m.cols {
            return Err(LinalgError::IndexOutOfRange {
                index: c,
                cols: m.cols,
            });
        }
    }
    let mut in_start = vec![false; m.cols];
    for &c in start {
        if in_start[c] {
            return Ok(None); // duplicate column: dependent
        }
        in_start[c] = true;
    }
    let mut order: Vec<usize> = start.to_vec();
    order.extend((0..m.cols).filter(|&c| !in_start[c]));

    // One forward elimination over the permuted column order; a column joins
    // the basis exactly when it still has a pivot row available.
    let mut w = m.clone();
    let mut selected = Vec::new();
    let mut pr = 0;
    for (pos, &c) in order.iter().enumerate() {
        if pr == w.rows {
            break;
        }
        let Some(r) = (pr..w.rows).find(|&r| !w.at(r, c).is_zero()) else {
            if pos < start.len() {
                return Ok(None); // a start column failed to pivot: dependent
            }
            continue;
        };
        w.swap_rows(pr, r);
        let piv = w.at(pr, c).clone();
        for r2 in pr + 1..w.rows {
            if w.at(r2, c).is_zero() {
                continue;
            }
            let factor = w.at(r2, c) / &piv;
            // Only columns not yet processed matter from here on.
            for &cc in &order[pos..] {
                let v = w.at(r2, cc) - &factor * w.at(pr, cc);
                *w.at_mut(r2, cc) = v;
            }
        }
        selected.push(c);
        pr += 1;
    }
    Ok(Some(selected))
}

/// Greedy maximal independent row set: scans rows top to bottom, keeping
/// each row that increases the rank. Deterministic.
pub fn independent_rows(m: &RationalMatrix) -> Vec<usize> {
    // Rows of `m` are columns of the transpose; the greedy column scan of an
    // elimination over the transpose yields exactly the first maximal
    // independent row set.
    let t = m.transpose();
    extend_to_basis(&t, &[])
        .expect("no index errors for empty start")
        .expect("empty start is independent")
}
