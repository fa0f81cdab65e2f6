//! Latin squares and the 0/1 stochastic tensors they correspond to.
//!
//! A Latin square of order n maps to the 0/1 tensor with a 1 at (i,j,k)
//! exactly when cell (i,j) holds symbol k+1; these are precisely the 0/1
//! tensors with one 1 per line. The plane-stochastic analogue pairs two
//! permutations (σ, τ) and places a 1 at (σ(k), τ(k), k) for each k.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::tensor::{Permutation, Tensor3};

/// Largest order accepted by the enumerators unless overridden.
pub const DEFAULT_BUDGET: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatinError {
    /// The requested order exceeds the enumeration budget.
    BudgetExceeded { n: usize, budget: usize },
    /// A row or column is not a permutation of 1..n.
    InvalidSquare,
    /// The tensor is not a 0/1 tensor with exactly one 1 per line.
    NotPermutationTensor,
}

impl fmt::Display for LatinError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatinError::BudgetExceeded { n, budget } => {
                write!(f, "order {n} exceeds the enumeration budget {budget}")
            }
            LatinError::InvalidSquare => write!(f, "row or column is not a permutation of 1..n"),
            LatinError::NotPermutationTensor => {
                write!(f, "tensor is not a 0/1 tensor with exactly one 1 per line")
            }
        }
    }
}

impl core::error::Error for LatinError {}

/// An n×n array over the symbols 1..n with no repeat in any row or column.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatinSquare {
    n: usize,
    grid: Vec<usize>, // row-major, symbols 1..=n
}

impl LatinSquare {
    /// `grid` is row-major with symbols in 1..=n.
    pub fn new(n: usize, grid: Vec<usize>) -> Result<Self, LatinError> {
        if n == 0 || grid.len() != n * n {
            return Err(LatinError::InvalidSquare);
        }
        // Each row and each column must contain every symbol exactly once.
        for fixed in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for other in 0..n {
                let r = grid[fixed * n + other];
                let c = grid[other * n + fixed];
                if r < 1 || r > n || c < 1 || c > n || row_seen[r - 1] || col_seen[c - 1] {
                    return Err(LatinError::InvalidSquare);
                }
                row_seen[r - 1] = true;
                col_seen[c - 1] = true;
            }
        }
        Ok(LatinSquare { n, grid })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Symbol at row `i`, column `j`, in 1..=n.
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.grid[i * self.n + j]
    }

    pub fn grid(&self) -> &[usize] {
        &self.grid
    }
}

/// Row-major backtracking over all grids, symbols tried in ascending
/// order; visits each completed square once, in a fixed canonical order.
fn backtrack(
    n: usize,
    pos: usize,
    grid: &mut [usize],
    row_used: &mut [u32],
    col_used: &mut [u32],
    visit: &mut impl FnMut(&[usize]),
) {
    if pos == n * n {
        visit(grid);
        return;
    }
    let (i, j) = (pos / n, pos % n);
    for s in 0..n {
        let bit = 1u32 << s;
        if row_used[i] & bit != 0 || col_used[j] & bit != 0 {
            continue;
        }
        row_used[i] |= bit;
        col_used[j] |= bit;
        grid[pos] = s + 1;
        backtrack(n, pos + 1, grid, row_used, col_used, visit);
        row_used[i] &= !bit;
        col_used[j] &= !bit;
    }
}

fn check_budget(n: usize, budget: usize) -> Result<(), LatinError> {
    assert!(n >= 1, "order must be positive");
    if n > budget {
        return Err(LatinError::BudgetExceeded { n, budget });
    }
    Ok(())
}

/// All Latin squares of order n, in backtracking order.
pub fn enumerate_latin_squares(n: usize, budget: usize) -> Result<Vec<LatinSquare>, LatinError> {
    check_budget(n, budget)?;
    let mut out = Vec::new();
    let mut grid = vec![0usize; n * n];
    backtrack(
        n,
        0,
        &mut grid,
        &mut vec![0u32; n],
        &mut vec![0u32; n],
        &mut |g| {
            out.push(LatinSquare {
                n,
                grid: g.to_vec(),
            })
        },
    );
    Ok(out)
}

/// Number of Latin squares of order n, counted without storing them.
pub fn count_latin(n: usize, budget: usize) -> Result<BigUint, LatinError> {
    check_budget(n, budget)?;
    let mut count: u64 = 0;
    let mut grid = vec![0usize; n * n];
    backtrack(
        n,
        0,
        &mut grid,
        &mut vec![0u32; n],
        &mut vec![0u32; n],
        &mut |_| count += 1,
    );
    Ok(BigUint::from(count))
}

/// The 0/1 tensor with a 1 at (i,j,k) iff `sq(i,j) = k+1`; always
/// line-stochastic with exactly one 1 per line.
pub fn latin_to_tensor(sq: &LatinSquare) -> Tensor3 {
    let n = sq.n();
    let ones: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j, sq.get(i, j) - 1)))
        .collect();
    Tensor3::from_ones(n, &ones)
}

/// Inverse of [`latin_to_tensor`]: reads the unique k with a 1 at (i,j,k).
pub fn tensor_to_latin(t: &Tensor3) -> Result<LatinSquare, LatinError> {
    if !t.is_zero_one() || !t.is_line_stochastic() {
        return Err(LatinError::NotPermutationTensor);
    }
    let n = t.n();
    let mut grid = vec![0usize; n * n];
    for i in 0..n {
        for j in 0..n {
            let k = (0..n)
                .find(|&k| t.get(i, j, k).is_one())
                .expect("line-stochastic 0/1 tensor has a 1 in every line");
            grid[i * n + j] = k + 1;
        }
    }
    LatinSquare::new(n, grid)
}

/// All permutations of 0..n in lexicographic image order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if cur.len() == n {
            out.push(Permutation::new(cur.clone()).expect("constructed images are a bijection"));
            return;
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            used[v] = true;
            cur.push(v);
            rec(n, cur, used, out);
            cur.pop();
            used[v] = false;
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// All 0/1 tensors with exactly one 1 per plane: for permutations σ and τ,
/// a 1 at (σ(k), τ(k), k) for each k. There are (n!)² of them.
pub fn enumerate_plane_permutation_tensors(
    n: usize,
    budget: usize,
) -> Result<Vec<Tensor3>, LatinError> {
    check_budget(n, budget)?;
    let perms = all_permutations(n);
    let mut out = Vec::with_capacity(perms.len() * perms.len());
    for sigma in &perms {
        for tau in &perms {
            let ones: Vec<(usize, usize, usize)> =
                (0..n).map(|k| (sigma.apply(k), tau.apply(k), k)).collect();
            out.push(Tensor3::from_ones(n, &ones));
        }
    }
    Ok(out)
}
