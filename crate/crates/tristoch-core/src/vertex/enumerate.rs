//! Exhaustive vertex enumeration by basis search.
//!
//! Every vertex is a basic feasible solution: a nonnegative solution of
//! `Mx = 1` whose support columns are independent. The enumerator therefore
//! visits every rank-sized independent column subset, solves the square
//! subsystem, and keeps the nonnegative solutions that satisfy the rows
//! left out of the reduction.
//!
//! The search runs on an integer fraction-free elimination (Bareiss): with
//! a 0/1 constraint matrix every intermediate entry is a minor of a 0/1
//! matrix, far below the i128 range at the sizes the budget admits, so the
//! hot path needs no big-number arithmetic. Subsets sharing a prefix share
//! elimination work through depth-first search with snapshot/undo. Each
//! surviving candidate is finally re-verified against the original system
//! in big-rational arithmetic.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::One;

use crate::bounds::binomial;
use crate::polytope::{ConstraintSystem, Kind};
use crate::rational::Rational;
use crate::tensor::Tensor3;

use super::certify;
use super::VertexError;

/// Default cap on C(n³, rank), the number of candidate bases.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// The deduplicated, canonically sorted outcome of an enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationReport {
    pub kind: Kind,
    pub n: usize,
    /// Sorted lexicographically by flattened entries; pairwise distinct.
    pub vertices: Vec<Tensor3>,
    pub count: usize,
    pub zero_one_count: usize,
    pub support_size_histogram: BTreeMap<usize, usize>,
    pub max_entry_histogram: BTreeMap<Rational, usize>,
}

/// A constraint system prepared for the integer search: a maximal
/// independent set of rows over the admitted columns, plus the left-out
/// rows used to re-check every candidate.
#[derive(Clone, Debug)]
pub struct ReducedSystem {
    kind: Kind,
    n: usize,
    ambient: usize,
    /// Global variable indices admitted to the search, ascending.
    cols: Vec<usize>,
    /// Independent rows restricted to `cols`; entries 0/1.
    rows: Vec<Vec<i64>>,
    /// The discarded rows, re-checked per candidate.
    check_rows: Vec<Vec<i64>>,
    rank: usize,
}

impl ReducedSystem {
    /// Prepares the full system.
    pub fn new(sys: &ConstraintSystem) -> Self {
        let all: Vec<usize> = (0..sys.ambient_dim()).collect();
        Self::restricted(sys, &all)
    }

    /// Prepares the system restricted to the given columns (ascending
    /// global indices); solutions are searched with support inside them.
    pub fn restricted(sys: &ConstraintSystem, allowed: &[usize]) -> Self {
        let sub = sys
            .matrix()
            .select_columns(allowed)
            .expect("allowed columns lie within the matrix");
        let keep = crate::linalg::independent_rows(&sub);
        let keep_set: BTreeSet<usize> = keep.iter().copied().collect();
        let to_ints = |r: usize| -> Vec<i64> {
            (0..allowed.len())
                .map(|c| if sub.at(r, c).is_one() { 1 } else { 0 })
                .collect()
        };
        let rows: Vec<Vec<i64>> = keep.iter().map(|&r| to_ints(r)).collect();
        let check_rows: Vec<Vec<i64>> = (0..sub.rows())
            .filter(|r| !keep_set.contains(r))
            .map(to_ints)
            .collect();
        ReducedSystem {
            kind: sys.kind(),
            n: sys.n(),
            ambient: sys.ambient_dim(),
            cols: allowed.to_vec(),
            rank: rows.len(),
            rows,
            check_rows,
        }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_cols(&self) -> usize {
        self.cols.len()
    }
}

/// A contiguous slice of the subset space: all rank-subsets beginning with
/// the given column prefix (local indices, length ≤ 2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixTask {
    pub prefix: Vec<usize>,
}

/// Partitions the whole subset space into disjoint prefix tasks; workers
/// may process them in any order and in any grouping without affecting the
/// merged result.
pub fn enumeration_tasks(rs: &ReducedSystem) -> Vec<PrefixTask> {
    let (m, r) = (rs.num_cols(), rs.rank());
    if r == 0 || m < r {
        return vec![PrefixTask { prefix: Vec::new() }];
    }
    if r == 1 {
        return (0..m).map(|c| PrefixTask { prefix: vec![c] }).collect();
    }
    let mut tasks = Vec::new();
    for c1 in 0..=(m - r) {
        for c2 in c1 + 1..=(m - r + 1) {
            tasks.push(PrefixTask {
                prefix: vec![c1, c2],
            });
        }
    }
    tasks
}

/// Reduced i128 fraction with a positive denominator.
type Frac = (i128, i128);

fn reduce_frac(num: i128, den: i128) -> Frac {
    debug_assert!(den != 0);
    if num == 0 {
        return (0, 1);
    }
    let g = num.gcd(&den);
    let (mut n, mut d) = (num / g, den / g);
    if d < 0 {
        n = -n;
        d = -d;
    }
    (n, d)
}

/// Depth-first basis search over one reduced system.
///
/// `w` holds the working matrix (rank rows × admitted columns, plus the
/// all-ones right-hand side as a final column) under fraction-free
/// elimination by the chosen prefix; snapshots undo each descent exactly.
struct Dfs<'a> {
    rs: &'a ReducedSystem,
    w: Vec<Vec<i128>>,
    pivots: Vec<i128>,
    chosen: Vec<usize>,
    saves: Vec<Save>,
}

struct Save {
    swapped: Option<usize>,
    col_from: usize,
    rows: Vec<Vec<i128>>, // saved tails of rows t..rank, cols col_from..=m
}

impl<'a> Dfs<'a> {
    fn new(rs: &'a ReducedSystem) -> Self {
        let w = rs
            .rows
            .iter()
            .map(|row| {
                let mut wr: Vec<i128> = row.iter().map(|&v| v as i128).collect();
                wr.push(1); // right-hand side
                wr
            })
            .collect();
        Dfs {
            rs,
            w,
            pivots: Vec::new(),
            chosen: Vec::new(),
            saves: Vec::new(),
        }
    }

    /// Tries to take column `c` as the next pivot. Returns false when the
    /// column is dependent on the chosen ones (no subset through this
    /// prefix can be a basis).
    fn descend(&mut self, c: usize) -> bool {
        let t = self.chosen.len();
        let r = self.rs.rank;
        let m = self.rs.num_cols();
        let Some(q) = (t..r).find(|&i| self.w[i][c] != 0) else {
            return false;
        };
        let saved: Vec<Vec<i128>> = (t..r).map(|i| self.w[i][c..=m].to_vec()).collect();
        if q != t {
            self.w.swap(t, q);
        }
        let prev = if t == 0 { 1 } else { self.pivots[t - 1] };
        let piv = self.w[t][c];
        for i in t + 1..r {
            let wic = self.w[i][c];
            // Split borrow: pivot row t is disjoint from row i > t.
            let (top, bottom) = self.w.split_at_mut(i);
            let (prow, irow) = (&top[t], &mut bottom[0]);
            if wic != 0 {
                for (ie, pe) in irow[c + 1..=m].iter_mut().zip(&prow[c + 1..=m]) {
                    *ie = (piv * *ie - wic * pe) / prev;
                }
                irow[c] = 0;
            } else if piv != prev {
                for ie in &mut irow[c + 1..=m] {
                    *ie = piv * *ie / prev;
                }
            }
        }
        self.pivots.push(piv);
        self.chosen.push(c);
        self.saves.push(Save {
            swapped: (q != t).then_some(q),
            col_from: c,
            rows: saved,
        });
        true
    }

    fn backtrack(&mut self) {
        let save = self.saves.pop().expect("descend/backtrack are paired");
        self.pivots.pop();
        self.chosen.pop();
        let t = self.chosen.len();
        if let Some(q) = save.swapped {
            self.w.swap(t, q);
        }
        for (offset, data) in save.rows.into_iter().enumerate() {
            let i = t + offset;
            self.w[i][save.col_from..].copy_from_slice(&data);
        }
    }

    /// Solves the complete triangular system, returning the candidate as an
    /// ambient vector of reduced fractions — or None if any coordinate is
    /// negative or a discarded row is violated.
    fn try_solve(&self) -> Option<Vec<Frac>> {
        let r = self.rs.rank;
        let m = self.rs.num_cols();
        let mut y: Vec<Frac> = vec![(0, 1); r];
        for s in (0..r).rev() {
            let mut num = self.w[s][m];
            let mut den = 1i128;
            for (&cj, &(yn, yd)) in self.chosen[s + 1..r].iter().zip(&y[s + 1..r]) {
                let u = self.w[s][cj];
                if u == 0 || yn == 0 {
                    continue;
                }
                // num/den -= u * yn/yd
                num = num * yd - u * yn * den;
                den *= yd;
                let red = reduce_frac(num, den);
                num = red.0;
                den = red.1;
            }
            let (n2, d2) = reduce_frac(num, den * self.pivots[s]);
            if n2 < 0 {
                return None; // negative coordinate: not feasible
            }
            y[s] = (n2, d2);
        }
        // The rows left out of the reduction must hold as well.
        for row in &self.rs.check_rows {
            let mut num = 0i128;
            let mut den = 1i128;
            for (t, &c) in self.chosen.iter().enumerate() {
                let (yn, yd) = y[t];
                if row[c] == 0 || yn == 0 {
                    continue;
                }
                num = num * yd + yn * den;
                den *= yd;
                let red = reduce_frac(num, den);
                num = red.0;
                den = red.1;
            }
            if num != den {
                return None; // row sum differs from 1
            }
        }
        let mut out = vec![(0, 1); self.rs.ambient];
        for (t, &c) in self.chosen.iter().enumerate() {
            out[self.rs.cols[c]] = y[t];
        }
        Some(out)
    }

    /// Extends the current prefix with columns ≥ `first` in ascending
    /// order, calling `emit` for every feasible basic solution. `emit`
    /// returning true stops the whole search.
    fn explore(&mut self, first: usize, emit: &mut impl FnMut(Vec<Frac>) -> bool) -> bool {
        let t = self.chosen.len();
        let r = self.rs.rank;
        if t == r {
            if let Some(candidate) = self.try_solve() {
                if emit(candidate) {
                    return true;
                }
            }
            return false;
        }
        let m = self.rs.num_cols();
        let need = r - t;
        if m < need || first > m - need {
            return false;
        }
        for c in first..=(m - need) {
            if self.descend(c) {
                let stop = self.explore(c + 1, emit);
                self.backtrack();
                if stop {
                    return true;
                }
            }
        }
        false
    }
}

fn frac_to_rational(f: Frac) -> Rational {
    Rational::new(BigInt::from(f.0), BigInt::from(f.1))
}

fn candidate_to_tensor(n: usize, candidate: Vec<Frac>) -> Tensor3 {
    let entries: Vec<Rational> = candidate.into_iter().map(frac_to_rational).collect();
    Tensor3::new(n, entries).expect("candidate has ambient length")
}

/// Runs one prefix task to completion, returning its feasible basic
/// solutions deduplicated within the task.
pub fn run_task(rs: &ReducedSystem, task: &PrefixTask) -> Vec<Tensor3> {
    let mut dfs = Dfs::new(rs);
    for &c in &task.prefix {
        if !dfs.descend(c) {
            return Vec::new(); // dependent prefix: nothing beneath it
        }
    }
    let start = task.prefix.last().map_or(0, |&c| c + 1);
    let mut seen: BTreeSet<Vec<Frac>> = BTreeSet::new();
    dfs.explore(start, &mut |candidate| {
        seen.insert(candidate);
        false
    });
    seen.into_iter()
        .map(|c| candidate_to_tensor(rs.n, c))
        .collect()
}

/// Merges raw per-task outputs into the final report: deduplicates,
/// sorts canonically, re-verifies every vertex against the original system
/// and the support-size laws, and builds the summary histograms.
pub fn assemble_report(
    sys: &ConstraintSystem,
    candidates: impl IntoIterator<Item = Tensor3>,
) -> Result<EnumerationReport, VertexError> {
    let set: BTreeSet<Tensor3> = candidates.into_iter().collect();
    let n = sys.n();
    let ambient = sys.ambient_dim();
    let support_cap = sys.kind().matrix_rank(n);
    let zero_floor = match sys.kind() {
        Kind::Line if n >= 2 => (n - 1) * (n - 1) * (n - 1) + 1,
        _ => 0,
    };
    let mut support_size_histogram: BTreeMap<usize, usize> = BTreeMap::new();
    let mut max_entry_histogram: BTreeMap<Rational, usize> = BTreeMap::new();
    let mut zero_one_count = 0;
    for v in &set {
        if !sys.contains(&v.flatten()) {
            return Err(VertexError::Internal(alloc::format!(
                "enumerated point violates the {} system",
                sys.kind()
            )));
        }
        let support = v.support().len();
        if support > support_cap {
            return Err(VertexError::Internal(alloc::format!(
                "vertex support {support} exceeds the cap {support_cap}"
            )));
        }
        if ambient - support < zero_floor {
            return Err(VertexError::Internal(alloc::format!(
                "vertex has {} zeros, below the floor {zero_floor}",
                ambient - support
            )));
        }
        if !certify::check_extreme(sys, v)?.is_vertex() {
            return Err(VertexError::Internal(alloc::string::String::from(
                "enumerated point failed the extremality certificate",
            )));
        }
        *support_size_histogram.entry(support).or_insert(0) += 1;
        *max_entry_histogram
            .entry(v.max_entry().clone())
            .or_insert(0) += 1;
        if v.is_zero_one() {
            zero_one_count += 1;
        }
    }
    let vertices: Vec<Tensor3> = set.into_iter().collect();
    Ok(EnumerationReport {
        kind: sys.kind(),
        n,
        count: vertices.len(),
        zero_one_count,
        support_size_histogram,
        max_entry_histogram,
        vertices,
    })
}

/// Applies the candidate budget, prepares the reduced system, cross-checks
/// its rank against the closed form, and partitions the search. Callers
/// (serial or parallel) run the tasks and feed the outputs to
/// [`assemble_report`].
pub fn enumeration_plan(
    sys: &ConstraintSystem,
    budget: u64,
) -> Result<(ReducedSystem, Vec<PrefixTask>), VertexError> {
    let rank = sys.kind().matrix_rank(sys.n());
    let candidates = binomial(sys.ambient_dim() as u64, rank as u64);
    if candidates > BigUint::from(budget) {
        return Err(VertexError::BudgetExceeded { candidates, budget });
    }
    let rs = ReducedSystem::new(sys);
    if rs.rank() != rank {
        return Err(VertexError::Internal(alloc::format!(
            "measured rank {} differs from the closed form {rank}",
            rs.rank()
        )));
    }
    let tasks = enumeration_tasks(&rs);
    Ok((rs, tasks))
}

/// All vertices of the polytope, refusing when C(n³, rank) exceeds the
/// budget.
pub fn enumerate_vertices_with_budget(
    sys: &ConstraintSystem,
    budget: u64,
) -> Result<EnumerationReport, VertexError> {
    let (rs, tasks) = enumeration_plan(sys, budget)?;
    let mut all: Vec<Tensor3> = Vec::new();
    for task in tasks {
        all.extend(run_task(&rs, &task));
    }
    assemble_report(sys, all)
}

/// [`enumerate_vertices_with_budget`] at the default budget.
pub fn enumerate_vertices(sys: &ConstraintSystem) -> Result<EnumerationReport, VertexError> {
    enumerate_vertices_with_budget(sys, DEFAULT_BUDGET)
}

/// Searches for any feasible point vanishing on `zero_set`, by looking for
/// a basic feasible solution supported on the remaining columns; a
/// nonempty face of a bounded polyhedron always contains one. Used to
/// decide face nonemptiness.
pub fn find_feasible_on_face(
    sys: &ConstraintSystem,
    zero_set: &BTreeSet<usize>,
) -> Option<Vec<Rational>> {
    let ambient = sys.ambient_dim();
    let allowed: Vec<usize> = (0..ambient).filter(|c| !zero_set.contains(c)).collect();
    let rs = ReducedSystem::restricted(sys, &allowed);
    let mut dfs = Dfs::new(&rs);
    let mut found: Option<Vec<Frac>> = None;
    dfs.explore(0, &mut |candidate| {
        found = Some(candidate);
        true
    });
    let point: Vec<Rational> = found?.into_iter().map(frac_to_rational).collect();
    debug_assert!(sys.contains(&point));
    Some(point)
}
