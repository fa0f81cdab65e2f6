//! Worker-parallel vertex enumeration.
//!
//! The search space is pre-partitioned into disjoint column-prefix tasks;
//! workers pull tasks from a shared counter and collect candidates
//! locally, and the single merge at the end deduplicates and sorts. The
//! result is a pure function of the constraint system — the worker count
//! only changes the schedule, never the report.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::thread;

use tristoch_core::polytope::ConstraintSystem;
use tristoch_core::tensor::Tensor3;
use tristoch_core::vertex::{
    assemble_report, enumeration_plan, run_task, EnumerationReport, VertexError,
};

/// Enumerates all vertices using up to `workers` threads.
pub fn enumerate_with_workers(
    sys: &ConstraintSystem,
    budget: u64,
    workers: usize,
) -> Result<EnumerationReport, VertexError> {
    let (rs, tasks) = enumeration_plan(sys, budget)?;
    let workers = workers.max(1).min(tasks.len().max(1));
    if workers == 1 {
        let mut all: Vec<Tensor3> = Vec::new();
        for task in &tasks {
            all.extend(run_task(&rs, task));
        }
        return assemble_report(sys, all);
    }
    let next = AtomicUsize::new(0);
    let mut collected: Vec<Tensor3> = Vec::new();
    thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                scope.spawn(|| {
                    let mut local: Vec<Tensor3> = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        let Some(task) = tasks.get(i) else { break };
                        local.extend(run_task(&rs, task));
                    }
                    local
                })
            })
            .collect();
        for handle in handles {
            collected.extend(handle.join().expect("enumeration worker panicked"));
        }
    });
    assemble_report(sys, collected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use tristoch_core::polytope::{build_line_system, build_plane_system};
    use tristoch_core::vertex::enumerate_vertices;

    #[test]
    fn worker_count_does_not_change_the_report() {
        for sys in [build_line_system(2), build_plane_system(2)] {
            let serial = enumerate_vertices(&sys).unwrap();
            for workers in [1, 2, 3, 7] {
                let parallel = enumerate_with_workers(&sys, 1 << 20, workers).unwrap();
                assert_eq!(parallel, serial, "workers = {workers}");
            }
        }
    }

    #[test]
    fn oversubscribed_workers_are_harmless() {
        let sys = build_plane_system(2);
        let report = enumerate_with_workers(&sys, 1 << 20, 1000).unwrap();
        assert_eq!(report.count, 6);
    }

    #[test]
    fn budget_refusal_propagates() {
        let sys = build_line_system(3);
        assert!(matches!(
            enumerate_with_workers(&sys, 10, 4),
            Err(VertexError::BudgetExceeded { .. })
        ));
    }
}
