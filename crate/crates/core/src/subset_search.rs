//! Branch-and-prune over subsets of `{1, ..., n}` with deterministic,
//! thread-count independent results.
//!
//! The search decides vertices in increasing order, branching "in" before
//! "out". The first `min(n, 6)` decisions are fixed per task, so the work
//! splits into up to 64 independent tasks. Each task keeps only its own
//! best-so-far bound, which makes per-task node counts (and hence the
//! reported statistics) identical whether tasks run on one thread or many.

use std::cmp::Ordering;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering as AtomicOrdering};

use serde::{Deserialize, Serialize};

use crate::vertex_set::VertexSet;

/// Predicates that drive a subset search. Masks use bit `v - 1` for vertex `v`.
pub trait SubsetProblem: Sync {
    fn n(&self) -> usize;

    /// False when no completion of the partial assignment can be accepted.
    /// Must never reject a partial assignment that has an accepted completion.
    fn feasible(&self, inside: u64, outside: u64) -> bool;

    /// Exact acceptance test for a complete assignment.
    fn accept(&self, inside: u64) -> bool;
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub examined: u64,
    pub pruned: u64,
}

impl SearchStats {
    fn add(&mut self, other: SearchStats) {
        self.examined += other.examined;
        self.pruned += other.pruned;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Collect {
    /// Only the canonical minimum (smallest size, then lexicographic).
    Best,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub budget: u64,
    pub threads: usize,
    pub prune: bool,
    pub mode: Collect,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RunOutcome {
    Done { found: Vec<u64>, stats: SearchStats },
    /// More than `budget` nodes would be needed; `spent` is a lower bound.
    OverBudget { spent: u64 },
}

pub fn mask_cmp(n: usize, a: u64, b: u64) -> Ordering {
    let sa = VertexSet::from_bits(n, a).expect("mask in range");
    let sb = VertexSet::from_bits(n, b).expect("mask in range");
    sa.canonical_cmp(&sb)
}

struct BudgetGate {
    budget: u64,
    spent: AtomicU64,
    abort: AtomicBool,
}

impl BudgetGate {
    /// Adds `nodes` to the shared tally; false once the budget is blown.
    fn charge(&self, nodes: u64) -> bool {
        let total = self.spent.fetch_add(nodes, AtomicOrdering::Relaxed) + nodes;
        if total > self.budget {
            self.abort.store(true, AtomicOrdering::Relaxed);
        }
        !self.abort.load(AtomicOrdering::Relaxed)
    }
}

const FLUSH_EVERY: u64 = 4096;

struct Dfs<'a, P: SubsetProblem> {
    problem: &'a P,
    n: usize,
    prune: bool,
    mode: Collect,
    gate: &'a BudgetGate,
    found: Vec<u64>,
    stats: SearchStats,
    unflushed: u64,
    aborted: bool,
}

impl<P: SubsetProblem> Dfs<'_, P> {
    fn visit(&mut self, depth: usize, inside: u64, outside: u64) {
        if self.aborted {
            return;
        }
        self.stats.examined += 1;
        self.unflushed += 1;
        if self.unflushed >= FLUSH_EVERY {
            let ok = self.gate.charge(self.unflushed);
            self.unflushed = 0;
            if !ok {
                self.aborted = true;
                return;
            }
        }
        if self.prune {
            if !self.problem.feasible(inside, outside) {
                self.stats.pruned += 1;
                return;
            }
            if self.mode == Collect::Best {
                if let Some(&b) = self.found.first() {
                    if inside.count_ones() > b.count_ones() {
                        self.stats.pruned += 1;
                        return;
                    }
                }
            }
        }
        if depth == self.n {
            if self.problem.accept(inside) {
                match self.mode {
                    Collect::All => self.found.push(inside),
                    Collect::Best => {
                        let better = self
                            .found
                            .first()
                            .is_none_or(|&b| mask_cmp(self.n, inside, b) == Ordering::Less);
                        if better {
                            self.found.clear();
                            self.found.push(inside);
                        }
                    }
                }
            }
            return;
        }
        let bit = 1u64 << depth;
        self.visit(depth + 1, inside | bit, outside);
        self.visit(depth + 1, inside, outside | bit);
    }
}

struct TaskResult {
    found: Vec<u64>,
    stats: SearchStats,
    aborted: bool,
}

/// Runs the search; `found` is in canonical order (length ≤ 1 in `Best` mode).
pub fn run<P: SubsetProblem>(problem: &P, cfg: RunConfig) -> RunOutcome {
    let n = problem.n();
    let prefix = n.min(6);
    let tasks = 1usize << prefix;
    let gate = BudgetGate {
        budget: cfg.budget,
        spent: AtomicU64::new(0),
        abort: AtomicBool::new(false),
    };

    let run_task = |t: usize| -> TaskResult {
        let mut dfs = Dfs {
            problem,
            n,
            prune: cfg.prune,
            mode: cfg.mode,
            gate: &gate,
            found: Vec::new(),
            stats: SearchStats::default(),
            unflushed: 0,
            aborted: false,
        };
        // bit b of t set: vertex b + 1 is inside
        let inside = t as u64;
        let outside = !inside & ((1u64 << prefix) - 1);
        dfs.visit(prefix, inside, outside);
        if !dfs.aborted && dfs.unflushed > 0 && !gate.charge(dfs.unflushed) {
            dfs.aborted = true;
        }
        TaskResult {
            found: dfs.found,
            stats: dfs.stats,
            aborted: dfs.aborted,
        }
    };

    let threads = cfg.threads.max(1).min(tasks);
    let results: Vec<TaskResult> = if threads == 1 {
        (0..tasks).map(run_task).collect()
    } else {
        let next = AtomicU64::new(0);
        let mut indexed: Vec<(usize, TaskResult)> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads)
                .map(|_| {
                    scope.spawn(|| {
                        let mut local = Vec::new();
                        loop {
                            let t = next.fetch_add(1, AtomicOrdering::Relaxed) as usize;
                            if t >= tasks {
                                break;
                            }
                            local.push((t, run_task(t)));
                        }
                        local
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("search worker panicked"))
                .collect()
        });
        indexed.sort_by_key(|(t, _)| *t);
        indexed.into_iter().map(|(_, r)| r).collect()
    };

    let mut stats = SearchStats::default();
    let mut aborted = false;
    let mut found = Vec::new();
    for r in results {
        stats.add(r.stats);
        aborted |= r.aborted;
        found.extend(r.found);
    }
    // the shared tally never exceeds the true total, so both checks agree
    // with the single-threaded outcome
    if aborted || stats.examined > cfg.budget {
        return RunOutcome::OverBudget {
            spent: stats.examined.max(gate.spent.load(AtomicOrdering::Relaxed)),
        };
    }
    found.sort_by(|&a, &b| mask_cmp(n, a, b));
    if cfg.mode == Collect::Best {
        found.truncate(1);
    }
    RunOutcome::Done { found, stats }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Subsets of size exactly `k` avoiding the vertex `forbid`.
    struct SizeK {
        n: usize,
        k: u32,
        forbid: u64,
    }

    impl SubsetProblem for SizeK {
        fn n(&self) -> usize {
            self.n
        }
        fn feasible(&self, inside: u64, outside: u64) -> bool {
            let free = self.n as u32 - (inside | outside).count_ones();
            inside & self.forbid == 0
                && inside.count_ones() <= self.k
                && inside.count_ones() + free >= self.k
        }
        fn accept(&self, inside: u64) -> bool {
            inside.count_ones() == self.k && inside & self.forbid == 0
        }
    }

    fn cfg(mode: Collect, threads: usize, prune: bool) -> RunConfig {
        RunConfig {
            budget: u64::MAX,
            threads,
            prune,
            mode,
        }
    }

    #[test]
    fn enumerates_all_and_best() {
        let p = SizeK { n: 9, k: 3, forbid: 1 };
        let RunOutcome::Done { found, .. } = run(&p, cfg(Collect::All, 1, true)) else {
            panic!()
        };
        assert_eq!(found.len(), 56); // C(8, 3)
        let RunOutcome::Done { found: best, .. } = run(&p, cfg(Collect::Best, 1, true)) else {
            panic!()
        };
        assert_eq!(best, vec![0b1110]);
        let RunOutcome::Done { found: plain, .. } = run(&p, cfg(Collect::All, 1, false)) else {
            panic!()
        };
        assert_eq!(plain, found);
    }

    #[test]
    fn thread_count_is_invisible() {
        let p = SizeK { n: 12, k: 5, forbid: 0b100 };
        for mode in [Collect::All, Collect::Best] {
            let a = run(&p, cfg(mode, 1, true));
            let b = run(&p, cfg(mode, 8, true));
            assert_eq!(a, b);
        }
    }

    #[test]
    fn budget_overrun() {
        let p = SizeK { n: 12, k: 5, forbid: 0 };
        let tight = RunConfig {
            budget: 100,
            ..cfg(Collect::All, 4, false)
        };
        assert!(matches!(run(&p, tight), RunOutcome::OverBudget { .. }));
    }

    #[test]
    fn tiny_universe() {
        let p = SizeK { n: 1, k: 1, forbid: 0 };
        let RunOutcome::Done { found, .. } = run(&p, cfg(Collect::All, 3, true)) else {
            panic!()
        };
        assert_eq!(found, vec![1]);
    }
}
