//! Direct search for witness monomials `f` with `I : f = (x_1, ..., x_n)`.
//!
//! Two routes are provided. [`find_witness`] works for any monomial ideal and
//! walks the box of monomials with `deg_i(f) < ρ_i(I)`, which is where every
//! such `f` must live. [`find_witness_square_nbhd`] specializes to `NI(G)^2`,
//! where the box collapses to squarefree `f = x_U`, and runs a bitmask
//! branch-and-prune over subsets `U`. Every witness either route returns is
//! re-checked against [`MonomialIdeal`] membership before it leaves this
//! module.

use thiserror::Error;

use crate::graph::Graph;
use crate::monomial::{closed_neighborhood_ideal, IdealBudget, IdealError, Monomial, MonomialIdeal};
use crate::subset_search::{self, Collect, RunConfig, RunOutcome, SubsetProblem};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

pub use crate::subset_search::SearchStats;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search needs {needed} steps, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("the zero ideal has no witness")]
    ZeroIdeal,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("{n} vertices exceeds the limit of {limit} for this search")]
    TooLarge { n: usize, limit: usize },
    #[error("candidate {0} failed re-verification")]
    VerificationFailed(String),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of candidates (general search) or search nodes
    /// (squarefree search) before giving up.
    pub budget: u64,
    pub threads: usize,
    /// Disable to enumerate every subset without pruning.
    pub prune: bool,
    /// Largest `n` accepted by [`all_witnesses_square_nbhd`].
    pub exhaustive_limit: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: 200_000_000,
            threads: 1,
            prune: true,
            exhaustive_limit: 20,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub monomial: Monomial,
    pub stats: SearchStats,
}

impl Witness {
    /// Support of a squarefree witness.
    pub fn support(&self) -> Option<VertexSet> {
        self.monomial.support_set()
    }
}

/// Checks `f ∉ I` and `x_i f ∈ I` for every `i`, i.e. `I : f = m`, using
/// nothing but ideal membership.
pub fn is_witness(ideal: &MonomialIdeal, f: &Monomial) -> Result<bool, IdealError> {
    if ideal.contains(f)? {
        return Ok(false);
    }
    for i in 1..=ideal.n() {
        if !ideal.contains(&f.times_var(i))? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn reverify(ideal: &MonomialIdeal, f: &Monomial) -> Result<(), SearchError> {
    if is_witness(ideal, f)? && ideal.colon(f)?.is_maximal_ideal() {
        Ok(())
    } else {
        Err(SearchError::VerificationFailed(f.to_string()))
    }
}

/// Searches the box `deg_i(f) <= ρ_i(I) - 1` for the smallest `f` (in the
/// canonical monomial order) with `I : f = m`.
pub fn find_witness(
    ideal: &MonomialIdeal,
    opts: &SearchOptions,
) -> Result<Option<Witness>, SearchError> {
    if ideal.is_zero() {
        return Err(SearchError::ZeroIdeal);
    }
    let n = ideal.n();
    let radix: Vec<u32> = (1..=n)
        .map(|i| ideal.i_degree(i).map(|r| r.max(1)))
        .collect::<Result<_, _>>()?;
    let needed = radix.iter().fold(1u128, |acc, &r| acc.saturating_mul(r as u128));
    if needed > opts.budget as u128 {
        return Err(SearchError::BudgetExceeded {
            needed,
            budget: opts.budget,
        });
    }
    let mut stats = SearchStats::default();
    let mut best: Option<Monomial> = None;
    let mut exps = vec![0u32; n];
    loop {
        stats.examined += 1;
        let f = Monomial::from_exponents(exps.clone());
        let better = best.as_ref().is_none_or(|b| f < *b);
        if better && is_witness(ideal, &f)? {
            best = Some(f);
        }
        let mut i = 0;
        loop {
            if i == n {
                return finish_general(ideal, best, stats);
            }
            exps[i] += 1;
            if exps[i] < radix[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

fn finish_general(
    ideal: &MonomialIdeal,
    best: Option<Monomial>,
    stats: SearchStats,
) -> Result<Option<Witness>, SearchError> {
    match best {
        Some(f) => {
            reverify(ideal, &f)?;
            Ok(Some(Witness { monomial: f, stats }))
        }
        None => Ok(None),
    }
}

/// Membership structure of `NI(G)^2` on squarefree monomials.
///
/// `x_U ∈ NI(G)^2` iff two disjoint closed neighborhoods fit inside `U`.
/// For `i ∉ U`, `x_i x_U ∈ NI(G)^2` iff such a disjoint pair fits in
/// `U ∪ {i}`; for `i ∈ U` it holds iff two closed neighborhoods meeting
/// exactly in `{i}` fit inside `U`.
#[derive(Debug, Clone)]
pub struct SquareNbhdOracle {
    n: usize,
    full: u64,
    /// Minimal unions `N[j] ∪ N[k]` over disjoint pairs.
    disjoint: Vec<u64>,
    /// `meeting[i]`: minimal unions over pairs with `N[j] ∩ N[k] = {i + 1}`.
    meeting: Vec<Vec<u64>>,
    /// `disjoint_through[i]`: the entries of `disjoint` that contain `i + 1`.
    disjoint_through: Vec<Vec<u64>>,
}

fn antichain(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    let mut out: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !out.iter().any(|&t| t & !s == 0) {
            out.push(s);
        }
    }
    out
}

impl SquareNbhdOracle {
    pub fn new(g: &Graph) -> Result<Self, SearchError> {
        let n = g.n();
        if n == 0 {
            return Err(SearchError::EmptyGraph);
        }
        if n > MAX_VERTICES {
            return Err(SearchError::TooLarge {
                n,
                limit: MAX_VERTICES,
            });
        }
        let nb: Vec<u64> = (1..=n).map(|v| g.closed_nbhd(v).bits()).collect();
        let mut disjoint = Vec::new();
        let mut meeting = vec![Vec::new(); n];
        for j in 0..n {
            for k in j..n {
                let inter = nb[j] & nb[k];
                let union = nb[j] | nb[k];
                if inter == 0 {
                    disjoint.push(union);
                } else if inter.count_ones() == 1 {
                    meeting[inter.trailing_zeros() as usize].push(union);
                }
            }
        }
        let disjoint = antichain(disjoint);
        let meeting = meeting.into_iter().map(antichain).collect();
        let disjoint_through = (0..n)
            .map(|i| disjoint.iter().copied().filter(|d| d >> i & 1 == 1).collect())
            .collect();
        Ok(SquareNbhdOracle {
            n,
            full: VertexSet::full(n).bits(),
            disjoint,
            meeting,
            disjoint_through,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Whether `x_U` is a witness, evaluated directly on the mask.
    pub fn is_witness_mask(&self, u: u64) -> bool {
        if self.disjoint.iter().any(|&d| d & !u == 0) {
            return false;
        }
        (0..self.n).all(|i| {
            if u >> i & 1 == 1 {
                self.meeting[i].iter().any(|&s| s & !u == 0)
            } else {
                let with_i = u | 1 << i;
                self.disjoint_through[i].iter().any(|&d| d & !with_i == 0)
            }
        })
    }

    /// Feasibility of a partial assignment: `inside` is forced into `U`,
    /// `outside` is forced out. Returns false when no completion can be a
    /// witness. Only decided vertices are checked.
    fn feasible(&self, inside: u64, outside: u64) -> bool {
        // any disjoint pair inside U already puts x_U in NI^2
        if self.disjoint.iter().any(|&d| d & !inside == 0) {
            return false;
        }
        let max_u = self.full & !outside;
        let mut m = inside;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            if !self.meeting[i].iter().any(|&s| s & !max_u == 0) {
                return false;
            }
        }
        let mut m = outside;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            let with_i = max_u | 1 << i;
            if !self.disjoint_through[i].iter().any(|&d| d & !with_i == 0) {
                return false;
            }
        }
        true
    }
}

impl SubsetProblem for SquareNbhdOracle {
    fn n(&self) -> usize {
        self.n
    }

    fn feasible(&self, inside: u64, outside: u64) -> bool {
        SquareNbhdOracle::feasible(self, inside, outside)
    }

    fn accept(&self, inside: u64) -> bool {
        self.is_witness_mask(inside)
    }
}

fn run_search(
    oracle: &SquareNbhdOracle,
    opts: &SearchOptions,
    mode: Collect,
) -> Result<(Vec<u64>, SearchStats), SearchError> {
    let cfg = RunConfig {
        budget: opts.budget,
        threads: opts.threads,
        prune: opts.prune,
        mode,
    };
    match subset_search::run(oracle, cfg) {
        RunOutcome::Done { found, stats } => Ok((found, stats)),
        RunOutcome::OverBudget { spent } => Err(SearchError::BudgetExceeded {
            needed: spent.max(opts.budget.saturating_add(1)) as u128,
            budget: opts.budget,
        }),
    }
}

/// Squarefree witness search for `NI(G)^2`. Returns the witness `x_U` with
/// the smallest `|U|`, ties broken lexicographically.
pub fn find_witness_square_nbhd(
    g: &Graph,
    opts: &SearchOptions,
) -> Result<Option<Witness>, SearchError> {
    let oracle = SquareNbhdOracle::new(g)?;
    let (found, stats) = run_search(&oracle, opts, Collect::Best)?;
    let Some(&u) = found.first() else {
        return Ok(None);
    };
    let square = square_of_nbhd_ideal(g)?;
    let f = Monomial::from_set(&VertexSet::from_bits(g.n(), u).expect("mask in range"));
    reverify(&square, &f)?;
    Ok(Some(Witness { monomial: f, stats }))
}

/// Every squarefree witness of `NI(G)^2`, in canonical order.
pub fn all_witnesses_square_nbhd(
    g: &Graph,
    opts: &SearchOptions,
) -> Result<Vec<Witness>, SearchError> {
    if g.n() > opts.exhaustive_limit {
        return Err(SearchError::TooLarge {
            n: g.n(),
            limit: opts.exhaustive_limit,
        });
    }
    let oracle = SquareNbhdOracle::new(g)?;
    let (found, stats) = run_search(&oracle, opts, Collect::All)?;
    if found.is_empty() {
        return Ok(Vec::new());
    }
    let square = square_of_nbhd_ideal(g)?;
    found
        .into_iter()
        .map(|u| {
            let f = Monomial::from_set(&VertexSet::from_bits(g.n(), u).expect("mask in range"));
            reverify(&square, &f)?;
            Ok(Witness { monomial: f, stats })
        })
        .collect()
}

fn square_of_nbhd_ideal(g: &Graph) -> Result<MonomialIdeal, SearchError> {
    Ok(closed_neighborhood_ideal(g).power(2, IdealBudget::default())?)
}
