//! Combinatorial decision procedures.
//!
//! For `diam(G) <= 2` the answer is vertex diameter-2-criticality. For
//! `diam(G) >= 3` it is the existence of a set `C` that covers the
//! hypergraph `H` of "far" neighborhood unions, has a private edge at every
//! vertex, and leaves every other vertex `j` with two neighbors whose closed
//! neighborhoods avoid `C` and meet only in `j`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::{self, SearchError, SearchOptions, Witness};
use crate::families::{circulant, cycle};
use crate::graph::{Distance, Graph, GraphError};
use crate::monomial::{closed_neighborhood_ideal, IdealBudget, IdealError, Monomial};
use crate::subset_search::{self, Collect, RunConfig, RunOutcome, SearchStats, SubsetProblem};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriteriaError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("requires diameter at least 3, graph has diameter {0}")]
    DiameterTooSmall(Distance),
    #[error("brute force and criteria disagree on {graph}: brute {brute:?}, criteria {criteria:?}")]
    MethodDisagreement {
        graph: String,
        brute: Verdict,
        criteria: Verdict,
    },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("{0}")]
    Family(String),
}

/// Hypergraph on `[n]` with one edge `N[i] ∪ N[j]` per pair at distance >= 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    pub n: usize,
    /// Distinct edges in canonical order.
    pub edges: Vec<VertexSet>,
}

pub fn build_hypergraph(g: &Graph) -> Result<Hypergraph, CriteriaError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected.into());
    }
    let n = g.n();
    let all = g.vertices();
    let mut edges = Vec::new();
    for i in 1..=n {
        let dist = g.distances_within(i, all);
        for j in i + 1..=n {
            if dist[j - 1] >= 3 {
                edges.push(g.closed_nbhd(i).union(&g.closed_nbhd(j)));
            }
        }
    }
    edges.sort_by(|a, b| a.canonical_cmp(b));
    edges.dedup();
    Ok(Hypergraph { n, edges })
}

/// The pairs `(j1, j2)`, `j1 < j2`, of neighbors of `j` whose closed
/// neighborhoods meet exactly in `{j}`.
pub fn private_pairs(g: &Graph, j: usize) -> Vec<(usize, usize)> {
    let nbrs = g.neighbors(j).to_vec();
    let only_j = VertexSet::singleton(g.n(), j);
    let mut out = Vec::new();
    for (a, &j1) in nbrs.iter().enumerate() {
        for &j2 in &nbrs[a + 1..] {
            let meet = g.closed_nbhd(j1).intersection(&g.closed_nbhd(j2)) == only_j;
            debug_assert_eq!(meet, pair_condition_by_distance(g, j, j1, j2));
            if meet {
                out.push((j1, j2));
            }
        }
    }
    out
}

/// `dist_G(j1, j2) = 2` and `dist_{G - j}(j1, j2) >= 3`.
pub fn pair_condition_by_distance(g: &Graph, j: usize, j1: usize, j2: usize) -> bool {
    let mut without = g.vertices();
    without.remove(j);
    g.distance_within(j1, j2, g.vertices()) == 2 && g.distance_within(j1, j2, without) >= 3
}

/// Outcome of evaluating the three certificate conditions for one `C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    /// An edge of `H` missed by `C`, if any.
    pub uncovered_edge: Option<VertexSet>,
    /// Members of `C` with no edge meeting `C` only in themselves.
    pub without_private_edge: Vec<usize>,
    /// Vertices outside `C` with no valid neighbor pair.
    pub without_pair: Vec<usize>,
}

impl ConditionReport {
    pub fn covers(&self) -> bool {
        self.uncovered_edge.is_none()
    }

    pub fn private_edges(&self) -> bool {
        self.without_private_edge.is_empty()
    }

    pub fn pairs(&self) -> bool {
        self.without_pair.is_empty()
    }

    pub fn holds(&self) -> bool {
        self.covers() && self.private_edges() && self.pairs()
    }
}

pub fn check_conditions(
    g: &Graph,
    h: &Hypergraph,
    c: &VertexSet,
) -> Result<ConditionReport, CriteriaError> {
    let diam = g.diameter();
    if diam < 3 {
        return Err(CriteriaError::DiameterTooSmall(diam));
    }
    let uncovered_edge = h.edges.iter().find(|e| e.is_disjoint(c)).copied();
    let without_private_edge = c
        .iter()
        .filter(|&i| {
            let only_i = VertexSet::singleton(g.n(), i);
            !h.edges.iter().any(|e| e.intersection(c) == only_i)
        })
        .collect();
    let rest = c.complement();
    let without_pair = rest
        .iter()
        .filter(|&j| {
            !private_pairs(g, j).iter().any(|&(a, b)| {
                g.closed_nbhd(a).is_subset(&rest) && g.closed_nbhd(b).is_subset(&rest)
            })
        })
        .collect();
    Ok(ConditionReport {
        uncovered_edge,
        without_private_edge,
        without_pair,
    })
}

/// A set `C` with evidence for each of the three conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub cover: VertexSet,
    /// For each `i ∈ C`, an edge `e` of `H` with `e ∩ C = {i}`.
    pub private_edges: Vec<(usize, VertexSet)>,
    /// For each `j ∉ C`, neighbors `(j1, j2)` with `N[j1] ∩ N[j2] = {j}` and
    /// both closed neighborhoods disjoint from `C`.
    pub pairs: Vec<(usize, usize, usize)>,
    pub stats: SearchStats,
}

impl Certificate {
    /// Assembles the evidence for a `C` already known to satisfy the conditions.
    fn from_cover(g: &Graph, h: &Hypergraph, c: VertexSet, stats: SearchStats) -> Option<Self> {
        let n = g.n();
        let mut private_edges = Vec::new();
        for i in &c {
            let only_i = VertexSet::singleton(n, i);
            let e = h.edges.iter().find(|e| e.intersection(&c) == only_i)?;
            private_edges.push((i, *e));
        }
        let rest = c.complement();
        let mut pairs = Vec::new();
        for j in &rest {
            let &(a, b) = private_pairs(g, j).iter().find(|&&(a, b)| {
                g.closed_nbhd(a).is_subset(&rest) && g.closed_nbhd(b).is_subset(&rest)
            })?;
            pairs.push((j, a, b));
        }
        Some(Certificate {
            cover: c,
            private_edges,
            pairs,
            stats,
        })
    }

    /// Re-checks every condition from the stored evidence alone, using
    /// distances for the pair condition.
    pub fn verify(&self, g: &Graph, h: &Hypergraph) -> bool {
        let n = g.n();
        let c = self.cover;
        let covers = h.edges.iter().all(|e| !e.is_disjoint(&c));
        let private_ok = c.len() == self.private_edges.len()
            && self.private_edges.iter().all(|(i, e)| {
                c.contains(*i)
                    && h.edges.contains(e)
                    && e.intersection(&c) == VertexSet::singleton(n, *i)
            });
        let rest = c.complement();
        let pairs_ok = rest.len() == self.pairs.len()
            && self.pairs.iter().all(|&(j, a, b)| {
                rest.contains(j)
                    && g.has_edge(j, a)
                    && g.has_edge(j, b)
                    && g.closed_nbhd(a).is_subset(&rest)
                    && g.closed_nbhd(b).is_subset(&rest)
                    && pair_condition_by_distance(g, j, a, b)
            });
        covers && private_ok && pairs_ok
    }

    /// `x_{V \ C}`, the witness monomial this certificate yields.
    pub fn witness_monomial(&self) -> Monomial {
        Monomial::from_set(&self.cover.complement())
    }
}

/// Subset search over candidate covers `C`.
struct CoverProblem {
    n: usize,
    full: u64,
    edges: Vec<u64>,
    /// `pair_unions[j]`: minimal `N[j1] ∪ N[j2]` over the private pairs of `j + 1`.
    pair_unions: Vec<Vec<u64>>,
}

impl CoverProblem {
    fn new(g: &Graph, h: &Hypergraph) -> Self {
        let n = g.n();
        let pair_unions = (1..=n)
            .map(|j| {
                let mut us: Vec<u64> = private_pairs(g, j)
                    .into_iter()
                    .map(|(a, b)| g.closed_nbhd(a).union(&g.closed_nbhd(b)).bits())
                    .collect();
                us.sort_unstable();
                us.dedup();
                us
            })
            .collect();
        CoverProblem {
            n,
            full: g.vertices().bits(),
            edges: h.edges.iter().map(|e| e.bits()).collect(),
            pair_unions,
        }
    }
}

impl SubsetProblem for CoverProblem {
    fn n(&self) -> usize {
        self.n
    }

    fn feasible(&self, inside: u64, outside: u64) -> bool {
        // an edge already entirely outside C can never be covered
        if self.edges.iter().any(|&e| e & !outside == 0) {
            return false;
        }
        let mut m = inside;
        while m != 0 {
            let i = m & m.wrapping_neg();
            m &= m - 1;
            if !self.edges.iter().any(|&e| e & inside == i) {
                return false;
            }
        }
        let mut m = outside;
        while m != 0 {
            let j = m.trailing_zeros() as usize;
            m &= m - 1;
            if !self.pair_unions[j].iter().any(|&u| u & inside == 0) {
                return false;
            }
        }
        true
    }

    fn accept(&self, c: u64) -> bool {
        let covers = self.edges.iter().all(|&e| e & c != 0);
        let private = {
            let mut m = c;
            let mut ok = true;
            while m != 0 && ok {
                let i = m & m.wrapping_neg();
                m &= m - 1;
                ok = self.edges.iter().any(|&e| e & c == i);
            }
            ok
        };
        let pairs = {
            let mut m = self.full & !c;
            let mut ok = true;
            while m != 0 && ok {
                let j = m.trailing_zeros() as usize;
                m &= m - 1;
                ok = self.pair_unions[j].iter().any(|&u| u & c == 0);
            }
            ok
        };
        covers && private && pairs
    }
}

/// Smallest `C` (by size, then lexicographically) satisfying all three
/// conditions, or `None`. `Err(Search(BudgetExceeded))` means undecided.
pub fn find_certificate(
    g: &Graph,
    opts: &SearchOptions,
) -> Result<Option<Certificate>, CriteriaError> {
    let diam = g.diameter();
    if diam.is_infinite() {
        return Err(GraphError::Disconnected.into());
    }
    if diam < 3 {
        return Err(CriteriaError::DiameterTooSmall(diam));
    }
    let h = build_hypergraph(g)?;
    let problem = CoverProblem::new(g, &h);
    let cfg = RunConfig {
        budget: opts.budget,
        threads: opts.threads,
        prune: opts.prune,
        mode: Collect::Best,
    };
    let (found, stats) = match subset_search::run(&problem, cfg) {
        RunOutcome::Done { found, stats } => (found, stats),
        RunOutcome::OverBudget { spent } => {
            return Err(SearchError::BudgetExceeded {
                needed: spent.max(opts.budget.saturating_add(1)) as u128,
                budget: opts.budget,
            }
            .into())
        }
    };
    let Some(&mask) = found.first() else {
        return Ok(None);
    };
    let c = VertexSet::from_bits(g.n(), mask).expect("mask in range");
    if !check_conditions(g, &h, &c)?.holds() {
        return Err(CriteriaError::Inconsistent(format!(
            "search accepted {c} but the conditions fail"
        )));
    }
    let cert = Certificate::from_cover(g, &h, c, stats)
        .ok_or_else(|| CriteriaError::Inconsistent(format!("no evidence for {c}")))?;
    if !cert.verify(g, &h) {
        return Err(CriteriaError::Inconsistent(format!(
            "evidence for {c} does not verify"
        )));
    }
    Ok(Some(cert))
}

/// `W = { i ∈ U : N[i] ⊆ U }`.
pub fn w_set(g: &Graph, u: &VertexSet) -> VertexSet {
    let mut w = VertexSet::empty(g.n());
    for i in u {
        if g.closed_nbhd(i).is_subset(u) {
            w.insert(i);
        }
    }
    w
}

/// Necessary structure of a witness support `U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub w: VertexSet,
    pub w_nonempty: bool,
    pub w_pairwise_close: bool,
    pub w_has_cycle: bool,
}

impl StructureReport {
    pub fn all_pass(&self) -> bool {
        self.w_nonempty && self.w_pairwise_close && self.w_has_cycle
    }
}

pub fn verify_witness_structure(g: &Graph, u: &VertexSet) -> StructureReport {
    let w = w_set(g, u);
    let all = g.vertices();
    let w_pairwise_close = w.iter().all(|i| {
        let dist = g.distances_within(i, all);
        w.iter().all(|j| dist[j - 1] <= 2)
    });
    let w_has_cycle = match g.induced_subgraph(w) {
        Ok(sub) => sub.graph.contains_cycle(),
        Err(_) => false,
    };
    StructureReport {
        w,
        w_nonempty: !w.is_empty(),
        w_pairwise_close,
        w_has_cycle,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Yes,
    No,
    Indeterminate,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "YES",
            Verdict::No => "NO",
            Verdict::Indeterminate => "INDETERMINATE",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Obstruction {
    Disconnected,
    NotCritical,
    DiamGt6,
    NoCertificate,
    /// Brute-force search exhausted without a witness.
    NoWitness,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Criteria,
    Both,
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "brute" => Ok(Method::Brute),
            "criteria" => Ok(Method::Criteria),
            "both" => Ok(Method::Both),
            _ => Err(format!("unknown method {s:?} (brute|criteria|both)")),
        }
    }
}

/// For each vertex `x`, two vertices far apart in `G - x`.
pub type CriticalityEvidence = Vec<(usize, usize, usize)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub verdict: Verdict,
    pub method: Method,
    pub obstruction: Option<Obstruction>,
    pub diameter: Distance,
    pub witness: Option<Witness>,
    pub certificate: Option<Certificate>,
    pub criticality: Option<CriticalityEvidence>,
    /// Set for edgeless graphs (including the single vertex), where the
    /// diameter criteria do not apply and the answer comes from direct
    /// computation.
    pub degenerate: bool,
    /// Isolated vertices set aside before deciding the rest of the graph.
    pub isolated: Vec<usize>,
    /// Why the answer is indeterminate, when it is.
    pub note: Option<String>,
}

impl Decision {
    fn new(method: Method, diameter: Distance, verdict: Verdict) -> Self {
        Decision {
            verdict,
            method,
            obstruction: None,
            diameter,
            witness: None,
            certificate: None,
            criticality: None,
            degenerate: false,
            isolated: Vec::new(),
            note: None,
        }
    }

    fn no(method: Method, diameter: Distance, why: Obstruction) -> Self {
        Decision {
            obstruction: Some(why),
            ..Self::new(method, diameter, Verdict::No)
        }
    }

    fn indeterminate(method: Method, diameter: Distance, note: String) -> Self {
        Decision {
            note: Some(note),
            ..Self::new(method, diameter, Verdict::Indeterminate)
        }
    }
}

/// Combinatorial route.
fn decide_criteria(g: &Graph, opts: &SearchOptions) -> Result<Decision, CriteriaError> {
    let n = g.n();
    let diam = g.diameter();
    let m = Method::Criteria;
    if n == 0 {
        return Err(SearchError::EmptyGraph.into());
    }
    if g.edge_count() == 0 {
        // NI(G) = m, and m^2 : x1 = m
        let square = closed_neighborhood_ideal(g).power(2, IdealBudget::default())?;
        let f = Monomial::var(n, 1);
        if !square.colon(&f)?.is_maximal_ideal() {
            return Err(CriteriaError::Inconsistent("edgeless graph".into()));
        }
        return Ok(Decision {
            witness: Some(Witness {
                monomial: f,
                stats: SearchStats::default(),
            }),
            degenerate: true,
            isolated: if n > 1 { (1..=n).collect() } else { Vec::new() },
            ..Decision::new(m, diam, Verdict::Yes)
        });
    }
    let isolated: Vec<usize> = (1..=n).filter(|&v| g.degree(v) == 0).collect();
    if !isolated.is_empty() {
        return decide_without_isolated(g, isolated, opts);
    }
    if diam.is_infinite() {
        return Ok(Decision::no(m, diam, Obstruction::Disconnected));
    }
    if diam <= 2 {
        if !g.is_vertex_diameter_critical(2)? {
            return Ok(Decision::no(m, diam, Obstruction::NotCritical));
        }
        let evidence: CriticalityEvidence = (1..=n)
            .map(|x| {
                let (u, v) = g.far_pair_without(x, 2).expect("critical graph");
                (x, u, v)
            })
            .collect();
        return Ok(Decision {
            witness: Some(Witness {
                monomial: Monomial::from_set(&g.vertices()),
                stats: SearchStats::default(),
            }),
            criticality: Some(evidence),
            ..Decision::new(m, diam, Verdict::Yes)
        });
    }
    if diam > 6 {
        return Ok(Decision::no(m, diam, Obstruction::DiamGt6));
    }
    match find_certificate(g, opts) {
        Ok(Some(cert)) => Ok(Decision {
            witness: Some(Witness {
                monomial: cert.witness_monomial(),
                stats: SearchStats::default(),
            }),
            certificate: Some(cert),
            ..Decision::new(m, diam, Verdict::Yes)
        }),
        Ok(None) => Ok(Decision::no(m, diam, Obstruction::NoCertificate)),
        Err(CriteriaError::Search(e @ SearchError::BudgetExceeded { .. })) => {
            Ok(Decision::indeterminate(m, diam, e.to_string()))
        }
        Err(e) => Err(e),
    }
}

/// An isolated vertex `v` contributes the variable `x_v` to `NI(G)`, and
/// then `x_U` is a witness for `G` exactly when it is one for `G` minus its
/// isolated vertices. The rest of the graph is decided and relabelled.
fn decide_without_isolated(
    g: &Graph,
    isolated: Vec<usize>,
    opts: &SearchOptions,
) -> Result<Decision, CriteriaError> {
    let n = g.n();
    let mut keep = g.vertices();
    for &v in &isolated {
        keep.remove(v);
    }
    let sub = g.induced_subgraph(keep)?;
    let inner = decide_criteria(&sub.graph, opts)?;
    let lift = |v: usize| sub.original[v - 1];
    let lift_set = |s: &VertexSet| VertexSet::from_labels(n, s.iter().map(lift)).expect("in range");
    let witness = inner.witness.map(|w| {
        let mut exps = vec![0; n];
        for (i, &e) in w.monomial.exponents().iter().enumerate() {
            exps[lift(i + 1) - 1] = e;
        }
        Witness {
            monomial: Monomial::from_exponents(exps),
            stats: w.stats,
        }
    });
    let certificate = inner.certificate.map(|c| Certificate {
        cover: lift_set(&c.cover),
        private_edges: c.private_edges.iter().map(|(i, e)| (lift(*i), lift_set(e))).collect(),
        pairs: c.pairs.iter().map(|&(j, a, b)| (lift(j), lift(a), lift(b))).collect(),
        stats: c.stats,
    });
    let criticality = inner
        .criticality
        .map(|ev| ev.iter().map(|&(x, u, v)| (lift(x), lift(u), lift(v))).collect());
    Ok(Decision {
        witness,
        certificate,
        criticality,
        isolated,
        diameter: g.diameter(),
        ..inner
    })
}

fn decide_brute(g: &Graph, opts: &SearchOptions) -> Result<Decision, CriteriaError> {
    let diam = g.diameter();
    let m = Method::Brute;
    match engine::find_witness_square_nbhd(g, opts) {
        Ok(Some(w)) => Ok(Decision {
            witness: Some(w),
            ..Decision::new(m, diam, Verdict::Yes)
        }),
        Ok(None) => Ok(Decision::no(m, diam, Obstruction::NoWitness)),
        Err(e @ (SearchError::BudgetExceeded { .. } | SearchError::TooLarge { .. })) => {
            Ok(Decision::indeterminate(m, diam, e.to_string()))
        }
        Err(e) => Err(e.into()),
    }
}

/// Checks that any criteria-derived witness really has colon `m`.
fn check_witness_colon(g: &Graph, d: &Decision) -> Result<(), CriteriaError> {
    if let Some(w) = &d.witness {
        let square = closed_neighborhood_ideal(g).power(2, IdealBudget::default())?;
        if !square.colon(&w.monomial)?.is_maximal_ideal() {
            return Err(CriteriaError::Inconsistent(format!(
                "NI(G)^2 : {} is not the maximal ideal",
                w.monomial
            )));
        }
    }
    Ok(())
}

/// Decides whether `m` is associated to `S / NI(G)^2`.
pub fn decide(g: &Graph, method: Method, opts: &SearchOptions) -> Result<Decision, CriteriaError> {
    let decision = match method {
        Method::Criteria => decide_criteria(g, opts)?,
        Method::Brute => decide_brute(g, opts)?,
        Method::Both => {
            let crit = decide_criteria(g, opts)?;
            let brute = decide_brute(g, opts)?;
            let decisive = |v: Verdict| v != Verdict::Indeterminate;
            if decisive(crit.verdict) && decisive(brute.verdict) && crit.verdict != brute.verdict {
                return Err(CriteriaError::MethodDisagreement {
                    graph: format!("{g:?}"),
                    brute: brute.verdict,
                    criteria: crit.verdict,
                });
            }
            if crit.verdict == Verdict::Yes && g.n() <= 64 {
                check_witness_colon(g, &crit)?;
            }
            // the brute witness complement must satisfy the certificate
            // conditions whenever they apply
            if let (Some(w), true) = (&brute.witness, brute.diameter >= 3 && !brute.diameter.is_infinite()) {
                let h = build_hypergraph(g)?;
                let c = w.support().expect("squarefree witness").complement();
                if !check_conditions(g, &h, &c)?.holds() {
                    return Err(CriteriaError::Inconsistent(format!(
                        "witness {} does not yield a certificate",
                        w.monomial
                    )));
                }
            }
            let verdict = if decisive(crit.verdict) && decisive(brute.verdict) {
                crit.verdict
            } else {
                Verdict::Indeterminate
            };
            Decision {
                verdict,
                method: Method::Both,
                obstruction: crit.obstruction,
                diameter: crit.diameter,
                witness: brute.witness.or(crit.witness),
                certificate: crit.certificate,
                criticality: crit.criticality,
                degenerate: crit.degenerate,
                isolated: crit.isolated,
                note: brute.note.or(crit.note),
            }
        }
    };
    if decision.verdict == Verdict::Yes && decision.diameter > 6 && g.is_connected() {
        return Err(CriteriaError::Inconsistent(format!(
            "YES with diameter {}",
            decision.diameter
        )));
    }
    Ok(decision)
}

/// Closed-form answer for a graph family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub verdict: Verdict,
    /// False when the answer rests on the open Kneser conjecture.
    pub proven: bool,
    pub obstruction: Option<Obstruction>,
}

impl Prediction {
    fn yes() -> Self {
        Prediction {
            verdict: Verdict::Yes,
            proven: true,
            obstruction: None,
        }
    }

    fn no(why: Option<Obstruction>) -> Self {
        Prediction {
            verdict: Verdict::No,
            proven: true,
            obstruction: why,
        }
    }
}

/// `C_n`: yes exactly for the pentagon.
pub fn predict_cycle(n: usize) -> Result<Prediction, CriteriaError> {
    cycle(n)?;
    Ok(if n == 5 {
        Prediction::yes()
    } else {
        Prediction::no(None)
    })
}

/// Connected cubic circulants are `C_2m(1, m)` (`m >= 2`) or `C_2m(2, m)`
/// (`m >= 3` odd); only `C_8(1, 4)` is a yes.
pub fn predict_cubic_circulant(n: usize, strides: &[usize]) -> Result<Prediction, CriteriaError> {
    let mut s = strides.to_vec();
    s.sort_unstable();
    s.dedup();
    let valid = n >= 4
        && n.is_multiple_of(2)
        && s.len() == 2
        && s[1] == n / 2
        && (s[0] == 1 || (s[0] == 2 && (n / 2) % 2 == 1 && n / 2 >= 3));
    if !valid {
        return Err(CriteriaError::Family(format!(
            "C_{n}({strides:?}) is not of the form C_2m(1,m) or C_2m(2,m) with m odd"
        )));
    }
    circulant(n, &s)?;
    Ok(if n == 8 && s == [1, 4] {
        Prediction::yes()
    } else {
        Prediction::no(None)
    })
}

/// `K(n, k)`: proven for `n >= 3k - 1` and for `n <= 2k`; conjectural (no)
/// for `2k + 1 <= n <= 3k - 2`. Below `2k` the graph has no edges at all,
/// and an edgeless graph is a yes.
pub fn predict_kneser(n: usize, k: usize) -> Result<Prediction, CriteriaError> {
    if k == 0 || k >= n {
        return Err(CriteriaError::Family(format!(
            "kneser needs 1 <= k < n, got n = {n}, k = {k}"
        )));
    }
    if n + 1 >= 3 * k {
        return Ok(if k >= 2 && n + 1 == 3 * k {
            Prediction::yes()
        } else {
            Prediction::no(Some(Obstruction::NotCritical))
        });
    }
    if n < 2 * k {
        return Ok(Prediction::yes());
    }
    if n == 2 * k {
        // a perfect matching
        return Ok(Prediction::no(Some(Obstruction::Disconnected)));
    }
    Ok(Prediction {
        verdict: Verdict::No,
        proven: false,
        obstruction: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, kneser, path};

    fn opts() -> SearchOptions {
        SearchOptions::default()
    }

    #[test]
    fn hypergraph_of_small_graphs() {
        assert!(build_hypergraph(&cycle(5).unwrap()).unwrap().edges.is_empty());
        let h = build_hypergraph(&cycle(6).unwrap()).unwrap();
        assert_eq!(h.edges, vec![VertexSet::full(6)]);
        let kk = Graph::from_edge_list(4, &[(1, 2), (3, 4)]).unwrap();
        assert!(build_hypergraph(&kk).is_err());
    }

    #[test]
    fn conditions_on_c6() {
        let g = cycle(6).unwrap();
        let h = build_hypergraph(&g).unwrap();
        for mask in 0..64u64 {
            let c = VertexSet::from_bits(6, mask).unwrap();
            assert!(!check_conditions(&g, &h, &c).unwrap().holds(), "{c}");
        }
        assert_eq!(find_certificate(&g, &opts()).unwrap(), None);
        let c5 = cycle(5).unwrap();
        let h5 = build_hypergraph(&c5).unwrap();
        assert!(matches!(
            check_conditions(&c5, &h5, &VertexSet::empty(5)),
            Err(CriteriaError::DiameterTooSmall(_))
        ));
    }

    #[test]
    fn private_pairs_match_distance_form() {
        for g in [cycle(7).unwrap(), path(5).unwrap(), circulant(8, &[1, 4]).unwrap()] {
            for j in 1..=g.n() {
                let nbrs = g.neighbors(j).to_vec();
                for &a in &nbrs {
                    for &b in nbrs.iter().filter(|&&b| b > a) {
                        let by_nbhd = private_pairs(&g, j).contains(&(a, b));
                        assert_eq!(by_nbhd, pair_condition_by_distance(&g, j, a, b));
                    }
                }
            }
        }
    }

    #[test]
    fn w_sets() {
        let c5 = cycle(5).unwrap();
        assert_eq!(w_set(&c5, &VertexSet::full(5)), VertexSet::full(5));
        let u = VertexSet::from_labels(5, [1, 2, 3]).unwrap();
        assert_eq!(w_set(&c5, &u).to_vec(), vec![2]);
        let r = verify_witness_structure(&c5, &VertexSet::full(5));
        assert!(r.all_pass());
        let r = verify_witness_structure(&c5, &u);
        assert!(r.w_nonempty && r.w_pairwise_close && !r.w_has_cycle);
    }

    #[test]
    fn decisions_on_small_families() {
        let d = decide(&cycle(5).unwrap(), Method::Both, &opts()).unwrap();
        assert_eq!(d.verdict, Verdict::Yes);
        assert_eq!(d.witness.unwrap().monomial.to_string(), "x1*x2*x3*x4*x5");
        assert_eq!(d.criticality.unwrap().len(), 5);

        let d = decide(&cycle(6).unwrap(), Method::Criteria, &opts()).unwrap();
        assert_eq!((d.verdict, d.obstruction), (Verdict::No, Some(Obstruction::NoCertificate)));

        let d = decide(&complete(4).unwrap(), Method::Criteria, &opts()).unwrap();
        assert_eq!(d.obstruction, Some(Obstruction::NotCritical));

        let kk = Graph::from_edge_list(4, &[(1, 2), (3, 4)]).unwrap();
        let d = decide(&kk, Method::Both, &opts()).unwrap();
        assert_eq!((d.verdict, d.obstruction), (Verdict::No, Some(Obstruction::Disconnected)));

        let d = decide(&path(9).unwrap(), Method::Criteria, &opts()).unwrap();
        assert_eq!(d.obstruction, Some(Obstruction::DiamGt6));

        let d = decide(&Graph::empty(1).unwrap(), Method::Both, &opts()).unwrap();
        assert_eq!(d.verdict, Verdict::Yes);
        assert!(d.degenerate);

        let d = decide(&cycle(6).unwrap(), Method::Brute, &opts()).unwrap();
        assert_eq!(d.obstruction, Some(Obstruction::NoWitness));

        assert!(decide(&Graph::empty(0).unwrap(), Method::Criteria, &opts()).is_err());
    }

    #[test]
    fn isolated_vertices_are_set_aside() {
        let d = decide(&Graph::empty(3).unwrap(), Method::Both, &opts()).unwrap();
        assert_eq!((d.verdict, d.isolated.clone()), (Verdict::Yes, vec![1, 2, 3]));
        assert_eq!(d.witness.unwrap().monomial.to_string(), "x1");

        // a pentagon on 2..6 with vertex 1 isolated
        let edges = [(2, 3), (3, 4), (4, 5), (5, 6), (6, 2)];
        let g = Graph::from_edge_list(6, &edges).unwrap();
        let d = decide(&g, Method::Both, &opts()).unwrap();
        assert_eq!((d.verdict, d.isolated.clone()), (Verdict::Yes, vec![1]));
        assert_eq!(d.witness.unwrap().monomial.to_string(), "x2*x3*x4*x5*x6");
        assert_eq!(d.criticality.unwrap()[0].0, 2);

        // C_6 plus an isolated vertex: the certificate lives on C_6
        let mut e6: Vec<_> = (1..=6).map(|i| (i, i % 6 + 1)).collect();
        e6.push((1, 2));
        e6.dedup();
        let g = Graph::from_edge_list(7, &e6).unwrap();
        let d = decide(&g, Method::Both, &opts()).unwrap();
        assert_eq!(d.obstruction, Some(Obstruction::NoCertificate));

        // isolated vertex next to the two-edge matching is still disconnected
        let g = Graph::from_edge_list(5, &[(1, 2), (3, 4)]).unwrap();
        let d = decide(&g, Method::Both, &opts()).unwrap();
        assert_eq!(d.obstruction, Some(Obstruction::Disconnected));
        assert_eq!(d.isolated, vec![5]);
    }

    #[test]
    fn indeterminate_on_tiny_budget() {
        let tight = SearchOptions { budget: 5, ..opts() };
        let d = decide(&cycle(12).unwrap(), Method::Brute, &tight).unwrap();
        assert_eq!(d.verdict, Verdict::Indeterminate);
        assert!(d.note.is_some());
        let d = decide(&cycle(12).unwrap(), Method::Criteria, &tight).unwrap();
        assert_eq!(d.verdict, Verdict::Indeterminate);
    }

    #[test]
    fn predictors() {
        assert_eq!(predict_cycle(5).unwrap().verdict, Verdict::Yes);
        assert_eq!(predict_cycle(7).unwrap().verdict, Verdict::No);
        assert!(predict_cycle(2).is_err());
        assert_eq!(predict_cubic_circulant(8, &[1, 4]).unwrap().verdict, Verdict::Yes);
        assert_eq!(predict_cubic_circulant(10, &[1, 5]).unwrap().verdict, Verdict::No);
        assert_eq!(predict_cubic_circulant(6, &[3, 2]).unwrap().verdict, Verdict::No);
        assert!(predict_cubic_circulant(8, &[2, 4]).is_err());
        assert!(predict_cubic_circulant(8, &[1, 3]).is_err());
        assert_eq!(predict_kneser(8, 3).unwrap(), Prediction::yes());
        let p = predict_kneser(7, 3).unwrap();
        assert_eq!((p.verdict, p.proven), (Verdict::No, false));
        assert_eq!(
            predict_kneser(6, 3).unwrap().obstruction,
            Some(Obstruction::Disconnected)
        );
        assert_eq!(
            predict_kneser(6, 2).unwrap().obstruction,
            Some(Obstruction::NotCritical)
        );
        assert_eq!(predict_kneser(2, 1).unwrap().verdict, Verdict::No);
        // no two 3-subsets of [5] are disjoint
        assert_eq!(predict_kneser(5, 3).unwrap(), Prediction::yes());
        assert!(predict_kneser(3, 3).is_err());
    }

    #[test]
    fn kneser_criteria() {
        let p = kneser(5, 2).unwrap().graph;
        assert!(p.is_vertex_diameter_critical(2).unwrap());
        let d = decide(&kneser(6, 2).unwrap().graph, Method::Criteria, &opts()).unwrap();
        assert_eq!(d.obstruction, Some(Obstruction::NotCritical));
    }
}
