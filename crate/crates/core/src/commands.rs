//! The operations behind the `nimax` binary, usable directly from code.

use std::fmt;
use std::path::Path;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::criteria::{
    self, build_hypergraph, check_conditions, decide, predict_cubic_circulant, predict_cycle,
    predict_kneser, CriteriaError, Method, Prediction, Verdict,
};
use crate::engine::SearchOptions;
use crate::families::{circulant, cycle, kneser};
use crate::graph::{Distance, Graph, GraphError};
use crate::graph_spec::{GraphSpec, SpecError};
use crate::monomial::{
    closed_neighborhood_ideal, graph_from_edge_ideal, IdealBudget, IdealError, Monomial,
    MonomialIdeal,
};
use crate::report::{Report, Timing};
use crate::vertex_set::VertexSet;

#[derive(Debug, Error)]
pub enum CommandError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Criteria(#[from] CriteriaError),
    #[error("fixture {name}: {msg}")]
    Fixture { name: String, msg: String },
    #[error("{0}")]
    Usage(String),
}

/// `NI(G)^t` in the one-monomial-per-line format.
pub fn cmd_ideal(spec: &GraphSpec, power: u32, budget: IdealBudget) -> Result<String, CommandError> {
    let g = spec.build()?.graph;
    let ideal = closed_neighborhood_ideal(&g).power(power, budget)?;
    Ok(ideal.to_text())
}

pub fn cmd_decide(
    spec: &GraphSpec,
    method: Method,
    opts: &SearchOptions,
    with_timing: bool,
) -> Result<Report, CommandError> {
    let built = spec.build()?;
    let start = Instant::now();
    let d = decide(&built.graph, method, opts)?;
    let mut report = Report::new(Some(spec.to_string()), &built.graph, built.vertex_names, &d);
    if with_timing {
        report.timing = Some(Timing {
            elapsed_us: start.elapsed().as_micros() as u64,
        });
    }
    Ok(report)
}

/// Process exit code for a decision report: 0 for YES/NO, 2 when undecided.
pub fn exit_code(report: &Report) -> i32 {
    match report.decision.verdict {
        Verdict::Yes | Verdict::No => 0,
        Verdict::Indeterminate => 2,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Cycles,
    CubicCirculants,
    Kneser,
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "cycles" => Ok(Family::Cycles),
            "cubic-circulants" => Ok(Family::CubicCirculants),
            "kneser" => Ok(Family::Kneser),
            _ => Err(format!("unknown family {s:?} (cycles|cubic-circulants|kneser)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurveyOptions {
    pub search: SearchOptions,
    /// Members with more vertices skip the brute-force route.
    pub brute_max_n: usize,
}

impl Default for SurveyOptions {
    fn default() -> Self {
        SurveyOptions {
            search: SearchOptions::default(),
            brute_max_n: 24,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurveyRow {
    pub member: String,
    pub n: usize,
    pub diameter: Distance,
    pub brute: Verdict,
    pub criteria: Verdict,
    pub predicted: Verdict,
    pub proven: bool,
    /// Every decisive verdict in the row agrees.
    pub agree: bool,
}

fn survey_member(
    member: String,
    g: &Graph,
    prediction: Prediction,
    opts: &SurveyOptions,
) -> Result<SurveyRow, CommandError> {
    let crit = decide(g, Method::Criteria, &opts.search)?;
    let brute = if g.n() <= opts.brute_max_n {
        decide(g, Method::Brute, &opts.search)?.verdict
    } else {
        Verdict::Indeterminate
    };
    let decisive: Vec<Verdict> = [brute, crit.verdict, prediction.verdict]
        .into_iter()
        .filter(|&v| v != Verdict::Indeterminate)
        .collect();
    Ok(SurveyRow {
        member,
        n: g.n(),
        diameter: crit.diameter,
        brute,
        criteria: crit.verdict,
        predicted: prediction.verdict,
        proven: prediction.proven,
        agree: decisive.windows(2).all(|w| w[0] == w[1]),
    })
}

/// One row per family member with parameter in `lo..=hi`. For Kneser graphs
/// the parameter is `n` and `k` is fixed by `kneser_k`.
pub fn cmd_survey(
    family: Family,
    lo: usize,
    hi: usize,
    kneser_k: Option<usize>,
    opts: &SurveyOptions,
) -> Result<Vec<SurveyRow>, CommandError> {
    let mut rows = Vec::new();
    match family {
        Family::Cycles => {
            for n in lo.max(3)..=hi {
                rows.push(survey_member(format!("C_{n}"), &cycle(n)?, predict_cycle(n)?, opts)?);
            }
        }
        Family::CubicCirculants => {
            for n in (lo.max(4)..=hi).filter(|n| n % 2 == 0) {
                let m = n / 2;
                let mut forms = vec![vec![1, m]];
                if m >= 3 && m % 2 == 1 {
                    forms.push(vec![2, m]);
                }
                for s in forms {
                    let g = circulant(n, &s)?;
                    let p = predict_cubic_circulant(n, &s)?;
                    rows.push(survey_member(format!("C_{n}({},{})", s[0], s[1]), &g, p, opts)?);
                }
            }
        }
        Family::Kneser => {
            let k = kneser_k.ok_or_else(|| CommandError::Usage("kneser survey needs --k".into()))?;
            for n in lo.max(k + 1)..=hi {
                let g = kneser(n, k)?.graph;
                rows.push(survey_member(format!("K({n},{k})"), &g, predict_kneser(n, k)?, opts)?);
            }
        }
    }
    Ok(rows)
}

pub fn survey_table(rows: &[SurveyRow]) -> String {
    let mut s = format!(
        "{:<12} {:>4} {:>5} {:>13} {:>13} {:>13} {:>6}\n",
        "member", "n", "diam", "brute", "criteria", "predicted", "agree"
    );
    for r in rows {
        let predicted = if r.proven {
            r.predicted.to_string()
        } else {
            format!("{}?", r.predicted)
        };
        s.push_str(&format!(
            "{:<12} {:>4} {:>5} {:>13} {:>13} {:>13} {:>6}\n",
            r.member,
            r.n,
            r.diameter.to_string(),
            r.brute.to_string(),
            r.criteria.to_string(),
            predicted,
            if r.agree { "yes" } else { "NO" }
        ));
    }
    s
}

/// The reference fixtures: both worked examples as graph/ideal text.
#[derive(Debug, Clone)]
pub struct Fixtures {
    pub example1_graph: String,
    pub example1_nbhd: String,
    pub example2_edges: String,
    pub example2_nbhd: String,
}

impl Fixtures {
    pub fn bundled() -> Self {
        Fixtures {
            example1_graph: include_str!("../fixtures/example1.graph").into(),
            example1_nbhd: include_str!("../fixtures/example1_nbhd.ideal").into(),
            example2_edges: include_str!("../fixtures/example2.ideal").into(),
            example2_nbhd: include_str!("../fixtures/example2_nbhd.ideal").into(),
        }
    }

    /// Loads `example1.graph`, `example1_nbhd.ideal`, `example2.ideal` and
    /// `example2_nbhd.ideal` from `dir`.
    pub fn from_dir(dir: &Path) -> Result<Self, CommandError> {
        let load = |name: &str| {
            std::fs::read_to_string(dir.join(name)).map_err(|e| CommandError::Fixture {
                name: name.into(),
                msg: e.to_string(),
            })
        };
        Ok(Fixtures {
            example1_graph: load("example1.graph")?,
            example1_nbhd: load("example1_nbhd.ideal")?,
            example2_edges: load("example2.ideal")?,
            example2_nbhd: load("example2_nbhd.ideal")?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "[{mark}] {}", self.name)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

/// Generators missing from `actual` and generators `actual` has in excess.
pub fn ideal_diff(expected: &MonomialIdeal, actual: &MonomialIdeal) -> (Vec<Monomial>, Vec<Monomial>) {
    let missing = expected
        .generators()
        .iter()
        .filter(|g| !actual.generators().contains(g))
        .cloned()
        .collect();
    let extra = actual
        .generators()
        .iter()
        .filter(|g| !expected.generators().contains(g))
        .cloned()
        .collect();
    (missing, extra)
}

fn ideal_check(name: &str, expected: &MonomialIdeal, actual: &MonomialIdeal) -> Check {
    let (missing, extra) = ideal_diff(expected, actual);
    let join = |v: &[Monomial]| v.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", ");
    let detail = if missing.is_empty() && extra.is_empty() {
        format!("{} generators match", expected.generators().len())
    } else {
        format!("missing [{}], unexpected [{}]", join(&missing), join(&extra))
    };
    Check {
        name: name.into(),
        pass: missing.is_empty() && extra.is_empty(),
        detail,
    }
}

fn check(name: &str, pass: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        pass,
        detail: detail.into(),
    }
}

fn colon_check(name: &str, g: &Graph, f: &Monomial) -> Result<Check, CommandError> {
    let square = closed_neighborhood_ideal(g).power(2, IdealBudget::default())?;
    let colon = square.colon(f)?;
    Ok(check(
        name,
        colon.is_maximal_ideal(),
        format!("NI(G)^2 : {f} has {} generators", colon.generators().len()),
    ))
}

fn certificate_check(name: &str, g: &Graph, cover: &[usize]) -> Result<Check, CommandError> {
    let h = build_hypergraph(g)?;
    let c = VertexSet::from_labels(g.n(), cover.iter().copied()).ok_or_else(|| {
        CommandError::Usage(format!("cover {cover:?} out of range"))
    })?;
    let r = check_conditions(g, &h, &c)?;
    Ok(check(
        name,
        r.holds(),
        format!(
            "cover {}, private edges {}, neighbor pairs {}",
            r.covers(),
            r.private_edges(),
            r.pairs()
        ),
    ))
}

fn decide_check(
    name: &str,
    g: &Graph,
    method: Method,
    opts: &SearchOptions,
    expected_cover: Option<&[usize]>,
) -> Result<Check, CommandError> {
    let d = decide(g, method, opts)?;
    let mut pass = d.verdict == Verdict::Yes;
    let mut detail = format!("{} via {:?}", d.verdict, method);
    if let (Some(want), Some(cert)) = (expected_cover, &d.certificate) {
        pass &= cert.cover.to_vec() == want;
        detail.push_str(&format!(", certificate {}", cert.cover));
    }
    Ok(check(name, pass, detail))
}

/// Recomputes the worked examples and the headline family verdicts.
pub fn cmd_verify_paper(
    fixtures: &Fixtures,
    method: Method,
    opts: &SearchOptions,
) -> Result<Vec<Check>, CommandError> {
    let mut checks = Vec::new();
    let parse_fixture = |name: &str, e: GraphError| CommandError::Fixture {
        name: name.into(),
        msg: e.to_string(),
    };

    let g1 = Graph::parse_text(&fixtures.example1_graph)
        .map_err(|e| parse_fixture("example1.graph", e))?;
    checks.push(check(
        "example1.graph: 10 vertices, 14 edges",
        g1.n() == 10 && g1.edge_count() == 14,
        format!("{} vertices, {} edges", g1.n(), g1.edge_count()),
    ));
    let printed1 = MonomialIdeal::parse_text(&fixtures.example1_nbhd, Some(g1.n()))?;
    checks.push(ideal_check(
        "example1.graph: NI(G) equals printed generators",
        &printed1,
        &closed_neighborhood_ideal(&g1),
    ));
    let f1 = Monomial::from_set(&VertexSet::from_labels(10, 1..=9).expect("in range"));
    checks.push(colon_check("example1.graph: NI(G)^2 : x1...x9 = m", &g1, &f1)?);
    checks.push(certificate_check("example1.graph: C = {10} is a certificate", &g1, &[10])?);
    checks.push(decide_check("example1.graph: decide", &g1, method, opts, Some(&[10]))?);

    let edges2 = MonomialIdeal::parse_text(&fixtures.example2_edges, None)?;
    checks.push(check(
        "example2.ideal: 39 edge generators",
        edges2.generators().len() == 39,
        format!("{} generators", edges2.generators().len()),
    ));
    let g2 = graph_from_edge_ideal(&edges2)?;
    let printed2 = MonomialIdeal::parse_text(&fixtures.example2_nbhd, Some(g2.n()))?;
    checks.push(ideal_check(
        "example2.ideal: NI(G) equals printed generators",
        &printed2,
        &closed_neighborhood_ideal(&g2),
    ));
    let d16 = if g2.n() >= 6 { g2.distance(1, 6)? } else { Distance::Infinite };
    checks.push(check("example2.ideal: dist(1, 6) = 5", d16 == 5, format!("dist = {d16}")));
    if g2.n() == 18 {
        let mut u = VertexSet::full(18);
        u.remove(1);
        u.remove(6);
        let f2 = Monomial::from_set(&u);
        checks.push(colon_check("example2.ideal: NI(G)^2 : x2...x5 x7...x18 = m", &g2, &f2)?);
        checks.push(certificate_check("example2.ideal: C = {1, 6} is a certificate", &g2, &[1, 6])?);
        checks.push(decide_check("example2.ideal: decide", &g2, method, opts, Some(&[1, 6]))?);
    } else {
        checks.push(check("example2.ideal: 18 vertices", false, format!("{} vertices", g2.n())));
    }

    checks.push(decide_check("C_5", &cycle(5)?, method, opts, None)?);
    checks.push(decide_check("C_8(1,4)", &circulant(8, &[1, 4])?, method, opts, None)?);
    checks.push(decide_check("Petersen K(5,2)", &kneser(5, 2)?.graph, method, opts, None)?);
    Ok(checks)
}

/// Convenience for callers that only need the verdict on a spec string.
pub fn verdict_of(spec: &str, method: Method) -> Result<Verdict, CommandError> {
    let spec: GraphSpec = spec.parse()?;
    let g = spec.build()?.graph;
    Ok(criteria::decide(&g, method, &SearchOptions::default())?.verdict)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ideal_command() {
        let out = cmd_ideal(&GraphSpec::Cycle(5), 1, IdealBudget::default()).unwrap();
        assert_eq!(out.lines().count(), 5);
        assert!(cmd_ideal(&GraphSpec::Cycle(5), 0, IdealBudget::default()).is_err());
        let tight = IdealBudget { max_products: 10 };
        assert!(matches!(
            cmd_ideal(&GraphSpec::Cycle(5), 2, tight),
            Err(CommandError::Ideal(IdealError::BudgetExceeded { .. }))
        ));
    }

    #[test]
    fn verify_paper_bundled() {
        let checks = cmd_verify_paper(&Fixtures::bundled(), Method::Both, &SearchOptions::default())
            .unwrap();
        for c in &checks {
            assert!(c.pass, "{c}");
        }
    }

    #[test]
    fn verify_paper_names_perturbed_generator() {
        let mut fx = Fixtures::bundled();
        fx.example1_nbhd = fx.example1_nbhd.replace("x9*x10", "x9*x10*x4");
        let checks = cmd_verify_paper(&fx, Method::Criteria, &SearchOptions::default()).unwrap();
        let bad: Vec<_> = checks.iter().filter(|c| !c.pass).collect();
        assert_eq!(bad.len(), 1);
        assert!(bad[0].detail.contains("x4*x9*x10"), "{}", bad[0].detail);
        assert!(bad[0].detail.contains("x9*x10]"), "{}", bad[0].detail);
    }

    #[test]
    fn survey_cycles() {
        let rows = cmd_survey(Family::Cycles, 3, 8, None, &SurveyOptions::default()).unwrap();
        assert_eq!(rows.len(), 6);
        assert!(rows.iter().all(|r| r.agree));
        let yes: Vec<usize> = rows.iter().filter(|r| r.criteria == Verdict::Yes).map(|r| r.n).collect();
        assert_eq!(yes, vec![5]);
        assert!(survey_table(&rows).contains("C_5"));
        assert!(cmd_survey(Family::Kneser, 5, 6, None, &SurveyOptions::default()).is_err());
    }

    #[test]
    fn verdict_helper() {
        assert_eq!(verdict_of("cycle:5", Method::Both).unwrap(), Verdict::Yes);
        assert!(verdict_of("cycle", Method::Both).is_err());
    }
}
