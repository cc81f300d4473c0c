//! JSON report for a single decision.
//!
//! Every field is always present (absent values are `null`) so the field
//! set stays fixed; new fields may be added, existing ones are never
//! renamed or removed. `docs/report.md` documents the schema and
//! `tests/golden/` holds reference output.

use serde::{Deserialize, Serialize};

use crate::criteria::{Decision, Method, Obstruction, Verdict};
use crate::graph::{Distance, Graph};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub graph: GraphSummary,
    pub decision: DecisionSummary,
    pub witness: Option<WitnessReport>,
    pub certificate: Option<CertificateReport>,
    pub criticality: Option<Vec<FarPair>>,
    pub timing: Option<Timing>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub spec: Option<String>,
    pub n: usize,
    pub edges: usize,
    pub diameter: Distance,
    pub connected: bool,
    /// Display names for vertices (Kneser graphs list their subsets).
    pub vertex_names: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecisionSummary {
    pub verdict: Verdict,
    pub method: Method,
    pub obstruction: Option<Obstruction>,
    pub degenerate: bool,
    /// Isolated vertices set aside before the rest was decided.
    pub isolated: Vec<usize>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub monomial: String,
    pub support: Vec<usize>,
    pub examined: u64,
    pub pruned: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub cover: Vec<usize>,
    pub private_edges: Vec<PrivateEdge>,
    pub pairs: Vec<NeighborPair>,
    pub examined: u64,
    pub pruned: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PrivateEdge {
    pub vertex: usize,
    pub edge: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NeighborPair {
    pub vertex: usize,
    pub j1: usize,
    pub j2: usize,
}

/// Vertices `u`, `v` at distance at least 3 once `vertex` is deleted.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FarPair {
    pub vertex: usize,
    pub u: usize,
    pub v: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_us: u64,
}

impl Report {
    pub fn new(
        spec: Option<String>,
        g: &Graph,
        vertex_names: Option<Vec<String>>,
        d: &Decision,
    ) -> Self {
        Report {
            graph: GraphSummary {
                spec,
                n: g.n(),
                edges: g.edge_count(),
                diameter: d.diameter,
                connected: g.is_connected(),
                vertex_names,
            },
            decision: DecisionSummary {
                verdict: d.verdict,
                method: d.method,
                obstruction: d.obstruction,
                degenerate: d.degenerate,
                isolated: d.isolated.clone(),
                note: d.note.clone(),
            },
            witness: d.witness.as_ref().map(|w| WitnessReport {
                monomial: w.monomial.to_string(),
                support: w.monomial.support(),
                examined: w.stats.examined,
                pruned: w.stats.pruned,
            }),
            certificate: d.certificate.as_ref().map(|c| CertificateReport {
                cover: c.cover.to_vec(),
                private_edges: c
                    .private_edges
                    .iter()
                    .map(|(i, e)| PrivateEdge {
                        vertex: *i,
                        edge: e.to_vec(),
                    })
                    .collect(),
                pairs: c
                    .pairs
                    .iter()
                    .map(|&(j, j1, j2)| NeighborPair { vertex: j, j1, j2 })
                    .collect(),
                examined: c.stats.examined,
                pruned: c.stats.pruned,
            }),
            criticality: d.criticality.as_ref().map(|ev| {
                ev.iter()
                    .map(|&(vertex, u, v)| FarPair { vertex, u, v })
                    .collect()
            }),
            timing: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Short human-readable summary.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let g = &self.graph;
        if let Some(spec) = &g.spec {
            s.push_str(&format!("graph      {spec}\n"));
        }
        s.push_str(&format!(
            "vertices   {}  edges {}  diameter {}  connected {}\n",
            g.n, g.edges, g.diameter, g.connected
        ));
        let d = &self.decision;
        s.push_str(&format!("verdict    {} ({:?})\n", d.verdict, d.method));
        if let Some(o) = d.obstruction {
            s.push_str(&format!("obstruction {}\n", serde_json::to_value(o).unwrap().as_str().unwrap()));
        }
        if d.degenerate {
            s.push_str("note       no edges, decided by direct computation\n");
        } else if !d.isolated.is_empty() {
            s.push_str(&format!("isolated   {:?} set aside\n", d.isolated));
        }
        if let Some(n) = &d.note {
            s.push_str(&format!("note       {n}\n"));
        }
        if let Some(w) = &self.witness {
            s.push_str(&format!("witness    {}\n", w.monomial));
        }
        if let Some(c) = &self.certificate {
            s.push_str(&format!("certificate C = {:?}\n", c.cover));
        }
        if let Some(t) = &self.timing {
            s.push_str(&format!("elapsed    {} us\n", t.elapsed_us));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criteria::decide;
    use crate::engine::SearchOptions;
    use crate::families::cycle;

    #[test]
    fn json_roundtrip_is_byte_stable() {
        for n in [5, 6] {
            let g = cycle(n).unwrap();
            let d = decide(&g, Method::Both, &SearchOptions::default()).unwrap();
            let r = Report::new(Some(format!("cycle:{n}")), &g, None, &d);
            let text = r.to_json();
            let back = Report::from_json(&text).unwrap();
            assert_eq!(back, r);
            assert_eq!(back.to_json(), text);
        }
    }

    #[test]
    fn absent_fields_are_null() {
        let g = cycle(6).unwrap();
        let d = decide(&g, Method::Criteria, &SearchOptions::default()).unwrap();
        let v: serde_json::Value = serde_json::to_value(Report::new(None, &g, None, &d)).unwrap();
        assert!(v["witness"].is_null());
        assert_eq!(v["decision"]["obstruction"], "NO_CERTIFICATE");
        assert_eq!(v["graph"]["diameter"], 3);
    }
}
