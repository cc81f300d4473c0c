// The ten-vertex graph with a pendant vertex: NI(G) from the edge list,
// the witness x1...x9 and the certificate C = {10}.
//
// Run with `cargo run --example pendant_example`.

use std::error::Error;

use nimax::criteria::{build_hypergraph, check_conditions, decide, Method};
use nimax::engine::SearchOptions;
use nimax::{closed_neighborhood_ideal, Graph, IdealBudget, Monomial, VertexSet};

const GRAPH: &str = include_str!("../fixtures/example1.graph");

fn run_example() -> Result<(), Box<dyn Error>> {
    let g = Graph::parse_text(GRAPH)?;
    println!("n = {}, edges = {}, diameter = {}", g.n(), g.edge_count(), g.diameter());

    let ni = closed_neighborhood_ideal(&g);
    println!("NI(G) generators:");
    for gen in ni.generators() {
        println!("  {gen}");
    }
    assert_eq!(ni.generators().len(), 9);

    let f = Monomial::from_set(&VertexSet::from_labels(10, 1..=9).ok_or("range")?);
    let colon = ni.power(2, IdealBudget::default())?.colon(&f)?;
    println!("NI(G)^2 : {f} is the maximal ideal: {}", colon.is_maximal_ideal());

    let h = build_hypergraph(&g)?;
    let c = VertexSet::from_labels(10, [10]).ok_or("range")?;
    let report = check_conditions(&g, &h, &c)?;
    println!("C = {c}: cover {}, private edges {}, pairs {}", report.covers(), report.private_edges(), report.pairs());

    let d = decide(&g, Method::Both, &SearchOptions::default())?;
    println!("verdict {}", d.verdict);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
