// A diameter-5 graph given by its edge ideal. The certificate search
// recovers C = {1, 6}, and the witness is the product of the other
// sixteen variables.
//
// Run with `cargo run --example edge_ideal_input`.

use std::error::Error;

use nimax::criteria::{find_certificate, verify_witness_structure};
use nimax::engine::{find_witness_square_nbhd, SearchOptions};
use nimax::{closed_neighborhood_ideal, graph_from_edge_ideal, MonomialIdeal};

const EDGES: &str = include_str!("../fixtures/example2.ideal");

fn run_example() -> Result<(), Box<dyn Error>> {
    let edges = MonomialIdeal::parse_text(EDGES, None)?;
    let g = graph_from_edge_ideal(&edges)?;
    println!("{} edges on {} vertices, dist(1, 6) = {}", edges.generators().len(), g.n(), g.distance(1, 6)?);
    println!("NI(G) has {} generators", closed_neighborhood_ideal(&g).generators().len());

    let opts = SearchOptions::default();
    let cert = find_certificate(&g, &opts)?.ok_or("no certificate")?;
    println!("certificate C = {} ({} nodes examined)", cert.cover, cert.stats.examined);
    for (i, e) in &cert.private_edges {
        println!("  private edge for {i}: {e}");
    }
    println!("witness from C: {}", cert.witness_monomial());

    let w = find_witness_square_nbhd(&g, &opts)?.ok_or("no witness")?;
    println!("brute-force witness: {} ({} nodes)", w.monomial, w.stats.examined);
    let s = verify_witness_structure(&g, &w.support().ok_or("not squarefree")?);
    println!("W = {} nonempty {}, pairwise close {}, has cycle {}", s.w, s.w_nonempty, s.w_pairwise_close, s.w_has_cycle);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
