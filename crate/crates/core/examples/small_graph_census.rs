// Every connected labelled graph on up to five vertices, decided by both
// routes. Prints how many give a YES.
//
// Run with `cargo run --release --example small_graph_census`.

use std::error::Error;

use nimax::criteria::{decide, Method, Verdict};
use nimax::engine::SearchOptions;
use nimax::enumerate::connected_labelled_graphs;

fn run_example() -> Result<(), Box<dyn Error>> {
    let opts = SearchOptions::default();
    for n in 1..=5 {
        let (mut total, mut yes) = (0, 0);
        for g in connected_labelled_graphs(n) {
            total += 1;
            // Both returns an error if the routes disagree
            if decide(&g, Method::Both, &opts)?.verdict == Verdict::Yes {
                yes += 1;
            }
        }
        println!("n = {n}: {total} connected graphs, {yes} YES");
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
