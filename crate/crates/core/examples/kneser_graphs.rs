// Kneser graphs. K(3k-1, k) is vertex diameter-2-critical, so it gives a
// YES, while K(n, 2) for n = 6, 7 fails criticality.
//
// Run with `cargo run --release --example kneser_graphs`.

use std::error::Error;

use nimax::criteria::{decide, predict_kneser, Method};
use nimax::engine::SearchOptions;
use nimax::families::kneser;

fn run_example() -> Result<(), Box<dyn Error>> {
    let opts = SearchOptions::default();
    for (n, k, method) in [(5, 2, Method::Both), (6, 2, Method::Both), (7, 2, Method::Criteria), (8, 3, Method::Criteria)] {
        let kg = kneser(n, k)?;
        let d = decide(&kg.graph, method, &opts)?;
        let p = predict_kneser(n, k)?;
        let why = d.obstruction.map(|o| format!(" {o:?}")).unwrap_or_default();
        println!("K({n},{k}): {} vertices, {} via {method:?}{why}, predicted {}", kg.graph.n(), d.verdict, p.verdict);
        if let Some(ev) = &d.criticality {
            let &(x, u, v) = ev.first().ok_or("empty evidence")?;
            println!("  without {}, {} and {} are at distance 3 or more", kg.subsets[x - 1], kg.subsets[u - 1], kg.subsets[v - 1]);
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
