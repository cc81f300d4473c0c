// Cycles C_n for n = 3..12. Only the five-cycle gives a YES.
//
// Run with `cargo run --example cycle_family`.

use std::error::Error;

use nimax::criteria::{decide, predict_cycle, Method};
use nimax::engine::SearchOptions;
use nimax::families::cycle;

fn run_example() -> Result<(), Box<dyn Error>> {
    let opts = SearchOptions::default();
    for n in 3..=12 {
        let g = cycle(n)?;
        let d = decide(&g, Method::Both, &opts)?;
        let p = predict_cycle(n)?;
        println!("C_{n:<3} diameter {:<2} {:<4} predicted {}", d.diameter.to_string(), d.verdict.to_string(), p.verdict);
        assert_eq!(d.verdict, p.verdict);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
