// Witness search for an arbitrary monomial ideal, with exponents bounded
// by the i-degrees of the ideal.
//
// Run with `cargo run --example general_witness`.

use std::error::Error;

use nimax::engine::{find_witness, is_witness, SearchOptions};
use nimax::{Monomial, MonomialIdeal};

fn run_example() -> Result<(), Box<dyn Error>> {
    let n = 3;
    let cases = [
        vec!["x1^2", "x1*x2", "x2^2", "x3"],
        vec!["x1^2*x2^2"],
        vec!["x1*x2", "x2*x3", "x1*x3"],
        vec!["x1^3", "x2^2", "x3^2", "x1*x2*x3"],
    ];
    for gens in cases {
        let raw: Vec<Monomial> = gens.iter().map(|s| Monomial::parse(s, n)).collect::<Result<_, _>>()?;
        let i = MonomialIdeal::minimalize(n, raw)?;
        match find_witness(&i, &SearchOptions::default())? {
            Some(w) => {
                assert!(is_witness(&i, &w.monomial)?);
                println!("({}) : {} = m", gens.join(", "), w.monomial);
            }
            None => println!("({}) has no witness", gens.join(", ")),
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
