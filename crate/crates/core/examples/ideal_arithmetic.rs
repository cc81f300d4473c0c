// Monomial ideal arithmetic: minimal generators, powers, colon ideals and
// i-degrees.
//
// Run with `cargo run --example ideal_arithmetic`.

use std::error::Error;

use nimax::families::cycle;
use nimax::{closed_neighborhood_ideal, IdealBudget, Monomial, MonomialIdeal};

fn run_example() -> Result<(), Box<dyn Error>> {
    let n = 3;
    let m = |s: &str| Monomial::parse(s, n);

    // redundant generators disappear
    let i = MonomialIdeal::minimalize(n, [m("x1*x2")?, m("x1*x2*x3")?, m("x2*x3")?])?;
    println!("I = ({})", join(&i));

    let colon = i.colon(&m("x2")?)?;
    println!("I : x2 = ({})", join(&colon));
    assert!(!colon.is_maximal_ideal());

    let sq = i.power(2, IdealBudget::default())?;
    println!("I^2 = ({})", join(&sq));
    for v in 1..=n {
        println!("  rho_{v}(I^2) = {}", sq.i_degree(v)?);
    }

    // the five-cycle: x1...x5 is outside NI^2 but every x_i pushes it in
    let g = cycle(5)?;
    let ni = closed_neighborhood_ideal(&g);
    let ni2 = ni.power(2, IdealBudget::default())?;
    let f = Monomial::parse("x1*x2*x3*x4*x5", 5)?;
    println!("NI(C5) = ({})", join(&ni));
    println!("NI(C5)^2 has {} minimal generators", ni2.generators().len());
    println!("x1*...*x5 in NI^2: {}", ni2.contains(&f)?);
    let q = ni2.colon(&f)?;
    println!("NI^2 : x1*...*x5 = ({})", join(&q));
    assert!(q.is_maximal_ideal());
    Ok(())
}

fn join(i: &MonomialIdeal) -> String {
    i.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ")
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
