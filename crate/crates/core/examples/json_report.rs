// The JSON report produced by `nimax decide --json`.
//
// Run with `cargo run --example json_report`.

use std::error::Error;

use nimax::commands::cmd_decide;
use nimax::criteria::Method;
use nimax::engine::SearchOptions;
use nimax::graph_spec::GraphSpec;
use nimax::report::Report;

fn run_example() -> Result<(), Box<dyn Error>> {
    let spec: GraphSpec = "circulant:8:1,4".parse()?;
    let report = cmd_decide(&spec, Method::Both, &SearchOptions::default(), false)?;
    let json = report.to_json();
    println!("{json}");
    assert_eq!(Report::from_json(&json)?.to_json(), json);
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
