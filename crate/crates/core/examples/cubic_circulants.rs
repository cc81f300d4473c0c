// Cubic circulants C_{2m}(1, m) and C_{2m}(2, m).
//
// Run with `cargo run --example cubic_circulants`.

use std::error::Error;

use nimax::commands::{cmd_survey, survey_table, Family, SurveyOptions};

fn run_example() -> Result<(), Box<dyn Error>> {
    let rows = cmd_survey(Family::CubicCirculants, 4, 14, None, &SurveyOptions::default())?;
    print!("{}", survey_table(&rows));
    assert!(rows.iter().all(|r| r.agree));
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
