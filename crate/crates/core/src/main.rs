use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use nimax::commands::{
    cmd_decide, cmd_ideal, cmd_survey, cmd_verify_paper, exit_code, survey_table, CommandError,
    Family, Fixtures, SurveyOptions,
};
use nimax::criteria::{CriteriaError, Method};
use nimax::engine::SearchOptions;
use nimax::graph_spec::GraphSpec;
use nimax::IdealBudget;

#[derive(Parser)]
#[command(name = "nimax", version, about = "Is the maximal ideal associated to NI(G)^2?")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Args, Clone, Copy)]
struct SearchArgs {
    /// brute, criteria or both
    #[arg(long, default_value = "both")]
    method: Method,
    /// Search-node cap before a search reports INDETERMINATE
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Emit JSON
    #[arg(long)]
    json: bool,
}

impl SearchArgs {
    fn options(&self) -> SearchOptions {
        let mut o = SearchOptions {
            threads: self.threads.max(1),
            ..SearchOptions::default()
        };
        if let Some(b) = self.budget {
            o.budget = b;
        }
        o
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Print NI(G)^T, one generator per line
    Ideal {
        spec: GraphSpec,
        #[arg(long, default_value_t = 1)]
        power: u32,
        /// Cap on raw generator products
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Decide a single graph
    Decide {
        spec: GraphSpec,
        #[command(flatten)]
        search: SearchArgs,
        /// Include wall-clock time in the report
        #[arg(long)]
        timing: bool,
    },
    /// Tabulate a graph family over a parameter range A..B
    Survey {
        family: Family,
        range: String,
        /// Subset size for Kneser graphs
        #[arg(long)]
        k: Option<usize>,
        /// Skip brute force above this many vertices
        #[arg(long, default_value_t = 24)]
        brute_max_n: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Recompute the reference examples and family verdicts
    VerifyPaper {
        /// Directory with example1.graph, example1_nbhd.ideal, example2.ideal, example2_nbhd.ideal
        #[arg(long)]
        fixtures: Option<PathBuf>,
        #[command(flatten)]
        search: SearchArgs,
    },
}

fn parse_range(s: &str) -> Result<(usize, usize), CommandError> {
    let bad = || CommandError::Usage(format!("range {s:?} must look like A..B"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let (a, b) = (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn run(cli: Cli) -> Result<u8, CommandError> {
    match cli.cmd {
        Cmd::Ideal { spec, power, budget } => {
            let budget = budget.map_or_else(IdealBudget::default, |max_products| IdealBudget { max_products });
            print!("{}", cmd_ideal(&spec, power, budget)?);
            Ok(0)
        }
        Cmd::Decide { spec, search, timing } => {
            let report = cmd_decide(&spec, search.method, &search.options(), timing)?;
            if search.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            Ok(exit_code(&report) as u8)
        }
        Cmd::Survey { family, range, k, brute_max_n, search } => {
            let (lo, hi) = parse_range(&range)?;
            let opts = SurveyOptions {
                search: search.options(),
                brute_max_n,
            };
            let rows = cmd_survey(family, lo, hi, k, &opts)?;
            if search.json {
                println!("{}", serde_json::to_string_pretty(&rows).expect("rows serialize"));
            } else {
                print!("{}", survey_table(&rows));
            }
            Ok(if rows.iter().all(|r| r.agree) { 0 } else { 3 })
        }
        Cmd::VerifyPaper { fixtures, search } => {
            let fx = match fixtures {
                Some(dir) => Fixtures::from_dir(&dir)?,
                None => Fixtures::bundled(),
            };
            let checks = cmd_verify_paper(&fx, search.method, &search.options())?;
            if search.json {
                println!("{}", serde_json::to_string_pretty(&checks).expect("checks serialize"));
            } else {
                for c in &checks {
                    println!("{c}");
                }
            }
            let failed = checks.iter().filter(|c| !c.pass).count();
            if !search.json {
                println!("{} of {} checks passed", checks.len() - failed, checks.len());
            }
            Ok(if failed == 0 { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    // clap exits with 2 on bad usage; 2 is reserved for INDETERMINATE here
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("nimax: {e}");
            match e {
                CommandError::Criteria(CriteriaError::MethodDisagreement { .. }) => ExitCode::from(3),
                _ => ExitCode::from(1),
            }
        }
    }
}
