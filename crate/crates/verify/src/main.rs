use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;

use picard_verify::{run_suite, RunConfig};

/// Runs the verification suites and prints one line per check.
#[derive(Parser, Debug)]
#[command(version)]
struct Args {
    /// Comma-separated suites: exact, group, variety, boundary, theta, all.
    #[arg(long, default_value = "all")]
    suites: String,
    /// Write the JSON report here.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Group-table cache file.
    #[arg(long)]
    cache: Option<PathBuf>,
    #[arg(long, default_value_t = 2024)]
    seed: u64,
    /// Theta truncation radius N.
    #[arg(long, default_value_t = 8)]
    theta_n: u32,
    /// Numeric tolerance.
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    /// Random points for the numeric bridge.
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Include exhaustive checks.
    #[arg(long)]
    slow: bool,
}

fn run(args: Args) -> anyhow::Result<bool> {
    let suites = RunConfig::parse_suites(&args.suites)?;
    let mut cfg = RunConfig::new(suites)?.with_theta(args.theta_n, args.tol)?.with_samples(args.samples)?;
    cfg.cache = args.cache;
    cfg.seed = args.seed;
    cfg.slow = args.slow;
    let report = run_suite(&cfg);
    print!("{}", report.render_text());
    if let Some(path) = &args.report {
        std::fs::write(path, report.to_json()?).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(report.all_passed())
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
