use std::path::PathBuf;
use std::process::ExitCode;

use bethe_core::experiments::{self, ExperimentConfig, Report, EXPERIMENTS};
use clap::{Args, Parser, Subcommand};

/// Exact computations with Bethe subalgebras of Y(gl_n) and their limits.
#[derive(Parser)]
#[command(name = "bethe", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args)]
struct Opts {
    /// Rank n of gl_n.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Filtration degree cap D.
    #[arg(long, global = true)]
    degree: Option<usize>,
    /// u-power cap P (must be at least D).
    #[arg(long, global = true)]
    ucap: Option<usize>,
    /// Diagonal entries, e.g. "1,2,1/3"; stages separated by ';' for shuvalov.
    #[arg(long, global = true)]
    matrix: Option<String>,
    /// Diagonal Laurent family in t, e.g. "1,t" or "1+t,1+2t".
    #[arg(long, global = true)]
    family: Option<String>,
    /// Stable curve, e.g. "((0,2)@0, 1@1, inf)".
    #[arg(long, global = true)]
    curve: Option<String>,
    /// Block diagonal matrix as value:multiplicity pairs, e.g. "1:2,2:1".
    #[arg(long, global = true)]
    blocks: Option<String>,
    #[arg(long, global = true)]
    k: Option<usize>,
    /// Worker threads.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Generators and dimensions of B(C).
    Bethe,
    /// Shift of argument subalgebra F(C) and its lift.
    Shift,
    /// Grassmannian limit along --family or the schedule of --curve.
    Limit,
    /// Predicted limit subalgebra of --curve.
    Predict,
    /// Run a named verification experiment.
    Verify {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(EXPERIMENTS))]
        name: String,
    },
    /// Boundary strata of the moduli of marked curves.
    Strata,
}

fn execute(cli: &Cli) -> bethe_core::Result<Report> {
    let o = &cli.opts;
    let cfg = ExperimentConfig {
        n: o.n,
        degree: o.degree,
        ucap: o.ucap,
        matrix: o.matrix.clone(),
        family: o.family.clone(),
        curve: o.curve.clone(),
        blocks: o.blocks.clone(),
        k: o.k,
    };
    match &cli.command {
        Command::Bethe => experiments::cmd_bethe(&cfg),
        Command::Shift => experiments::cmd_shift(&cfg),
        Command::Limit => experiments::cmd_limit(&cfg),
        Command::Predict => experiments::cmd_predict(&cfg),
        Command::Verify { name } => experiments::run(name, &cfg),
        Command::Strata => experiments::cmd_strata(&cfg),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.opts.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let report = match execute(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = serde_json::to_string_pretty(&report.to_json()).expect("report serializes");
    match &cli.opts.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text + "\n") {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => println!("{text}"),
    }
    if !report.checks.is_empty() {
        eprintln!("{}", report.summary());
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
