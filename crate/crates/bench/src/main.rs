use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hawkes_bench::config::parse_count;
use hawkes_bench::panel::run_panel_parallel;
use hawkes_bench::{
    check_orderings, emit_plot, run_bench, write_csv, write_trajectory, ConfigOverrides, MedianSummary, Result,
};
use hawkes_core::validation::seed_panel;
use hawkes_core::{validate_params, AlgorithmId, HawkesParams, StoppingRule};

#[derive(Parser)]
#[command(name = "hawkes-bench", version, about = "Time, export and validate Hawkes process simulators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Time every algorithm over a grid of event counts and write CSV.
    Run(RunArgs),
    /// Simulate one trajectory and write its timestamps as CSV.
    Simulate(SimulateArgs),
    /// Run the time-rescaling residual panel over seeds 1..=N.
    Validate(ValidateArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Flat key=value file; flags given here override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    mu: Option<f64>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    /// Comma-separated algorithm ids.
    #[arg(long, value_delimiter = ',')]
    algos: Option<Vec<AlgorithmId>>,
    /// Comma-separated, strictly increasing event counts.
    #[arg(long, value_delimiter = ',', value_parser = parse_count)]
    n_grid: Option<Vec<usize>>,
    #[arg(long)]
    reps: Option<usize>,
    #[arg(long)]
    warmup: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    plot: Option<PathBuf>,
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long)]
    mu: Option<f64>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
}

impl ParamArgs {
    fn resolve(&self, default: (f64, f64, f64)) -> Result<HawkesParams> {
        Ok(validate_params(
            self.mu.unwrap_or(default.0),
            self.alpha.unwrap_or(default.1),
            self.beta.unwrap_or(default.2),
            false,
        )?)
    }
}

#[derive(Args)]
struct SimulateArgs {
    #[arg(long)]
    algo: AlgorithmId,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
    #[command(flatten)]
    params: ParamArgs,
}

#[derive(Args)]
struct ValidateArgs {
    #[arg(long)]
    algo: AlgorithmId,
    #[arg(long, default_value_t = 10_000)]
    n: usize,
    #[arg(long, default_value_t = 20)]
    seeds: usize,
    /// Defaults to mu=1, alpha=0.5, beta=1.
    #[command(flatten)]
    params: ParamArgs,
}

const VALIDATE_DEFAULT_PARAMS: (f64, f64, f64) = (1.0, 0.5, 1.0);

fn run(args: RunArgs) -> Result<ExitCode> {
    let file = match &args.config {
        Some(path) => ConfigOverrides::from_file(path)?,
        None => ConfigOverrides::default(),
    };
    let flags = ConfigOverrides {
        mu: args.mu,
        alpha: args.alpha,
        beta: args.beta,
        algorithms: args.algos,
        n_grid: args.n_grid,
        repetitions: args.reps,
        warmup: args.warmup,
        seed_base: args.seed,
        output_path: args.out,
        plot_path: args.plot,
    };
    let config = file.overridden_by(flags).build()?;

    let records = run_bench(&config)?;
    write_csv(&records, &config.output_path)?;
    println!("wrote {} records to {}", records.len(), config.output_path.display());
    if let Some(plot) = &config.plot_path {
        emit_plot(&records, plot)?;
        println!("wrote plot to {}", plot.display());
    }

    let summary = MedianSummary::from_records(&records);
    println!("{:<22}{:>10}{:>16}", "algorithm", "n_events", "median_s");
    for a in summary.algorithms() {
        for (n, t) in summary.series(a) {
            println!("{:<22}{:>10}{:>16.6e}", a.as_str(), n, t);
        }
    }
    for check in check_orderings(&summary) {
        let verdict = if check.passed { "ok" } else { "violated" };
        println!("{:<32}{:<10}{}", check.name, verdict, check.detail);
    }
    Ok(ExitCode::SUCCESS)
}

fn simulate(args: SimulateArgs) -> Result<ExitCode> {
    let d = HawkesParams::default();
    let params = args.params.resolve((d.mu(), d.alpha(), d.beta()))?;
    let events = args.algo.simulate(&params, StoppingRule::EventCount(args.n), args.seed)?;
    write_trajectory(&events, &args.out)?;
    Ok(ExitCode::SUCCESS)
}

fn validate(args: ValidateArgs) -> Result<ExitCode> {
    let params = args.params.resolve(VALIDATE_DEFAULT_PARAMS)?;
    let seeds = seed_panel(args.seeds);
    let verdict = run_panel_parallel(args.algo, &params, args.n, &seeds)?;
    println!(
        "{} mu={} alpha={} beta={} n={}",
        args.algo,
        params.mu(),
        params.alpha(),
        params.beta(),
        args.n
    );
    println!("{:>6}{:>12}{:>12}{:>12}{:>12}", "seed", "ks", "critical", "mean", "lag1");
    for r in &verdict.reports {
        println!(
            "{:>6}{:>12.5}{:>12.5}{:>12.5}{:>12.5}{}",
            r.seed,
            r.ks,
            r.ks_critical,
            r.mean,
            r.lag1,
            if r.ks_pass() { "" } else { "  ks-reject" }
        );
    }
    println!(
        "ks rejections {}/{} (allowed {}), mean outside 1±{:.4}: {}, |lag1| >= {:.4}: {}",
        verdict.ks_failures,
        verdict.reports.len(),
        verdict.allowed_ks_failures,
        verdict.mean_tolerance,
        verdict.mean_failures,
        verdict.lag1_tolerance,
        verdict.lag1_failures
    );
    if verdict.passed() {
        println!("PASS");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("FAIL");
        Ok(ExitCode::FAILURE)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Run(args) => run(args),
        Command::Simulate(args) => simulate(args),
        Command::Validate(args) => validate(args),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
