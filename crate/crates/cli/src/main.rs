use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use nlcmfo::benchmarks::Suite;
use nlcmfo::harness::{export_curves, run_algorithm, run_experiment, Algorithm, ExperimentConfig, Telemetry};
use nlcmfo::hypertune::{make_toy_dataset, tune, tune_config};
use nlcmfo::Error;

/// Moth-flame optimization benchmarks and hyperparameter tuning.
#[derive(Parser)]
#[command(name = "nlcmfo", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an experiment grid and write statistics and telemetry CSVs.
    Bench(BenchArgs),
    /// Tune the toy classifier's training hyperparameters.
    Tune(TuneArgs),
    /// Evaluate one benchmark function at a point.
    Eval(EvalArgs),
    /// Run one algorithm on one function and export its curves.
    Diag(DiagArgs),
}

#[derive(Args)]
struct BenchArgs {
    /// TOML experiment file; flags override its values.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_delimiter = ',')]
    algorithms: Option<Vec<String>>,
    #[arg(long, value_delimiter = ',')]
    functions: Option<Vec<String>>,
    #[arg(long, value_delimiter = ',')]
    dims: Option<Vec<usize>>,
    #[arg(long)]
    runs: Option<usize>,
    #[arg(long)]
    pop: Option<usize>,
    #[arg(long)]
    iters: Option<usize>,
    #[arg(long)]
    base_seed: Option<u64>,
    #[arg(long)]
    output_dir: Option<PathBuf>,
    /// summary, curves or full-history.
    #[arg(long)]
    telemetry: Option<String>,
    #[arg(long)]
    workers: Option<usize>,
    /// Directory of composite function pack files.
    #[arg(long)]
    composite_dir: Option<PathBuf>,
}

#[derive(Args)]
struct TuneArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Rows in the synthetic dataset.
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 4)]
    features: usize,
    #[arg(long, default_value_t = 30)]
    pop: usize,
    #[arg(long, default_value_t = 20)]
    iters: usize,
    #[arg(long, default_value = "tune_out")]
    output_dir: PathBuf,
}

#[derive(Args)]
struct EvalArgs {
    /// Function id such as F1.
    function: String,
    /// Coordinates of the point.
    #[arg(allow_negative_numbers = true, required = true)]
    x: Vec<f64>,
    #[arg(long)]
    composite_dir: Option<PathBuf>,
}

#[derive(Args)]
struct DiagArgs {
    #[arg(long, default_value = "NLCMFO")]
    algorithm: String,
    #[arg(long, default_value = "F1")]
    function: String,
    /// Dimension for F1 to F13.
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long, default_value_t = 30)]
    pop: usize,
    #[arg(long, default_value_t = 500)]
    iters: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Also export every position at every iteration.
    #[arg(long)]
    history: bool,
    #[arg(long, default_value = "diag_out")]
    output_dir: PathBuf,
    #[arg(long)]
    composite_dir: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Bench(args) => bench(args),
        Command::Tune(args) => tune_cmd(args),
        Command::Eval(args) => eval(args),
        Command::Diag(args) => diag(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_config() { 1 } else { 2 })
        }
    }
}

fn bench(args: BenchArgs) -> nlcmfo::Result<ExitCode> {
    let mut cfg = match &args.config {
        Some(path) => ExperimentConfig::from_file(path)?,
        None => ExperimentConfig::default(),
    };
    if let Some(a) = &args.algorithms {
        cfg.algorithms = a.iter().map(|s| s.parse()).collect::<nlcmfo::Result<_>>()?;
    }
    if let Some(f) = args.functions {
        cfg.functions = f;
    }
    if let Some(d) = args.dims {
        cfg.dims = d;
    }
    cfg.runs = args.runs.unwrap_or(cfg.runs);
    cfg.pop = args.pop.unwrap_or(cfg.pop);
    cfg.iters = args.iters.unwrap_or(cfg.iters);
    cfg.base_seed = args.base_seed.unwrap_or(cfg.base_seed);
    if let Some(o) = args.output_dir {
        cfg.output_dir = o;
    }
    if let Some(t) = &args.telemetry {
        cfg.telemetry = t.parse()?;
    }
    if args.workers.is_some() {
        cfg.workers = args.workers;
    }
    if args.composite_dir.is_some() {
        cfg.composite_dir = args.composite_dir;
    }

    let report = run_experiment(&cfg)?;
    println!("{:<8} {:<5} {:>5} {:>13} {:>13} {:>10}", "algo", "func", "dim", "ave", "std", "runtime_s");
    for (cell, stats, aborted) in &report.rows {
        match stats {
            Some(s) => println!(
                "{:<8} {:<5} {:>5} {:>13.5e} {:>13.5e} {:>10.4}",
                cell.algorithm, cell.function.id, cell.function.dim, s.ave, s.std, s.ave_runtime
            ),
            None => println!("{:<8} {:<5} {:>5} all runs aborted", cell.algorithm, cell.function.id, cell.function.dim),
        }
        if *aborted > 0 {
            println!("  {aborted} aborted run(s)");
        }
    }
    println!("wrote {}", cfg.output_dir.display());
    if report.aborted_runs() > 0 {
        eprintln!("error: {} run(s) aborted, see finals.csv", report.aborted_runs());
        return Ok(ExitCode::from(2));
    }
    Ok(ExitCode::SUCCESS)
}

fn tune_cmd(args: TuneArgs) -> nlcmfo::Result<ExitCode> {
    let data = make_toy_dataset(args.samples, args.features, args.seed)?;
    let engine = tune_config().with_budget(args.pop, args.iters).with_seed(args.seed);
    let outcome = tune(&engine, &data)?;
    let best = outcome.best_model_report(&data)?;
    let hp = &outcome.best;
    println!("trainings      {}", outcome.trainings());
    println!("momentum       {:.6}", hp.momentum);
    println!("learning_rate  {:.6}", hp.learning_rate);
    println!("epochs         {}", hp.epochs);
    println!("l2             {:.6e}", hp.l2);
    println!("best L_D       {:.4}", outcome.best_l_d);
    let m = &best.metrics;
    println!("accuracy       {:.4}", m.accuracy);
    println!("sensitivity    {:.4}", m.sensitivity);
    println!("specificity    {:.4}", m.specificity);
    println!("precision      {:.4}", m.precision);
    println!("f1             {:.4}", m.f1);
    outcome.write_outputs(&best, &args.output_dir)?;
    println!("wrote {}", args.output_dir.display());
    Ok(ExitCode::SUCCESS)
}

fn suite(dir: Option<&PathBuf>) -> nlcmfo::Result<Suite> {
    let mut suite = Suite::new();
    if let Some(dir) = dir {
        suite.load_composite_dir(dir).map_err(|e| Error::Config(format!("composite pack: {e}")))?;
    }
    Ok(suite)
}

fn eval(args: EvalArgs) -> nlcmfo::Result<ExitCode> {
    let value = suite(args.composite_dir.as_ref())?.evaluate(&args.function, &args.x)?;
    println!("{value:?}");
    Ok(ExitCode::SUCCESS)
}

fn diag(args: DiagArgs) -> nlcmfo::Result<ExitCode> {
    let algorithm: Algorithm = args.algorithm.parse()?;
    let mut function = suite(args.composite_dir.as_ref())?.lookup(&args.function)?;
    if let Some(d) = args.dim {
        function = function.with_dim(d)?;
    }
    let result = run_algorithm(algorithm, &function, args.pop, args.iters, args.seed, args.history)?;
    let level = if args.history { Telemetry::FullHistory } else { Telemetry::Curves };
    let files = export_curves(&result, &args.output_dir, level)?;
    println!("best fitness   {:?}", result.best_fitness);
    println!("evaluations    {}", result.evaluations);
    for f in files {
        println!("wrote {}", f.display());
    }
    Ok(ExitCode::SUCCESS)
}
