use std::path::PathBuf;

use rayon::prelude::*;

use crate::baselines::{run_gwo, run_pso, GwoConfig, PsoConfig};
use crate::benchmarks::BenchmarkFunction;
use crate::engine::{run, EngineConfig, RunResult};
use crate::{Error, Result};

use super::config::{Algorithm, ExperimentConfig, Telemetry};
use super::export::{export_curves, format_full, format_sig6, write_csv};
use super::stats::{summarize, StatsSummary};

/// One (algorithm, function at a dimension) entry of the experiment grid.
#[derive(Debug, Clone)]
pub struct Cell {
    pub algorithm: Algorithm,
    pub function: BenchmarkFunction,
}

impl Cell {
    fn label(&self) -> String {
        format!("{}_{}_d{}", self.algorithm, self.function.id, self.function.dim)
    }
}

/// Runs one algorithm on one benchmark with default parameters.
pub fn run_algorithm(
    algorithm: Algorithm,
    function: &BenchmarkFunction,
    pop: usize,
    iters: usize,
    seed: u64,
    record_history: bool,
) -> Result<RunResult> {
    let space = function.space();
    let mut objective = function.objective(seed);
    match algorithm {
        Algorithm::Mfo | Algorithm::Nlcmfo => {
            let base = if algorithm == Algorithm::Mfo { EngineConfig::mfo() } else { EngineConfig::nlcmfo() };
            let cfg = EngineConfig { record_history, ..base.with_budget(pop, iters).with_seed(seed) };
            run(&cfg, &space, &mut objective)
        }
        Algorithm::Pso => {
            let cfg = PsoConfig { pop_size: pop, max_iter: iters, seed, record_history, ..PsoConfig::default() };
            run_pso(&cfg, &space, &mut objective)
        }
        Algorithm::Gwo => {
            let cfg = GwoConfig { pop_size: pop, max_iter: iters, seed, record_history, ..GwoConfig::default() };
            run_gwo(&cfg, &space, &mut objective)
        }
    }
}

/// Final result of one run, or why it aborted.
#[derive(Debug, Clone)]
pub struct FinalRecord {
    pub algorithm: Algorithm,
    pub function: String,
    pub dim: usize,
    pub run: usize,
    pub seed: u64,
    pub outcome: std::result::Result<f64, String>,
    pub runtime_s: f64,
}

#[derive(Debug, Clone)]
pub struct ExperimentReport {
    /// One row per cell in grid order; `None` when every run aborted.
    pub rows: Vec<(Cell, Option<StatsSummary>, usize)>,
    pub finals: Vec<FinalRecord>,
    pub files: Vec<PathBuf>,
}

impl ExperimentReport {
    pub fn aborted_runs(&self) -> usize {
        self.rows.iter().map(|r| r.2).sum()
    }

    pub fn summary(&self, algorithm: Algorithm, function: &str) -> Option<&StatsSummary> {
        self.rows
            .iter()
            .find(|(c, _, _)| c.algorithm == algorithm && c.function.id == function)
            .and_then(|r| r.1.as_ref())
    }
}

/// Validates the configuration, runs every cell of the grid and writes
/// `stats.csv`, `stats_full.csv`, `finals.csv`, `runtimes.csv` and any
/// requested telemetry under `output_dir`. A run whose objective fails is
/// counted in `aborted_runs` and left out of the statistics.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentReport> {
    let cells = config.cells()?;
    let workers = config.resolved_workers()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Config(format!("worker pool: {e}")))?;
    let out = &config.output_dir;
    std::fs::create_dir_all(out).map_err(|e| Error::io(out, e))?;

    let jobs: Vec<(usize, usize)> = (0..cells.len()).flat_map(|c| (0..config.runs).map(move |r| (c, r))).collect();
    let history = config.telemetry == Telemetry::FullHistory;
    let results: Vec<Result<RunResult>> = pool.install(|| {
        jobs.par_iter()
            .map(|&(c, r)| {
                let cell = &cells[c];
                run_algorithm(cell.algorithm, &cell.function, config.pop, config.iters, config.seed_for(r), history)
            })
            .collect()
    });

    let mut files = Vec::new();
    let mut finals = Vec::with_capacity(jobs.len());
    for (&(c, r), result) in jobs.iter().zip(&results) {
        let cell = &cells[c];
        if let Ok(res) = result {
            let dir = out.join("telemetry").join(cell.label()).join(format!("run_{r:03}"));
            files.extend(export_curves(res, &dir, config.telemetry)?);
        }
        finals.push(FinalRecord {
            algorithm: cell.algorithm,
            function: cell.function.id.clone(),
            dim: cell.function.dim,
            run: r,
            seed: config.seed_for(r),
            outcome: result.as_ref().map(|res| res.best_fitness).map_err(|e| e.to_string()),
            runtime_s: result.as_ref().map_or(0.0, |res| res.wall_time),
        });
    }

    let mut rows = Vec::with_capacity(cells.len());
    for (c, cell) in cells.into_iter().enumerate() {
        let records = &finals[c * config.runs..(c + 1) * config.runs];
        let ok: Vec<&FinalRecord> = records.iter().filter(|f| f.outcome.is_ok()).collect();
        let aborted = records.len() - ok.len();
        let values: Vec<f64> = ok.iter().filter_map(|f| f.outcome.as_ref().ok().copied()).collect();
        let times: Vec<f64> = ok.iter().map(|f| f.runtime_s).collect();
        let stats = if values.is_empty() { None } else { Some(summarize(&values, &times)?) };
        rows.push((cell, stats, aborted));
    }

    let mut report = ExperimentReport { rows, finals, files };
    report.files.extend(write_tables(config, &report)?);
    Ok(report)
}

fn write_tables(config: &ExperimentConfig, report: &ExperimentReport) -> Result<Vec<PathBuf>> {
    let out = &config.output_dir;
    let header = [
        "algorithm",
        "function",
        "dim",
        "ave",
        "std",
        "ave_runtime_s",
        "std_runtime_s",
        "aborted_runs",
        "single_sample",
    ];
    let mut written = Vec::new();
    for (name, fmt) in [("stats.csv", format_sig6 as fn(f64) -> String), ("stats_full.csv", format_full)] {
        let path = out.join(name);
        let rows = report.rows.iter().map(|(cell, s, aborted)| {
            let nums = s.map_or([f64::NAN; 4], |s| [s.ave, s.std, s.ave_runtime, s.std_runtime]);
            let mut row = vec![cell.algorithm.to_string(), cell.function.id.clone(), cell.function.dim.to_string()];
            row.extend(nums.iter().map(|&v| fmt(v)));
            row.push(aborted.to_string());
            row.push(s.is_some_and(|s| s.single_sample).to_string());
            row
        });
        write_csv(&path, &header, rows)?;
        written.push(path);
    }

    let path = out.join("finals.csv");
    let rows = report.finals.iter().map(|f| {
        let (status, value) = match &f.outcome {
            Ok(v) => ("ok".to_string(), format_full(*v)),
            Err(e) => (format!("aborted: {e}"), String::new()),
        };
        [
            f.algorithm.to_string(),
            f.function.clone(),
            f.dim.to_string(),
            f.run.to_string(),
            f.seed.to_string(),
            value,
            status,
        ]
    });
    write_csv(&path, &["algorithm", "function", "dim", "run", "seed", "best_fitness", "status"], rows)?;
    written.push(path);

    let path = out.join("runtimes.csv");
    let rows = report.finals.iter().map(|f| {
        [f.algorithm.to_string(), f.function.clone(), f.dim.to_string(), f.run.to_string(), format_full(f.runtime_s)]
    });
    write_csv(&path, &["algorithm", "function", "dim", "run", "runtime_s"], rows)?;
    written.push(path);
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(dir: &std::path::Path) -> ExperimentConfig {
        ExperimentConfig {
            algorithms: vec![Algorithm::Mfo, Algorithm::Nlcmfo],
            functions: vec!["F1".into()],
            dims: vec![5],
            runs: 3,
            pop: 6,
            iters: 10,
            output_dir: dir.to_path_buf(),
            workers: Some(2),
            ..ExperimentConfig::default()
        }
    }

    #[test]
    fn grid_order_and_row_count() {
        let dir = tempfile::tempdir().unwrap();
        let report = run_experiment(&small(dir.path())).unwrap();
        assert_eq!(report.rows.len(), 2);
        assert_eq!(report.finals.len(), 6);
        let seeds: Vec<u64> = report.finals.iter().map(|f| f.seed).collect();
        assert_eq!(seeds, [0, 1, 2, 0, 1, 2]);
        let stats = std::fs::read_to_string(dir.path().join("stats.csv")).unwrap();
        assert_eq!(stats.lines().count(), 3);
    }

    #[test]
    fn runs_match_standalone_calls() {
        let dir = tempfile::tempdir().unwrap();
        let report = run_experiment(&small(dir.path())).unwrap();
        let f1 = crate::benchmarks::lookup("F1").unwrap().with_dim(5).unwrap();
        let direct = run_algorithm(Algorithm::Nlcmfo, &f1, 6, 10, 2, false).unwrap();
        assert_eq!(report.finals[5].outcome.as_ref().unwrap().to_bits(), direct.best_fitness.to_bits());
    }

    #[test]
    fn bad_config_runs_nothing() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("out");
        let cfg = ExperimentConfig { functions: vec!["F24".into()], output_dir: out.clone(), ..small(dir.path()) };
        assert!(matches!(run_experiment(&cfg), Err(Error::Config(_))));
        assert!(!out.exists());
    }
}
