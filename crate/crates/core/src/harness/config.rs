use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::benchmarks::Suite;
use crate::{Error, Result};

use super::runner::Cell;

/// Environment variable holding the default worker count.
pub const WORKERS_ENV: &str = "NLCMFO_WORKERS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Algorithm {
    #[serde(rename = "MFO")]
    Mfo,
    #[serde(rename = "NLCMFO")]
    Nlcmfo,
    #[serde(rename = "PSO")]
    Pso,
    #[serde(rename = "GWO")]
    Gwo,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [Algorithm::Mfo, Algorithm::Nlcmfo, Algorithm::Pso, Algorithm::Gwo];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Mfo => "MFO",
            Algorithm::Nlcmfo => "NLCMFO",
            Algorithm::Pso => "PSO",
            Algorithm::Gwo => "GWO",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Config(format!("unknown algorithm `{s}` (expected MFO, NLCMFO, PSO or GWO)")))
    }
}

/// How much per-run telemetry to write.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Telemetry {
    /// Only `stats.csv`, its sidecar, `finals.csv` and `runtimes.csv`.
    #[default]
    Summary,
    /// Adds convergence, mean-fitness and trajectory curves per run.
    Curves,
    /// Adds every position of every agent at every iteration.
    FullHistory,
}

impl FromStr for Telemetry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "summary" => Ok(Telemetry::Summary),
            "curves" => Ok(Telemetry::Curves),
            "full-history" | "full_history" => Ok(Telemetry::FullHistory),
            _ => Err(Error::Config(format!("unknown telemetry level `{s}`"))),
        }
    }
}

/// One experiment. In TOML every field is optional except `functions`:
///
/// ```toml
/// algorithms = ["MFO", "NLCMFO"]
/// functions = ["F1", "F9"]
/// dims = [30, 1000]      # scalable functions only; empty keeps native sizes
/// runs = 30
/// pop = 30
/// iters = 500
/// base_seed = 0
/// output_dir = "results"
/// telemetry = "curves"   # summary | curves | full-history
/// workers = 4
/// composite_dir = "packs"
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub algorithms: Vec<Algorithm>,
    pub functions: Vec<String>,
    pub dims: Vec<usize>,
    pub runs: usize,
    pub pop: usize,
    pub iters: usize,
    pub base_seed: u64,
    pub output_dir: PathBuf,
    pub telemetry: Telemetry,
    pub workers: Option<usize>,
    pub composite_dir: Option<PathBuf>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            algorithms: vec![Algorithm::Mfo, Algorithm::Nlcmfo],
            functions: Vec::new(),
            dims: Vec::new(),
            runs: 30,
            pop: 30,
            iters: 500,
            base_seed: 0,
            output_dir: PathBuf::from("results"),
            telemetry: Telemetry::Summary,
            workers: None,
            composite_dir: None,
        }
    }
}

impl ExperimentConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut cfg = Self::from_toml(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        // Relative pack paths are taken relative to the config file.
        if let (Some(dir), Some(parent)) = (&cfg.composite_dir, path.parent()) {
            if dir.is_relative() {
                cfg.composite_dir = Some(parent.join(dir));
            }
        }
        Ok(cfg)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    /// Seed of run `k` in every cell.
    pub fn seed_for(&self, run_index: usize) -> u64 {
        self.base_seed.wrapping_add(run_index as u64)
    }

    /// Worker count: the config value, else the environment variable, else
    /// the number of available cores.
    pub fn resolved_workers(&self) -> Result<usize> {
        if let Some(w) = self.workers {
            return Ok(w);
        }
        match std::env::var(WORKERS_ENV) {
            Ok(v) => v
                .trim()
                .parse::<usize>()
                .ok()
                .filter(|&w| w >= 1)
                .ok_or_else(|| Error::Config(format!("{WORKERS_ENV} must be a positive integer, got `{v}`"))),
            Err(_) => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
        }
    }

    /// The suite this experiment draws from, with its composite pack loaded.
    pub fn suite(&self) -> Result<Suite> {
        let mut suite = Suite::new();
        if let Some(dir) = &self.composite_dir {
            suite.load_composite_dir(dir).map_err(|e| Error::Config(format!("composite pack: {e}")))?;
        }
        Ok(suite)
    }

    /// Checks every setting and resolves the cell grid, algorithm-major, then
    /// function, then dimension. Nothing is run.
    pub fn cells(&self) -> Result<Vec<Cell>> {
        let bad = |m: String| Err(Error::Config(m));
        if self.algorithms.is_empty() {
            return bad("no algorithms listed".into());
        }
        if self.functions.is_empty() {
            return bad("no functions listed".into());
        }
        if self.runs < 1 {
            return bad("runs must be at least 1".into());
        }
        if self.pop < 2 {
            return bad(format!("pop must be at least 2, got {}", self.pop));
        }
        if self.iters < 1 {
            return bad("iters must be at least 1".into());
        }
        if self.dims.contains(&0) {
            return bad("dims must be positive".into());
        }
        if self.workers == Some(0) {
            return bad("workers must be at least 1".into());
        }
        let suite = self.suite()?;
        let mut functions = Vec::new();
        for id in &self.functions {
            let f = suite.lookup(id).map_err(|e| Error::Config(e.to_string()))?;
            if f.scalable && !self.dims.is_empty() {
                for &d in &self.dims {
                    functions.push(f.with_dim(d)?);
                }
            } else {
                functions.push(f);
            }
        }
        Ok(self
            .algorithms
            .iter()
            .flat_map(|&algorithm| functions.iter().map(move |f| Cell { algorithm, function: f.clone() }))
            .collect())
    }
}
