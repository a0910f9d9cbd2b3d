//! Experiment runner: repeated independent runs of each algorithm on each
//! benchmark, summary statistics, and CSV telemetry export.
//!
//! Run `k` of every cell uses seed `base_seed + k`, so any single run can be
//! reproduced on its own. Cells run in parallel but results are gathered and
//! written in grid order, so output files depend only on the configuration.
//! The runtime columns are the one exception, being wall-clock measurements.

mod config;
mod export;
mod runner;
mod stats;

pub(crate) use export::write_csv;

pub use config::{Algorithm, ExperimentConfig, Telemetry, WORKERS_ENV};
pub use export::{export_curves, format_sig6};
pub use runner::{run_algorithm, run_experiment, Cell, ExperimentReport, FinalRecord};
pub use stats::{summarize, StatsSummary};
