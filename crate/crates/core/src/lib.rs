//! Moth-flame optimization (MFO) and its nonlinear Lévy chaotic variant (NLCMFO).
//!
//! The crate is organised bottom-up:
//!
//! - [`rng`]: the single seeded generator every stochastic component draws from.
//! - [`stochastic`]: chaotic maps and the Mantegna Lévy-flight sampler.
//! - [`engine`]: search spaces, the flame archive, spiral updates and the MFO/NLCMFO main loop.
//! - [`baselines`]: PSO and GWO reference optimizers sharing the engine's result contract.
//! - [`benchmarks`]: the F1–F23 test suite plus a registration point for composite packs.
//! - [`hypertune`]: hyperparameter tuning of a toy logistic classifier and its evaluation metrics.
//! - [`harness`]: multi-run experiments, summary statistics and CSV export.

pub mod baselines;
pub mod benchmarks;
pub mod engine;
mod error;
pub mod harness;
pub mod hypertune;
pub mod rng;
pub mod stochastic;

pub use error::{Error, Result};
