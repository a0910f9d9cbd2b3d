//! The MFO and NLCMFO optimization engines.
//!
//! One run evaluates the initial swarm, then for each of `max_iter` iterations
//! merges the latest evaluations into the [`FlameArchive`], moves every moth on a
//! logarithmic spiral around its assigned flame, clamps it back into the search
//! space and evaluates it again. That is `n * (max_iter + 1)` objective calls.
//! The iteration counter fed to the schedules runs from 1 to `max_iter`, so the
//! last move uses a single flame, `a = -2` and the smallest weight.

mod archive;
mod ops;
mod space;
mod stagnation;

use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

pub use archive::{update_flames, FlameArchive};
pub use ops::{
    assign_flame, convergence_constant, flame_count, nonlinear_weight, spiral_step_mfo, spiral_step_nlcmfo, t_mfo,
    t_nlcmfo,
};
pub use space::{init_population, init_population_with, SearchSpace, Swarm};
pub use stagnation::MapScheduler;

use crate::rng::SeededRng;
use crate::stochastic::{ChaoticMap, LevySampler, MapKind};
use crate::{Error, Result};

/// A cost function to minimize. Implementations must be deterministic for the
/// duration of a run; `&mut self` only exists so seeded noise streams (F7) and
/// counters can live inside the objective.
pub trait Objective {
    fn evaluate(&mut self, x: &[f64]) -> f64;
}

impl<F: FnMut(&[f64]) -> f64> Objective for F {
    fn evaluate(&mut self, x: &[f64]) -> f64 {
        self(x)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    #[serde(rename = "MFO")]
    Mfo,
    #[serde(rename = "NLCMFO")]
    Nlcmfo,
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "MFO" => Ok(Variant::Mfo),
            "NLCMFO" => Ok(Variant::Nlcmfo),
            _ => Err(Error::Config(format!("unknown engine variant `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EngineConfig {
    pub variant: Variant,
    pub pop_size: usize,
    pub max_iter: usize,
    pub seed: u64,
    /// Spiral shape constant.
    pub b: f64,
    /// Lévy stability index (NLCMFO only).
    pub alpha: f64,
    pub map_primary: MapKind,
    pub map_secondary: MapKind,
    pub map_init: f64,
    /// Unchanged iterations before the chaotic maps are swapped.
    pub stagnation_window: usize,
    /// Keep a full position snapshot per iteration.
    pub record_history: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self {
            variant: Variant::Nlcmfo,
            pop_size: 30,
            max_iter: 500,
            seed: 0,
            b: 1.0,
            alpha: 1.5,
            map_primary: MapKind::Sine,
            map_secondary: MapKind::Chebyshev,
            map_init: 0.7,
            stagnation_window: 5,
            record_history: false,
        }
    }
}

impl EngineConfig {
    pub fn mfo() -> Self {
        Self { variant: Variant::Mfo, ..Self::default() }
    }

    pub fn nlcmfo() -> Self {
        Self::default()
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_budget(mut self, pop_size: usize, max_iter: usize) -> Self {
        self.pop_size = pop_size;
        self.max_iter = max_iter;
        self
    }

    pub fn validate(&self) -> Result<()> {
        validate_budget(self.pop_size, self.max_iter)?;
        if !self.b.is_finite() {
            return Err(Error::Parameter(format!("spiral constant b must be finite, got {}", self.b)));
        }
        if self.stagnation_window == 0 {
            return Err(Error::Parameter("stagnation window must be at least 1".into()));
        }
        if self.variant == Variant::Nlcmfo {
            LevySampler::new(self.alpha)?;
            ChaoticMap::new(self.map_primary, self.map_init)?;
            ChaoticMap::new(self.map_secondary, self.map_init)?;
        }
        Ok(())
    }
}

pub(crate) fn validate_budget(pop_size: usize, max_iter: usize) -> Result<()> {
    if pop_size < 2 {
        return Err(Error::Parameter(format!("population must be at least 2, got {pop_size}")));
    }
    if max_iter < 1 {
        return Err(Error::Parameter("max_iter must be at least 1".into()));
    }
    Ok(())
}

/// Outcome of one optimizer run with its diagnostic curves.
#[derive(Debug, Clone, PartialEq)]
pub struct RunResult {
    pub best_position: Vec<f64>,
    pub best_fitness: f64,
    /// Best-so-far fitness after each iteration.
    pub convergence: Vec<f64>,
    /// Mean fitness of the swarm evaluated in each iteration.
    pub mean_fitness: Vec<f64>,
    /// First coordinate of the first search agent after each iteration.
    pub trajectory: Vec<f64>,
    /// Per-iteration snapshots of every agent's position, when requested.
    pub history: Option<Vec<Vec<Vec<f64>>>>,
    pub wall_time: f64,
    pub evaluations: usize,
}

impl RunResult {
    /// Equality of everything except the wall-clock time.
    pub fn same_outcome(&self, other: &RunResult) -> bool {
        let bits = |v: &[f64]| v.iter().map(|x| x.to_bits()).collect::<Vec<_>>();
        bits(&self.best_position) == bits(&other.best_position)
            && self.best_fitness.to_bits() == other.best_fitness.to_bits()
            && bits(&self.convergence) == bits(&other.convergence)
            && bits(&self.mean_fitness) == bits(&other.mean_fitness)
            && bits(&self.trajectory) == bits(&other.trajectory)
            && self.history == other.history
            && self.evaluations == other.evaluations
    }
}

/// Shared evaluation and telemetry bookkeeping for every optimizer in the crate.
pub(crate) struct Recorder<'a> {
    objective: &'a mut dyn Objective,
    record_history: bool,
    started: Instant,
    pub evaluations: usize,
    convergence: Vec<f64>,
    mean_fitness: Vec<f64>,
    trajectory: Vec<f64>,
    history: Vec<Vec<Vec<f64>>>,
}

impl<'a> Recorder<'a> {
    pub fn new(objective: &'a mut dyn Objective, max_iter: usize, record_history: bool) -> Self {
        Self {
            objective,
            record_history,
            started: Instant::now(),
            evaluations: 0,
            convergence: Vec::with_capacity(max_iter),
            mean_fitness: Vec::with_capacity(max_iter),
            trajectory: Vec::with_capacity(max_iter),
            history: Vec::new(),
        }
    }

    /// Evaluates one position, refusing NaN and infinite costs.
    pub fn evaluate(&mut self, x: &[f64]) -> Result<f64> {
        self.evaluations += 1;
        let value = self.objective.evaluate(x);
        if value.is_finite() {
            Ok(value)
        } else {
            Err(Error::Objective { value, position: x.to_vec() })
        }
    }

    pub fn evaluate_all(&mut self, positions: &[Vec<f64>], out: &mut [f64]) -> Result<()> {
        for (f, x) in out.iter_mut().zip(positions) {
            *f = self.evaluate(x)?;
        }
        Ok(())
    }

    pub fn record(&mut self, best_so_far: f64, positions: &[Vec<f64>], fitness: &[f64]) {
        let prev = self.convergence.last().copied().unwrap_or(f64::INFINITY);
        self.convergence.push(best_so_far.min(prev));
        self.mean_fitness.push(fitness.iter().sum::<f64>() / fitness.len() as f64);
        self.trajectory.push(positions[0][0]);
        if self.record_history {
            self.history.push(positions.to_vec());
        }
    }

    pub fn finish(self, best_position: Vec<f64>, best_fitness: f64) -> RunResult {
        RunResult {
            best_position,
            best_fitness,
            convergence: self.convergence,
            mean_fitness: self.mean_fitness,
            trajectory: self.trajectory,
            history: self.record_history.then_some(self.history),
            wall_time: self.started.elapsed().as_secs_f64(),
            evaluations: self.evaluations,
        }
    }
}

/// Runs MFO or NLCMFO from a random initial swarm.
pub fn run(config: &EngineConfig, space: &SearchSpace, objective: &mut dyn Objective) -> Result<RunResult> {
    config.validate()?;
    let mut rng = SeededRng::new(config.seed);
    let swarm = init_population(space, config.pop_size, &mut rng);
    run_loop(config, space, objective, swarm.positions, rng)
}

/// Runs MFO or NLCMFO from caller-supplied starting positions (one row per moth).
pub fn run_from(
    config: &EngineConfig,
    space: &SearchSpace,
    objective: &mut dyn Objective,
    initial: Vec<Vec<f64>>,
) -> Result<RunResult> {
    config.validate()?;
    if initial.len() != config.pop_size || initial.iter().any(|r| r.len() != space.dim()) {
        return Err(Error::Parameter(format!("initial swarm must be {}x{}", config.pop_size, space.dim())));
    }
    run_loop(config, space, objective, initial, SeededRng::new(config.seed))
}

fn run_loop(
    config: &EngineConfig,
    space: &SearchSpace,
    objective: &mut dyn Objective,
    mut positions: Vec<Vec<f64>>,
    mut rng: SeededRng,
) -> Result<RunResult> {
    let n = config.pop_size;
    let t_max = config.max_iter;
    let dim = space.dim();
    for row in &mut positions {
        space.repair(row);
    }

    let mut rec = Recorder::new(objective, t_max, config.record_history);
    let mut swarm = Swarm { fitness: vec![f64::NAN; n], positions };
    rec.evaluate_all(&swarm.positions, &mut swarm.fitness)?;

    let nlc = config.variant == Variant::Nlcmfo;
    let levy = if nlc { Some(LevySampler::new(config.alpha)?) } else { None };
    let mut maps = if nlc {
        Some(MapScheduler::new(
            ChaoticMap::new(config.map_primary, config.map_init)?,
            ChaoticMap::new(config.map_secondary, config.map_init)?,
            config.stagnation_window,
        ))
    } else {
        None
    };

    let mut archive: Option<FlameArchive> = None;
    let mut levy_row = vec![0.0; dim];
    let mut moved = vec![0.0; dim];

    for iter in 0..t_max {
        let l = iter + 1;
        let next = update_flames(archive.as_ref(), &swarm)?;
        if let (Some(maps), Some(prev)) = (maps.as_mut(), archive.as_ref()) {
            maps.observe(&next.fitness, &prev.fitness);
        }
        let flames = archive.insert(next);

        let flame_no = flame_count(n, l, t_max);
        let a = convergence_constant(l, t_max);
        let w = nonlinear_weight(l, t_max);

        for i in 0..n {
            let flame = &flames.positions[assign_flame(i, flame_no)];
            let moth = &swarm.positions[i];
            match (maps.as_mut(), levy.as_ref()) {
                (Some(maps), Some(levy)) => {
                    let t = t_nlcmfo(a, maps.next_value()?);
                    levy.fill(&mut levy_row, &mut rng);
                    spiral_step_nlcmfo(moth, flame, config.b, t, w, &levy_row, &mut moved);
                }
                _ => {
                    let t = t_mfo(a, rng.uniform());
                    spiral_step_mfo(moth, flame, config.b, t, &mut moved);
                }
            }
            space.repair(&mut moved);
            swarm.positions[i].copy_from_slice(&moved);
        }

        rec.evaluate_all(&swarm.positions, &mut swarm.fitness)?;
        let swarm_best = swarm.fitness.iter().copied().fold(f64::INFINITY, f64::min);
        rec.record(flames.best_fitness().min(swarm_best), &swarm.positions, &swarm.fitness);
    }

    let last = update_flames(archive.as_ref(), &swarm)?;
    Ok(rec.finish(last.positions[0].clone(), last.fitness[0]))
}
