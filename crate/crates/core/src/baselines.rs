//! Reference optimizers for comparison runs: global-best PSO and GWO.
//!
//! Both follow the engine's contract: `n * (max_iter + 1)` evaluations, clamped
//! positions and the same telemetry in [`RunResult`].

use crate::engine::{init_population, validate_budget, Objective, Recorder, RunResult, SearchSpace};
use crate::rng::SeededRng;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct PsoConfig {
    pub inertia: f64,
    pub c1: f64,
    pub c2: f64,
    /// Velocity limit as a fraction of each dimension's range.
    pub velocity_clamp: f64,
    pub pop_size: usize,
    pub max_iter: usize,
    pub seed: u64,
    /// Keep a full position snapshot per iteration.
    pub record_history: bool,
}

impl Default for PsoConfig {
    fn default() -> Self {
        Self {
            inertia: 0.5,
            c1: 2.0,
            c2: 2.0,
            velocity_clamp: 0.2,
            pop_size: 30,
            max_iter: 500,
            seed: 0,
            record_history: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GwoConfig {
    /// Convergence constant at the first iteration; decreases linearly to `a_end`.
    pub a_start: f64,
    pub a_end: f64,
    pub pop_size: usize,
    pub max_iter: usize,
    pub seed: u64,
    /// Keep a full position snapshot per iteration.
    pub record_history: bool,
}

impl Default for GwoConfig {
    fn default() -> Self {
        Self { a_start: 2.0, a_end: 0.0, pop_size: 30, max_iter: 500, seed: 0, record_history: false }
    }
}

fn check_initial(initial: &[Vec<f64>], n: usize, space: &SearchSpace) -> Result<()> {
    if initial.len() != n || initial.iter().any(|r| r.len() != space.dim()) {
        return Err(Error::Parameter(format!("initial swarm must be {n}x{}", space.dim())));
    }
    Ok(())
}

pub fn run_pso(config: &PsoConfig, space: &SearchSpace, objective: &mut dyn Objective) -> Result<RunResult> {
    validate_budget(config.pop_size, config.max_iter)?;
    let mut rng = SeededRng::new(config.seed);
    let init = init_population(space, config.pop_size, &mut rng).positions;
    pso_loop(config, space, objective, init, rng)
}

/// PSO from caller-supplied starting positions.
pub fn run_pso_from(
    config: &PsoConfig,
    space: &SearchSpace,
    objective: &mut dyn Objective,
    initial: Vec<Vec<f64>>,
) -> Result<RunResult> {
    validate_budget(config.pop_size, config.max_iter)?;
    check_initial(&initial, config.pop_size, space)?;
    pso_loop(config, space, objective, initial, SeededRng::new(config.seed))
}

fn pso_loop(
    config: &PsoConfig,
    space: &SearchSpace,
    objective: &mut dyn Objective,
    mut positions: Vec<Vec<f64>>,
    mut rng: SeededRng,
) -> Result<RunResult> {
    let n = config.pop_size;
    let dim = space.dim();
    let vmax: Vec<f64> = space.lb().iter().zip(space.ub()).map(|(l, u)| config.velocity_clamp * (u - l)).collect();
    for row in &mut positions {
        space.repair(row);
    }

    let mut rec = Recorder::new(objective, config.max_iter, config.record_history);
    let mut fitness = vec![0.0; n];
    rec.evaluate_all(&positions, &mut fitness)?;

    let mut velocities = vec![vec![0.0; dim]; n];
    let mut pbest = positions.clone();
    let mut pbest_fit = fitness.clone();
    let mut g = argmin(&pbest_fit);
    let mut gbest = pbest[g].clone();
    let mut gbest_fit = pbest_fit[g];

    for _ in 0..config.max_iter {
        for i in 0..n {
            for j in 0..dim {
                let r1 = rng.uniform();
                let r2 = rng.uniform();
                let x = positions[i][j];
                let v = config.inertia * velocities[i][j]
                    + config.c1 * r1 * (pbest[i][j] - x)
                    + config.c2 * r2 * (gbest[j] - x);
                velocities[i][j] = v.clamp(-vmax[j], vmax[j]);
                positions[i][j] = x + velocities[i][j];
            }
            space.repair(&mut positions[i]);
        }
        rec.evaluate_all(&positions, &mut fitness)?;
        for i in 0..n {
            if fitness[i] < pbest_fit[i] {
                pbest_fit[i] = fitness[i];
                pbest[i].copy_from_slice(&positions[i]);
            }
        }
        g = argmin(&pbest_fit);
        if pbest_fit[g] < gbest_fit {
            gbest_fit = pbest_fit[g];
            gbest.copy_from_slice(&pbest[g]);
        }
        rec.record(gbest_fit, &positions, &fitness);
    }
    Ok(rec.finish(gbest, gbest_fit))
}

pub fn run_gwo(config: &GwoConfig, space: &SearchSpace, objective: &mut dyn Objective) -> Result<RunResult> {
    validate_budget(config.pop_size, config.max_iter)?;
    let mut rng = SeededRng::new(config.seed);
    let init = init_population(space, config.pop_size, &mut rng).positions;
    gwo_loop(config, space, objective, init, rng)
}

/// GWO from caller-supplied starting positions.
pub fn run_gwo_from(
    config: &GwoConfig,
    space: &SearchSpace,
    objective: &mut dyn Objective,
    initial: Vec<Vec<f64>>,
) -> Result<RunResult> {
    validate_budget(config.pop_size, config.max_iter)?;
    check_initial(&initial, config.pop_size, space)?;
    gwo_loop(config, space, objective, initial, SeededRng::new(config.seed))
}

/// Alpha, beta and delta wolves: the three best positions seen so far.
struct Leaders {
    pos: [Vec<f64>; 3],
    fit: [f64; 3],
}

impl Leaders {
    fn from_population(positions: &[Vec<f64>], fitness: &[f64]) -> Self {
        let mut order: Vec<usize> = (0..fitness.len()).collect();
        order.sort_by(|&a, &b| fitness[a].total_cmp(&fitness[b]));
        let pick = |k: usize| order[k.min(order.len() - 1)];
        Leaders { pos: [0, 1, 2].map(|k| positions[pick(k)].clone()), fit: [0, 1, 2].map(|k| fitness[pick(k)]) }
    }

    fn offer(&mut self, x: &[f64], f: f64) {
        let Some(rank) = self.fit.iter().position(|&g| f < g) else { return };
        for k in (rank + 1..3).rev() {
            self.fit[k] = self.fit[k - 1];
            self.pos[k] = self.pos[k - 1].clone();
        }
        self.fit[rank] = f;
        self.pos[rank] = x.to_vec();
    }
}

fn gwo_loop(
    config: &GwoConfig,
    space: &SearchSpace,
    objective: &mut dyn Objective,
    mut positions: Vec<Vec<f64>>,
    mut rng: SeededRng,
) -> Result<RunResult> {
    let n = config.pop_size;
    let dim = space.dim();
    let t_max = config.max_iter;
    for row in &mut positions {
        space.repair(row);
    }

    let mut rec = Recorder::new(objective, t_max, config.record_history);
    let mut fitness = vec![0.0; n];
    rec.evaluate_all(&positions, &mut fitness)?;
    let mut leaders = Leaders::from_population(&positions, &fitness);

    for iter in 0..t_max {
        let a = config.a_start + (config.a_end - config.a_start) * iter as f64 / t_max as f64;
        for x in positions.iter_mut() {
            for j in 0..dim {
                let mut sum = 0.0;
                for leader in &leaders.pos {
                    let big_a = 2.0 * a * rng.uniform() - a;
                    let big_c = 2.0 * rng.uniform();
                    let d = (big_c * leader[j] - x[j]).abs();
                    sum += leader[j] - big_a * d;
                }
                x[j] = sum / 3.0;
            }
            space.repair(x);
        }
        rec.evaluate_all(&positions, &mut fitness)?;
        for (x, &f) in positions.iter().zip(&fitness) {
            leaders.offer(x, f);
        }
        rec.record(leaders.fit[0], &positions, &fitness);
    }
    let [alpha, ..] = leaders.pos;
    Ok(rec.finish(alpha, leaders.fit[0]))
}

fn argmin(values: &[f64]) -> usize {
    values.iter().enumerate().min_by(|a, b| a.1.total_cmp(b.1)).map(|(i, _)| i).expect("non-empty population")
}
