use serde::{Deserialize, Serialize};

use crate::rng::SeededRng;
use crate::{Error, Result};

/// Box-bounded feasible region.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchSpace {
    lb: Vec<f64>,
    ub: Vec<f64>,
}

impl SearchSpace {
    pub fn new(lb: Vec<f64>, ub: Vec<f64>) -> Result<Self> {
        if lb.is_empty() {
            return Err(Error::SearchSpace("dimension must be at least 1".into()));
        }
        if lb.len() != ub.len() {
            return Err(Error::SearchSpace(format!("{} lower bounds but {} upper bounds", lb.len(), ub.len())));
        }
        for (i, (l, u)) in lb.iter().zip(&ub).enumerate() {
            if !(l.is_finite() && u.is_finite() && l < u) {
                return Err(Error::SearchSpace(format!("bound {i}: need lb < ub, got [{l}, {u}]")));
            }
        }
        Ok(Self { lb, ub })
    }

    /// The same interval on every axis.
    pub fn uniform(dim: usize, lo: f64, hi: f64) -> Result<Self> {
        Self::new(vec![lo; dim], vec![hi; dim])
    }

    pub fn dim(&self) -> usize {
        self.lb.len()
    }

    pub fn lb(&self) -> &[f64] {
        &self.lb
    }

    pub fn ub(&self) -> &[f64] {
        &self.ub
    }

    pub fn midpoint(&self) -> Vec<f64> {
        self.lb.iter().zip(&self.ub).map(|(l, u)| 0.5 * (l + u)).collect()
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim() && x.iter().zip(&self.lb).zip(&self.ub).all(|((v, l), u)| l <= v && v <= u)
    }

    /// Clamps every coordinate into its bounds.
    pub fn repair(&self, x: &mut [f64]) {
        for ((v, &l), &u) in x.iter_mut().zip(&self.lb).zip(&self.ub) {
            *v = if v.is_nan() { l } else { v.clamp(l, u) };
        }
    }

    /// A uniformly random point, `(ub - lb) * u + lb` per coordinate.
    pub fn sample(&self, rng: &mut SeededRng) -> Vec<f64> {
        self.sample_with(|| rng.uniform())
    }

    pub(crate) fn sample_with(&self, mut draw: impl FnMut() -> f64) -> Vec<f64> {
        self.lb.iter().zip(&self.ub).map(|(l, u)| (u - l) * draw() + l).collect()
    }
}

/// Moth positions plus the fitness stamped on each row. Unevaluated rows carry NaN.
#[derive(Debug, Clone, PartialEq)]
pub struct Swarm {
    pub positions: Vec<Vec<f64>>,
    pub fitness: Vec<f64>,
}

impl Swarm {
    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }
}

/// Random initial swarm of `n` moths.
pub fn init_population(space: &SearchSpace, n: usize, rng: &mut SeededRng) -> Swarm {
    init_population_with(space, n, || rng.uniform())
}

/// [`init_population`] driven by an arbitrary `[0, 1)` source.
pub fn init_population_with(space: &SearchSpace, n: usize, mut draw: impl FnMut() -> f64) -> Swarm {
    let positions = (0..n).map(|_| space.sample_with(&mut draw)).collect();
    Swarm { positions, fitness: vec![f64::NAN; n] }
}
