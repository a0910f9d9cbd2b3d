//! Composite (shifted, rotated, weighted) functions supplied from outside the crate.
//!
//! A pack is a directory with one TOML file per function, e.g. `F24.toml`:
//!
//! ```toml
//! id = "F24"
//! dim = 30
//! lower = -100.0
//! upper = 100.0
//! f_min = 2400.0
//!
//! [[component]]
//! function = "rastrigin"   # sphere | rosenbrock | schwefel | rastrigin | ackley | griewank
//! sigma = 20.0
//! lambda = 1.0
//! bias = 0.0
//! shift = [0.0, ...]       # dim values
//! rotation = [[...], ...]  # optional dim x dim matrix, identity when absent
//! ```
//!
//! The value at `x` is `f_min + Σ w_i (λ_i g_i(M_i (x - o_i)) + bias_i)` with
//! `w_i ∝ exp(-|x - o_i|² / (2 dim σ_i²)) / |x - o_i|`, normalised to sum to one.
//! At `x = o_i` the i-th component takes the full weight.

use std::fs;
use std::path::Path;
use std::sync::Arc;

use serde::Deserialize;

use super::functions;
use crate::{Error, Result};

/// An externally supplied benchmark (F24 and up).
pub trait CompositeFunction: Send + Sync {
    fn id(&self) -> &str;
    fn dim(&self) -> usize;
    fn bounds(&self) -> (f64, f64);
    fn f_min(&self) -> f64;
    fn evaluate(&self, x: &[f64]) -> f64;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseFunction {
    Sphere,
    Rosenbrock,
    Schwefel,
    Rastrigin,
    Ackley,
    Griewank,
}

impl BaseFunction {
    fn eval(self, z: &[f64]) -> f64 {
        match self {
            BaseFunction::Sphere => functions::sphere(z),
            BaseFunction::Rosenbrock => functions::rosenbrock(z),
            // shifted so that the optimum is 0 like the other bases
            BaseFunction::Schwefel => functions::schwefel(z) + 418.9829 * z.len() as f64,
            BaseFunction::Rastrigin => functions::rastrigin(z),
            BaseFunction::Ackley => functions::ackley(z),
            BaseFunction::Griewank => functions::griewank(z),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
pub struct Component {
    pub function: BaseFunction,
    pub sigma: f64,
    #[serde(default = "one")]
    pub lambda: f64,
    #[serde(default)]
    pub bias: f64,
    pub shift: Vec<f64>,
    #[serde(default)]
    pub rotation: Option<Vec<Vec<f64>>>,
}

fn one() -> f64 {
    1.0
}

/// A composition function read from a pack file.
#[derive(Debug, Clone, Deserialize)]
pub struct Composition {
    pub id: String,
    pub dim: usize,
    pub lower: f64,
    pub upper: f64,
    pub f_min: f64,
    #[serde(rename = "component")]
    pub components: Vec<Component>,
}

impl Composition {
    pub fn from_toml(text: &str) -> Result<Self> {
        let c: Composition = toml::from_str(text).map_err(|e| Error::Data(e.to_string()))?;
        c.validate()?;
        Ok(c)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_toml(&text).map_err(|e| Error::Data(format!("{}: {e}", path.display())))
    }

    fn validate(&self) -> Result<()> {
        let range_ok = self.lower.is_finite() && self.upper.is_finite() && self.lower < self.upper;
        if self.dim == 0 || !range_ok {
            return Err(Error::Data(format!("{}: bad dimension or range", self.id)));
        }
        if self.components.is_empty() {
            return Err(Error::Data(format!("{}: no components", self.id)));
        }
        for (i, c) in self.components.iter().enumerate() {
            if c.shift.len() != self.dim {
                return Err(Error::Data(format!("{} component {i}: shift length", self.id)));
            }
            let sigma_ok = c.sigma.is_finite() && c.sigma > 0.0;
            if !sigma_ok {
                return Err(Error::Data(format!("{} component {i}: sigma must be positive", self.id)));
            }
            if let Some(m) = &c.rotation {
                if m.len() != self.dim || m.iter().any(|r| r.len() != self.dim) {
                    return Err(Error::Data(format!("{} component {i}: rotation shape", self.id)));
                }
            }
        }
        Ok(())
    }
}

impl CompositeFunction for Composition {
    fn id(&self) -> &str {
        &self.id
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn bounds(&self) -> (f64, f64) {
        (self.lower, self.upper)
    }

    fn f_min(&self) -> f64 {
        self.f_min
    }

    fn evaluate(&self, x: &[f64]) -> f64 {
        let d = self.dim as f64;
        let mut weights = Vec::with_capacity(self.components.len());
        let mut values = Vec::with_capacity(self.components.len());
        let mut exact = None;
        for (i, c) in self.components.iter().enumerate() {
            let diff: Vec<f64> = x.iter().zip(&c.shift).map(|(a, o)| a - o).collect();
            let dist2: f64 = diff.iter().map(|v| v * v).sum();
            let z = match &c.rotation {
                Some(m) => m.iter().map(|row| row.iter().zip(&diff).map(|(r, v)| r * v).sum()).collect(),
                None => diff,
            };
            values.push(c.lambda * c.function.eval(&z) + c.bias);
            if dist2 == 0.0 {
                exact.get_or_insert(i);
                weights.push(0.0);
            } else {
                weights.push((-dist2 / (2.0 * d * c.sigma * c.sigma)).exp() / dist2.sqrt());
            }
        }
        if let Some(i) = exact {
            return self.f_min + values[i];
        }
        let total: f64 = weights.iter().sum();
        let mixed = if total > 0.0 {
            weights.iter().zip(&values).map(|(w, v)| w / total * v).sum()
        } else {
            values.iter().sum::<f64>() / values.len() as f64
        };
        self.f_min + mixed
    }
}

/// Loads every `*.toml` in `dir`, sorted by file name.
pub fn load_pack(dir: &Path) -> Result<Vec<Arc<dyn CompositeFunction>>> {
    let entries = fs::read_dir(dir).map_err(|e| Error::io(dir, e))?;
    let mut paths = Vec::new();
    for entry in entries {
        let path = entry.map_err(|e| Error::io(dir, e))?.path();
        if path.extension().is_some_and(|e| e == "toml") {
            paths.push(path);
        }
    }
    paths.sort();
    paths.iter().map(|p| Composition::from_file(p).map(|c| Arc::new(c) as Arc<dyn CompositeFunction>)).collect()
}
