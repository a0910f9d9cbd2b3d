use std::f64::consts::PI;

use statrs::function::gamma::gamma;

use crate::rng::SeededRng;
use crate::{Error, Result};

/// Leading multiplier applied to every Lévy step.
pub const LEVY_SCALE: f64 = 0.05;

const ALPHA_MIN: f64 = 0.3;
const ALPHA_MAX: f64 = 1.99;

// statrs is exact at integers >= 2; shifting keeps Γ(1) = 1 exactly.
fn gamma_fn(x: f64) -> f64 {
    if x < 2.0 {
        gamma(x + 1.0) / x
    } else {
        gamma(x)
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > ALPHA_MIN && alpha <= ALPHA_MAX {
        Ok(())
    } else {
        Err(Error::Parameter(format!("Lévy index alpha must lie in ({ALPHA_MIN}, {ALPHA_MAX}], got {alpha}")))
    }
}

/// Mantegna's standard deviation for the numerator draw:
/// `[Γ(1+α) sin(πα/2) / (Γ((1+α)/2) α 2^((α-1)/2))]^(1/α)`.
pub fn levy_sigma_x(alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    let num = gamma_fn(1.0 + alpha) * (PI * alpha / 2.0).sin();
    let den = gamma_fn((1.0 + alpha) / 2.0) * alpha * 2f64.powf((alpha - 1.0) / 2.0);
    Ok((num / den).powf(1.0 / alpha))
}

/// Heavy-tailed step generator: `0.05 * x / |y|^(1/α)` with
/// `x ~ N(0, σx²)` and `y ~ N(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LevySampler {
    alpha: f64,
    scale: f64,
    sigma_x: f64,
    sigma_y: f64,
}

impl LevySampler {
    pub fn new(alpha: f64) -> Result<Self> {
        Ok(Self { alpha, scale: LEVY_SCALE, sigma_x: levy_sigma_x(alpha)?, sigma_y: 1.0 })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn sigma_x(&self) -> f64 {
        self.sigma_x
    }

    pub fn sigma_y(&self) -> f64 {
        self.sigma_y
    }

    /// The step produced by already-scaled normal draws `x` and `y`.
    pub fn step_from_draws(&self, x: f64, y: f64) -> f64 {
        self.scale * x / y.abs().powf(1.0 / self.alpha)
    }

    /// One Lévy step. A `y` draw of exactly zero is redrawn.
    pub fn sample(&self, rng: &mut SeededRng) -> f64 {
        let x = self.sigma_x * rng.normal();
        let y = loop {
            let y = self.sigma_y * rng.normal();
            if y != 0.0 {
                break y;
            }
        };
        self.step_from_draws(x, y)
    }

    /// Fills `row` with independent steps.
    pub fn fill(&self, row: &mut [f64], rng: &mut SeededRng) {
        for v in row {
            *v = self.sample(rng);
        }
    }

    /// A `rows x cols` matrix of independent steps, row-major.
    pub fn matrix(&self, rows: usize, cols: usize, rng: &mut SeededRng) -> Result<Vec<Vec<f64>>> {
        if rows == 0 || cols == 0 {
            return Err(Error::Parameter(format!("Lévy matrix must be non-empty, got {rows}x{cols}")));
        }
        Ok((0..rows)
            .map(|_| {
                let mut row = vec![0.0; cols];
                self.fill(&mut row, rng);
                row
            })
            .collect())
    }
}
