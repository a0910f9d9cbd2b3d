use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Replacement for a state that would otherwise lock the orbit onto a fixed point.
const REVIVE: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MapKind {
    Logistic,
    Tent,
    Sinusoidal,
    Circle,
    Gauss,
    Chebyshev,
    Singer,
    Sine,
    Iterative,
}

impl MapKind {
    pub const ALL: [MapKind; 9] = [
        MapKind::Logistic,
        MapKind::Tent,
        MapKind::Sinusoidal,
        MapKind::Circle,
        MapKind::Gauss,
        MapKind::Chebyshev,
        MapKind::Singer,
        MapKind::Sine,
        MapKind::Iterative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MapKind::Logistic => "logistic",
            MapKind::Tent => "tent",
            MapKind::Sinusoidal => "sinusoidal",
            MapKind::Circle => "circle",
            MapKind::Gauss => "gauss",
            MapKind::Chebyshev => "chebyshev",
            MapKind::Singer => "singer",
            MapKind::Sine => "sine",
            MapKind::Iterative => "iterative",
        }
    }

    /// Default `(a, b)` constants. Unused slots are zero.
    pub fn default_params(self) -> (f64, f64) {
        match self {
            MapKind::Logistic => (4.0, 0.0),
            MapKind::Sinusoidal => (2.3, 0.0),
            MapKind::Circle => (0.5, 0.2),
            MapKind::Chebyshev => (4.0, 0.0),
            MapKind::Sine => (4.0, 0.0),
            MapKind::Iterative => (0.7, 0.0),
            MapKind::Tent | MapKind::Gauss | MapKind::Singer => (0.0, 0.0),
        }
    }

    /// Whether the raw orbit lives in `[-1, 1]` rather than `[0, 1]`.
    pub fn is_symmetric(self) -> bool {
        matches!(self, MapKind::Chebyshev | MapKind::Iterative)
    }

    fn in_domain(self, x: f64) -> bool {
        if !x.is_finite() {
            return false;
        }
        match self {
            MapKind::Chebyshev => (-1.0..=1.0).contains(&x),
            MapKind::Iterative => (-1.0..=1.0).contains(&x) && x != 0.0,
            _ => (0.0..=1.0).contains(&x),
        }
    }
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MapKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MapKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parameter(format!("unknown chaotic map `{s}`")))
    }
}

/// A one-dimensional chaotic recurrence together with its current state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChaoticMap {
    pub kind: MapKind,
    pub a: f64,
    pub b: f64,
    pub state: f64,
}

impl ChaoticMap {
    /// Map with the kind's default constants, starting at `state`.
    pub fn new(kind: MapKind, state: f64) -> Result<Self> {
        let (a, b) = kind.default_params();
        Self::with_params(kind, a, b, state)
    }

    pub fn with_params(kind: MapKind, a: f64, b: f64, state: f64) -> Result<Self> {
        if !kind.in_domain(state) {
            return Err(Error::ChaoticDomain { map: kind.name(), state });
        }
        Ok(Self { kind, a, b, state })
    }

    /// Raw successor of the current state, before any absorbing-state repair.
    pub fn raw_next(&self) -> Result<f64> {
        let x = self.state;
        if !self.kind.in_domain(x) {
            return Err(Error::ChaoticDomain { map: self.kind.name(), state: x });
        }
        let (a, b) = (self.a, self.b);
        let next = match self.kind {
            MapKind::Logistic => a * x * (1.0 - x),
            MapKind::Tent => {
                if x < 0.5 {
                    2.0 * x
                } else {
                    2.0 * (1.0 - x)
                }
            }
            MapKind::Sinusoidal => a * x * x * (PI * x).sin(),
            MapKind::Circle => (x + b - (a / (2.0 * PI)) * (2.0 * PI * x).sin()).rem_euclid(1.0),
            MapKind::Gauss => {
                if x == 0.0 {
                    0.0
                } else {
                    (1.0 / x).rem_euclid(1.0)
                }
            }
            MapKind::Chebyshev => (a * x.acos()).cos(),
            MapKind::Singer => {
                let x2 = x * x;
                7.86 * x - 23.31 * x2 + 28.75 * x2 * x - 13.302875 * x2 * x2
            }
            MapKind::Sine => (a / 4.0) * (PI * x).sin(),
            MapKind::Iterative => (a * PI / x).sin(),
        };
        Ok(next)
    }

    /// Advances the map one step: returns the normalized value in `[0, 1]` and the
    /// successor map.
    ///
    /// The successor carries the raw next state, except where that state is a trap:
    /// exact 0 or 1 for the unit-interval maps (Gauss excepted, its 0 is part of the
    /// map's definition), exact ±1 for Chebyshev and exact 0 for Iterative. Those are
    /// nudged by `1e-7` so the orbit keeps moving. Singer's polynomial as usually written dips
    /// just below 0 near `x = 1`; such states are treated the same way.
    pub fn chaotic_next(&self) -> Result<(f64, ChaoticMap)> {
        let raw = self.raw_next()?;
        let value = normalize(self.kind, raw);
        let state = match self.kind {
            MapKind::Gauss | MapKind::Circle => raw,
            MapKind::Chebyshev if raw >= 1.0 => 1.0 - REVIVE,
            MapKind::Chebyshev if raw <= -1.0 => -1.0 + REVIVE,
            MapKind::Chebyshev => raw,
            MapKind::Iterative if raw == 0.0 => REVIVE,
            MapKind::Iterative => raw,
            _ if raw <= 0.0 || raw >= 1.0 => REVIVE,
            _ => raw,
        };
        Ok((value, ChaoticMap { state, ..*self }))
    }

    /// In-place convenience over [`ChaoticMap::chaotic_next`].
    pub fn advance(&mut self) -> Result<f64> {
        let (value, next) = self.chaotic_next()?;
        *self = next;
        Ok(value)
    }
}

fn normalize(kind: MapKind, raw: f64) -> f64 {
    let v = if kind.is_symmetric() { (raw + 1.0) / 2.0 } else { raw };
    v.clamp(0.0, 1.0)
}
