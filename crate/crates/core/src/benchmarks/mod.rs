//! The F1–F23 benchmark suite and a registry for external composite functions.
//!
//! F1–F7 are unimodal, F8–F13 multimodal (both accept any dimension for
//! scalability studies) and F14–F23 are fixed-dimension multimodal functions.
//! F24–F29 are left to composite packs, see [`composite`].

pub mod composite;
mod functions;

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::sync::Arc;

pub use composite::{load_pack, CompositeFunction, Composition};

use crate::engine::{Objective, SearchSpace};
use crate::rng::SeededRng;
use crate::{Error, Result};

struct Entry {
    name: &'static str,
    dim: usize,
    range: (f64, f64),
    /// Optimum value as tabulated.
    f_min: f64,
    /// Optimum value to full precision, where it differs from the tabulated one.
    exact: Option<f64>,
    minimizer: Minimizer,
}

enum Minimizer {
    Constant(f64),
    Point(&'static [f64]),
}

// Stationary point of -x sin(sqrt(x)), solved to full precision.
const SCHWEFEL_OPT: f64 = 420.968_746_359_982_05;
const SCHWEFEL_MIN_PER_DIM: f64 = -418.9829;

#[rustfmt::skip]
const CATALOG: [Entry; 23] = [
    Entry { name: "sphere", dim: 30, range: (-100.0, 100.0), f_min: 0.0, exact: None, minimizer: Minimizer::Constant(0.0) },
    Entry { name: "schwefel 2.22", dim: 30, range: (-10.0, 10.0), f_min: 0.0, exact: None, minimizer: Minimizer::Constant(0.0) },
    Entry { name: "schwefel 1.2", dim: 30, range: (-100.0, 100.0), f_min: 0.0, exact: None, minimizer: Minimizer::Constant(0.0) },
    Entry { name: "schwefel 2.21", dim: 30, range: (-100.0, 100.0), f_min: 0.0, exact: None, minimizer: Minimizer::Constant(0.0) },
    Entry { name: "rosenbrock", dim: 30, range: (-30.0, 30.0), f_min: 0.0, exact: None, minimizer: Minimizer::Constant(1.0) },
    Entry { name: "step", dim: 30, range: (-100.0, 100.0), f_min: 0.0, exact: None, minimizer: Minimizer::Constant(0.0) },
    Entry { name: "quartic with noise", dim: 30, range: (-1.28, 1.28), f_min: 0.0, exact: None, minimizer: Minimizer::Constant(0.0) },
    Entry { name: "schwefel 2.26", dim: 30, range: (-500.0, 500.0), f_min: SCHWEFEL_MIN_PER_DIM, exact: None, minimizer: Minimizer::Constant(SCHWEFEL_OPT) },
    Entry { name: "rastrigin", dim: 30, range: (-5.12, 5.12), f_min: 0.0, exact: None, minimizer: Minimizer::Constant(0.0) },
    Entry { name: "ackley", dim: 30, range: (-32.0, 32.0), f_min: 0.0, exact: None, minimizer: Minimizer::Constant(0.0) },
    Entry { name: "griewank", dim: 30, range: (-600.0, 600.0), f_min: 0.0, exact: None, minimizer: Minimizer::Constant(0.0) },
    Entry { name: "penalized 1", dim: 30, range: (-50.0, 50.0), f_min: 0.0, exact: None, minimizer: Minimizer::Constant(-1.0) },
    Entry { name: "penalized 2", dim: 30, range: (-50.0, 50.0), f_min: 0.0, exact: None, minimizer: Minimizer::Constant(1.0) },
    Entry { name: "shekel foxholes", dim: 2, range: (-65.0, 65.0), f_min: 1.0, exact: Some(0.998003838), minimizer: Minimizer::Point(&[-31.97833, -31.97833]) },
    Entry { name: "kowalik", dim: 4, range: (-5.0, 5.0), f_min: 0.00030, exact: Some(3.0748599e-4), minimizer: Minimizer::Point(&[0.1928334, 0.1908362, 0.1231172, 0.1357665]) },
    Entry { name: "six-hump camel", dim: 2, range: (-5.0, 5.0), f_min: -1.0316, exact: Some(-1.031628453), minimizer: Minimizer::Point(&[0.0898420, -0.7126564]) },
    Entry { name: "branin", dim: 2, range: (-5.0, 5.0), f_min: 0.398, exact: Some(0.397887358), minimizer: Minimizer::Point(&[std::f64::consts::PI, 2.275]) },
    Entry { name: "goldstein-price", dim: 2, range: (-2.0, 2.0), f_min: 3.0, exact: None, minimizer: Minimizer::Point(&[0.0, -1.0]) },
    // Hartmann-3 is defined on [0, 1]^3; its optimum lies outside the [1, 3] range sometimes quoted for it.
    Entry { name: "hartmann 3", dim: 3, range: (0.0, 1.0), f_min: -3.86, exact: Some(-3.862782148), minimizer: Minimizer::Point(&[0.114614, 0.555649, 0.852547]) },
    Entry { name: "hartmann 6", dim: 6, range: (0.0, 1.0), f_min: -3.32, exact: Some(-3.321995172), minimizer: Minimizer::Point(&[0.2017076146, 0.1467809416, 0.4767448517, 0.2753423867, 0.3116518722, 0.6572751593]) },
    Entry { name: "shekel 5", dim: 4, range: (0.0, 10.0), f_min: -10.1532, exact: Some(-10.153199679), minimizer: Minimizer::Point(&[4.000037, 4.000133, 4.000037, 4.000133]) },
    Entry { name: "shekel 7", dim: 4, range: (0.0, 10.0), f_min: -10.4028, exact: Some(-10.402940567), minimizer: Minimizer::Point(&[4.000573, 4.000689, 3.999490, 3.999606]) },
    Entry { name: "shekel 10", dim: 4, range: (0.0, 10.0), f_min: -10.5363, exact: Some(-10.536409817), minimizer: Minimizer::Point(&[4.000747, 4.000593, 3.999663, 3.999510]) },
];

/// Highest built-in function number.
pub const BUILTIN_COUNT: u8 = 23;
/// Ids reserved for composite packs.
pub const COMPOSITE_IDS: std::ops::RangeInclusive<u8> = 24..=29;

fn parse_number(id: &str) -> Option<u8> {
    let digits = id.strip_prefix('F').or_else(|| id.strip_prefix('f'))?;
    digits.parse().ok()
}

#[derive(Clone)]
enum Body {
    Builtin(u8),
    Composite(Arc<dyn CompositeFunction>),
}

/// One benchmark with its dimension, range, known optimum and reference minimizer.
#[derive(Clone)]
pub struct BenchmarkFunction {
    pub id: String,
    pub name: String,
    pub dim: usize,
    pub lower: f64,
    pub upper: f64,
    /// Optimum value as tabulated (for F8 already multiplied by `dim`).
    pub f_min: f64,
    /// Full-precision optimum where it differs from the rounded tabulated value.
    pub f_min_exact: Option<f64>,
    pub minimizer: Option<Vec<f64>>,
    /// Whether any dimension is accepted (F1–F13).
    pub scalable: bool,
    body: Body,
}

impl fmt::Debug for BenchmarkFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BenchmarkFunction")
            .field("id", &self.id)
            .field("name", &self.name)
            .field("dim", &self.dim)
            .field("range", &(self.lower, self.upper))
            .field("f_min", &self.f_min)
            .finish()
    }
}

impl BenchmarkFunction {
    fn builtin(number: u8, dim: usize) -> Self {
        let entry = &CATALOG[number as usize - 1];
        let scalable = number <= 13;
        let dim = if scalable { dim } else { entry.dim };
        let f_min = if number == 8 { entry.f_min * dim as f64 } else { entry.f_min };
        let minimizer = match entry.minimizer {
            Minimizer::Constant(v) => vec![v; dim],
            Minimizer::Point(p) => p.to_vec(),
        };
        BenchmarkFunction {
            id: format!("F{number}"),
            name: entry.name.to_string(),
            dim,
            lower: entry.range.0,
            upper: entry.range.1,
            f_min,
            f_min_exact: entry.exact,
            minimizer: Some(minimizer),
            scalable,
            body: Body::Builtin(number),
        }
    }

    fn composite(f: Arc<dyn CompositeFunction>) -> Self {
        let (lower, upper) = f.bounds();
        BenchmarkFunction {
            id: f.id().to_string(),
            name: "composite".to_string(),
            dim: f.dim(),
            lower,
            upper,
            f_min: f.f_min(),
            f_min_exact: None,
            minimizer: None,
            scalable: false,
            body: Body::Composite(f),
        }
    }

    /// The same function at another dimension. Only F1–F13 can be resized.
    pub fn with_dim(&self, dim: usize) -> Result<Self> {
        match &self.body {
            Body::Builtin(n) if self.scalable && dim >= 1 => Ok(Self::builtin(*n, dim)),
            _ if dim == self.dim => Ok(self.clone()),
            _ => Err(Error::Dimension { id: self.id.clone(), expected: self.dim, got: dim }),
        }
    }

    pub fn space(&self) -> SearchSpace {
        SearchSpace::uniform(self.dim, self.lower, self.upper).expect("benchmark ranges are valid")
    }

    /// Best known value: the full-precision optimum when available, else the tabulated one.
    pub fn best_known(&self) -> f64 {
        self.f_min_exact.unwrap_or(self.f_min)
    }

    /// Whether F7's additive `[0, 1)` noise applies.
    pub fn is_noisy(&self) -> bool {
        matches!(self.body, Body::Builtin(7))
    }

    fn check_len(&self, x: &[f64]) -> Result<()> {
        let ok = if self.scalable { !x.is_empty() } else { x.len() == self.dim };
        if ok {
            Ok(())
        } else {
            Err(Error::Dimension { id: self.id.clone(), expected: self.dim, got: x.len() })
        }
    }

    /// Noise-free value at `x` (F7's noise term is taken as 0).
    pub fn eval(&self, x: &[f64]) -> Result<f64> {
        self.eval_with_noise(x, 0.0)
    }

    /// Value at `x`, adding `noise` to F7 and ignoring it elsewhere.
    pub fn eval_with_noise(&self, x: &[f64], noise: f64) -> Result<f64> {
        self.check_len(x)?;
        Ok(self.eval_unchecked(x, noise))
    }

    fn eval_unchecked(&self, x: &[f64], noise: f64) -> f64 {
        match &self.body {
            Body::Builtin(7) => functions::eval(7, x) + noise,
            Body::Builtin(n) => functions::eval(*n, x),
            Body::Composite(f) => f.evaluate(x),
        }
    }

    /// An [`Objective`] over this function. F7 draws its noise from a stream
    /// derived from `seed`.
    pub fn objective(&self, seed: u64) -> BenchmarkObjective {
        let noise = self.is_noisy().then(|| SeededRng::new(seed ^ NOISE_STREAM));
        BenchmarkObjective { function: self.clone(), noise }
    }
}

const NOISE_STREAM: u64 = 0x9e37_79b9_7f4a_7c15;

pub struct BenchmarkObjective {
    function: BenchmarkFunction,
    noise: Option<SeededRng>,
}

impl Objective for BenchmarkObjective {
    fn evaluate(&mut self, x: &[f64]) -> f64 {
        if self.function.check_len(x).is_err() {
            return f64::NAN;
        }
        let noise = self.noise.as_mut().map_or(0.0, SeededRng::uniform);
        self.function.eval_unchecked(x, noise)
    }
}

/// Built-in functions plus any registered composite packs.
#[derive(Clone, Default)]
pub struct Suite {
    composites: BTreeMap<String, Arc<dyn CompositeFunction>>,
}

impl Suite {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn lookup(&self, id: &str) -> Result<BenchmarkFunction> {
        match parse_number(id) {
            Some(n @ 1..=BUILTIN_COUNT) => Ok(BenchmarkFunction::builtin(n, CATALOG[n as usize - 1].dim)),
            _ => {
                if let Some(f) = self.composites.get(&canonical(id)) {
                    Ok(BenchmarkFunction::composite(f.clone()))
                } else if parse_number(id).is_some_and(|n| COMPOSITE_IDS.contains(&n)) {
                    Err(Error::CompositeNotInstalled(canonical(id)))
                } else {
                    Err(Error::UnknownFunction(id.to_string()))
                }
            }
        }
    }

    pub fn evaluate(&self, id: &str, x: &[f64]) -> Result<f64> {
        let f = self.lookup(id)?;
        let f = if f.scalable { f.with_dim(x.len().max(1))? } else { f };
        f.eval(x)
    }

    /// Registers a pack of composite functions. Nothing is registered if any id
    /// collides with a built-in, an existing registration or another pack member.
    pub fn register_composite<I>(&mut self, pack: I) -> Result<()>
    where
        I: IntoIterator<Item = Arc<dyn CompositeFunction>>,
    {
        let mut staged = BTreeMap::new();
        for f in pack {
            let id = canonical(f.id());
            let builtin = parse_number(&id).is_some_and(|n| (1..=BUILTIN_COUNT).contains(&n));
            if builtin || self.composites.contains_key(&id) || staged.contains_key(&id) {
                return Err(Error::Collision(id));
            }
            staged.insert(id, f);
        }
        self.composites.extend(staged);
        Ok(())
    }

    /// Loads and registers every pack file in `dir`.
    pub fn load_composite_dir(&mut self, dir: &Path) -> Result<usize> {
        let pack = load_pack(dir)?;
        let count = pack.len();
        self.register_composite(pack)?;
        Ok(count)
    }

    /// All ids currently served, built-ins first.
    pub fn ids(&self) -> Vec<String> {
        (1..=BUILTIN_COUNT).map(|n| format!("F{n}")).chain(self.composites.keys().cloned()).collect()
    }
}

fn canonical(id: &str) -> String {
    match parse_number(id) {
        Some(n) => format!("F{n}"),
        None => id.to_string(),
    }
}

/// Looks up a built-in function.
pub fn lookup(id: &str) -> Result<BenchmarkFunction> {
    Suite::new().lookup(id)
}

/// Evaluates a built-in function; F1–F13 take their dimension from `x`.
pub fn evaluate(id: &str, x: &[f64]) -> Result<f64> {
    Suite::new().evaluate(id, x)
}
