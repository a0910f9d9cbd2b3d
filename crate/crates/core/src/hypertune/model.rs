use std::fmt::Write as _;
use std::path::Path;

use crate::engine::SearchSpace;
use crate::rng::SeededRng;
use crate::{Error, Result};

use super::data::ToyDataset;

/// Lower bounds of `(momentum, learning_rate, epochs, l2)`.
pub const HYPER_LB: [f64; 4] = [0.5, 0.01, 5.0, 1e-4];
/// Upper bounds of `(momentum, learning_rate, epochs, l2)`.
pub const HYPER_UB: [f64; 4] = [1.0, 0.5, 15.0, 5e-4];

const BATCH_SIZE: usize = 32;
const SHUFFLE_STREAM: u64 = 0x7a11_0f5e_ed00_0001;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperParams {
    pub momentum: f64,
    pub learning_rate: f64,
    pub epochs: u32,
    pub l2: f64,
}

impl HyperParams {
    /// The box the optimizer searches.
    pub fn space() -> SearchSpace {
        SearchSpace::new(HYPER_LB.to_vec(), HYPER_UB.to_vec()).expect("static bounds are valid")
    }

    pub fn to_position(&self) -> [f64; 4] {
        [self.momentum, self.learning_rate, f64::from(self.epochs), self.l2]
    }
}

/// Maps an optimizer position to trainer settings. Continuous fields are
/// clamped into their bounds; epochs round half away from zero before clamping.
pub fn decode_hyperparams(position: &[f64]) -> Result<HyperParams> {
    if position.len() != 4 {
        return Err(Error::LengthMismatch(4, position.len()));
    }
    if position.iter().any(|v| !v.is_finite()) {
        return Err(Error::Parameter(format!("non-finite hyperparameter position {position:?}")));
    }
    let clamp = |j: usize| position[j].clamp(HYPER_LB[j], HYPER_UB[j]);
    Ok(HyperParams {
        momentum: clamp(0),
        learning_rate: clamp(1),
        epochs: position[2].round().clamp(HYPER_LB[2], HYPER_UB[2]) as u32,
        l2: clamp(3),
    })
}

/// Logistic regression, `P(y=1|x) = sigmoid(w.x + b)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LogisticModel {
    pub weights: Vec<f64>,
    pub bias: f64,
    /// Set when training produced a non-finite loss or parameter.
    pub diverged: bool,
    /// Full training-set loss after each epoch.
    pub loss_history: Vec<f64>,
}

fn sigmoid(z: f64) -> f64 {
    if z >= 0.0 {
        1.0 / (1.0 + (-z).exp())
    } else {
        let e = z.exp();
        e / (1.0 + e)
    }
}

/// `log(1 + e^z)` without overflow.
fn softplus(z: f64) -> f64 {
    z.max(0.0) + (-z.abs()).exp().ln_1p()
}

impl LogisticModel {
    pub fn zeros(p: usize) -> Self {
        Self { weights: vec![0.0; p], bias: 0.0, diverged: false, loss_history: Vec::new() }
    }

    pub fn predict_proba(&self, x: &[f64]) -> f64 {
        sigmoid(dot(&self.weights, x) + self.bias)
    }

    pub fn predict(&self, x: &[f64]) -> u8 {
        u8::from(self.predict_proba(x) >= 0.5)
    }

    pub fn weight_norm(&self) -> f64 {
        dot(&self.weights, &self.weights).sqrt()
    }

    /// Plain-text export: one `key value...` pair per line.
    pub fn to_text(&self) -> String {
        let mut s = String::from("logistic-model v1\n");
        let _ = writeln!(s, "features {}", self.weights.len());
        let _ = writeln!(s, "bias {:e}", self.bias);
        let _ = write!(s, "weights");
        for w in &self.weights {
            let _ = write!(s, " {w:e}");
        }
        let _ = writeln!(s, "\ndiverged {}", self.diverged);
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let bad = |m: &str| Error::Data(format!("model text: {m}"));
        let mut lines = text.lines();
        if lines.next().map(str::trim) != Some("logistic-model v1") {
            return Err(bad("missing header"));
        }
        let (mut p, mut bias, mut weights, mut diverged) = (None, None, None, None);
        for line in lines.filter(|l| !l.trim().is_empty()) {
            let mut parts = line.split_whitespace();
            let key = parts.next().unwrap_or_default();
            let rest: Vec<&str> = parts.collect();
            match key {
                "features" => p = rest.first().and_then(|v| v.parse::<usize>().ok()),
                "bias" => bias = rest.first().and_then(|v| v.parse::<f64>().ok()),
                "weights" => {
                    weights = Some(
                        rest.iter()
                            .map(|v| v.parse::<f64>())
                            .collect::<std::result::Result<Vec<_>, _>>()
                            .map_err(|_| bad("bad weight"))?,
                    )
                }
                "diverged" => diverged = rest.first().and_then(|v| v.parse::<bool>().ok()),
                other => return Err(bad(&format!("unknown key {other:?}"))),
            }
        }
        let weights: Vec<f64> = weights.ok_or_else(|| bad("missing weights"))?;
        if p != Some(weights.len()) {
            return Err(bad("feature count does not match weights"));
        }
        Ok(Self {
            weights,
            bias: bias.ok_or_else(|| bad("missing bias"))?,
            diverged: diverged.ok_or_else(|| bad("missing diverged"))?,
            loss_history: Vec::new(),
        })
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_text()).map_err(|e| Error::io(path, e))
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_text(&std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?)
    }
}

/// `|a - b| / max(|a|, |b|)` over whole vectors; 0 when both are zero.
pub fn gradient_rel_error(analytic: &[f64], numeric: &[f64]) -> f64 {
    let diff: f64 = analytic.iter().zip(numeric).map(|(a, n)| (a - n) * (a - n)).sum::<f64>().sqrt();
    let scale = dot(analytic, analytic).sqrt().max(dot(numeric, numeric).sqrt());
    if scale == 0.0 {
        0.0
    } else {
        diff / scale
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Mean cross-entropy over `rows` plus `(l2/2)|w|^2`, and its gradient.
/// `theta` is the weights followed by the bias; the bias is not penalized.
pub fn loss_and_grad(theta: &[f64], data: &ToyDataset, rows: &[usize], l2: f64) -> Result<(f64, Vec<f64>)> {
    let p = data.n_features();
    if theta.len() != p + 1 {
        return Err(Error::LengthMismatch(p + 1, theta.len()));
    }
    if rows.is_empty() {
        return Err(Error::Data("loss over an empty batch".into()));
    }
    let (w, b) = theta.split_at(p);
    let mut grad = vec![0.0; p + 1];
    let mut loss = 0.0;
    for &i in rows {
        let x = &data.features[i];
        let y = f64::from(data.labels[i]);
        let z = dot(w, x) + b[0];
        loss += softplus(z) - y * z;
        let r = sigmoid(z) - y;
        for (g, xj) in grad.iter_mut().zip(x) {
            *g += r * xj;
        }
        grad[p] += r;
    }
    let n = rows.len() as f64;
    loss /= n;
    for g in &mut grad {
        *g /= n;
    }
    loss += 0.5 * l2 * dot(w, w);
    for (g, wj) in grad.iter_mut().zip(w) {
        *g += l2 * wj;
    }
    Ok((loss, grad))
}

/// Mini-batch SGD with classical momentum from zero weights. The shuffle is
/// seeded, so equal inputs give an identical model.
pub fn train_toy_model(hp: &HyperParams, data: &ToyDataset, seed: u64) -> Result<LogisticModel> {
    if data.train.is_empty() {
        return Err(Error::Data("no training rows".into()));
    }
    let p = data.n_features();
    let mut theta = vec![0.0; p + 1];
    let mut velocity = vec![0.0; p + 1];
    let mut order = data.train.clone();
    let mut rng = SeededRng::new(seed ^ SHUFFLE_STREAM);
    let mut history = Vec::with_capacity(hp.epochs as usize);
    let mut diverged = false;
    'epochs: for _ in 0..hp.epochs {
        rng.shuffle(&mut order);
        for batch in order.chunks(BATCH_SIZE) {
            let (_, grad) = loss_and_grad(&theta, data, batch, hp.l2)?;
            for ((t, v), g) in theta.iter_mut().zip(&mut velocity).zip(&grad) {
                *v = hp.momentum * *v - hp.learning_rate * g;
                *t += *v;
            }
            if theta.iter().any(|t| !t.is_finite()) {
                diverged = true;
                break 'epochs;
            }
        }
        let (loss, _) = loss_and_grad(&theta, data, &data.train, hp.l2)?;
        history.push(loss);
        if !loss.is_finite() {
            diverged = true;
            break;
        }
    }
    let bias = theta.pop().unwrap_or_default();
    Ok(LogisticModel { weights: theta, bias, diverged, loss_history: history })
}
