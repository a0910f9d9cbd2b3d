use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ConfusionCounts {
    pub tp: u64,
    pub fn_: u64,
    pub fp: u64,
    pub tn: u64,
}

impl ConfusionCounts {
    pub fn total(&self) -> u64 {
        self.tp + self.fn_ + self.fp + self.tn
    }

    /// `(fp + fn) / total`.
    pub fn error_rate(&self) -> f64 {
        (self.fp + self.fn_) as f64 / self.total() as f64
    }
}

/// Which ratios had a zero denominator and were reported as 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Degenerate {
    pub accuracy: bool,
    pub sensitivity: bool,
    pub specificity: bool,
    pub precision: bool,
    pub f1: bool,
}

impl Degenerate {
    pub fn any(&self) -> bool {
        self.accuracy || self.sensitivity || self.specificity || self.precision || self.f1
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct MetricsReport {
    pub accuracy: f64,
    pub sensitivity: f64,
    pub specificity: f64,
    pub precision: f64,
    pub f1: f64,
    pub degenerate: Degenerate,
    /// `(false positive rate, true positive rate)` points, empty unless attached.
    pub roc: Vec<(f64, f64)>,
}

pub fn confusion(preds: &[u8], labels: &[u8], positive: u8) -> Result<ConfusionCounts> {
    if preds.len() != labels.len() {
        return Err(Error::LengthMismatch(preds.len(), labels.len()));
    }
    let mut c = ConfusionCounts::default();
    for (&p, &y) in preds.iter().zip(labels) {
        match (p == positive, y == positive) {
            (true, true) => c.tp += 1,
            (false, true) => c.fn_ += 1,
            (true, false) => c.fp += 1,
            (false, false) => c.tn += 1,
        }
    }
    Ok(c)
}

fn ratio(num: u64, den: u64, flag: &mut bool) -> f64 {
    if den == 0 {
        *flag = true;
        0.0
    } else {
        num as f64 / den as f64
    }
}

pub fn metrics(c: &ConfusionCounts) -> MetricsReport {
    let mut d = Degenerate::default();
    let accuracy = ratio(c.tp + c.tn, c.total(), &mut d.accuracy);
    let sensitivity = ratio(c.tp, c.tp + c.fn_, &mut d.sensitivity);
    let specificity = ratio(c.tn, c.tn + c.fp, &mut d.specificity);
    let precision = ratio(c.tp, c.tp + c.fp, &mut d.precision);
    let f1 = if precision + sensitivity > 0.0 {
        2.0 * precision * sensitivity / (precision + sensitivity)
    } else {
        d.f1 = true;
        0.0
    };
    MetricsReport { accuracy, sensitivity, specificity, precision, f1, degenerate: d, roc: Vec::new() }
}

/// ROC curve from a descending threshold sweep over the unique scores. A score
/// at or above the threshold is predicted positive. Starts at `(0,0)` and ends
/// at `(1,1)`.
pub fn roc_points(scores: &[f64], labels: &[u8], positive: u8) -> Result<Vec<(f64, f64)>> {
    if scores.len() != labels.len() {
        return Err(Error::LengthMismatch(scores.len(), labels.len()));
    }
    if scores.iter().any(|s| s.is_nan()) {
        return Err(Error::Data("NaN score".into()));
    }
    let pos = labels.iter().filter(|&&y| y == positive).count();
    let neg = labels.len() - pos;
    if pos == 0 || neg == 0 {
        return Err(Error::Data("ROC needs both classes among the labels".into()));
    }
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores[b].total_cmp(&scores[a]));
    let mut points = vec![(0.0, 0.0)];
    let (mut tp, mut fp) = (0usize, 0usize);
    let mut k = 0;
    while k < order.len() {
        let threshold = scores[order[k]];
        while k < order.len() && scores[order[k]] == threshold {
            if labels[order[k]] == positive {
                tp += 1;
            } else {
                fp += 1;
            }
            k += 1;
        }
        points.push((fp as f64 / neg as f64, tp as f64 / pos as f64));
    }
    Ok(points)
}

/// Trapezoidal area under a curve of `(x, y)` points sorted by `x`.
pub fn auc(points: &[(f64, f64)]) -> f64 {
    points.windows(2).map(|w| (w[1].0 - w[0].0) * (w[1].1 + w[0].1) / 2.0).sum()
}
