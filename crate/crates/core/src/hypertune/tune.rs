use std::path::{Path, PathBuf};

use crate::engine::{run, EngineConfig, RunResult};
use crate::harness::write_csv;
use crate::{Error, Result};

use super::data::ToyDataset;
use super::metrics::{confusion, metrics, roc_points, ConfusionCounts, MetricsReport};
use super::model::{decode_hyperparams, train_toy_model, HyperParams, LogisticModel};

/// Label treated as the positive class in reports.
const POSITIVE: u8 = 1;

/// Cost assigned to a model whose training diverged.
const DIVERGED_COST: f64 = 100.0;

/// Test-set error rate in percent, `(1 - accuracy) * 100`.
pub fn evaluate_l_d(model: &LogisticModel, data: &ToyDataset) -> Result<f64> {
    if data.test.is_empty() {
        return Err(Error::Data("empty test set".into()));
    }
    if model.diverged {
        return Ok(DIVERGED_COST);
    }
    let correct = data.test.iter().filter(|&&i| model.predict(&data.features[i]) == data.labels[i]).count();
    Ok((1.0 - correct as f64 / data.test.len() as f64) * 100.0)
}

/// NLCMFO with 30 moths and 20 iterations.
pub fn tune_config() -> EngineConfig {
    EngineConfig::nlcmfo().with_budget(30, 20)
}

#[derive(Debug, Clone)]
pub struct TuneOutcome {
    pub best: HyperParams,
    pub best_l_d: f64,
    pub run: RunResult,
    /// Every trained candidate as `(position, L_D)`, in evaluation order.
    pub candidates: Vec<([f64; 4], f64)>,
    /// Seed of the training shuffles.
    pub train_seed: u64,
}

/// The best model retrained and scored on the test rows.
#[derive(Debug, Clone)]
pub struct BestModelReport {
    pub model: LogisticModel,
    pub counts: ConfusionCounts,
    pub metrics: MetricsReport,
}

impl TuneOutcome {
    pub fn trainings(&self) -> usize {
        self.candidates.len()
    }

    /// Retrains the best hyperparameters and computes test-set metrics and ROC.
    pub fn best_model_report(&self, data: &ToyDataset) -> Result<BestModelReport> {
        let model = train_toy_model(&self.best, data, self.train_seed)?;
        let scores: Vec<f64> = data.test.iter().map(|&i| model.predict_proba(&data.features[i])).collect();
        let preds: Vec<u8> = data.test.iter().map(|&i| model.predict(&data.features[i])).collect();
        let labels: Vec<u8> = data.test.iter().map(|&i| data.labels[i]).collect();
        let counts = confusion(&preds, &labels, POSITIVE)?;
        let mut report = metrics(&counts);
        report.roc = roc_points(&scores, &labels, POSITIVE)?;
        Ok(BestModelReport { model, counts, metrics: report })
    }

    /// Writes `candidates.csv`, `confusion.csv`, `roc.csv` and `model.txt` into `dir`.
    pub fn write_outputs(&self, best: &BestModelReport, dir: &Path) -> Result<Vec<PathBuf>> {
        std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        let full = |v: f64| format!("{v:e}");
        let path = dir.join("candidates.csv");
        write_csv(
            &path,
            &["evaluation", "momentum", "learning_rate", "epochs", "l2", "l_d"],
            self.candidates.iter().enumerate().map(|(k, (x, l_d))| {
                let mut row = vec![k.to_string()];
                row.extend(x.iter().map(|&v| full(v)));
                row.push(full(*l_d));
                row
            }),
        )?;
        let mut written = vec![path];

        let path = dir.join("confusion.csv");
        let c = &best.counts;
        write_csv(
            &path,
            &["actual", "predicted_positive", "predicted_negative"],
            [
                ["positive".to_string(), c.tp.to_string(), c.fn_.to_string()],
                ["negative".to_string(), c.fp.to_string(), c.tn.to_string()],
            ],
        )?;
        written.push(path);

        let path = dir.join("roc.csv");
        write_csv(&path, &["fpr", "tpr"], best.metrics.roc.iter().map(|&(f, t)| [full(f), full(t)]))?;
        written.push(path);

        let path = dir.join("model.txt");
        best.model.save(&path)?;
        written.push(path);
        Ok(written)
    }
}

/// Searches the hyperparameter box with the given engine, training one model
/// per evaluated position. Training shuffles are seeded with `engine.seed`.
pub fn tune(engine: &EngineConfig, data: &ToyDataset) -> Result<TuneOutcome> {
    let space = HyperParams::space();
    let mut candidates = Vec::new();
    let mut failure = None;
    let mut objective = |x: &[f64]| -> f64 {
        let cost = decode_hyperparams(x)
            .and_then(|hp| train_toy_model(&hp, data, engine.seed))
            .and_then(|m| evaluate_l_d(&m, data));
        match cost {
            Ok(v) => {
                candidates.push(([x[0], x[1], x[2], x[3]], v));
                v
            }
            Err(e) => {
                failure.get_or_insert(e);
                f64::NAN
            }
        }
    };
    let result = run(engine, &space, &mut objective);
    if let Some(e) = failure {
        return Err(e);
    }
    let run = result?;
    Ok(TuneOutcome {
        best: decode_hyperparams(&run.best_position)?,
        best_l_d: run.best_fitness,
        run,
        candidates,
        train_seed: engine.seed,
    })
}
