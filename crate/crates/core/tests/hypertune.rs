use nlcmfo::engine::EngineConfig;
use nlcmfo::hypertune::{
    auc, confusion, evaluate_l_d, make_toy_dataset, make_toy_dataset_with, metrics, roc_points, train_toy_model, tune,
    HyperParams, LogisticModel,
};
use nlcmfo::rng::SeededRng;
use proptest::prelude::*;

fn mid() -> HyperParams {
    HyperParams { momentum: 0.75, learning_rate: 0.255, epochs: 10, l2: 3e-4 }
}

#[test]
fn wide_separation_is_learned() {
    let data = make_toy_dataset_with(1000, 4, 5.0, 3).unwrap();
    let model = train_toy_model(&mid(), &data, 0).unwrap();
    let l_d = evaluate_l_d(&model, &data).unwrap();
    assert!(l_d < 1.0, "test accuracy {}", 1.0 - l_d / 100.0);
}

#[test]
fn stronger_l2_never_grows_the_weights() {
    let data = make_toy_dataset(600, 3, 4).unwrap();
    let mut prev = f64::INFINITY;
    for k in 0..=8 {
        let l2 = 1e-4 + 5e-5 * f64::from(k);
        let norm = train_toy_model(&HyperParams { l2, ..mid() }, &data, 1).unwrap().weight_norm();
        assert!(norm <= prev, "l2 {l2}: {norm} > {prev}");
        prev = norm;
    }
}

#[test]
fn accuracy_matches_l_d() {
    let data = make_toy_dataset(400, 3, 8).unwrap();
    let model = train_toy_model(&mid(), &data, 2).unwrap();
    let preds: Vec<u8> = data.test.iter().map(|&i| model.predict(&data.features[i])).collect();
    let labels: Vec<u8> = data.test.iter().map(|&i| data.labels[i]).collect();
    let c = confusion(&preds, &labels, 1).unwrap();
    let m = metrics(&c);
    let l_d = evaluate_l_d(&model, &data).unwrap();
    assert!((m.accuracy - (1.0 - l_d / 100.0)).abs() < 1e-12);
    assert!((c.error_rate() - l_d / 100.0).abs() < 1e-12);
    assert_eq!(c.total() as usize, data.test.len());
}

#[test]
fn random_scores_give_chance_auc() {
    let mut rng = SeededRng::new(21);
    let labels: Vec<u8> = (0..10_000).map(|i| (i % 2) as u8).collect();
    let scores: Vec<f64> = (0..10_000).map(|_| rng.uniform()).collect();
    let pts = roc_points(&scores, &labels, 1).unwrap();
    assert!(pts.windows(2).all(|w| w[1].0 >= w[0].0 && w[1].1 >= w[0].1));
    let a = auc(&pts);
    assert!((a - 0.5).abs() < 0.02, "auc {a}");
}

#[test]
fn tune_is_deterministic() {
    let data = make_toy_dataset(200, 3, 5).unwrap();
    let cfg = EngineConfig::nlcmfo().with_budget(6, 4).with_seed(9);
    let a = tune(&cfg, &data).unwrap();
    let b = tune(&cfg, &data).unwrap();
    assert_eq!(a.best, b.best);
    assert_eq!(a.candidates, b.candidates);
    assert_eq!(a.trainings(), 30);
}

#[test]
fn tune_outputs_are_written() {
    let data = make_toy_dataset(200, 3, 5).unwrap();
    let out = tune(&EngineConfig::nlcmfo().with_budget(4, 2), &data).unwrap();
    let report = out.best_model_report(&data).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let files = out.write_outputs(&report, dir.path()).unwrap();
    assert_eq!(files.len(), 4);
    let back = LogisticModel::load(&dir.path().join("model.txt")).unwrap();
    assert_eq!(back.weights, report.model.weights);
    let candidates = std::fs::read_to_string(dir.path().join("candidates.csv")).unwrap();
    assert_eq!(candidates.lines().count(), 1 + 12);
}

proptest! {
    #[test]
    fn metrics_stay_in_range(tp in 0u64..500, fn_ in 0u64..500, fp in 0u64..500, tn in 0u64..500) {
        prop_assume!(tp + fn_ + fp + tn > 0);
        let m = metrics(&nlcmfo::hypertune::ConfusionCounts { tp, fn_, fp, tn });
        for v in [m.accuracy, m.sensitivity, m.specificity, m.precision, m.f1] {
            prop_assert!((0.0..=1.0).contains(&v));
        }
        if m.precision > 0.0 && m.sensitivity > 0.0 {
            prop_assert!(m.f1 <= m.precision.max(m.sensitivity) + 1e-15);
            prop_assert!(m.f1 >= m.precision.min(m.sensitivity) - 1e-15);
        }
    }
}
