//! Hyperparameter tuning: an optimizer searches momentum, learning rate, epoch
//! count and L2 strength for a gradient-trained classifier, scoring each
//! candidate by its test error rate in percent.
//!
//! The built-in trainer is a regularized logistic model on synthetic two-blob
//! data. Any other trainer can be tuned by handing [`crate::engine::run`] an
//! objective that decodes the position with [`decode_hyperparams`].

mod data;
mod metrics;
mod model;
mod tune;

pub use data::{make_toy_dataset, make_toy_dataset_with, ToyDataset};
pub use metrics::{auc, confusion, metrics, roc_points, ConfusionCounts, Degenerate, MetricsReport};
pub use model::{
    decode_hyperparams, gradient_rel_error, loss_and_grad, train_toy_model, HyperParams, LogisticModel, HYPER_LB,
    HYPER_UB,
};
pub use tune::{evaluate_l_d, tune, tune_config, BestModelReport, TuneOutcome};
