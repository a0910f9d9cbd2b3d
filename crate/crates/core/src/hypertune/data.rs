use std::path::Path;

use crate::rng::SeededRng;
use crate::{Error, Result};

/// Fraction of rows used for training.
const TRAIN_FRACTION: f64 = 0.7;
const SPLIT_STREAM: u64 = 0x05ee_d5b1_17ab_1e00;

/// Binary classification data with a fixed 70/30 train/test split.
#[derive(Debug, Clone, PartialEq)]
pub struct ToyDataset {
    pub features: Vec<Vec<f64>>,
    pub labels: Vec<u8>,
    pub train: Vec<usize>,
    pub test: Vec<usize>,
    pub seed: u64,
}

/// Two unit-variance Gaussian blobs centred at `±1` on every axis.
pub fn make_toy_dataset(m: usize, p: usize, seed: u64) -> Result<ToyDataset> {
    make_toy_dataset_with(m, p, 1.0, seed)
}

/// Like [`make_toy_dataset`] with blob centres at `±offset` on every axis.
/// Labels alternate, so classes are balanced to within one row.
pub fn make_toy_dataset_with(m: usize, p: usize, offset: f64, seed: u64) -> Result<ToyDataset> {
    if m < 40 || p < 2 {
        return Err(Error::Parameter(format!("toy dataset needs m >= 40 and p >= 2, got m={m}, p={p}")));
    }
    let mut rng = SeededRng::new(seed);
    let labels: Vec<u8> = (0..m).map(|i| (i % 2) as u8).collect();
    let features = labels
        .iter()
        .map(|&y| {
            let centre = if y == 1 { offset } else { -offset };
            (0..p).map(|_| centre + rng.normal()).collect()
        })
        .collect();
    ToyDataset::with_split(features, labels, seed)
}

impl ToyDataset {
    /// Wraps rows and labels, splitting 70/30 with a shuffle seeded by `seed`.
    pub fn with_split(features: Vec<Vec<f64>>, labels: Vec<u8>, seed: u64) -> Result<Self> {
        if features.len() != labels.len() {
            return Err(Error::LengthMismatch(features.len(), labels.len()));
        }
        if features.is_empty() {
            return Err(Error::Data("dataset is empty".into()));
        }
        let p = features[0].len();
        if p == 0 || features.iter().any(|r| r.len() != p) {
            return Err(Error::Data("rows must share a non-zero feature count".into()));
        }
        if labels.iter().any(|&y| y > 1) {
            return Err(Error::Data("labels must be 0 or 1".into()));
        }
        let m = features.len();
        let mut order: Vec<usize> = (0..m).collect();
        SeededRng::new(seed ^ SPLIT_STREAM).shuffle(&mut order);
        let n_train = (TRAIN_FRACTION * m as f64).floor() as usize;
        let test = order.split_off(n_train);
        Ok(Self { features, labels, train: order, test, seed })
    }

    pub fn n_features(&self) -> usize {
        self.features[0].len()
    }

    /// Writes one row per sample: `x0,...,x{p-1},label`.
    pub fn to_csv(&self, path: &Path) -> Result<()> {
        let mut w = csv::Writer::from_path(path).map_err(|e| Error::csv(path, e))?;
        let mut header: Vec<String> = (0..self.n_features()).map(|j| format!("x{j}")).collect();
        header.push("label".into());
        w.write_record(&header).map_err(|e| Error::csv(path, e))?;
        for (row, y) in self.features.iter().zip(&self.labels) {
            let mut rec: Vec<String> = row.iter().map(|v| format!("{v:e}")).collect();
            rec.push(y.to_string());
            w.write_record(&rec).map_err(|e| Error::csv(path, e))?;
        }
        w.flush().map_err(|e| Error::io(path, e))
    }

    /// Reads a CSV whose last column is the 0/1 label, then splits it with `seed`.
    pub fn from_csv(path: &Path, seed: u64) -> Result<Self> {
        let mut r = csv::Reader::from_path(path).map_err(|e| Error::csv(path, e))?;
        let mut features = Vec::new();
        let mut labels = Vec::new();
        for (line, rec) in r.records().enumerate() {
            let rec = rec.map_err(|e| Error::csv(path, e))?;
            let bad = |what: &str| Error::Data(format!("{}: row {}: {what}", path.display(), line + 1));
            let (label, xs) = rec
                .iter()
                .collect::<Vec<_>>()
                .split_last()
                .map(|(l, x)| (*l, x.to_vec()))
                .ok_or_else(|| bad("empty row"))?;
            let row = xs
                .iter()
                .map(|s| s.trim().parse::<f64>().map_err(|_| bad("non-numeric feature")))
                .collect::<Result<Vec<_>>>()?;
            let y = match label.trim() {
                "0" => 0,
                "1" => 1,
                _ => return Err(bad("label must be 0 or 1")),
            };
            features.push(row);
            labels.push(y);
        }
        Self::with_split(features, labels, seed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        let a = make_toy_dataset(1000, 4, 12).unwrap();
        let b = make_toy_dataset(1000, 4, 12).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, make_toy_dataset(1000, 4, 13).unwrap());
    }

    #[test]
    fn split_sizes() {
        let d = make_toy_dataset(40, 2, 0).unwrap();
        assert_eq!((d.train.len(), d.test.len()), (28, 12));
        let d = make_toy_dataset(1000, 3, 0).unwrap();
        assert_eq!((d.train.len(), d.test.len()), (700, 300));
    }

    #[test]
    fn split_is_a_partition_and_balanced() {
        let d = make_toy_dataset(501, 3, 9).unwrap();
        let mut all: Vec<usize> = d.train.iter().chain(&d.test).copied().collect();
        all.sort_unstable();
        assert_eq!(all, (0..501).collect::<Vec<_>>());
        let ones = d.labels.iter().filter(|&&y| y == 1).count() as f64 / 501.0;
        assert!((0.45..=0.55).contains(&ones));
    }

    #[test]
    fn too_small_is_rejected() {
        assert!(make_toy_dataset(39, 2, 0).is_err());
        assert!(make_toy_dataset(40, 1, 0).is_err());
    }

    #[test]
    fn csv_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("toy.csv");
        let d = make_toy_dataset(60, 3, 2).unwrap();
        d.to_csv(&path).unwrap();
        let back = ToyDataset::from_csv(&path, 2).unwrap();
        assert_eq!(back, d);

        std::fs::write(&path, "x0,x1,label\n1.0,2.0,3\n").unwrap();
        assert!(ToyDataset::from_csv(&path, 0).is_err());
        std::fs::write(&path, "x0,x1,label\n1.0,abc,1\n").unwrap();
        assert!(ToyDataset::from_csv(&path, 0).is_err());
    }
}
