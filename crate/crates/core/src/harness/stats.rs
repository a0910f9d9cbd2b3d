use crate::{Error, Result};

/// Mean and sample standard deviation of final fitness and runtime.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StatsSummary {
    pub ave: f64,
    pub std: f64,
    pub ave_runtime: f64,
    pub std_runtime: f64,
    pub samples: usize,
    /// Only one sample, so both deviations are reported as 0.
    pub single_sample: bool,
}

fn mean_std(v: &[f64]) -> (f64, f64) {
    // A constant sample has exactly zero spread, which summation rounding could hide.
    if v.iter().all(|x| x.to_bits() == v[0].to_bits()) {
        return (v[0], 0.0);
    }
    let n = v.len() as f64;
    let mean = v.iter().sum::<f64>() / n;
    if v.len() < 2 {
        return (mean, 0.0);
    }
    let ss: f64 = v.iter().map(|x| (x - mean) * (x - mean)).sum();
    (mean, (ss / (n - 1.0)).sqrt())
}

pub fn summarize(finals: &[f64], runtimes: &[f64]) -> Result<StatsSummary> {
    if finals.len() != runtimes.len() {
        return Err(Error::LengthMismatch(finals.len(), runtimes.len()));
    }
    if finals.is_empty() {
        return Err(Error::Data("cannot summarize zero runs".into()));
    }
    let (ave, std) = mean_std(finals);
    let (ave_runtime, std_runtime) = mean_std(runtimes);
    Ok(StatsSummary { ave, std, ave_runtime, std_runtime, samples: finals.len(), single_sample: finals.len() == 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_computed() {
        let s = summarize(&[1.0, 2.0, 3.0], &[0.1, 0.1, 0.1]).unwrap();
        assert_eq!((s.ave, s.std), (2.0, 1.0));
        assert_eq!(s.std_runtime, 0.0);
        assert!(!s.single_sample);
    }

    #[test]
    fn single_and_constant() {
        let s = summarize(&[5.0], &[1.0]).unwrap();
        assert_eq!((s.ave, s.std, s.single_sample), (5.0, 0.0, true));
        assert_eq!(summarize(&[4.0; 7], &[1.0; 7]).unwrap().std, 0.0);
    }

    #[test]
    fn bad_input() {
        assert!(summarize(&[], &[]).is_err());
        assert!(summarize(&[1.0], &[]).is_err());
    }
}
