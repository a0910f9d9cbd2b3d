use super::Swarm;
use crate::{Error, Result};

/// The best solutions found so far, sorted ascending by fitness.
#[derive(Debug, Clone, PartialEq)]
pub struct FlameArchive {
    pub positions: Vec<Vec<f64>>,
    pub fitness: Vec<f64>,
}

impl FlameArchive {
    pub fn len(&self) -> usize {
        self.fitness.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fitness.is_empty()
    }

    pub fn best_fitness(&self) -> f64 {
        self.fitness[0]
    }

    pub fn best_position(&self) -> &[f64] {
        &self.positions[0]
    }
}

/// Merges the archive with the freshly evaluated swarm and keeps the best
/// `swarm.len()` rows. Earlier-seen rows win ties (archive rows precede swarm
/// rows and the sort is stable).
pub fn update_flames(archive: Option<&FlameArchive>, swarm: &Swarm) -> Result<FlameArchive> {
    if let Some(i) = swarm.fitness.iter().position(|f| f.is_nan()) {
        return Err(Error::Objective { value: f64::NAN, position: swarm.positions[i].clone() });
    }
    let n = swarm.len();
    let (old_pos, old_fit): (&[Vec<f64>], &[f64]) = match archive {
        Some(a) => (&a.positions, &a.fitness),
        None => (&[], &[]),
    };
    let rows: Vec<(&Vec<f64>, f64)> = old_pos
        .iter()
        .zip(old_fit.iter().copied())
        .chain(swarm.positions.iter().zip(swarm.fitness.iter().copied()))
        .collect();
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by(|&i, &j| rows[i].1.total_cmp(&rows[j].1));
    order.truncate(n);
    Ok(FlameArchive {
        positions: order.iter().map(|&i| rows[i].0.clone()).collect(),
        fitness: order.iter().map(|&i| rows[i].1).collect(),
    })
}
