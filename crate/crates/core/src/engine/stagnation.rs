use crate::stochastic::ChaoticMap;
use crate::Result;

/// Dual-map chaotic source that switches maps when the flame archive stalls.
#[derive(Debug, Clone, PartialEq)]
pub struct MapScheduler {
    maps: [ChaoticMap; 2],
    active: usize,
    window: usize,
    unchanged: usize,
}

impl MapScheduler {
    pub fn new(primary: ChaoticMap, secondary: ChaoticMap, window: usize) -> Self {
        Self { maps: [primary, secondary], active: 0, window: window.max(1), unchanged: 0 }
    }

    pub fn active(&self) -> &ChaoticMap {
        &self.maps[self.active]
    }

    /// Consecutive unchanged observations since the last change or switch.
    pub fn unchanged(&self) -> usize {
        self.unchanged
    }

    /// Next chaotic value from the active map.
    pub fn next_value(&mut self) -> Result<f64> {
        self.maps[self.active].advance()
    }

    /// Records one iteration's flame fitness against the previous iteration's.
    /// After `window` consecutive exact repeats the active map toggles.
    /// Returns whether a switch happened.
    pub fn observe(&mut self, now: &[f64], prev: &[f64]) -> bool {
        if now == prev {
            self.unchanged += 1;
            if self.unchanged >= self.window {
                self.active ^= 1;
                self.unchanged = 0;
                return true;
            }
        } else {
            self.unchanged = 0;
        }
        false
    }
}
