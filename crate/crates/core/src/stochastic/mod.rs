//! Chaotic sequence generators and the Mantegna Lévy-flight sampler.

mod chaos;
mod levy;

pub use chaos::{ChaoticMap, MapKind};
pub use levy::{levy_sigma_x, LevySampler, LEVY_SCALE};
