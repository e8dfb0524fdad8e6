//! Weather-aware UAV-to-ground radio simulator.
//!
//! Models specific attenuation for rain, fog and snow, the probabilistic
//! LoS air-to-ground path loss, budget-constrained coverage solving, and
//! SINR-based spectral/energy efficiency, and drives deterministic sweep
//! experiments with CSV output.

pub mod channel;
pub mod config;
pub mod coverage;
pub mod error;
pub mod radio;
pub mod report;
pub mod scenario;
pub mod weather;

pub use error::{ConfigError, ModelError};
