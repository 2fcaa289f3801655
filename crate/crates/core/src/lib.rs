//! Simulation of the univariate Hawkes process with exponential kernel
//!
//! ```text
//! λ(t) = μ + Σ_{t_i < t} α · exp(-β(t - t_i))
//! ```
//!
//! Four interchangeable simulators are provided:
//!
//! - closed-form inverse transform sampling through the Lambert W function
//!   ([`simulators::simulate_lambert`]), with either a Halley or a bisection W;
//! - inverse transform sampling with a safeguarded Newton solve
//!   ([`simulators::simulate_ozaki`]);
//! - Ogata's modified thinning ([`simulators::simulate_ogata`]);
//! - Dassios-Zhao exact sampling ([`simulators::simulate_dassios_zhao`]).
//!
//! [`validation`] checks that they all sample the same law.

pub mod error;
pub mod events;
pub mod intensity;
pub mod lambertw;
pub mod params;
pub mod rng;
pub mod simulators;
pub mod validation;

pub use error::{HawkesError, Result};
pub use events::{EventSequence, SimulatorState};
pub use lambertw::WBackend;
pub use params::{validate_params, HawkesParams};
pub use rng::RngStream;
pub use simulators::{AlgorithmId, StoppingRule};
