//! Parameters of the exponential-kernel Hawkes intensity
//!
//! ```text
//! λ(t) = μ + Σ_{t_i < t} α · exp(-β(t - t_i))
//! ```
//!
//! The branching ratio `α/β` is the expected number of direct offspring per
//! event. Below 1 the process is stationary with mean rate `μ / (1 - α/β)`.

use crate::error::{HawkesError, Result};

/// Validated `(μ, α, β)` triple.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HawkesParams {
    mu: f64,
    alpha: f64,
    beta: f64,
    branching_ratio: f64,
}

impl HawkesParams {
    /// Strict constructor: rejects non-stationary parameter sets.
    pub fn new(mu: f64, alpha: f64, beta: f64) -> Result<Self> {
        validate_params(mu, alpha, beta, false)
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// `α/β`, stored at construction.
    pub fn branching_ratio(&self) -> f64 {
        self.branching_ratio
    }

    /// Long-run mean event rate `μ / (1 - α/β)`. Infinite for unstable sets.
    pub fn stationary_rate(&self) -> f64 {
        if self.branching_ratio >= 1.0 {
            f64::INFINITY
        } else {
            self.mu / (1.0 - self.branching_ratio)
        }
    }
}

impl Default for HawkesParams {
    /// `μ = 1.2, α = 0.6, β = 0.8`: branching ratio 0.75, stationary rate 4.8.
    fn default() -> Self {
        validate_params(1.2, 0.6, 0.8, false).expect("default parameters are stationary")
    }
}

/// Checks `μ > 0`, `α ≥ 0`, `β > 0` and, unless `allow_unstable` is set,
/// `α/β < 1`.
pub fn validate_params(mu: f64, alpha: f64, beta: f64, allow_unstable: bool) -> Result<HawkesParams> {
    for v in [mu, alpha, beta] {
        if !v.is_finite() {
            return Err(HawkesError::NonFiniteParameter(v));
        }
    }
    if mu <= 0.0 {
        return Err(HawkesError::NonPositiveMu(mu));
    }
    if alpha < 0.0 {
        return Err(HawkesError::NegativeAlpha(alpha));
    }
    if beta <= 0.0 {
        return Err(HawkesError::NonPositiveBeta(beta));
    }
    let branching_ratio = alpha / beta;
    if branching_ratio >= 1.0 && !allow_unstable {
        return Err(HawkesError::UnstableProcess(branching_ratio));
    }
    Ok(HawkesParams {
        mu,
        alpha,
        beta,
        branching_ratio,
    })
}
