//! Inverse-transform sampling in closed form.
//!
//! Solving `Λ(δ) = -ln u` after an event with sum of exponents `S_k` gives
//!
//! ```text
//! δ = (W(d) - ln B - A) / β
//! d = A·B·e^A,   A = (α/μ)·S_k,   B = u^(β/μ)
//! ```

use crate::error::Result;
use crate::events::EventSequence;
use crate::lambertw::{lambert_w0, lambert_w0_log, WBackend};
use crate::params::HawkesParams;

use crate::rng::RngStream;

use super::{collect, first_event, run_event_loop, StoppingRule};

/// Above this `A`, `W(d)` is evaluated from `ln d = ln A + ln B + A` so that
/// `e^A` never has to be formed.
pub const LOG_DOMAIN_THRESHOLD: f64 = 50.0;

/// Gap to the next event, given the state after the last one and one uniform.
#[inline]
pub fn next_delta_lambert(params: &HawkesParams, s_k: f64, u: f64, backend: WBackend) -> Result<f64> {
    let (mu, beta) = (params.mu(), params.beta());
    let ln_u = u.ln();
    let a = params.alpha() / mu * s_k;
    if a == 0.0 {
        return Ok(-ln_u / mu);
    }
    let ln_b = beta / mu * ln_u;
    let w = if a > LOG_DOMAIN_THRESHOLD {
        lambert_w0_log(a.ln() + ln_b + a, backend)?
    } else {
        // A·B·e^A with B·e^A formed as a single exponential.
        lambert_w0(a * (ln_b + a).exp(), backend)?
    };
    let delta = (w - ln_b - a) / beta;
    if delta > 0.0 {
        Ok(delta)
    } else {
        // u within a few ulps of 1: the bracket cancels to <= 0 in floating
        // point. Use the small-gap limit Λ(δ) ≈ λ⁺δ instead.
        Ok(-ln_u / (mu * (1.0 + a)))
    }
}

pub fn simulate_lambert(
    params: &HawkesParams,
    stop: StoppingRule,
    seed: u64,
    backend: WBackend,
) -> Result<EventSequence> {
    collect(params, stop, seed, |stream, out| run(params, stop, stream, out, backend))
}

pub(super) fn run(
    params: &HawkesParams,
    stop: StoppingRule,
    stream: &mut RngStream,
    out: &mut Vec<f64>,
    backend: WBackend,
) -> Result<()> {
    run_event_loop(params, stop, stream, out, |state, stream| {
        if state.events() == 0 {
            Ok(first_event(params, stream))
        } else {
            next_delta_lambert(params, state.s_k(), stream.uniform_open(), backend)
        }
    })
}
