//! Inverse-transform sampling with a numerical root finder.
//!
//! Newton iteration on `G(δ) = Λ(δ) + ln u`, with `G'(δ) = λ(t_k + δ)`,
//! safeguarded by a bracket `[lo, hi]` on the sign of `G`.

use crate::error::{HawkesError, Result};
use crate::events::EventSequence;
use crate::params::HawkesParams;

use crate::rng::RngStream;

use super::{collect, first_event, run_event_loop, StoppingRule};

pub const OZAKI_MAX_ITER: usize = 100;

/// Gap to the next event, and the number of `G` evaluations it took.
pub fn next_delta_ozaki_counted(params: &HawkesParams, s_k: f64, u: f64, tol: f64) -> Result<(f64, usize)> {
    let (mu, alpha, beta) = (params.mu(), params.alpha(), params.beta());
    let target = -u.ln();
    let excitation = alpha * s_k;

    // Λ(δ) ≥ μδ, so G(target/μ) ≥ 0 and [0, target/μ] always brackets the root.
    let mut lo = 0.0;
    let mut hi = target / mu;
    let mut delta = target / (mu + excitation);

    for iter in 1..=OZAKI_MAX_ITER {
        let decay = (-beta * delta).exp();
        let g = mu * delta + excitation / beta * (1.0 - decay) - target;
        if g.abs() <= tol {
            return Ok((delta, iter));
        }
        if g < 0.0 {
            lo = delta;
        } else {
            hi = delta;
        }
        let slope = mu + excitation * decay;
        let mut next = delta - g / slope;
        if !(next > lo && next <= hi) {
            next = 0.5 * (lo + hi);
        }
        if next == delta {
            return Ok((delta, iter));
        }
        delta = next;
    }
    Err(HawkesError::NoConvergence(OZAKI_MAX_ITER))
}

/// Gap `δ` with `|Λ(δ) + ln u| ≤ tol`.
#[inline]
pub fn next_delta_ozaki(params: &HawkesParams, s_k: f64, u: f64, tol: f64) -> Result<f64> {
    next_delta_ozaki_counted(params, s_k, u, tol).map(|(d, _)| d)
}

pub fn simulate_ozaki(params: &HawkesParams, stop: StoppingRule, seed: u64, tol: f64) -> Result<EventSequence> {
    collect(params, stop, seed, |stream, out| run(params, stop, stream, out, tol))
}

pub(super) fn run(
    params: &HawkesParams,
    stop: StoppingRule,
    stream: &mut RngStream,
    out: &mut Vec<f64>,
    tol: f64,
) -> Result<()> {
    run_event_loop(params, stop, stream, out, |state, stream| {
        if state.events() == 0 {
            Ok(first_event(params, stream))
        } else {
            next_delta_ozaki(params, state.s_k(), stream.uniform_open(), tol)
        }
    })
}
