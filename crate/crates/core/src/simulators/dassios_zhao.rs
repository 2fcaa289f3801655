//! Exact simulation from the immigration-birth view.
//!
//! After an event the intensity is `μ + g⁺` with excess `g⁺ = α·S_k`. The
//! next event is the earlier of two independent candidates:
//!
//! - an offspring of the decaying excess,
//!   `S₁ = -ln(1 + β·ln(u₁)/g⁺)/β`, or never if the log argument is `<= 0`;
//! - an immigrant, `S₂ = -ln(u₂)/μ`.
//!
//! No candidate is ever rejected; both uniforms are drawn every step.

use crate::error::Result;
use crate::events::EventSequence;
use crate::params::HawkesParams;
use crate::rng::RngStream;

use super::{collect, run_event_loop, StoppingRule};

/// Gap to the next event given the excess intensity `g⁺` just after the last
/// event (0 before the first). Consumes exactly two uniforms.
#[inline]
pub fn next_delta_dassios_zhao(params: &HawkesParams, excess: f64, stream: &mut RngStream) -> f64 {
    let u1 = stream.uniform_open();
    let u2 = stream.uniform_open();
    let immigrant = -u2.ln() / params.mu();
    if excess <= 0.0 {
        return immigrant;
    }
    let x = params.beta() * u1.ln() / excess;
    let offspring = if x > -1.0 {
        -x.ln_1p() / params.beta()
    } else {
        f64::INFINITY
    };
    offspring.min(immigrant)
}

pub fn simulate_dassios_zhao(params: &HawkesParams, stop: StoppingRule, seed: u64) -> Result<EventSequence> {
    collect(params, stop, seed, |stream, out| run(params, stop, stream, out))
}

pub(super) fn run(params: &HawkesParams, stop: StoppingRule, stream: &mut RngStream, out: &mut Vec<f64>) -> Result<()> {
    run_event_loop(params, stop, stream, out, |state, stream| {
        let excess = params.alpha() * state.s_k();
        Ok(next_delta_dassios_zhao(params, excess, stream))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poisson_reduction() {
        let p = HawkesParams::new(0.8, 0.0, 1.0).unwrap();
        let ev = simulate_dassios_zhao(&p, StoppingRule::EventCount(200), 12).unwrap();
        let mut s = RngStream::new(12);
        let mut t = 0.0;
        for &got in ev.times() {
            s.uniform_open();
            t += -s.uniform_open().ln() / 0.8;
            assert_eq!(got, t);
        }
    }

    #[test]
    fn two_uniforms_per_event() {
        let p = HawkesParams::default();
        let mut s = RngStream::new(1);
        for excess in [0.0, 0.3, 10.0] {
            let before = s.draws();
            let d = next_delta_dassios_zhao(&p, excess, &mut s);
            assert!(d > 0.0);
            assert_eq!(s.draws() - before, 2);
        }
    }

    #[test]
    fn determinism() {
        let p = HawkesParams::default();
        let a = simulate_dassios_zhao(&p, StoppingRule::EventCount(3000), 8).unwrap();
        let b = simulate_dassios_zhao(&p, StoppingRule::EventCount(3000), 8).unwrap();
        assert_eq!(a, b);
    }
}
