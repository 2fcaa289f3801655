//! Ogata's modified thinning.
//!
//! Between events the intensity only decays, so `M = λ(t_k⁺) = μ + α·S_k`
//! dominates it until the next acceptance (`M = μ` before the first event).
//! Each candidate costs two uniforms: one exponential gap at rate `M`, one
//! acceptance test against `λ(candidate)/M`.

use crate::error::Result;
use crate::events::{EventSequence, SimulatorState};
use crate::params::HawkesParams;
use crate::rng::RngStream;

use super::{collect, StoppingRule};

/// Candidate bookkeeping from one thinning run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OgataStats {
    pub candidates: u64,
    pub accepted: u64,
}

impl OgataStats {
    pub fn acceptance_ratio(&self) -> f64 {
        self.accepted as f64 / self.candidates as f64
    }
}

pub fn simulate_ogata(params: &HawkesParams, stop: StoppingRule, seed: u64) -> Result<EventSequence> {
    simulate_ogata_with_stats(params, stop, seed).map(|(ev, _)| ev)
}

pub fn simulate_ogata_with_stats(
    params: &HawkesParams,
    stop: StoppingRule,
    seed: u64,
) -> Result<(EventSequence, OgataStats)> {
    let mut stats = OgataStats::default();
    let ev = collect(params, stop, seed, |stream, out| {
        stats = run(params, stop, stream, out)?;
        Ok(())
    })?;
    Ok((ev, stats))
}

pub(super) fn run(
    params: &HawkesParams,
    stop: StoppingRule,
    stream: &mut RngStream,
    times: &mut Vec<f64>,
) -> Result<OgataStats> {
    let stop = stop.validate()?;
    let mut state = SimulatorState::new(params);
    let mut stats = OgataStats::default();
    let mut bound = state.lambda_plus();
    let mut clock = 0.0;

    loop {
        if let StoppingRule::EventCount(n) = stop {
            if times.len() >= n {
                break;
            }
        }
        let candidate = clock - stream.uniform_open().ln() / bound;
        if let StoppingRule::Horizon(horizon) = stop {
            if candidate > horizon {
                break;
            }
        }
        let accept = stream.uniform_open();
        let lambda = state.intensity_at(params, candidate);
        debug_assert!(
            lambda <= bound + 1e-12,
            "thinning bound violated: λ={lambda} > M={bound}"
        );
        stats.candidates += 1;
        if accept * bound <= lambda {
            state.record_event(params, candidate)?;
            bound = state.lambda_plus();
            times.push(candidate);
            stats.accepted += 1;
        }
        clock = candidate;
    }
    Ok(stats)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poisson_accepts_everything() {
        let p = HawkesParams::new(1.5, 0.0, 1.0).unwrap();
        let (ev, stats) = simulate_ogata_with_stats(&p, StoppingRule::EventCount(200), 3).unwrap();
        assert_eq!(stats.acceptance_ratio(), 1.0);

        let mut s = RngStream::new(3);
        let mut t = 0.0;
        for &got in ev.times() {
            t += -s.uniform_open().ln() / 1.5;
            s.uniform_open();
            assert_eq!(got, t);
        }
    }

    #[test]
    fn excitation_causes_rejections() {
        let p = HawkesParams::default();
        let (ev, stats) = simulate_ogata_with_stats(&p, StoppingRule::EventCount(5000), 3).unwrap();
        assert_eq!(ev.len(), 5000);
        assert_eq!(stats.accepted, 5000);
        assert!(stats.candidates > stats.accepted);
    }

    #[test]
    fn determinism() {
        let p = HawkesParams::default();
        let a = simulate_ogata(&p, StoppingRule::EventCount(3000), 8).unwrap();
        let b = simulate_ogata(&p, StoppingRule::EventCount(3000), 8).unwrap();
        assert_eq!(a, b);
    }
}
