//! Trajectory generators.
//!
//! All four algorithms start from an empty history at time 0 and stop either
//! after a fixed number of events or at a time horizon. Uniform consumption is
//! fixed per algorithm so that a seed pins down the whole trajectory:
//!
//! | algorithm        | uniforms                         |
//! |------------------|----------------------------------|
//! | `lambert_*`      | one per event                    |
//! | `ozaki_newton`   | one per event                    |
//! | `ogata_thinning` | two per candidate (gap, accept)  |
//! | `dassios_zhao`   | two per event (excited, background) |
//!
//! The two inverse-transform methods solve `Λ(δ) = -ln u` for the same `u`,
//! so on a shared seed they produce the same trajectory up to solver accuracy.

use std::fmt;
use std::str::FromStr;

use crate::error::{HawkesError, Result};
use crate::events::{EventSequence, SimulatorState};
use crate::lambertw::WBackend;
use crate::params::HawkesParams;
use crate::rng::RngStream;

mod dassios_zhao;
mod lambert;
mod ogata;
mod ozaki;

pub use dassios_zhao::{next_delta_dassios_zhao, simulate_dassios_zhao};
pub use lambert::{next_delta_lambert, simulate_lambert, LOG_DOMAIN_THRESHOLD};
pub use ogata::{simulate_ogata, simulate_ogata_with_stats, OgataStats};
pub use ozaki::{next_delta_ozaki, next_delta_ozaki_counted, simulate_ozaki, OZAKI_MAX_ITER};

/// Default Newton tolerance on `|Λ(δ) + ln u|` for the Ozaki simulator.
pub const DEFAULT_OZAKI_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StoppingRule {
    /// Exactly `n` events.
    EventCount(usize),
    /// Every event in `(0, T]`.
    Horizon(f64),
}

impl StoppingRule {
    pub fn validate(self) -> Result<Self> {
        match self {
            StoppingRule::EventCount(0) => Err(HawkesError::InvalidStoppingRule(
                "event count must be >= 1".into(),
            )),
            StoppingRule::Horizon(t) if !(t > 0.0 && t.is_finite()) => Err(
                HawkesError::InvalidStoppingRule(format!("horizon must be finite and > 0, got {t}")),
            ),
            rule => Ok(rule),
        }
    }

    /// Expected number of events, for pre-allocating output.
    pub fn capacity_hint(self, params: &HawkesParams) -> usize {
        match self {
            StoppingRule::EventCount(n) => n,
            StoppingRule::Horizon(t) => {
                let expected = params.stationary_rate() * t;
                if expected.is_finite() {
                    (expected * 1.1) as usize + 16
                } else {
                    1024
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgorithmId {
    LambertHalley,
    LambertReferenceW,
    OzakiNewton,
    OgataThinning,
    DassiosZhao,
}

impl AlgorithmId {
    pub const ALL: [AlgorithmId; 5] = [
        AlgorithmId::LambertHalley,
        AlgorithmId::LambertReferenceW,
        AlgorithmId::OzakiNewton,
        AlgorithmId::OgataThinning,
        AlgorithmId::DassiosZhao,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            AlgorithmId::LambertHalley => "lambert_halley",
            AlgorithmId::LambertReferenceW => "lambert_reference_w",
            AlgorithmId::OzakiNewton => "ozaki_newton",
            AlgorithmId::OgataThinning => "ogata_thinning",
            AlgorithmId::DassiosZhao => "dassios_zhao",
        }
    }

    /// Runs this algorithm with its default settings (Halley or bisection W
    /// for the Lambert variants, [`DEFAULT_OZAKI_TOL`] for Newton).
    pub fn simulate(self, params: &HawkesParams, stop: StoppingRule, seed: u64) -> Result<EventSequence> {
        let mut stream = RngStream::new(seed);
        let mut times = Vec::with_capacity(stop.capacity_hint(params));
        self.simulate_into(params, stop, &mut stream, &mut times)?;
        Ok(EventSequence::from_sorted_unchecked(times))
    }

    /// Appends one trajectory to `out` (cleared first), drawing from `stream`.
    ///
    /// Lets a caller keep seeding and buffer allocation out of a timed region.
    pub fn simulate_into(
        self,
        params: &HawkesParams,
        stop: StoppingRule,
        stream: &mut RngStream,
        out: &mut Vec<f64>,
    ) -> Result<()> {
        out.clear();
        match self {
            AlgorithmId::LambertHalley => lambert::run(params, stop, stream, out, WBackend::Halley),
            AlgorithmId::LambertReferenceW => {
                lambert::run(params, stop, stream, out, WBackend::BisectionReference)
            }
            AlgorithmId::OzakiNewton => ozaki::run(params, stop, stream, out, DEFAULT_OZAKI_TOL),
            AlgorithmId::OgataThinning => ogata::run(params, stop, stream, out).map(|_| ()),
            AlgorithmId::DassiosZhao => dassios_zhao::run(params, stop, stream, out),
        }
    }
}

impl fmt::Display for AlgorithmId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownAlgorithm(pub String);

impl fmt::Display for UnknownAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown algorithm '{}' (expected one of: ", self.0)?;
        let names: Vec<_> = AlgorithmId::ALL.iter().map(|a| a.as_str()).collect();
        write!(f, "{})", names.join(", "))
    }
}

impl std::error::Error for UnknownAlgorithm {}

impl FromStr for AlgorithmId {
    type Err = UnknownAlgorithm;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        AlgorithmId::ALL
            .into_iter()
            .find(|a| a.as_str() == s.trim())
            .ok_or_else(|| UnknownAlgorithm(s.to_string()))
    }
}

/// `t₀ = -ln(u)/μ`: with no history the intensity is the constant `μ`.
#[inline]
pub fn first_event(params: &HawkesParams, stream: &mut RngStream) -> f64 {
    -stream.uniform_open().ln() / params.mu()
}

/// Shared event loop for the algorithms that produce exactly one event per
/// step. `next_gap` sees the state after the previous event (or the empty
/// state) and returns a strictly positive gap.
pub(crate) fn run_event_loop<F>(
    params: &HawkesParams,
    stop: StoppingRule,
    stream: &mut RngStream,
    times: &mut Vec<f64>,
    mut next_gap: F,
) -> Result<()>
where
    F: FnMut(&SimulatorState, &mut RngStream) -> Result<f64>,
{
    let stop = stop.validate()?;
    let mut state = SimulatorState::new(params);
    loop {
        if let StoppingRule::EventCount(n) = stop {
            if times.len() >= n {
                break;
            }
        }
        let gap = next_gap(&state, stream)?;
        let t = state.t_last() + gap;
        if let StoppingRule::Horizon(horizon) = stop {
            if t > horizon {
                break;
            }
        }
        state.record_event(params, t)?;
        times.push(t);
    }
    Ok(())
}

/// Wraps a stream/buffer runner into the seed-in, sequence-out form.
pub(crate) fn collect<F>(params: &HawkesParams, stop: StoppingRule, seed: u64, run: F) -> Result<EventSequence>
where
    F: FnOnce(&mut RngStream, &mut Vec<f64>) -> Result<()>,
{
    let mut stream = RngStream::new(seed);
    let mut times = Vec::with_capacity(stop.capacity_hint(params));
    run(&mut stream, &mut times)?;
    Ok(EventSequence::from_sorted_unchecked(times))
}
