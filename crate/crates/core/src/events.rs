use crate::error::{HawkesError, Result};
use crate::intensity::update_s;
use crate::params::HawkesParams;

/// Strictly increasing, finite, nonnegative arrival times.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct EventSequence {
    times: Vec<f64>,
}

impl EventSequence {
    pub fn new(times: Vec<f64>) -> Result<Self> {
        for (index, &value) in times.iter().enumerate() {
            if !value.is_finite() || value < 0.0 {
                return Err(HawkesError::InvalidTime { index, value });
            }
        }
        if let Some(i) = times.windows(2).position(|w| w[0] >= w[1]) {
            return Err(HawkesError::NonIncreasing { index: i + 1 });
        }
        Ok(Self { times })
    }

    /// For simulator output that is increasing by construction.
    pub(crate) fn from_sorted_unchecked(times: Vec<f64>) -> Self {
        debug_assert!(times.windows(2).all(|w| w[0] < w[1]));
        Self { times }
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn last(&self) -> Option<f64> {
        self.times.last().copied()
    }

    /// Inter-event durations `t[i+1] - t[i]`.
    pub fn gaps(&self) -> impl Iterator<Item = f64> + '_ {
        self.times.windows(2).map(|w| w[1] - w[0])
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.times
    }
}

impl AsRef<[f64]> for EventSequence {
    fn as_ref(&self) -> &[f64] {
        &self.times
    }
}

/// Recursion state carried between events of one trajectory.
///
/// `s_k` is the sum of exponents `Σ_{i≤k} exp(-β(t_k - t_i))` re-centred at the
/// most recent event, so `lambda_plus = μ + α·s_k` is the intensity just after it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimulatorState {
    t_last: f64,
    s_k: f64,
    lambda_plus: f64,
    events: u64,
}

impl SimulatorState {
    /// State before any event: clock at 0, no excitation.
    pub fn new(params: &HawkesParams) -> Self {
        Self {
            t_last: 0.0,
            s_k: 0.0,
            lambda_plus: params.mu(),
            events: 0,
        }
    }

    pub fn t_last(&self) -> f64 {
        self.t_last
    }

    pub fn s_k(&self) -> f64 {
        self.s_k
    }

    pub fn lambda_plus(&self) -> f64 {
        self.lambda_plus
    }

    pub fn events(&self) -> u64 {
        self.events
    }

    /// Intensity just before `t >= t_last`, from the decayed state.
    #[inline]
    pub fn intensity_at(&self, params: &HawkesParams, t: f64) -> f64 {
        params.mu() + params.alpha() * self.s_k * (-params.beta() * (t - self.t_last)).exp()
    }

    /// Registers an event at `t > t_last`.
    #[inline]
    pub fn record_event(&mut self, params: &HawkesParams, t: f64) -> Result<()> {
        self.s_k = update_s(self.s_k, t - self.t_last, params.beta())?;
        self.lambda_plus = params.mu() + params.alpha() * self.s_k;
        self.t_last = t;
        self.events += 1;
        Ok(())
    }
}
