//! Conditional intensity, compensator and inter-arrival CDF.
//!
//! Every quantity after the last event `t_k` depends on the history only
//! through the sum of exponents `S_k = Σ_{i≤k} exp(-β(t_k - t_i))`, which obeys
//!
//! ```text
//! S_{k+1} = 1 + exp(-β(t_{k+1} - t_k)) · S_k
//! ```
//!
//! so each simulator carries `S_k` forward in O(1) per event. Over a gap `δ`
//! the integrated intensity is
//!
//! ```text
//! Λ(δ) = μδ + (α/β)(1 - exp(-βδ)) S_k
//! ```

use crate::error::{HawkesError, Result};
use crate::events::EventSequence;
use crate::params::HawkesParams;

/// Integrated intensity over `(t_k, t_k + δ]`; always `>= 0`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct CompensatorIncrement(f64);

impl CompensatorIncrement {
    pub fn value(self) -> f64 {
        self.0
    }
}

impl From<CompensatorIncrement> for f64 {
    fn from(c: CompensatorIncrement) -> f64 {
        c.0
    }
}

/// `λ(t) = μ + α Σ_{t_i < t} exp(-β(t - t_i))`, with the sum strict so that
/// `λ` is left-continuous. O(k) in the history length; the simulators use the
/// recursion instead.
pub fn conditional_intensity(params: &HawkesParams, history: &EventSequence, t: f64) -> f64 {
    let beta = params.beta();
    let excitation: f64 = history
        .times()
        .iter()
        .take_while(|&&ti| ti < t)
        .map(|&ti| (-beta * (t - ti)).exp())
        .sum();
    params.mu() + params.alpha() * excitation
}

/// `S_{k+1} = 1 + exp(-β·dt)·S_k`. Starting from `s_k = 0` gives the first
/// event's `S = 1`.
#[inline]
pub fn update_s(s_k: f64, dt: f64, beta: f64) -> Result<f64> {
    if !(dt > 0.0) {
        return Err(HawkesError::NonPositiveDuration(dt));
    }
    Ok(1.0 + (-beta * dt).exp() * s_k)
}

/// `Λ(δ) = μδ + (α/β)(1 - exp(-βδ)) S_k`.
#[inline]
pub fn compensator_increment(params: &HawkesParams, s_k: f64, delta: f64) -> CompensatorIncrement {
    debug_assert!(delta >= 0.0 && s_k >= 0.0);
    let decayed = -(-params.beta() * delta).exp_m1();
    CompensatorIncrement(params.mu() * delta + params.alpha() / params.beta() * decayed * s_k)
}

/// `F(δ) = 1 - exp(-Λ(δ))`: probability the next event falls within `δ` of
/// the last one.
pub fn interarrival_cdf(params: &HawkesParams, s_k: f64, delta: f64) -> f64 {
    -(-compensator_increment(params, s_k, delta).value()).exp_m1()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(mu: f64, alpha: f64, beta: f64) -> HawkesParams {
        HawkesParams::new(mu, alpha, beta).unwrap()
    }

    #[test]
    fn intensity_empty_history() {
        let ev = EventSequence::new(vec![]).unwrap();
        assert_eq!(conditional_intensity(&p(1.0, 0.5, 1.0), &ev, 5.0), 1.0);
    }

    #[test]
    fn intensity_is_left_continuous() {
        let ev = EventSequence::new(vec![2.0]).unwrap();
        assert_eq!(conditional_intensity(&p(1.0, 0.5, 1.0), &ev, 2.0), 1.0);
    }

    #[test]
    fn intensity_direct_sum() {
        let ev = EventSequence::new(vec![0.0, 1.0]).unwrap();
        let expected = 1.0 + 0.5 * ((-2.0f64).exp() + (-1.0f64).exp());
        let got = conditional_intensity(&p(1.0, 0.5, 1.0), &ev, 2.0);
        assert!((got - expected).abs() <= 1e-15, "{got} vs {expected}");
    }

    #[test]
    fn update_s_edge_cases() {
        assert_eq!(update_s(0.0, 0.7, 2.0).unwrap(), 1.0);
        assert_eq!(update_s(1.0, 1e6, 2.0).unwrap(), 1.0);
        assert_eq!(update_s(1.0, 0.0, 2.0), Err(HawkesError::NonPositiveDuration(0.0)));
        assert!(update_s(1.0, -1.0, 2.0).is_err());
    }

    #[test]
    fn update_s_matches_from_scratch_sum() {
        let beta: f64 = 2.0;
        let times = [0.0, 0.4, 1.1, 1.4];
        let direct = |k: usize| -> f64 {
            times[..=k].iter().map(|&ti: &f64| f64::exp(-beta * (times[k] - ti))).sum()
        };
        let mut s = 0.0;
        let mut last = -1.0;
        for (k, &t) in times.iter().enumerate() {
            s = update_s(s, t - last, beta).unwrap();
            last = t;
            assert!((s - direct(k)).abs() <= 1e-15, "k={k}");
        }
        assert_eq!(update_s(2.5, 0.3, 2.0).unwrap(), 1.0 + 2.5 * (-0.6f64).exp());
    }

    #[test]
    fn compensator_trivial_cases() {
        let params = p(1.0, 0.5, 2.0);
        assert_eq!(compensator_increment(&params, 1.8, 0.0).value(), 0.0);
        assert_eq!(compensator_increment(&p(3.0, 0.0, 2.0), 7.0, 0.25).value(), 0.75);
        assert!(compensator_increment(&params, 1.8, 1e-300).value() > 0.0);
    }

    #[test]
    fn cdf_trivial_cases() {
        let params = p(2.0, 0.0, 1.0);
        assert_eq!(interarrival_cdf(&params, 1.0, 0.0), 0.0);
        let median = std::f64::consts::LN_2 / 2.0;
        assert!((interarrival_cdf(&params, 1.0, median) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn cdf_strictly_increasing_on_grid() {
        let params = p(1.0, 0.5, 2.0);
        let mut prev = -1.0;
        for i in 0..1000 {
            let delta = i as f64 * 0.01;
            let f = interarrival_cdf(&params, 1.8, delta);
            assert!(f > prev && (0.0..1.0).contains(&f), "delta={delta}");
            prev = f;
        }
    }
}
