//! Goodness-of-fit checks for simulated trajectories.
//!
//! By the time-rescaling theorem the compensator increments between
//! consecutive events of a correctly simulated trajectory are i.i.d. Exp(1),
//! whatever the parameters. Comparing those residuals to Exp(1) is therefore
//! an exact test even though the raw gaps are not identically distributed.

use crate::error::{HawkesError, Result};
use crate::events::EventSequence;
use crate::intensity::{compensator_increment, update_s};
use crate::params::HawkesParams;
use crate::simulators::{AlgorithmId, StoppingRule};

/// Minimum residual count for the KS statistic.
pub const KS_MIN_RESIDUALS: usize = 20;

/// Asymptotic 1% critical value coefficient of the one-sample KS test.
pub const KS_CRITICAL_1PCT: f64 = 1.63;

/// Seeds used by the fixed validation panels.
pub fn seed_panel(count: usize) -> Vec<u64> {
    (1..=count as u64).collect()
}

/// Compensator masses between consecutive events.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualSeries {
    values: Vec<f64>,
}

impl ResidualSeries {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }

    /// Lag-1 sample autocorrelation.
    pub fn lag1_autocorrelation(&self) -> f64 {
        let n = self.values.len();
        if n < 2 {
            return 0.0;
        }
        let m = self.mean();
        let var: f64 = self.values.iter().map(|x| (x - m) * (x - m)).sum();
        if var == 0.0 {
            return 0.0;
        }
        let cov: f64 = self.values.windows(2).map(|w| (w[0] - m) * (w[1] - m)).sum();
        cov / var
    }
}

impl From<Vec<f64>> for ResidualSeries {
    fn from(values: Vec<f64>) -> Self {
        Self { values }
    }
}

/// `Λ(t_{i+1}) - Λ(t_i)` for every consecutive pair, using the `S` recursion.
///
/// The mass on `[0, t_0]` is not included, so the series has one element fewer
/// than the trajectory.
pub fn time_rescaling_residuals(params: &HawkesParams, events: &EventSequence) -> Result<ResidualSeries> {
    let times = events.times();
    if times.len() < 2 {
        return Err(HawkesError::TooFewEvents {
            needed: 2,
            got: times.len(),
        });
    }
    let mut values = Vec::with_capacity(times.len() - 1);
    let mut s = 1.0;
    for w in times.windows(2) {
        let gap = w[1] - w[0];
        values.push(compensator_increment(params, s, gap).value());
        s = update_s(s, gap, params.beta())?;
    }
    Ok(ResidualSeries { values })
}

/// `sup_x |F_n(x) - (1 - e^{-x})|`.
pub fn ks_statistic_exp1(residuals: &ResidualSeries) -> Result<f64> {
    let n = residuals.len();
    if n < KS_MIN_RESIDUALS {
        return Err(HawkesError::TooFewEvents {
            needed: KS_MIN_RESIDUALS,
            got: n,
        });
    }
    let mut sorted = residuals.values.clone();
    sorted.sort_by(f64::total_cmp);
    let nf = n as f64;
    let d = sorted
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let cdf = -(-x).exp_m1();
            let above = (i + 1) as f64 / nf - cdf;
            let below = cdf - i as f64 / nf;
            above.max(below)
        })
        .fold(0.0f64, f64::max);
    Ok(d)
}

/// `1.63 / sqrt(n)`.
pub fn ks_critical_value_1pct(n: usize) -> f64 {
    KS_CRITICAL_1PCT / (n as f64).sqrt()
}

/// `(count - 1) / (t_last - t_first)`.
pub fn empirical_rate(events: &EventSequence) -> Result<f64> {
    let times = events.times();
    if times.len() < 2 {
        return Err(HawkesError::TooFewEvents {
            needed: 2,
            got: times.len(),
        });
    }
    Ok((times.len() - 1) as f64 / (times[times.len() - 1] - times[0]))
}

/// Summary of one trajectory's residual diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualReport {
    pub seed: u64,
    pub ks: f64,
    pub ks_critical: f64,
    pub mean: f64,
    pub lag1: f64,
}

impl ResidualReport {
    pub fn from_events(params: &HawkesParams, events: &EventSequence, seed: u64) -> Result<Self> {
        let residuals = time_rescaling_residuals(params, events)?;
        Ok(Self {
            seed,
            ks: ks_statistic_exp1(&residuals)?,
            ks_critical: ks_critical_value_1pct(residuals.len()),
            mean: residuals.mean(),
            lag1: residuals.lag1_autocorrelation(),
        })
    }

    pub fn ks_pass(&self) -> bool {
        self.ks < self.ks_critical
    }
}

/// Outcome of a fixed-seed panel of [`ResidualReport`]s for one algorithm.
///
/// The panel passes when at most one seed in twenty exceeds the 1% KS
/// critical value, and every seed has residual mean within `3/√n` of 1 and
/// lag-1 autocorrelation below `5/√n` in magnitude (0.03 and 0.05 at
/// `n = 10⁴`).
#[derive(Debug, Clone, PartialEq)]
pub struct PanelVerdict {
    pub reports: Vec<ResidualReport>,
    pub ks_failures: usize,
    pub allowed_ks_failures: usize,
    pub mean_tolerance: f64,
    pub lag1_tolerance: f64,
    pub mean_failures: usize,
    pub lag1_failures: usize,
}

impl PanelVerdict {
    pub fn evaluate(reports: Vec<ResidualReport>, n_events: usize) -> Self {
        let root_n = (n_events as f64).sqrt();
        let mean_tolerance = 3.0 / root_n;
        let lag1_tolerance = 5.0 / root_n;
        let ks_failures = reports.iter().filter(|r| !r.ks_pass()).count();
        let mean_failures = reports
            .iter()
            .filter(|r| !((r.mean - 1.0).abs() <= mean_tolerance))
            .count();
        let lag1_failures = reports
            .iter()
            .filter(|r| !(r.lag1.abs() < lag1_tolerance))
            .count();
        Self {
            allowed_ks_failures: reports.len() / 20,
            reports,
            ks_failures,
            mean_tolerance,
            lag1_tolerance,
            mean_failures,
            lag1_failures,
        }
    }

    pub fn passed(&self) -> bool {
        !self.reports.is_empty()
            && self.ks_failures <= self.allowed_ks_failures
            && self.mean_failures == 0
            && self.lag1_failures == 0
    }
}

/// Simulates and scores one trajectory per seed, sequentially.
pub fn run_panel(
    algorithm: AlgorithmId,
    params: &HawkesParams,
    n_events: usize,
    seeds: &[u64],
) -> Result<PanelVerdict> {
    let reports = seeds
        .iter()
        .map(|&seed| {
            let ev = algorithm.simulate(params, StoppingRule::EventCount(n_events), seed)?;
            ResidualReport::from_events(params, &ev, seed)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PanelVerdict::evaluate(reports, n_events))
}
