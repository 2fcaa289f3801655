//! Principal-branch Lambert W for nonnegative real arguments.
//!
//! `W₀(d)` is the unique `w ≥ 0` with `w·eʷ = d`. Two backends share one
//! contract:
//!
//! - [`WBackend::Halley`]: third-order iteration from a cheap initial guess,
//!   converging in a handful of steps. This is what the simulator uses.
//! - [`WBackend::BisectionReference`]: plain bisection on a wide bracket. Slow
//!   and simple; it serves as the oracle and as the "general-purpose W"
//!   line in the benchmark.
//!
//! Arguments too large for `f64` are handled through [`lambert_w0_log`], which
//! takes `ln d` instead of `d`.

use std::f64::consts::E;

use crate::error::{HawkesError, Result};

/// Above this `ln d`, `exp(ln d)` is close to overflowing and the log-domain
/// iteration takes over.
const LOG_DOMAIN_SWITCH: f64 = 700.0;

/// Above this `d`, `eʷ·(w + 1)` in the Halley denominator can overflow, so
/// the linear entry point hands over to the log-domain iteration.
const LINEAR_HALLEY_MAX_D: f64 = 1e300;

const HALLEY_MAX_ITER: u32 = 32;
const BISECTION_MAX_ITER: u32 = 1100;
const REL_TOL: f64 = 4.0 * f64::EPSILON;
/// Halley converges cubically with error constant at most 1/2 on this
/// problem, so once a step is below this (relative) size the next iterate is
/// already accurate to ~1e-16 and no confirming evaluation is needed.
const HALLEY_STEP_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum WBackend {
    #[default]
    Halley,
    BisectionReference,
}

/// A W value together with the number of iterations spent on it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WEval {
    pub value: f64,
    pub iterations: u32,
}

fn check_argument(d: f64) -> Result<()> {
    if d.is_nan() || d.is_infinite() {
        return Err(HawkesError::NonFiniteArgument(d));
    }
    if d < 0.0 {
        return Err(HawkesError::NegativeArgument(d));
    }
    Ok(())
}

/// `W₀(d)` for finite `d ≥ 0`.
pub fn lambert_w0(d: f64, backend: WBackend) -> Result<f64> {
    lambert_w0_counted(d, backend).map(|e| e.value)
}

/// As [`lambert_w0`], also reporting the iteration count.
pub fn lambert_w0_counted(d: f64, backend: WBackend) -> Result<WEval> {
    check_argument(d)?;
    Ok(match backend {
        WBackend::Halley if d > LINEAR_HALLEY_MAX_D => halley_log(d.ln()),
        WBackend::Halley => halley(d),
        WBackend::BisectionReference => bisection(d),
    })
}

/// `W₀(exp(ln_d))`, for arguments whose linear value may overflow.
pub fn lambert_w0_log(ln_d: f64, backend: WBackend) -> Result<f64> {
    lambert_w0_log_counted(ln_d, backend).map(|e| e.value)
}

pub fn lambert_w0_log_counted(ln_d: f64, backend: WBackend) -> Result<WEval> {
    if ln_d.is_nan() || ln_d == f64::INFINITY {
        return Err(HawkesError::NonFiniteArgument(ln_d));
    }
    if ln_d <= LOG_DOMAIN_SWITCH {
        return lambert_w0_counted(ln_d.exp(), backend);
    }
    Ok(match backend {
        WBackend::Halley => halley_log(ln_d),
        WBackend::BisectionReference => bisection_log(ln_d),
    })
}

#[inline]
fn initial_guess(d: f64) -> f64 {
    if d < 1.0 {
        d
    } else if d >= E {
        let ln_d = d.ln();
        ln_d - ln_d.ln()
    } else {
        // Linear blend of the two regimes across [1, e). Both equal 1 at the
        // seams (d at d = 1, ln d - ln ln d at d = e), so the blend is flat.
        1.0
    }
}

/// Halley iteration on `r(w) = w·eʷ - d`.
#[inline]
fn halley(d: f64) -> WEval {
    if d == 0.0 {
        return WEval {
            value: 0.0,
            iterations: 0,
        };
    }
    let mut w = initial_guess(d);
    let mut iterations = 0;
    while iterations < HALLEY_MAX_ITER {
        let ew = w.exp();
        let r = w * ew - d;
        if r.abs() <= REL_TOL * d {
            break;
        }
        let wp1 = w + 1.0;
        let step = r / (ew * wp1 - (w + 2.0) * r / (2.0 * wp1));
        w -= step;
        iterations += 1;
        if step.abs() <= HALLEY_STEP_TOL * w.abs() {
            break;
        }
    }
    WEval {
        value: w,
        iterations,
    }
}

/// Halley iteration on `g(w) = w + ln w - ln_d`, used when `d` itself would
/// overflow. Only reached for `d > 1e300`, where `w > 680`.
fn halley_log(ln_d: f64) -> WEval {
    let mut w = ln_d - ln_d.ln();
    let mut iterations = 0;
    while iterations < HALLEY_MAX_ITER {
        let g = w + w.ln() - ln_d;
        let g1 = 1.0 + 1.0 / w;
        let g2 = -1.0 / (w * w);
        let step = 2.0 * g * g1 / (2.0 * g1 * g1 - g * g2);
        w -= step;
        iterations += 1;
        if step.abs() <= HALLEY_STEP_TOL * w {
            break;
        }
    }
    WEval {
        value: w,
        iterations,
    }
}

/// Bisection of `w·eʷ - d` on `[0, max(1, ln d + 1)]`, run until the bracket
/// stops shrinking.
fn bisection(d: f64) -> WEval {
    if d == 0.0 {
        return WEval {
            value: 0.0,
            iterations: 0,
        };
    }
    let mut lo = 0.0f64;
    let mut hi = if d > 1.0 { (d.ln() + 1.0).max(1.0) } else { 1.0 };
    let mut iterations = 0;
    while iterations < BISECTION_MAX_ITER {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if mid * mid.exp() < d {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    WEval {
        value: 0.5 * (lo + hi),
        iterations,
    }
}

fn bisection_log(ln_d: f64) -> WEval {
    let mut lo = 0.0f64;
    let mut hi = ln_d + 1.0;
    let mut iterations = 0;
    while iterations < BISECTION_MAX_ITER {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if mid + mid.ln() < ln_d {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    WEval {
        value: 0.5 * (lo + hi),
        iterations,
    }
}

/// Root of `a·eˣ + b·x + c = 0` for `a ≥ 0`, `b > 0`:
///
/// ```text
/// x = -W(d) - c/b,   d = (a/b)·exp(-c/b)
/// ```
pub fn solve_transcendental(a: f64, b: f64, c: f64) -> Result<f64> {
    solve_transcendental_with(a, b, c, WBackend::Halley)
}

pub fn solve_transcendental_with(a: f64, b: f64, c: f64, backend: WBackend) -> Result<f64> {
    if !(a.is_finite() && b.is_finite() && c.is_finite()) || a < 0.0 || b <= 0.0 {
        return Err(HawkesError::InvalidCoefficients { a, b, c });
    }
    let shift = c / b;
    if a == 0.0 {
        return Ok(-shift);
    }
    let d = (a / b) * (-shift).exp();
    if !d.is_finite() {
        return Err(HawkesError::OverflowInD { a, b, c });
    }
    Ok(-lambert_w0(d, backend)? - shift)
}
