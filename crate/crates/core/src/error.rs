use thiserror::Error;

/// Errors raised by parameter validation, the numerical kernels and the
/// statistical checks.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum HawkesError {
    #[error("background intensity mu must be > 0, got {0}")]
    NonPositiveMu(f64),
    #[error("excitation alpha must be >= 0, got {0}")]
    NegativeAlpha(f64),
    #[error("decay beta must be > 0, got {0}")]
    NonPositiveBeta(f64),
    #[error("branching ratio alpha/beta = {0} >= 1 (non-stationary); pass allow_unstable to override")]
    UnstableProcess(f64),
    #[error("parameter is not a finite real: {0}")]
    NonFiniteParameter(f64),

    #[error("event times must be strictly increasing (violated at index {index})")]
    NonIncreasing { index: usize },
    #[error("event time at index {index} is negative or not finite: {value}")]
    InvalidTime { index: usize, value: f64 },
    #[error("duration must be strictly positive, got {0}")]
    NonPositiveDuration(f64),

    #[error("Lambert-W argument must be >= 0, got {0}")]
    NegativeArgument(f64),
    #[error("Lambert-W argument must be finite, got {0}")]
    NonFiniteArgument(f64),
    #[error("d = (a/b) exp(-c/b) overflows for a={a}, b={b}, c={c}")]
    OverflowInD { a: f64, b: f64, c: f64 },
    #[error("invalid transcendental coefficients: a={a}, b={b}, c={c}")]
    InvalidCoefficients { a: f64, b: f64, c: f64 },

    #[error("root finder did not converge within {0} iterations")]
    NoConvergence(usize),
    #[error("invalid stopping rule: {0}")]
    InvalidStoppingRule(String),

    #[error("need at least {needed} events/residuals, got {got}")]
    TooFewEvents { needed: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, HawkesError>;
