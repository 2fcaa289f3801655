//! Benchmark configuration.
//!
//! Values come from three layers, later ones winning: built-in defaults, an
//! optional flat `key = value` file, and command-line flags. Recognised keys:
//!
//! ```text
//! mu, alpha, beta, algos, n_grid, reps, warmup, seed, out, plot
//! ```
//!
//! Lists are comma separated. `#` starts a comment.

use std::path::{Path, PathBuf};

use hawkes_core::{validate_params, AlgorithmId, HawkesParams};

use crate::error::{BenchError, Result};

pub const DEFAULT_N_GRID: [usize; 5] = [1_000, 3_000, 10_000, 30_000, 100_000];
pub const DEFAULT_REPETITIONS: usize = 10;
pub const DEFAULT_WARMUP: usize = 1;
pub const DEFAULT_SEED_BASE: u64 = 0;
pub const DEFAULT_OUTPUT: &str = "bench.csv";

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub params: HawkesParams,
    pub algorithms: Vec<AlgorithmId>,
    pub n_grid: Vec<usize>,
    pub repetitions: usize,
    pub warmup: usize,
    pub seed_base: u64,
    pub output_path: PathBuf,
    pub plot_path: Option<PathBuf>,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            params: HawkesParams::default(),
            algorithms: AlgorithmId::ALL.to_vec(),
            n_grid: DEFAULT_N_GRID.to_vec(),
            repetitions: DEFAULT_REPETITIONS,
            warmup: DEFAULT_WARMUP,
            seed_base: DEFAULT_SEED_BASE,
            output_path: PathBuf::from(DEFAULT_OUTPUT),
            plot_path: None,
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.algorithms.is_empty() {
            return Err(BenchError::Config("algorithm list is empty".into()));
        }
        if self.n_grid.is_empty() {
            return Err(BenchError::Config("n_grid is empty".into()));
        }
        if self.n_grid[0] == 0 {
            return Err(BenchError::Config("n_grid entries must be >= 1".into()));
        }
        if self.n_grid.windows(2).any(|w| w[0] >= w[1]) {
            return Err(BenchError::Config("n_grid must be strictly increasing".into()));
        }
        if self.repetitions == 0 {
            return Err(BenchError::Config("repetitions must be >= 1".into()));
        }
        Ok(())
    }
}

/// Partial configuration: every field optional, merged over defaults.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConfigOverrides {
    pub mu: Option<f64>,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub algorithms: Option<Vec<AlgorithmId>>,
    pub n_grid: Option<Vec<usize>>,
    pub repetitions: Option<usize>,
    pub warmup: Option<usize>,
    pub seed_base: Option<u64>,
    pub output_path: Option<PathBuf>,
    pub plot_path: Option<PathBuf>,
}

impl ConfigOverrides {
    /// Parses the flat `key = value` format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut out = ConfigOverrides::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                BenchError::Config(format!("line {}: expected key = value, got '{raw}'", lineno + 1))
            })?;
            let (key, value) = (key.trim(), value.trim());
            let ctx = |e: String| BenchError::Config(format!("line {}: {key}: {e}", lineno + 1));
            match key.replace('-', "_").as_str() {
                "mu" => out.mu = Some(parse_f64(value).map_err(ctx)?),
                "alpha" => out.alpha = Some(parse_f64(value).map_err(ctx)?),
                "beta" => out.beta = Some(parse_f64(value).map_err(ctx)?),
                "algos" | "algorithms" => out.algorithms = Some(parse_algorithms(value).map_err(ctx)?),
                "n_grid" => out.n_grid = Some(parse_n_grid(value).map_err(ctx)?),
                "reps" | "repetitions" => out.repetitions = Some(parse_count(value).map_err(ctx)?),
                "warmup" => out.warmup = Some(parse_count(value).map_err(ctx)?),
                "seed" | "seed_base" => {
                    out.seed_base = Some(value.parse().map_err(|e| ctx(format!("{e}")))?)
                }
                "out" | "output" | "output_path" => out.output_path = Some(PathBuf::from(value)),
                "plot" | "plot_path" => out.plot_path = Some(PathBuf::from(value)),
                other => {
                    return Err(BenchError::Config(format!(
                        "line {}: unknown key '{other}'",
                        lineno + 1
                    )))
                }
            }
        }
        Ok(out)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| BenchError::io(path, e))?;
        Self::parse(&text)
    }

    /// `other` wins wherever it has a value.
    pub fn overridden_by(self, other: ConfigOverrides) -> Self {
        Self {
            mu: other.mu.or(self.mu),
            alpha: other.alpha.or(self.alpha),
            beta: other.beta.or(self.beta),
            algorithms: other.algorithms.or(self.algorithms),
            n_grid: other.n_grid.or(self.n_grid),
            repetitions: other.repetitions.or(self.repetitions),
            warmup: other.warmup.or(self.warmup),
            seed_base: other.seed_base.or(self.seed_base),
            output_path: other.output_path.or(self.output_path),
            plot_path: other.plot_path.or(self.plot_path),
        }
    }

    pub fn build(self) -> Result<BenchConfig> {
        let defaults = BenchConfig::default();
        let params = validate_params(
            self.mu.unwrap_or(defaults.params.mu()),
            self.alpha.unwrap_or(defaults.params.alpha()),
            self.beta.unwrap_or(defaults.params.beta()),
            false,
        )?;
        let config = BenchConfig {
            params,
            algorithms: self.algorithms.unwrap_or(defaults.algorithms),
            n_grid: self.n_grid.unwrap_or(defaults.n_grid),
            repetitions: self.repetitions.unwrap_or(defaults.repetitions),
            warmup: self.warmup.unwrap_or(defaults.warmup),
            seed_base: self.seed_base.unwrap_or(defaults.seed_base),
            output_path: self.output_path.unwrap_or(defaults.output_path),
            plot_path: self.plot_path.or(defaults.plot_path),
        };
        config.validate()?;
        Ok(config)
    }
}

fn parse_f64(s: &str) -> std::result::Result<f64, String> {
    s.parse::<f64>().map_err(|e| format!("'{s}': {e}"))
}

pub fn parse_count(s: &str) -> std::result::Result<usize, String> {
    if let Ok(n) = s.parse::<usize>() {
        return Ok(n);
    }
    // Accept scientific notation such as 1e4 when it is an exact integer.
    match s.parse::<f64>() {
        Ok(x) if x >= 0.0 && x.fract() == 0.0 && x <= usize::MAX as f64 => Ok(x as usize),
        _ => Err(format!("'{s}' is not a nonnegative integer")),
    }
}

pub fn parse_n_grid(s: &str) -> std::result::Result<Vec<usize>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(parse_count)
        .collect()
}

pub fn parse_algorithms(s: &str) -> std::result::Result<Vec<AlgorithmId>, String> {
    if s.trim() == "all" {
        return Ok(AlgorithmId::ALL.to_vec());
    }
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<AlgorithmId>().map_err(|e| e.to_string()))
        .collect()
}
