//! Benchmark harness for the `hawkes-core` simulators.
//!
//! [`runner::run_bench`] times every algorithm over a grid of event counts,
//! [`report`] writes the records as CSV and [`plot`] draws the medians on
//! log-log axes. [`panel`] runs the residual panel for the `validate`
//! subcommand.

pub mod config;
pub mod error;
pub mod panel;
pub mod plot;
pub mod report;
pub mod runner;

pub use config::{BenchConfig, ConfigOverrides};
pub use error::{BenchError, Result};
pub use plot::emit_plot;
pub use report::{read_csv, write_csv, write_trajectory};
pub use runner::{check_orderings, run_bench, BenchRecord, MedianSummary, OrderingCheck};
