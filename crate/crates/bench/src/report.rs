//! CSV output for timing records and trajectories.
//!
//! Floats are written with Rust's shortest round-trip formatting, so reading
//! a file back yields bit-identical values.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use csv::{ReaderBuilder, Terminator, WriterBuilder};
use hawkes_core::{AlgorithmId, EventSequence};

use crate::error::{BenchError, Result};
use crate::runner::BenchRecord;

pub const CSV_HEADER: [&str; 4] = ["algorithm", "n_events", "repetition", "wall_time_s"];

pub fn write_csv(records: &[BenchRecord], path: &Path) -> Result<()> {
    if records.is_empty() {
        return Err(BenchError::EmptyInput);
    }
    let file = File::create(path).map_err(|e| BenchError::io(path, e))?;
    let mut w = WriterBuilder::new()
        .terminator(Terminator::Any(b'\n'))
        .from_writer(BufWriter::new(file));
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record([
            r.algorithm.as_str().to_string(),
            r.n_events.to_string(),
            r.repetition.to_string(),
            r.wall_time_s.to_string(),
        ])?;
    }
    w.flush().map_err(|e| BenchError::io(path, e))?;
    Ok(())
}

pub fn read_csv(path: &Path) -> Result<Vec<BenchRecord>> {
    let file = File::open(path).map_err(|e| BenchError::io(path, e))?;
    let mut r = ReaderBuilder::new().from_reader(file);
    let header = r.headers()?.clone();
    if header.iter().ne(CSV_HEADER) {
        return Err(BenchError::Config(format!(
            "{}: unexpected header {:?}",
            path.display(),
            header.iter().collect::<Vec<_>>()
        )));
    }
    let bad = |line: u64, what: &str| BenchError::Config(format!("{}: line {line}: {what}", path.display()));
    let mut out = Vec::new();
    for row in r.records() {
        let row = row?;
        let line = row.position().map_or(0, |p| p.line());
        let algorithm = row[0].parse::<AlgorithmId>().map_err(|e| bad(line, &e.to_string()))?;
        let n_events = row[1].parse().map_err(|_| bad(line, "bad n_events"))?;
        let repetition = row[2].parse().map_err(|_| bad(line, "bad repetition"))?;
        let wall_time_s = row[3].parse().map_err(|_| bad(line, "bad wall_time_s"))?;
        out.push(BenchRecord {
            algorithm,
            n_events,
            repetition,
            wall_time_s,
        });
    }
    Ok(out)
}

/// One timestamp per line under a `time` header.
pub fn write_trajectory(events: &EventSequence, path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|e| BenchError::io(path, e))?;
    let mut w = BufWriter::new(file);
    let io = |e| BenchError::io(path, e);
    w.write_all(b"time\n").map_err(io)?;
    for t in events.times() {
        writeln!(w, "{t}").map_err(io)?;
    }
    w.flush().map_err(io)
}
