//! Log-log SVG of median wall time against event count.

use std::fmt::Write as _;
use std::path::Path;

use hawkes_core::AlgorithmId;

use crate::error::{BenchError, Result};
use crate::runner::{BenchRecord, MedianSummary};

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 480.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 200.0;
const TOP: f64 = 30.0;
const BOTTOM: f64 = 60.0;

fn colour(algorithm: AlgorithmId) -> &'static str {
    match algorithm {
        AlgorithmId::LambertHalley => "#1f77b4",
        AlgorithmId::LambertReferenceW => "#ff7f0e",
        AlgorithmId::OzakiNewton => "#2ca02c",
        AlgorithmId::OgataThinning => "#d62728",
        AlgorithmId::DassiosZhao => "#9467bd",
    }
}

/// Decade range covering `[lo, hi]` in log10 space, never empty.
fn decades(lo: f64, hi: f64) -> (f64, f64) {
    let (a, b) = (lo.log10().floor(), hi.log10().ceil());
    if a == b {
        (a, a + 1.0)
    } else {
        (a, b)
    }
}

fn decade_label(exp: i32) -> String {
    format!("1e{exp}")
}

pub fn render_svg(records: &[BenchRecord]) -> Result<String> {
    let summary = MedianSummary::from_records(records);
    let ns = summary.n_values();
    if ns.len() < 2 {
        return Err(BenchError::InsufficientData(format!(
            "plot needs at least 2 distinct event counts, got {}",
            ns.len()
        )));
    }
    let algorithms = summary.algorithms();
    let times: Vec<f64> = algorithms
        .iter()
        .flat_map(|&a| summary.series(a))
        .map(|(_, t)| t)
        .collect();
    let t_min = times.iter().copied().fold(f64::INFINITY, f64::min);
    let t_max = times.iter().copied().fold(0.0, f64::max);
    let (x0, x1) = decades(ns[0] as f64, *ns.last().unwrap() as f64);
    let (y0, y1) = decades(t_min, t_max);

    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let px = |n: f64| LEFT + (n.log10() - x0) / (x1 - x0) * plot_w;
    let py = |t: f64| TOP + (y1 - t.log10()) / (y1 - y0) * plot_h;

    let mut s = String::new();
    // Writing to a String cannot fail.
    let _ = writeln!(
        s,
        r#"<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">
<rect width="100%" height="100%" fill="white"/>
<g id="axes" stroke="black" fill="none">
<rect x="{LEFT}" y="{TOP}" width="{plot_w}" height="{plot_h}"/>
</g>"#
    );

    s.push_str("<g id=\"ticks\">\n");
    for e in x0 as i32..=x1 as i32 {
        let x = px(10f64.powi(e));
        let _ = writeln!(
            s,
            r##"<line x1="{x:.2}" y1="{b:.2}" x2="{x:.2}" y2="{t:.2}" stroke="#dddddd"/><text x="{x:.2}" y="{ly:.2}" text-anchor="middle">{label}</text>"##,
            b = TOP + plot_h,
            t = TOP,
            ly = TOP + plot_h + 18.0,
            label = decade_label(e)
        );
    }
    for e in y0 as i32..=y1 as i32 {
        let y = py(10f64.powi(e));
        let _ = writeln!(
            s,
            r##"<line x1="{l:.2}" y1="{y:.2}" x2="{r:.2}" y2="{y:.2}" stroke="#dddddd"/><text x="{lx:.2}" y="{ty:.2}" text-anchor="end">{label}</text>"##,
            l = LEFT,
            r = LEFT + plot_w,
            lx = LEFT - 6.0,
            ty = y + 4.0,
            label = decade_label(e)
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{cx:.2}" y="{by:.2}" text-anchor="middle">number of events</text>
<text x="16" y="{cy:.2}" text-anchor="middle" transform="rotate(-90 16 {cy:.2})">median wall time (s)</text>
</g>"#,
        cx = LEFT + plot_w / 2.0,
        by = HEIGHT - 16.0,
        cy = TOP + plot_h / 2.0
    );

    s.push_str("<g id=\"series\" fill=\"none\" stroke-width=\"2\">\n");
    for &a in &algorithms {
        let points: Vec<String> = summary
            .series(a)
            .into_iter()
            .map(|(n, t)| format!("{:.2},{:.2}", px(n as f64), py(t)))
            .collect();
        let _ = writeln!(
            s,
            r#"<polyline data-algorithm="{a}" stroke="{c}" points="{p}"/>"#,
            c = colour(a),
            p = points.join(" ")
        );
    }
    s.push_str("</g>\n<g id=\"legend\">\n");
    for (i, &a) in algorithms.iter().enumerate() {
        let x = LEFT + plot_w + 16.0;
        let y = TOP + 10.0 + 20.0 * i as f64;
        let _ = writeln!(
            s,
            r#"<line x1="{x:.2}" y1="{y:.2}" x2="{x2:.2}" y2="{y:.2}" stroke="{c}" stroke-width="2"/><text x="{tx:.2}" y="{ty:.2}">{a}</text>"#,
            x2 = x + 24.0,
            c = colour(a),
            tx = x + 30.0,
            ty = y + 4.0
        );
    }
    s.push_str("</g>\n</svg>\n");
    Ok(s)
}

pub fn emit_plot(records: &[BenchRecord], path: &Path) -> Result<()> {
    let svg = render_svg(records)?;
    std::fs::write(path, svg).map_err(|e| BenchError::io(path, e))
}
