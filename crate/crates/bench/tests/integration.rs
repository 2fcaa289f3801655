use std::path::Path;
use std::process::Command;

use hawkes_bench::{emit_plot, read_csv, run_bench, write_csv, BenchConfig, ConfigOverrides};
use hawkes_core::AlgorithmId;

const BIN: &str = env!("CARGO_BIN_EXE_hawkes-bench");

fn small(algorithms: Vec<AlgorithmId>) -> BenchConfig {
    ConfigOverrides {
        algorithms: Some(algorithms),
        n_grid: Some(vec![100, 300, 1000]),
        repetitions: Some(3),
        warmup: Some(1),
        seed_base: Some(17),
        ..Default::default()
    }
    .build()
    .unwrap()
}

/// Every column except `wall_time_s`.
fn stable_columns(path: &Path) -> String {
    std::fs::read_to_string(path)
        .unwrap()
        .lines()
        .map(|l| l.rsplit_once(',').unwrap().0.to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn csv_stable_fields_identical_across_reruns() {
    let dir = tempfile::tempdir().unwrap();
    let config = small(AlgorithmId::ALL.to_vec());
    let (a, b) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    write_csv(&run_bench(&config).unwrap(), &a).unwrap();
    write_csv(&run_bench(&config).unwrap(), &b).unwrap();
    assert_eq!(stable_columns(&a), stable_columns(&b));
    let bytes = std::fs::read(&a).unwrap();
    assert!(!bytes.contains(&b'\r'));
    assert_eq!(read_csv(&a).unwrap().len(), 5 * 3 * 3);
}

#[test]
fn plot_is_well_formed_svg() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig.svg");
    let records = run_bench(&small(AlgorithmId::ALL.to_vec())).unwrap();
    emit_plot(&records, &path).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    let doc = roxmltree::Document::parse(&text).unwrap();
    assert_eq!(doc.root_element().tag_name().name(), "svg");
    let polylines: Vec<_> = doc.descendants().filter(|n| n.has_tag_name("polyline")).collect();
    assert_eq!(polylines.len(), 5);
    for p in &polylines {
        assert_eq!(p.attribute("points").unwrap().split(' ').count(), 3);
    }
    let legend: Vec<_> = doc
        .descendants()
        .find(|n| n.attribute("id") == Some("legend"))
        .unwrap()
        .descendants()
        .filter(|n| n.has_tag_name("text"))
        .map(|n| n.text().unwrap().to_string())
        .collect();
    let ids: Vec<_> = AlgorithmId::ALL.iter().map(|a| a.as_str().to_string()).collect();
    assert_eq!(legend, ids);
}

#[test]
fn plot_of_two_algorithms() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig.svg");
    let config = small(vec![AlgorithmId::LambertHalley, AlgorithmId::DassiosZhao]);
    emit_plot(&run_bench(&config).unwrap(), &path).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    let doc = roxmltree::Document::parse(&text).unwrap();
    assert_eq!(doc.descendants().filter(|n| n.has_tag_name("polyline")).count(), 2);
}

#[test]
fn cli_run_with_config_file_and_override() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("bench.conf");
    let out = dir.path().join("out.csv");
    let plot = dir.path().join("out.svg");
    std::fs::write(
        &conf,
        format!(
            "# small grid\nalgos = ozaki_newton, ogata_thinning\nn_grid = 50, 100\nreps = 4\nwarmup = 0\nout = {}\n",
            out.display()
        ),
    )
    .unwrap();
    let status = Command::new(BIN)
        .args(["run", "--config"])
        .arg(&conf)
        .args(["--reps", "2", "--plot"])
        .arg(&plot)
        .output()
        .unwrap();
    assert!(status.status.success(), "{}", String::from_utf8_lossy(&status.stderr));
    let records = read_csv(&out).unwrap();
    assert_eq!(records.len(), 2 * 2 * 2);
    assert!(plot.exists());
}

#[test]
fn cli_rejects_bad_input() {
    let out = Command::new(BIN)
        .args(["simulate", "--algo", "nope", "--n", "5", "--out", "/dev/null"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    let out = Command::new(BIN)
        .args(["validate", "--algo", "ogata_thinning", "--alpha", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cli_simulate_matches_library() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let status = Command::new(BIN)
        .args(["simulate", "--algo", "lambert_halley", "--n", "50", "--seed", "9", "--out"])
        .arg(&path)
        .status()
        .unwrap();
    assert!(status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("time"));
    let parsed: Vec<f64> = lines.map(|l| l.parse().unwrap()).collect();
    let expected = AlgorithmId::LambertHalley
        .simulate(
            &hawkes_core::HawkesParams::default(),
            hawkes_core::StoppingRule::EventCount(50),
            9,
        )
        .unwrap();
    assert_eq!(parsed, expected.times());
}
