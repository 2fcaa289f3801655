use hawkes_core::lambertw::WBackend;
use hawkes_core::simulators::{simulate_lambert, simulate_ozaki};
use hawkes_core::validation::{empirical_rate, ks_critical_value_1pct, ks_statistic_exp1, time_rescaling_residuals};
use hawkes_core::{AlgorithmId, HawkesParams, StoppingRule};

#[test]
fn lambert_and_newton_invert_the_same_cdf() {
    let p = HawkesParams::new(1.0, 0.5, 1.0).unwrap();
    let stop = StoppingRule::EventCount(10_000);
    for backend in [WBackend::Halley, WBackend::BisectionReference] {
        let a = simulate_lambert(&p, stop, 21, backend).unwrap();
        let b = simulate_ozaki(&p, stop, 21, 1e-12).unwrap();
        let worst = a
            .times()
            .iter()
            .zip(b.times())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max);
        assert!(worst <= 1e-8, "{backend:?}: max deviation {worst}");
    }
}

#[test]
fn residual_mean_near_one() {
    let p = HawkesParams::new(1.0, 0.5, 1.0).unwrap();
    let ev = simulate_lambert(&p, StoppingRule::EventCount(10_000), 7, WBackend::Halley).unwrap();
    let r = time_rescaling_residuals(&p, &ev).unwrap();
    assert_eq!(r.len(), 9_999);
    assert!((r.mean() - 1.0).abs() < 0.03, "mean {}", r.mean());
}

#[test]
fn every_algorithm_passes_ks_on_one_seed() {
    let p = HawkesParams::new(1.0, 0.5, 1.0).unwrap();
    for algo in AlgorithmId::ALL {
        let ev = algo.simulate(&p, StoppingRule::EventCount(10_000), 3).unwrap();
        let r = time_rescaling_residuals(&p, &ev).unwrap();
        let ks = ks_statistic_exp1(&r).unwrap();
        assert!(ks < ks_critical_value_1pct(r.len()), "{algo}: ks {ks}");
    }
}

#[test]
fn stationary_rate_on_default_params() {
    let p = HawkesParams::default();
    for algo in AlgorithmId::ALL {
        let ev = algo.simulate(&p, StoppingRule::EventCount(100_000), 11).unwrap();
        let rate = empirical_rate(&ev).unwrap();
        assert!((rate / 4.8 - 1.0).abs() < 0.03, "{algo}: rate {rate}");
    }
}
