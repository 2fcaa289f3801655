use proptest::prelude::*;

use hawkes_core::intensity::{conditional_intensity, interarrival_cdf};
use hawkes_core::lambertw::{lambert_w0, lambert_w0_counted, WBackend};
use hawkes_core::simulators::simulate_ogata_with_stats;
use hawkes_core::validation::time_rescaling_residuals;
use hawkes_core::{AlgorithmId, EventSequence, HawkesParams, SimulatorState, StoppingRule};

fn params() -> impl Strategy<Value = HawkesParams> {
    (0.05f64..5.0, 0.0f64..0.95, 0.05f64..5.0)
        .prop_map(|(mu, ratio, beta)| HawkesParams::new(mu, ratio * beta, beta).unwrap())
}

fn algorithm() -> impl Strategy<Value = AlgorithmId> {
    prop::sample::select(AlgorithmId::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn w_round_trip(log_w in -18.0f64..6.9) {
        let w = log_w.exp();
        let d = w * w.exp();
        for backend in [WBackend::Halley, WBackend::BisectionReference] {
            let got = lambert_w0(d, backend).unwrap();
            prop_assert!((got - w).abs() <= 1e-12 * w.max(1.0), "{backend:?} w={w} got={got}");
            prop_assert!((got * got.exp() - d).abs() <= 1e-12 * d.max(1.0));
        }
    }

    #[test]
    fn halley_iterations_bounded(log_d in -27.6f64..18.5) {
        let eval = lambert_w0_counted(log_d.exp(), WBackend::Halley).unwrap();
        prop_assert!(eval.iterations <= 8);
    }

    #[test]
    fn w_is_monotone(a in 0.0f64..1e6, b in 0.0f64..1e6) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        prop_assume!(lo < hi);
        prop_assert!(lambert_w0(lo, WBackend::Halley).unwrap() < lambert_w0(hi, WBackend::Halley).unwrap());
    }

    #[test]
    fn intensity_never_below_mu(p in params(), raw in prop::collection::vec(0.0f64..50.0, 0..30), t in 0.0f64..60.0) {
        let mut times = raw;
        times.sort_by(f64::total_cmp);
        times.dedup();
        let ev = EventSequence::new(times).unwrap();
        prop_assert!(conditional_intensity(&p, &ev, t) >= p.mu());
    }

    #[test]
    fn cdf_is_monotone(p in params(), s_k in 1.0f64..50.0) {
        let mut prev = -1.0;
        for i in 0..1000 {
            let f = interarrival_cdf(&p, s_k, i as f64 * 1e-3);
            // 1 - e^{-Λ} rounds to 1.0 once Λ exceeds ~37.
            prop_assert!(f >= prev && f <= 1.0);
            prev = f;
        }
    }

    #[test]
    fn non_increasing_sequences_rejected(mut times in prop::collection::vec(0.0f64..100.0, 2..20), i in 0usize..19) {
        times.sort_by(f64::total_cmp);
        let i = i % (times.len() - 1);
        times[i + 1] = times[i];
        prop_assert!(EventSequence::new(times).is_err());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn seed_replay_is_bit_identical(algo in algorithm(), p in params(), seed in any::<u64>()) {
        let a = algo.simulate(&p, StoppingRule::EventCount(300), seed).unwrap();
        let b = algo.simulate(&p, StoppingRule::EventCount(300), seed).unwrap();
        prop_assert_eq!(a.times().len(), 300);
        let bits = |e: &EventSequence| e.times().iter().map(|t| t.to_bits()).collect::<Vec<_>>();
        prop_assert_eq!(bits(&a), bits(&b));
    }

    #[test]
    fn gaps_positive_and_state_consistent(algo in algorithm(), p in params(), seed in any::<u64>()) {
        let ev = algo.simulate(&p, StoppingRule::EventCount(500), seed).unwrap();
        prop_assert!(ev.times()[0] > 0.0);
        prop_assert!(ev.gaps().all(|g| g > 0.0));
        let mut st = SimulatorState::new(&p);
        for &t in ev.times() {
            st.record_event(&p, t).unwrap();
            let expect = p.mu() + p.alpha() * st.s_k();
            prop_assert!((st.lambda_plus() - expect).abs() <= 1e-12 * expect);
        }
        let residuals = time_rescaling_residuals(&p, &ev).unwrap();
        prop_assert!(residuals.values().iter().all(|&r| r >= 0.0));
    }

    #[test]
    fn horizon_mode_respects_bound(algo in algorithm(), p in params(), seed in any::<u64>(), horizon in 0.1f64..50.0) {
        let ev = algo.simulate(&p, StoppingRule::Horizon(horizon), seed).unwrap();
        prop_assert!(ev.times().iter().all(|&t| t <= horizon));
    }

    // The thinning bound is checked by a debug assertion on every candidate.
    #[test]
    fn thinning_bound_holds(p in params(), seed in any::<u64>()) {
        let (ev, stats) = simulate_ogata_with_stats(&p, StoppingRule::EventCount(2000), seed).unwrap();
        prop_assert_eq!(ev.len(), 2000);
        prop_assert!(stats.candidates >= stats.accepted);
    }
}
