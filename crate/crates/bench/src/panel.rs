//! Seed-panel validation fanned out across threads.

use hawkes_core::validation::{PanelVerdict, ResidualReport};
use hawkes_core::{AlgorithmId, HawkesParams, StoppingRule};
use rayon::prelude::*;

use crate::error::Result;

/// Same verdict as [`hawkes_core::validation::run_panel`], with one
/// trajectory per rayon task. Reports keep the order of `seeds`.
pub fn run_panel_parallel(
    algorithm: AlgorithmId,
    params: &HawkesParams,
    n_events: usize,
    seeds: &[u64],
) -> Result<PanelVerdict> {
    let reports = seeds
        .par_iter()
        .map(|&seed| {
            let ev = algorithm.simulate(params, StoppingRule::EventCount(n_events), seed)?;
            ResidualReport::from_events(params, &ev, seed)
        })
        .collect::<hawkes_core::Result<Vec<_>>>()?;
    Ok(PanelVerdict::evaluate(reports, n_events))
}

#[cfg(test)]
mod tests {
    use super::*;
    use hawkes_core::validation::{run_panel, seed_panel};

    #[test]
    fn matches_sequential_panel() {
        let p = HawkesParams::new(1.0, 0.5, 1.0).unwrap();
        let seeds = seed_panel(4);
        let par = run_panel_parallel(AlgorithmId::OgataThinning, &p, 500, &seeds).unwrap();
        let seq = run_panel(AlgorithmId::OgataThinning, &p, 500, &seeds).unwrap();
        assert_eq!(par, seq);
    }
}
