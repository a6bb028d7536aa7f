//! Shard-parallel versions of the exhaustive searches.
//!
//! Each shard fixes the first `shard_bits` pair decisions and runs on its own
//! rayon task; accumulators are merged afterwards. Results equal the
//! sequential searches in `blowup_core::search`.

use std::sync::atomic::AtomicUsize;

use blowup_core::search::{
    assemble_report, enumerate_free_shard, shard_count, SearchConfig, SpectralAccumulator, SpectralOutcome,
    SpectralScope, TuranAccumulator, TuranOutcome, VerificationReport, HARD_MAX_N,
};
use blowup_core::{Error, Result, StarForestSpec};
use rayon::prelude::*;

fn check_budget(n: usize, cfg: &SearchConfig) -> Result<()> {
    let limit = cfg.max_n.min(HARD_MAX_N);
    if n > limit {
        return Err(Error::BudgetExceeded { what: "vertices for exhaustive enumeration", value: n, limit });
    }
    Ok(())
}

pub fn turan_number_parallel(n: usize, spec: &StarForestSpec, cfg: &SearchConfig) -> Result<TuranOutcome> {
    check_budget(n, cfg)?;
    let shared = AtomicUsize::new(0);
    let merged = (0..shard_count(n, cfg.shard_bits))
        .into_par_iter()
        .map(|shard| {
            let mut acc = TuranAccumulator::new(Some(&shared));
            enumerate_free_shard(n, spec, cfg.shard_bits, shard, &mut acc).map(|_| acc)
        })
        .try_reduce(|| TuranAccumulator::new(None), |a, b| Ok(a.merge(b)))?;
    merged.finish()
}

pub fn spectral_extremal_parallel(n: usize, spec: &StarForestSpec, cfg: &SearchConfig) -> Result<SpectralOutcome> {
    check_budget(n, cfg)?;
    if n == 0 {
        return Err(Error::InvalidArgument("spectral search needs n >= 1".into()));
    }
    let fresh = || SpectralAccumulator::new(spec, cfg.spectral, SpectralScope::EdgeMaximal);
    let merged = (0..shard_count(n, cfg.shard_bits))
        .into_par_iter()
        .map(|shard| {
            let mut acc = fresh();
            enumerate_free_shard(n, spec, cfg.shard_bits, shard, &mut acc).map(|_| acc)
        })
        .try_reduce(fresh, |a, b| Ok(a.merge(b)))?;
    merged.finish()
}

pub fn verify_parallel(n: usize, spec: &StarForestSpec, cfg: &SearchConfig) -> Result<VerificationReport> {
    let (turan, spectral) =
        rayon::join(|| turan_number_parallel(n, spec, cfg), || spectral_extremal_parallel(n, spec, cfg));
    assemble_report(n, spec, turan?, spectral?, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use blowup_core::search::{spectral_extremal_bruteforce, turan_number_bruteforce};

    #[test]
    fn matches_sequential() {
        for (n, ks) in [(6, vec![2]), (6, vec![1, 1]), (5, vec![1])] {
            let spec = StarForestSpec::new(2, &ks).unwrap();
            let seq = SearchConfig::default();
            let par = SearchConfig { shard_bits: 6, ..seq };
            let a = turan_number_bruteforce(n, &spec, &seq).unwrap();
            let b = turan_number_parallel(n, &spec, &par).unwrap();
            assert_eq!((a.ex, &a.extremal), (b.ex, &b.extremal));
            let a = spectral_extremal_bruteforce(n, &spec, &seq).unwrap();
            let b = spectral_extremal_parallel(n, &spec, &par).unwrap();
            assert_eq!(a.graphs.len(), b.graphs.len());
            assert_eq!(a.visited, b.visited);
            assert!((a.rho_max - b.rho_max).abs() < 1e-12);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let spec = StarForestSpec::new(2, &[1]).unwrap();
        let err = turan_number_parallel(10, &spec, &SearchConfig { max_n: 12, ..Default::default() }).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { limit: 9, .. }));
    }
}
