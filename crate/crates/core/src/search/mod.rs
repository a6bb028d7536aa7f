//! Exhaustive desk-scale searches for `ex(n, F)`, `Ex(n, F)` and
//! `Ex_sp(n, F)`, the comparison of the two, and a hill-climbing probe for
//! orders beyond enumeration.

mod canonical;
mod enumerate;
mod hill_climb;
mod verify;

pub use canonical::{canonical_form, canonical_labeling, isomorphic, CanonicalForm, CANONICAL_LIMIT};
pub use enumerate::{
    enumerate_free, enumerate_free_shard, pair_order, shard_count, spectral_extremal_bruteforce,
    spectral_extremal_scoped, turan_number_bruteforce, FreeGraphVisitor, SpectralAccumulator, SpectralOutcome,
    SpectralScope, TuranAccumulator, TuranOutcome,
};
pub use hill_climb::{hill_climb, HillClimbOutcome};
pub use verify::{assemble_report, verify_theorem, GraphDiagnostic, SpectralEntry, VerificationReport};

use crate::spectral::SpectralConfig;

/// Enumeration is refused above this order regardless of configuration.
pub const HARD_MAX_N: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchConfig {
    /// Largest `n` to enumerate; 9 is allowed but slow, 10 and above never.
    pub max_n: usize,
    /// Number of leading pair decisions fixed per shard.
    pub shard_bits: u32,
    pub spectral: SpectralConfig,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { max_n: 8, shard_bits: 0, spectral: SpectralConfig::default() }
    }
}
