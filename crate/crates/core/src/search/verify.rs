use alloc::vec::Vec;

use super::enumerate::{spectral_extremal_bruteforce, turan_number_bruteforce, SpectralOutcome, TuranOutcome};
use super::SearchConfig;
use crate::combinatorics::{chen_diagnostic, ex_formula, max_crossing_partition};
use crate::constructions::{extremal_family_member, StarForestSpec};
use crate::error::Result;
use crate::graph::Graph;
use crate::spectral::spectral_radius;

/// A spectral-extremal graph with the numbers needed to judge its root.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralEntry {
    pub graph: Graph,
    pub rho: f64,
    pub residual: f64,
    pub certified_lower: f64,
}

/// Partition diagnostics for one graph: its max-crossing `p`-partition and
/// the crossing-edge gap measured against it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDiagnostic {
    pub class_sizes: Vec<usize>,
    pub crossing: usize,
    pub chen_gap: i64,
    /// `f(k_q − 1, k_q − 1)`.
    pub chen_bound: usize,
    pub hypotheses_hold: bool,
    /// The partition is an exact maximum.
    pub certified: bool,
}

/// One `(n, F)` experiment comparing `Ex(n, F)` with `Ex_sp(n, F)`.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub n: usize,
    pub spec: StarForestSpec,
    pub ex_brute: usize,
    /// `h(n, p, q) + f(k_q − 1, k_q − 1)`, when `n ≥ q − 1`.
    pub ex_formula_value: Option<usize>,
    /// `Ex(n, F)` up to isomorphism.
    pub extremal_graphs: Vec<Graph>,
    pub rho_max: f64,
    /// `Ex_sp(n, F)` up to isomorphism (every graph within the tie tolerance).
    pub spectral_extremal_graphs: Vec<SpectralEntry>,
    /// Every spectral-extremal graph is edge-extremal.
    pub containment_holds: bool,
    pub formula_matches: bool,
    /// Edge count of the extremal-family construction, when it fits at `n`.
    pub construction_edges: Option<usize>,
    /// `ρ_max − (p−1)n/p`.
    pub rho_excess: f64,
    /// One entry per spectral-extremal graph, same order.
    pub diagnostics: Vec<GraphDiagnostic>,
    pub visited_free_graphs: u64,
    pub scored_graphs: u64,
}

/// Builds the report from the two search outcomes (however they were run).
pub fn assemble_report(
    n: usize,
    spec: &StarForestSpec,
    turan: TuranOutcome,
    spectral: SpectralOutcome,
    cfg: &SearchConfig,
) -> Result<VerificationReport> {
    let ex_formula_value = ex_formula(n, spec).ok();
    let containment_holds = spectral.graphs.iter().all(|(g, _)| turan.extremal.contains(g));
    let k = spec.smallest_k();
    let mut entries = Vec::with_capacity(spectral.graphs.len());
    let mut diagnostics = Vec::with_capacity(spectral.graphs.len());
    for (graph, _) in spectral.graphs {
        let r = spectral_radius(&graph, &cfg.spectral)?;
        let partition = max_crossing_partition(&graph, spec.p(), true)?;
        let chen = chen_diagnostic(&graph, &partition.labeling, k)?;
        diagnostics.push(GraphDiagnostic {
            class_sizes: partition.labeling.class_sizes(),
            crossing: chen.crossing,
            chen_gap: chen.gap,
            chen_bound: chen.bound,
            hypotheses_hold: chen.hypotheses_hold,
            certified: partition.certified,
        });
        entries.push(SpectralEntry { rho: r.rho, residual: r.residual, certified_lower: r.certified_lower, graph });
    }
    let p = spec.p() as f64;
    Ok(VerificationReport {
        n,
        spec: spec.clone(),
        ex_brute: turan.ex,
        ex_formula_value,
        formula_matches: ex_formula_value == Some(turan.ex),
        extremal_graphs: turan.extremal,
        rho_max: spectral.rho_max,
        spectral_extremal_graphs: entries,
        containment_holds,
        construction_edges: extremal_family_member(n, spec).ok().map(|g| g.edge_count()),
        rho_excess: spectral.rho_max - (p - 1.0) / p * n as f64,
        diagnostics,
        visited_free_graphs: turan.visited.max(spectral.visited),
        scored_graphs: spectral.scored,
    })
}

/// Runs both exhaustive searches at `n` and records, without asserting,
/// whether `Ex_sp(n, F) ⊆ Ex(n, F)` and whether the formula is attained.
pub fn verify_theorem(n: usize, spec: &StarForestSpec, cfg: &SearchConfig) -> Result<VerificationReport> {
    let turan = turan_number_bruteforce(n, spec, cfg)?;
    let spectral = spectral_extremal_bruteforce(n, spec, cfg)?;
    assemble_report(n, spec, turan, spectral, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::turan;

    #[test]
    fn bipartite_instances_hold() {
        let s = StarForestSpec::new(2, &[1]).unwrap();
        for n in [5, 7] {
            let r = verify_theorem(n, &s, &SearchConfig::default()).unwrap();
            assert!(r.containment_holds && r.formula_matches);
            assert_eq!(r.ex_brute, n * n / 4);
            assert_eq!(r.extremal_graphs.len(), 1);
            assert_eq!(r.construction_edges, Some(n * n / 4));
            let d = &r.diagnostics[0];
            assert_eq!((d.chen_gap, d.certified), (0, true));
            assert_eq!(d.class_sizes.iter().sum::<usize>(), n);
            let t = turan(2, n).unwrap();
            assert!(crate::search::isomorphic(&r.spectral_extremal_graphs[0].graph, &t).unwrap());
        }
    }
}
