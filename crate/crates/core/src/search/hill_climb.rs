use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::enumerate::pair_order;
use crate::constructions::{extremal_family_member, StarForestSpec};
use crate::error::{Error, Result};
use crate::freeness::{edge_may_create_copy, is_free};
use crate::graph::Graph;
use crate::spectral::{spectral_radius, SpectralConfig};

#[derive(Debug, Clone, PartialEq)]
pub struct HillClimbOutcome {
    pub graph: Graph,
    pub rho: f64,
    pub start_rho: f64,
    /// Whether the walk started from the extremal-family construction.
    pub started_from_construction: bool,
    pub accepted_moves: usize,
}

fn rho_of(g: &Graph, cfg: &SpectralConfig) -> Result<f64> {
    let r = spectral_radius(g, cfg)?;
    if !r.converged {
        return Err(Error::NotConverged { iterations: r.iterations, estimate: r.rho });
    }
    Ok(r.rho)
}

fn stays_free(g: &Graph, u: usize, v: usize, spec: &StarForestSpec) -> bool {
    !edge_may_create_copy(g, u, v, spec.p()) || {
        let mut probe = g.clone();
        probe.insert_edge(u, v);
        is_free(&probe, spec)
    }
}

/// Random edge-maximal free graph: pairs in shuffled order, each kept if
/// the graph stays free.
fn random_maximal(n: usize, spec: &StarForestSpec, rng: &mut ChaCha8Rng) -> Graph {
    let mut pairs = pair_order(n);
    for i in (1..pairs.len()).rev() {
        let j = rng.random_range(0..=i);
        pairs.swap(i, j);
    }
    let mut g = Graph::empty(n);
    for (u, v) in pairs {
        if stays_free(&g, u, v, spec) {
            g.insert_edge(u, v);
        }
    }
    g
}

/// Local search for a large Perron root among free graphs on `n` vertices.
///
/// Starts from the extremal-family construction when it fits, otherwise
/// from a random edge-maximal free graph. Each step draws a random non-edge:
/// it is added outright if the graph stays free; otherwise a random edge is
/// swapped out for it, and the swap is kept only if the result is free and
/// its root beats the current one by more than `cfg.tie_tol`. The outcome
/// depends only on the arguments.
pub fn hill_climb(n: usize, spec: &StarForestSpec, steps: usize, seed: u64, cfg: &SpectralConfig) -> Result<HillClimbOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut current, started_from_construction) = match extremal_family_member(n, spec) {
        Ok(g) => (g, true),
        Err(_) => (random_maximal(n, spec, &mut rng), false),
    };
    let start_rho = rho_of(&current, cfg)?;
    let mut rho = start_rho;
    let mut accepted_moves = 0;
    for _ in 0..steps {
        let non_edges: Vec<(usize, usize)> = pair_order(current.n()).into_iter().filter(|&(u, v)| !current.has_edge(u, v)).collect();
        if non_edges.is_empty() {
            break;
        }
        let (u, v) = non_edges[rng.random_range(0..non_edges.len())];
        if stays_free(&current, u, v, spec) {
            current.insert_edge(u, v);
            rho = rho_of(&current, cfg)?.max(rho);
            accepted_moves += 1;
            continue;
        }
        let edges = current.edge_list();
        if edges.is_empty() {
            continue;
        }
        let (x, y) = edges[rng.random_range(0..edges.len())];
        let mut candidate = current.clone();
        candidate.delete_edge(x, y);
        candidate.insert_edge(u, v);
        if !is_free(&candidate, spec) {
            continue;
        }
        let candidate_rho = rho_of(&candidate, cfg)?;
        if candidate_rho > rho + cfg.tie_tol {
            current = candidate;
            rho = candidate_rho;
            accepted_moves += 1;
        }
    }
    Ok(HillClimbOutcome { graph: current, rho, start_rho, started_from_construction, accepted_moves })
}
