//! Labeled enumeration of `F`-free graphs and the two exhaustive extremal
//! searches built on it.
//!
//! Vertex pairs are taken in the fixed order `(0,1), (0,2), (1,2), (0,3), …`.
//! Every free graph is reached exactly once by adding pairs in increasing
//! index order; a branch whose new edge completes a copy of `F` is dropped
//! together with its whole subtree, since containment is monotone.
//!
//! The tree can be split into `2^B` shards by fixing the first `B` pair
//! decisions. Shard accumulators merge associatively, so callers may run
//! shards on separate workers.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};

use super::canonical::{canonical_form, CanonicalForm};
use super::SearchConfig;
use crate::constructions::StarForestSpec;
use crate::error::{invalid, Error, Result};
use crate::freeness::{edge_may_create_copy, is_free};
use crate::graph::Graph;
use crate::spectral::{spectral_radius, SpectralConfig};

/// Vertex pairs in enumeration order.
pub fn pair_order(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Callbacks driven by the enumeration.
pub trait FreeGraphVisitor {
    fn visit(&mut self, g: &Graph);

    /// Whether to explore graphs extending `g` by pairs not yet decided;
    /// `undecided` is how many such pairs remain.
    fn descend(&self, _g: &Graph, _undecided: usize) -> bool {
        true
    }
}

impl<F: FnMut(&Graph)> FreeGraphVisitor for F {
    fn visit(&mut self, g: &Graph) {
        self(g)
    }
}

struct Walker<'a, V> {
    spec: &'a StarForestSpec,
    pairs: Vec<(usize, usize)>,
    visitor: &'a mut V,
    visited: u64,
}

impl<V: FreeGraphVisitor> Walker<'_, V> {
    fn grow(&mut self, g: &mut Graph, next: usize) {
        self.visitor.visit(g);
        self.visited += 1;
        for i in next..self.pairs.len() {
            if !self.visitor.descend(g, self.pairs.len() - i) {
                return;
            }
            let (u, v) = self.pairs[i];
            let risky = edge_may_create_copy(g, u, v, self.spec.p());
            g.insert_edge(u, v);
            if !risky || is_free(g, self.spec) {
                self.grow(g, i + 1);
            }
            g.delete_edge(u, v);
        }
    }
}

pub(crate) fn check_budget(n: usize, cfg: &SearchConfig) -> Result<()> {
    let limit = cfg.max_n.min(super::HARD_MAX_N);
    if n > limit {
        return Err(Error::BudgetExceeded { what: "vertices for exhaustive enumeration", value: n, limit });
    }
    if n == super::HARD_MAX_N {
        log::warn!("enumerating all labeled graphs on {n} vertices; expect a long run");
    }
    Ok(())
}

/// Number of shards for `shard_bits` on `n` vertices (bits are capped at the
/// number of pairs).
pub fn shard_count(n: usize, shard_bits: u32) -> u64 {
    1 << effective_bits(n, shard_bits)
}

fn effective_bits(n: usize, shard_bits: u32) -> u32 {
    shard_bits.min((n * n.saturating_sub(1) / 2) as u32).min(32)
}

/// Enumerates the free graphs of one shard: bit `i` of `shard` decides
/// whether pair `i` is present, for the first `shard_bits` pairs. Returns
/// the number of graphs visited.
pub fn enumerate_free_shard<V: FreeGraphVisitor>(
    n: usize,
    spec: &StarForestSpec,
    shard_bits: u32,
    shard: u64,
    visitor: &mut V,
) -> Result<u64> {
    let bits = effective_bits(n, shard_bits);
    if shard >= 1 << bits {
        return Err(invalid("shard index out of range"));
    }
    let pairs = pair_order(n);
    let mut g = Graph::empty(n);
    for (i, &(u, v)) in pairs.iter().enumerate().take(bits as usize) {
        if shard >> i & 1 == 1 {
            g.insert_edge(u, v);
        }
    }
    if !is_free(&g, spec) {
        return Ok(0);
    }
    let mut walker = Walker { spec, pairs, visitor, visited: 0 };
    walker.grow(&mut g, bits as usize);
    Ok(walker.visited)
}

/// Visits every labeled `F`-free graph on `n` vertices exactly once.
pub fn enumerate_free<V: FreeGraphVisitor>(n: usize, spec: &StarForestSpec, cfg: &SearchConfig, visitor: &mut V) -> Result<u64> {
    check_budget(n, cfg)?;
    let mut total = 0;
    for shard in 0..shard_count(n, cfg.shard_bits) {
        total += enumerate_free_shard(n, spec, cfg.shard_bits, shard, visitor)?;
    }
    Ok(total)
}

/// Running maximum edge count with the canonical forms attaining it.
#[derive(Debug)]
pub struct TuranAccumulator<'a> {
    pub best: Option<usize>,
    pub forms: BTreeMap<CanonicalForm, ()>,
    pub visited: u64,
    /// Bound shared between shards; stale reads only weaken pruning.
    shared: Option<&'a AtomicUsize>,
    error: Option<Error>,
}

impl<'a> TuranAccumulator<'a> {
    pub fn new(shared: Option<&'a AtomicUsize>) -> Self {
        TuranAccumulator { best: None, forms: BTreeMap::new(), visited: 0, shared, error: None }
    }

    pub fn merge(mut self, other: TuranAccumulator<'a>) -> Self {
        self.visited += other.visited;
        self.error = self.error.or(other.error);
        match (self.best, other.best) {
            (_, None) => {}
            (None, Some(_)) => {
                self.best = other.best;
                self.forms = other.forms;
            }
            (Some(a), Some(b)) if b > a => {
                self.best = other.best;
                self.forms = other.forms;
            }
            (Some(a), Some(b)) if b == a => self.forms.extend(other.forms),
            _ => {}
        }
        self
    }

    pub fn finish(self) -> Result<TuranOutcome> {
        if let Some(e) = self.error {
            return Err(e);
        }
        let ex = self.best.ok_or_else(|| invalid("enumeration produced no graph"))?;
        let extremal = self.forms.into_keys().map(|f| f.to_graph()).collect();
        Ok(TuranOutcome { ex, extremal, visited: self.visited })
    }

    fn threshold(&self) -> usize {
        let local = self.best.unwrap_or(0);
        self.shared.map_or(local, |s| local.max(s.load(AtomicOrdering::Relaxed)))
    }
}

impl FreeGraphVisitor for TuranAccumulator<'_> {
    fn visit(&mut self, g: &Graph) {
        self.visited += 1;
        let e = g.edge_count();
        if self.error.is_some() || e < self.threshold() {
            return;
        }
        let form = match canonical_form(g) {
            Ok(f) => f,
            Err(err) => {
                self.error = Some(err);
                return;
            }
        };
        if self.best.is_none_or(|b| e > b) {
            self.best = Some(e);
            self.forms.clear();
            if let Some(shared) = self.shared {
                shared.fetch_max(e, AtomicOrdering::Relaxed);
            }
        }
        self.forms.insert(form, ());
    }

    fn descend(&self, g: &Graph, undecided: usize) -> bool {
        self.error.is_none() && g.edge_count() + undecided >= self.threshold()
    }
}

/// `ex(n, F)` with its extremal graphs up to isomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuranOutcome {
    pub ex: usize,
    /// Canonical representatives, in canonical-form order.
    pub extremal: Vec<Graph>,
    /// Free graphs reached (subtrees that cannot reach the maximum are cut).
    pub visited: u64,
}

pub fn turan_number_bruteforce(n: usize, spec: &StarForestSpec, cfg: &SearchConfig) -> Result<TuranOutcome> {
    let mut acc = TuranAccumulator::new(None);
    enumerate_free(n, spec, cfg, &mut acc)?;
    acc.finish()
}

/// Which free graphs the spectral search scores.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectralScope {
    /// Only edge-maximal free graphs; sound since adding an edge never
    /// lowers the Perron root.
    EdgeMaximal,
    All,
}

/// Running maximum Perron root with all canonical forms within `tie_tol`.
#[derive(Debug)]
pub struct SpectralAccumulator<'a> {
    spec: &'a StarForestSpec,
    cfg: SpectralConfig,
    scope: SpectralScope,
    pub best: Option<f64>,
    pub candidates: BTreeMap<CanonicalForm, f64>,
    pub visited: u64,
    pub scored: u64,
    error: Option<Error>,
    pairs: Vec<(usize, usize)>,
    probe: Graph,
}

impl<'a> SpectralAccumulator<'a> {
    pub fn new(spec: &'a StarForestSpec, cfg: SpectralConfig, scope: SpectralScope) -> Self {
        SpectralAccumulator {
            spec,
            cfg,
            scope,
            best: None,
            candidates: BTreeMap::new(),
            visited: 0,
            scored: 0,
            error: None,
            pairs: Vec::new(),
            probe: Graph::empty(0),
        }
    }

    pub fn merge(mut self, other: SpectralAccumulator<'a>) -> Self {
        self.visited += other.visited;
        self.scored += other.scored;
        self.error = self.error.or(other.error);
        for (form, rho) in other.candidates {
            self.offer(form, rho);
        }
        self
    }

    fn offer(&mut self, form: CanonicalForm, rho: f64) {
        let tie = self.cfg.tie_tol;
        if self.best.is_some_and(|b| rho < b - tie) {
            return;
        }
        if self.best.is_none_or(|b| rho > b) {
            self.best = Some(rho);
            self.candidates.retain(|_, r| *r >= rho - tie);
        }
        self.candidates.entry(form).or_insert(rho);
    }

    pub fn finish(self) -> Result<SpectralOutcome> {
        if let Some(e) = self.error {
            return Err(e);
        }
        let rho_max = self.best.ok_or_else(|| invalid("enumeration produced no graph"))?;
        let graphs = self.candidates.into_iter().map(|(f, rho)| (f.to_graph(), rho)).collect();
        Ok(SpectralOutcome { rho_max, graphs, visited: self.visited, scored: self.scored })
    }

    fn is_edge_maximal(&mut self, g: &Graph) -> bool {
        if self.pairs.len() != g.n() * g.n().saturating_sub(1) / 2 {
            self.pairs = pair_order(g.n());
        }
        // cheap pass first: a non-edge that cannot close a copy settles it
        let p = self.spec.p();
        if self.pairs.iter().any(|&(u, v)| !g.has_edge(u, v) && !edge_may_create_copy(g, u, v, p)) {
            return false;
        }
        self.probe.clone_from(g);
        for &(u, v) in &self.pairs {
            if g.has_edge(u, v) {
                continue;
            }
            self.probe.insert_edge(u, v);
            let free = is_free(&self.probe, self.spec);
            self.probe.delete_edge(u, v);
            if free {
                return false;
            }
        }
        true
    }
}

impl FreeGraphVisitor for SpectralAccumulator<'_> {
    fn visit(&mut self, g: &Graph) {
        self.visited += 1;
        if self.error.is_some() || (self.scope == SpectralScope::EdgeMaximal && !self.is_edge_maximal(g)) {
            return;
        }
        self.scored += 1;
        let scored = spectral_radius(g, &self.cfg).and_then(|r| {
            if r.converged {
                Ok(r.rho)
            } else {
                Err(Error::NotConverged { iterations: r.iterations, estimate: r.rho })
            }
        });
        let rho = match scored {
            Ok(rho) => rho,
            Err(e) => {
                self.error = Some(e);
                return;
            }
        };
        if self.best.is_some_and(|b| rho < b - self.cfg.tie_tol) {
            return;
        }
        match canonical_form(g) {
            Ok(form) => self.offer(form, rho),
            Err(e) => self.error = Some(e),
        }
    }

    fn descend(&self, _g: &Graph, _undecided: usize) -> bool {
        self.error.is_none()
    }
}

/// Maximum Perron root over `n`-vertex free graphs and every graph within
/// the tie tolerance of it, up to isomorphism.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralOutcome {
    pub rho_max: f64,
    /// Canonical representatives with their Perron roots.
    pub graphs: Vec<(Graph, f64)>,
    pub visited: u64,
    /// Graphs whose Perron root was computed.
    pub scored: u64,
}

pub fn spectral_extremal_bruteforce(n: usize, spec: &StarForestSpec, cfg: &SearchConfig) -> Result<SpectralOutcome> {
    spectral_extremal_scoped(n, spec, cfg, SpectralScope::EdgeMaximal)
}

pub fn spectral_extremal_scoped(n: usize, spec: &StarForestSpec, cfg: &SearchConfig, scope: SpectralScope) -> Result<SpectralOutcome> {
    if n == 0 {
        return Err(invalid("spectral search needs n >= 1"));
    }
    let mut acc = SpectralAccumulator::new(spec, cfg.spectral, scope);
    enumerate_free(n, spec, cfg, &mut acc)?;
    acc.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::turan_edges;
    use crate::constructions::turan;
    use crate::search::isomorphic;

    fn spec(p: usize, ks: &[usize]) -> StarForestSpec {
        StarForestSpec::new(p, ks).unwrap()
    }

    fn count(n: usize, s: &StarForestSpec) -> u64 {
        let mut seen = 0u64;
        let visited = enumerate_free(n, s, &SearchConfig::default(), &mut |_: &Graph| seen += 1).unwrap();
        assert_eq!(seen, visited);
        visited
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(count(3, &spec(2, &[1])), 7);
        for p in 2..5 {
            assert_eq!(count(2, &spec(p, &[1])), 2);
        }
        assert_eq!(count(4, &spec(3, &[1])), 63);
        // labeled triangle-free graphs on 1..=6 vertices
        let known = [1, 2, 7, 41, 388, 5789];
        for (n, &want) in (1..=6).zip(&known) {
            assert_eq!(count(n, &spec(2, &[1])), want, "n = {n}");
        }
    }

    #[test]
    fn every_visited_graph_is_distinct_and_free() {
        let s = spec(2, &[2]);
        let mut seen = alloc::collections::BTreeSet::new();
        let mut all_free = true;
        enumerate_free(6, &s, &SearchConfig::default(), &mut |g: &Graph| {
            all_free &= is_free(g, &s);
            seen.insert(g.edge_list());
        })
        .unwrap();
        assert!(all_free);
        let total = count(6, &s);
        assert_eq!(seen.len() as u64, total);
    }

    #[test]
    fn shards_partition_the_tree() {
        let s = spec(2, &[1]);
        let whole = count(6, &s);
        for bits in [1, 3, 5] {
            let mut sum = 0;
            for shard in 0..shard_count(6, bits) {
                sum += enumerate_free_shard(6, &s, bits, shard, &mut |_: &Graph| {}).unwrap();
            }
            assert_eq!(sum, whole, "bits = {bits}");
        }
        assert_eq!(shard_count(2, 10), 2);
        assert!(enumerate_free_shard(4, &s, 2, 4, &mut |_: &Graph| {}).is_err());
    }

    #[test]
    fn budget() {
        let cfg = SearchConfig::default();
        assert!(matches!(enumerate_free(9, &spec(2, &[1]), &cfg, &mut |_: &Graph| {}), Err(Error::BudgetExceeded { .. })));
        let cfg = SearchConfig { max_n: 12, ..cfg };
        assert!(matches!(enumerate_free(10, &spec(2, &[1]), &cfg, &mut |_: &Graph| {}), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn turan_examples() {
        let cfg = SearchConfig::default();
        let out = turan_number_bruteforce(5, &spec(2, &[1]), &cfg).unwrap();
        assert_eq!(out.ex, 6);
        assert_eq!(out.extremal.len(), 1);
        assert!(isomorphic(&out.extremal[0], &turan(2, 5).unwrap()).unwrap());
        let out = turan_number_bruteforce(6, &spec(3, &[1]), &cfg).unwrap();
        assert_eq!(out.ex, turan_edges(3, 6).unwrap());
        assert_eq!(out.extremal.len(), 1);
        assert!(isomorphic(&out.extremal[0], &turan(3, 6).unwrap()).unwrap());
    }

    #[test]
    fn spectral_examples() {
        let cfg = SearchConfig::default();
        let out = spectral_extremal_bruteforce(6, &spec(2, &[1]), &cfg).unwrap();
        assert!((out.rho_max - 3.0).abs() < 1e-9);
        assert_eq!(out.graphs.len(), 1);
        assert!(isomorphic(&out.graphs[0].0, &turan(2, 6).unwrap()).unwrap());
        let out = spectral_extremal_bruteforce(4, &spec(3, &[1]), &cfg).unwrap();
        assert_eq!(out.graphs.len(), 1);
        assert!(isomorphic(&out.graphs[0].0, &turan(3, 4).unwrap()).unwrap());
    }

    #[test]
    fn edge_maximal_pruning_matches_full_scan() {
        let cfg = SearchConfig::default();
        for s in [spec(2, &[1]), spec(2, &[2]), spec(2, &[1, 1]), spec(3, &[1])] {
            for n in 2..=6 {
                let pruned = spectral_extremal_scoped(n, &s, &cfg, SpectralScope::EdgeMaximal).unwrap();
                let full = spectral_extremal_scoped(n, &s, &cfg, SpectralScope::All).unwrap();
                assert!((pruned.rho_max - full.rho_max).abs() < 1e-9, "{s:?} n = {n}");
                assert!(pruned.scored <= full.scored);
            }
        }
    }
}
