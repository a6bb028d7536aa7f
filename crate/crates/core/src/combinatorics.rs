//! Closed-form counts and exact small-graph invariants: the Chvátal–Hanson
//! function `f(ν, Δ)`, `h(n, p, q)`, the extremal-number formula, matching
//! numbers, crossing-edge diagnostics for vertex partitions, and the
//! intersection bound `|∩V_i| ≥ Σ|V_i| − (m−1)|∪V_i|`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::constructions::{turan_parts, StarForestSpec};
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest number of non-isolated vertices [`matching_number`] accepts.
pub const MATCHING_DP_LIMIT: usize = 22;

#[inline]
fn pairs(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

/// `f(ν, Δ) = Δν + ⌊Δ/2⌋·⌊ν/⌈Δ/2⌉⌋`, the maximum edge count of a graph with
/// matching number at most `ν` and maximum degree at most `Δ`.
///
/// `f(ν, 0) = f(0, Δ) = 0`.
pub fn f_formula(nu: usize, delta: usize) -> usize {
    if nu == 0 || delta == 0 {
        return 0;
    }
    delta * nu + (delta / 2) * (nu / delta.div_ceil(2))
}

/// Edge count of `T_r(n)`.
pub fn turan_edges(r: usize, n: usize) -> Result<usize> {
    Ok(pairs(n) - turan_parts(r, n)?.into_iter().map(pairs).sum::<usize>())
}

/// `h(n, p, q) = e(K_{q-1} ∨ T_p(n-q+1))`.
pub fn h_edges(n: usize, p: usize, q: usize) -> Result<usize> {
    if q == 0 || p == 0 {
        return Err(invalid("h(n, p, q) needs p >= 1 and q >= 1"));
    }
    if n + 1 < q {
        return Err(invalid(format!("h(n, p, q) needs n >= q - 1 (n = {n}, q = {q})")));
    }
    let rest = n + 1 - q;
    Ok(pairs(q - 1) + (q - 1) * rest + turan_edges(p, rest)?)
}

/// `h(n, p, q) + f(k_q − 1, k_q − 1)`.
///
/// This is the extremal number only for `n` large enough; at small `n` it is
/// a lower bound whenever the extremal construction fits.
pub fn ex_formula(n: usize, spec: &StarForestSpec) -> Result<usize> {
    let k = spec.smallest_k() - 1;
    Ok(h_edges(n, spec.p(), spec.q())? + f_formula(k, k))
}

/// Maximum matching size over bitmask adjacency on at most 32 vertices.
fn matching_number_masks(adj: &[u32]) -> usize {
    let k = adj.len();
    if k == 0 {
        return 0;
    }
    let full = if k == 32 { u32::MAX } else { (1u32 << k) - 1 };
    let mut best = vec![0u8; 1usize << k];
    for mask in 1..=full {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut value = best[rest as usize];
        let mut partners = adj[v] & rest;
        while partners != 0 {
            let u = partners.trailing_zeros();
            partners &= partners - 1;
            value = value.max(1 + best[(rest & !(1 << u)) as usize]);
        }
        best[mask as usize] = value;
    }
    best[full as usize] as usize
}

fn local_masks(g: &Graph, vertices: &[usize]) -> Vec<u32> {
    vertices
        .iter()
        .map(|&v| {
            vertices
                .iter()
                .enumerate()
                .filter(|&(_, &u)| g.has_edge(u, v))
                .fold(0u32, |m, (i, _)| m | 1 << i)
        })
        .collect()
}

/// Exact matching number by subset dynamic programming over the
/// non-isolated vertices (at most [`MATCHING_DP_LIMIT`] of them).
pub fn matching_number(g: &Graph) -> Result<usize> {
    let active: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    if active.len() > MATCHING_DP_LIMIT {
        return Err(Error::BudgetExceeded {
            what: "non-isolated vertices for exact matching",
            value: active.len(),
            limit: MATCHING_DP_LIMIT,
        });
    }
    Ok(matching_number_masks(&local_masks(g, &active)))
}

/// Brute-force `f(ν, Δ)`: the largest edge count over graphs on
/// `max_vertices` vertices with `ν(G) ≤ nu` and `Δ(G) ≤ delta`.
///
/// Depth-first search over edge subsets, pruned on the degree cap, the
/// matching cap and a degree-slack upper bound.
pub fn f_bruteforce(nu: usize, delta: usize, max_vertices: usize) -> Result<usize> {
    if nu > 3 || delta > 3 {
        return Err(Error::BudgetExceeded { what: "max(nu, delta) for brute-force f", value: nu.max(delta), limit: 3 });
    }
    if max_vertices > 9 {
        return Err(Error::BudgetExceeded { what: "vertices for brute-force f", value: max_vertices, limit: 9 });
    }
    let n = max_vertices;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let mut state = FState { nu, delta, adj: vec![0; n], degree: vec![0; n], edges: 0, best: 0 };
    state.search(&pairs, 0);
    Ok(state.best)
}

struct FState {
    nu: usize,
    delta: usize,
    adj: Vec<u32>,
    degree: Vec<usize>,
    edges: usize,
    best: usize,
}

impl FState {
    fn upper_bound(&self) -> usize {
        self.edges + self.degree.iter().map(|&d| self.delta - d).sum::<usize>() / 2
    }

    fn search(&mut self, pairs: &[(usize, usize)], next: usize) {
        self.best = self.best.max(self.edges);
        if next == pairs.len() || self.upper_bound() <= self.best {
            return;
        }
        let (u, v) = pairs[next];
        if self.degree[u] < self.delta && self.degree[v] < self.delta {
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
            self.degree[u] += 1;
            self.degree[v] += 1;
            self.edges += 1;
            if matching_number_masks(&self.adj) <= self.nu {
                self.search(pairs, next + 1);
            }
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
            self.degree[u] -= 1;
            self.degree[v] -= 1;
            self.edges -= 1;
        }
        self.search(pairs, next + 1);
    }
}

/// Assignment of every vertex to one of `classes` classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartitionLabeling {
    classes: usize,
    assignment: Vec<usize>,
}

impl PartitionLabeling {
    pub fn new(classes: usize, assignment: Vec<usize>) -> Result<Self> {
        if classes == 0 {
            return Err(invalid("a partition needs at least one class"));
        }
        if let Some(&c) = assignment.iter().find(|&&c| c >= classes) {
            return Err(invalid(format!("class index {c} out of range for {classes} classes")));
        }
        Ok(PartitionLabeling { classes, assignment })
    }

    /// Labeling from explicit class member lists over `0..n`; every vertex
    /// must appear exactly once.
    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Result<Self> {
        let mut assignment = vec![usize::MAX; n];
        for (i, members) in classes.iter().enumerate() {
            for &v in members {
                if v >= n || assignment[v] != usize::MAX {
                    return Err(invalid(format!("vertex {v} is out of range or listed twice")));
                }
                assignment[v] = i;
            }
        }
        if assignment.contains(&usize::MAX) {
            return Err(invalid("partition does not cover every vertex"));
        }
        PartitionLabeling::new(classes.len(), assignment)
    }

    pub fn classes(&self) -> usize {
        self.classes
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.classes];
        for &c in &self.assignment {
            sizes[c] += 1;
        }
        sizes
    }

    pub fn members(&self, class: usize) -> Vec<usize> {
        (0..self.assignment.len()).filter(|&v| self.assignment[v] == class).collect()
    }

    fn check_covers(&self, g: &Graph) -> Result<()> {
        if self.assignment.len() != g.n() {
            return Err(invalid(format!(
                "labeling covers {} vertices, graph has {}",
                self.assignment.len(),
                g.n()
            )));
        }
        Ok(())
    }
}

/// `|E_cr(G)|`: edges whose endpoints lie in different classes.
pub fn crossing_edges(g: &Graph, labeling: &PartitionLabeling) -> Result<usize> {
    labeling.check_covers(g)?;
    Ok(g.edges().filter(|&(u, v)| labeling.class_of(u) != labeling.class_of(v)).count())
}

/// `Σ_i e(G[V_i]) − (Σ_{i<j}|V_i||V_j| − |E_cr(G)|)`: internal edges minus
/// missing crossing pairs.
pub fn chen_gap(g: &Graph, labeling: &PartitionLabeling) -> Result<i64> {
    let crossing = crossing_edges(g, labeling)?;
    let internal = g.edge_count() - crossing;
    let sizes = labeling.class_sizes();
    let total: usize = sizes.iter().sum();
    let cross_pairs = (pairs(total) - sizes.iter().map(|&s| pairs(s)).sum::<usize>()) as i64;
    Ok(internal as i64 - (cross_pairs - crossing as i64))
}

/// [`chen_gap`] together with a check of the side conditions under which
/// it is bounded by `f(k − 1, k − 1)` for an `S_k^{p+1}`-free graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChenDiagnostic {
    pub crossing: usize,
    pub gap: i64,
    /// `f(k − 1, k − 1)`.
    pub bound: usize,
    /// For every class `i` and `v ∈ V_i`: `Σ_{j≠i} ν(G[V_j]) ≤ k−1`,
    /// `Δ(G[V_i]) ≤ k−1` and `d_{G[V_i]}(v) + Σ_{j≠i} ν(G[N(v) ∩ V_j]) ≤ k−1`.
    pub hypotheses_hold: bool,
}

pub fn chen_diagnostic(g: &Graph, labeling: &PartitionLabeling, k: usize) -> Result<ChenDiagnostic> {
    if k == 0 {
        return Err(invalid("star size k must be at least 1"));
    }
    let crossing = crossing_edges(g, labeling)?;
    let gap = chen_gap(g, labeling)?;
    let cap = k - 1;
    let classes: Vec<Vec<usize>> = (0..labeling.classes()).map(|c| labeling.members(c)).collect();
    let class_nu = classes
        .iter()
        .map(|members| matching_number(&g.induced_on(members)))
        .collect::<Result<Vec<_>>>()?;
    let nu_total: usize = class_nu.iter().sum();

    let mut hypotheses_hold = true;
    'classes: for (i, members) in classes.iter().enumerate() {
        let inner = g.induced_on(members);
        if nu_total - class_nu[i] > cap || inner.max_degree() > cap {
            hypotheses_hold = false;
            break;
        }
        for (local, &v) in members.iter().enumerate() {
            let mut load = inner.degree(local);
            for (j, other) in classes.iter().enumerate() {
                if j == i {
                    continue;
                }
                let near: Vec<usize> = other.iter().copied().filter(|&u| g.has_edge(u, v)).collect();
                load += matching_number(&g.induced_on(&near))?;
            }
            if load > cap {
                hypotheses_hold = false;
                break 'classes;
            }
        }
    }
    Ok(ChenDiagnostic { crossing, gap, bound: f_formula(cap, cap), hypotheses_hold })
}

/// Result of [`max_crossing_partition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingPartition {
    pub labeling: PartitionLabeling,
    pub crossing: usize,
    /// `true` when found by exhaustive search (an exact maximum).
    pub certified: bool,
}

/// Largest `n` searched exhaustively by [`max_crossing_partition`].
pub const CROSSING_EXACT_LIMIT: usize = 12;

/// A `p`-partition maximizing the number of crossing edges; ties go to the
/// lexicographically least assignment.
///
/// Up to [`CROSSING_EXACT_LIMIT`] vertices the search is exhaustive over
/// assignments with classes numbered in order of first use (the least
/// assignment in every class-relabeling orbit has that form). Larger graphs
/// need `allow_heuristic`, which runs single-vertex local search and returns
/// an uncertified labeling.
pub fn max_crossing_partition(g: &Graph, p: usize, allow_heuristic: bool) -> Result<CrossingPartition> {
    if p == 0 {
        return Err(invalid("partition needs p >= 1"));
    }
    if g.n() <= CROSSING_EXACT_LIMIT {
        let mut search = CutSearch {
            g,
            p,
            current: Vec::with_capacity(g.n()),
            best: Vec::new(),
            best_value: None,
        };
        search.run(0, 0);
        let labeling = PartitionLabeling::new(p, search.best)?;
        return Ok(CrossingPartition { labeling, crossing: search.best_value.unwrap_or(0), certified: true });
    }
    if !allow_heuristic {
        return Err(Error::BudgetExceeded {
            what: "vertices for exact max-crossing partition",
            value: g.n(),
            limit: CROSSING_EXACT_LIMIT,
        });
    }
    let mut assignment: Vec<usize> = (0..g.n()).map(|v| v % p).collect();
    loop {
        let mut improved = false;
        for v in 0..g.n() {
            let mut counts = vec![0usize; p];
            for u in g.neighbors(v) {
                counts[assignment[u]] += 1;
            }
            // moving v to the class holding the fewest of its neighbours maximizes its crossing degree
            let target = (0..p).min_by_key(|&c| (counts[c], c)).expect("p >= 1");
            if counts[target] < counts[assignment[v]] {
                assignment[v] = target;
                improved = true;
            }
        }
        if !improved {
            break;
        }
    }
    let labeling = PartitionLabeling::new(p, assignment)?;
    let crossing = crossing_edges(g, &labeling)?;
    Ok(CrossingPartition { labeling, crossing, certified: false })
}

struct CutSearch<'a> {
    g: &'a Graph,
    p: usize,
    current: Vec<usize>,
    best: Vec<usize>,
    best_value: Option<usize>,
}

impl CutSearch<'_> {
    fn run(&mut self, used: usize, value: usize) {
        let v = self.current.len();
        if v == self.g.n() {
            if self.best_value.is_none_or(|b| value > b) {
                self.best_value = Some(value);
                self.best.clone_from(&self.current);
            }
            return;
        }
        let limit = (used + 1).min(self.p);
        for class in 0..limit {
            let gained = self.g.neighbors(v).filter(|&u| u < v && self.current[u] != class).count();
            self.current.push(class);
            self.run(used.max(class + 1), value + gained);
            self.current.pop();
        }
    }
}

/// Both sides of `|V_1 ∩ ⋯ ∩ V_m| ≥ Σ|V_i| − (m−1)|V_1 ∪ ⋯ ∪ V_m|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntersectionBound {
    pub intersection: usize,
    pub lower_bound: i64,
}

impl IntersectionBound {
    pub fn holds(&self) -> bool {
        self.intersection as i64 >= self.lower_bound
    }
}

/// Evaluates the intersection bound for sets over a common universe.
/// An empty family yields `0 ≥ 0`.
pub fn intersection_bound(sets: &[VertexSet]) -> Result<IntersectionBound> {
    let Some(first) = sets.first() else {
        return Ok(IntersectionBound { intersection: 0, lower_bound: 0 });
    };
    if sets.iter().any(|s| s.universe() != first.universe()) {
        return Err(invalid("sets must share one universe"));
    }
    let meet = sets.iter().skip(1).fold(first.clone(), |acc, s| acc.intersection(s));
    let join = sets.iter().skip(1).fold(first.clone(), |acc, s| acc.union(s));
    let sum: usize = sets.iter().map(VertexSet::len).sum();
    let lower_bound = sum as i64 - (sets.len() as i64 - 1) * join.len() as i64;
    Ok(IntersectionBound { intersection: meet.len(), lower_bound })
}

pub fn intersection_bound_holds(sets: &[VertexSet]) -> Result<bool> {
    intersection_bound(sets).map(|b| b.holds())
}
