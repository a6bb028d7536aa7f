//! Containment of `S^{p+1}_{k_1,…,k_q}` with explicit witnesses.
//!
//! A copy of the pattern is `q` distinct centers, center `i` carrying `k_i`
//! vertex-disjoint `p`-cliques from its neighborhood, all vertices distinct.
//! The specialized search places the pattern in a canonical order (centers
//! by decreasing `k`, equal-`k` centers by increasing label, each center's
//! cliques by increasing smallest vertex, clique members increasing) and
//! only ever tries the lowest unused vertex of each twin class of the host,
//! since swapping two unused twins is an automorphism fixing the partial
//! embedding.
//!
//! [`generic_contains`] is an unrelated subgraph-monomorphism search kept as
//! an oracle.

use alloc::vec;
use alloc::vec::Vec;

use crate::constructions::StarForestSpec;
use crate::error::{Error, Result};
use crate::graph::{test_bit, Graph};

/// An embedding of `S^{p+1}_{k_1,…,k_q}` into a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub centers: Vec<usize>,
    /// `cliques[i]` holds the `k_i` disjoint `p`-sets around `centers[i]`.
    pub cliques: Vec<Vec<Vec<usize>>>,
}

impl Witness {
    /// Re-checks the witness against the host: distinct vertices, the right
    /// shape for `spec`, and every clique plus its center complete.
    pub fn verify(&self, host: &Graph, spec: &StarForestSpec) -> bool {
        if self.centers.len() != spec.q() || self.cliques.len() != spec.q() {
            return false;
        }
        let mut seen = vec![false; host.n()];
        let mut mark = |v: usize| v < host.n() && !core::mem::replace(&mut seen[v], true);
        for (i, (&c, sets)) in self.centers.iter().zip(&self.cliques).enumerate() {
            if !mark(c) || sets.len() != spec.ks()[i] {
                return false;
            }
            for set in sets {
                if set.len() != spec.p() {
                    return false;
                }
                for (j, &a) in set.iter().enumerate() {
                    if !mark(a) || !host.has_edge(c, a) {
                        return false;
                    }
                    if set[j + 1..].iter().any(|&b| !host.has_edge(a, b)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// All witness vertices, centers first.
    pub fn vertices(&self) -> Vec<usize> {
        let mut out = self.centers.clone();
        out.extend(self.cliques.iter().flatten().flatten().copied());
        out
    }
}

trait Bits: Copy {
    fn zero() -> Self;
    fn from_row(row: &[u64]) -> Self;
    fn and(self, other: Self) -> Self;
    fn and_not(self, other: Self) -> Self;
    fn with(self, v: usize) -> Self;
    fn has(self, v: usize) -> bool;
    fn count(self) -> usize;
    fn is_empty(self) -> bool;
    /// Members `>= v`.
    fn with_bit(self, v: usize) -> Self;
    fn lowest(self) -> Option<usize>;
    fn without(self, v: usize) -> Self;
}

impl<const W: usize> Bits for [u64; W] {
    #[inline]
    fn zero() -> Self {
        [0; W]
    }
    #[inline]
    fn from_row(row: &[u64]) -> Self {
        let mut out = [0; W];
        out[..row.len()].copy_from_slice(row);
        out
    }
    #[inline]
    fn and(mut self, other: Self) -> Self {
        for i in 0..W {
            self[i] &= other[i];
        }
        self
    }
    #[inline]
    fn and_not(mut self, other: Self) -> Self {
        for i in 0..W {
            self[i] &= !other[i];
        }
        self
    }
    #[inline]
    fn with(mut self, v: usize) -> Self {
        self[v / 64] |= 1 << (v % 64);
        self
    }
    #[inline]
    fn has(self, v: usize) -> bool {
        self[v / 64] >> (v % 64) & 1 == 1
    }
    #[inline]
    fn count(self) -> usize {
        self.iter().map(|w| w.count_ones() as usize).sum()
    }
    #[inline]
    fn is_empty(self) -> bool {
        self.iter().all(|&w| w == 0)
    }
    #[inline]
    fn with_bit(mut self, v: usize) -> Self {
        let (word, bit) = (v / 64, v % 64);
        for w in self.iter_mut().take(word.min(W)) {
            *w = 0;
        }
        if word < W {
            self[word] &= !0u64 << bit;
        }
        self
    }
    #[inline]
    fn lowest(self) -> Option<usize> {
        self.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
    }
    #[inline]
    fn without(mut self, v: usize) -> Self {
        self[v / 64] &= !(1 << (v % 64));
        self
    }
}

struct Search<'a, B: Bits> {
    spec: &'a StarForestSpec,
    adj: Vec<B>,
    degree: Vec<usize>,
    /// Lower-labeled twins (open or closed neighborhood) of each vertex.
    lower_twins: Vec<B>,
    used: B,
    centers: Vec<usize>,
    cliques: Vec<Vec<Vec<usize>>>,
}

impl<'a, B: Bits> Search<'a, B> {
    fn new(g: &Graph, spec: &'a StarForestSpec) -> Self {
        let n = g.n();
        let adj: Vec<B> = (0..n).map(|v| B::from_row(g.row(v))).collect();
        let mut lower_twins = vec![B::zero(); n];
        for v in 0..n {
            let closed_v = adj[v].with(v);
            for u in 0..v {
                let open = adj[u].and_not(adj[v]).is_empty() && adj[v].and_not(adj[u]).is_empty();
                let closed = {
                    let closed_u = adj[u].with(u);
                    closed_u.and_not(closed_v).is_empty() && closed_v.and_not(closed_u).is_empty()
                };
                if open || closed {
                    lower_twins[v] = lower_twins[v].with(u);
                }
            }
        }
        Search {
            spec,
            degree: g.degrees(),
            adj,
            lower_twins,
            used: B::zero(),
            centers: Vec::with_capacity(spec.q()),
            cliques: Vec::with_capacity(spec.q()),
        }
    }

    #[inline]
    fn admissible(&self, v: usize) -> bool {
        !self.used.has(v) && self.lower_twins[v].and_not(self.used).is_empty()
    }

    fn place_center(&mut self, index: usize) -> bool {
        if index == self.spec.q() {
            return true;
        }
        let k = self.spec.ks()[index];
        let need = k * self.spec.p();
        let start = match index.checked_sub(1) {
            Some(prev) if self.spec.ks()[prev] == k => self.centers[prev] + 1,
            _ => 0,
        };
        for c in start..self.adj.len() {
            if self.degree[c] < need || !self.admissible(c) {
                continue;
            }
            if self.adj[c].and_not(self.used).count() < need {
                continue;
            }
            self.used = self.used.with(c);
            self.centers.push(c);
            self.cliques.push(Vec::with_capacity(k));
            if self.place_clique(index, c, 0) {
                return true;
            }
            self.cliques.pop();
            self.centers.pop();
            self.used = self.used.without(c);
        }
        false
    }

    /// Places clique number `j` of center `index`.
    fn place_clique(&mut self, index: usize, center: usize, j: usize) -> bool {
        let k = self.spec.ks()[index];
        if j == k {
            return self.place_center(index + 1);
        }
        let p = self.spec.p();
        let first_min = match self.cliques[index].last() {
            Some(prev) => prev[0] + 1,
            None => 0,
        };
        let pool = self.adj[center].and_not(self.used).with_bit(first_min);
        let mut remaining = pool;
        while let Some(a) = remaining.lowest() {
            remaining = remaining.without(a);
            // every vertex of this and the later cliques is >= a
            if pool.with_bit(a).count() < p * (k - j) {
                break;
            }
            if self.degree[a] < p || !self.admissible(a) {
                continue;
            }
            self.used = self.used.with(a);
            let mut members = Vec::with_capacity(p);
            members.push(a);
            let candidates = pool.and(self.adj[a]).with_bit(a + 1);
            if self.extend_clique(index, center, j, &mut members, candidates) {
                return true;
            }
            self.used = self.used.without(a);
        }
        false
    }

    fn extend_clique(&mut self, index: usize, center: usize, j: usize, members: &mut Vec<usize>, candidates: B) -> bool {
        let p = self.spec.p();
        if members.len() == p {
            self.cliques[index].push(members.clone());
            if self.place_clique(index, center, j + 1) {
                return true;
            }
            self.cliques[index].pop();
            return false;
        }
        let missing = p - members.len();
        let mut remaining = candidates.and_not(self.used);
        while let Some(b) = remaining.lowest() {
            remaining = remaining.without(b);
            if remaining.count() + 1 < missing {
                break;
            }
            if !self.admissible(b) {
                continue;
            }
            self.used = self.used.with(b);
            members.push(b);
            let next = candidates.and(self.adj[b]).with_bit(b + 1);
            if self.extend_clique(index, center, j, members, next) {
                return true;
            }
            members.pop();
            self.used = self.used.without(b);
        }
        false
    }
}

fn run<B: Bits>(g: &Graph, spec: &StarForestSpec) -> Option<Witness> {
    let mut search = Search::<B>::new(g, spec);
    search.place_center(0).then_some(Witness { centers: search.centers, cliques: search.cliques })
}

/// Largest host order supported by [`find_blowup_star_forest`].
pub const MAX_HOST_ORDER: usize = 1024;

/// The first copy of `S^{p+1}_{k_1,…,k_q}` in `g` under the canonical search
/// order, or `None` if `g` is free of it.
///
/// Panics if `g` has more than [`MAX_HOST_ORDER`] vertices.
pub fn find_blowup_star_forest(g: &Graph, spec: &StarForestSpec) -> Option<Witness> {
    if g.n() < spec.pattern_order() || g.edge_count() < spec.pattern_size() {
        return None;
    }
    match g.row_words() {
        0 | 1 => run::<[u64; 1]>(g, spec),
        2 => run::<[u64; 2]>(g, spec),
        3 | 4 => run::<[u64; 4]>(g, spec),
        5..=8 => run::<[u64; 8]>(g, spec),
        9..=16 => run::<[u64; 16]>(g, spec),
        _ => panic!("host graphs above {MAX_HOST_ORDER} vertices are not supported"),
    }
}

/// `true` iff `g` contains no copy of the pattern. A found witness is
/// re-verified before `false` is returned.
pub fn is_free(g: &Graph, spec: &StarForestSpec) -> bool {
    match find_blowup_star_forest(g, spec) {
        None => true,
        Some(w) => {
            assert!(w.verify(g, spec), "freeness search produced an invalid witness {w:?}");
            false
        }
    }
}

/// Whether adding `{u, v}` to an `F`-free graph could create a copy of
/// `F`: every pattern edge lies in a `K_{p+1}`, so `u` and `v` need at least
/// `p - 1` common neighbors.
pub(crate) fn edge_may_create_copy(g: &Graph, u: usize, v: usize, p: usize) -> bool {
    let common: usize = g.row(u).iter().zip(g.row(v)).map(|(a, b)| (a & b).count_ones() as usize).sum();
    common + 1 >= p
}

/// Largest pattern accepted by [`generic_contains`].
pub const GENERIC_PATTERN_LIMIT: usize = 12;

/// Subgraph (not necessarily induced) containment by plain backtracking
/// with degree and adjacency pruning.
/// A pattern larger than the host is answered `false` before the size
/// limit applies.
pub fn generic_contains(host: &Graph, pattern: &Graph) -> Result<bool> {
    if pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
        return Ok(false);
    }
    if pattern.n() > GENERIC_PATTERN_LIMIT {
        return Err(Error::BudgetExceeded {
            what: "pattern vertices for generic containment",
            value: pattern.n(),
            limit: GENERIC_PATTERN_LIMIT,
        });
    }
    if pattern.n() == 0 {
        return Ok(true);
    }
    // connected-first order: repeatedly take the unplaced vertex with the most
    // placed neighbours, ties by degree then label
    let mut order = Vec::with_capacity(pattern.n());
    let mut placed = vec![false; pattern.n()];
    for _ in 0..pattern.n() {
        let next = (0..pattern.n())
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let back = pattern.neighbors(v).filter(|&u| placed[u]).count();
                (back, pattern.degree(v), core::cmp::Reverse(v))
            })
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }
    let mut image = vec![usize::MAX; pattern.n()];
    let mut taken = vec![false; host.n()];
    Ok(embed(host, pattern, &order, 0, &mut image, &mut taken))
}

fn embed(host: &Graph, pattern: &Graph, order: &[usize], depth: usize, image: &mut [usize], taken: &mut [bool]) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    let need = pattern.degree(v);
    for h in 0..host.n() {
        if taken[h] || host.degree(h) < need {
            continue;
        }
        let consistent = pattern.neighbors(v).all(|u| image[u] == usize::MAX || test_bit(host.row(h), image[u]));
        if !consistent {
            continue;
        }
        image[v] = h;
        taken[h] = true;
        if embed(host, pattern, order, depth + 1, image, taken) {
            return true;
        }
        taken[h] = false;
        image[v] = usize::MAX;
    }
    false
}
