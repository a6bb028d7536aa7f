//! Builders for the named graph families: stars, star forests, Turán and
//! complete multipartite graphs, edge blow-ups, the Chvátal–Hanson graphs
//! attaining `f(ν, Δ)`, and the extremal family `K_{q-1} ∨ T_p(n-q+1)` with
//! a Chvátal–Hanson graph planted in one class.
//!
//! Every builder emits a fixed labeling so fixtures compare exactly.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::combinatorics::{f_formula, matching_number};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

/// Parameters of the forbidden pattern: the edge blow-up `S^{p+1}_{k_1,…,k_q}`
/// of the star forest `S_{k_1} ∪ … ∪ S_{k_q}`.
///
/// `ks` is kept sorted non-increasing.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StarForestSpec {
    p: usize,
    ks: Vec<usize>,
}

impl StarForestSpec {
    pub fn new(p: usize, ks: &[usize]) -> Result<Self> {
        if p == 0 {
            return Err(invalid("p must be at least 1"));
        }
        if ks.is_empty() {
            return Err(invalid("a star forest needs at least one star"));
        }
        if ks.contains(&0) {
            return Err(invalid("every star needs at least one edge"));
        }
        let mut ks = ks.to_vec();
        ks.sort_unstable_by(|a, b| b.cmp(a));
        Ok(StarForestSpec { p, ks })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// Star sizes `k_1 ≥ … ≥ k_q`.
    pub fn ks(&self) -> &[usize] {
        &self.ks
    }

    pub fn q(&self) -> usize {
        self.ks.len()
    }

    /// `k_q`, the smallest star.
    pub fn smallest_k(&self) -> usize {
        *self.ks.last().expect("non-empty by construction")
    }

    pub fn total_leaves(&self) -> usize {
        self.ks.iter().sum()
    }

    /// Vertex count of the blown-up pattern, `q + p·Σk_i`.
    pub fn pattern_order(&self) -> usize {
        self.q() + self.p * self.total_leaves()
    }

    /// Edge count of the blown-up pattern, `Σk_i · C(p+1, 2)`.
    pub fn pattern_size(&self) -> usize {
        self.total_leaves() * (self.p + 1) * self.p / 2
    }
}

impl fmt::Debug for StarForestSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S^{}_{:?}", self.p + 1, self.ks)
    }
}

/// `K_{1,k}` with the center at vertex 0.
pub fn star(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(invalid("star needs k >= 1"));
    }
    let mut g = Graph::empty(k + 1);
    for leaf in 1..=k {
        g.insert_edge(0, leaf);
    }
    Ok(g)
}

/// `S_{k_1} ∪ … ∪ S_{k_q}`; the `i`-th star's center is its first vertex.
pub fn star_forest(spec: &StarForestSpec) -> Graph {
    spec.ks
        .iter()
        .map(|&k| star(k).expect("spec ks are positive"))
        .fold(Graph::empty(0), |acc, s| acc.disjoint_union(&s))
}

/// The forbidden pattern itself: `edge_blowup(star_forest(spec), p)`.
pub fn blown_up_star_forest(spec: &StarForestSpec) -> Graph {
    edge_blowup(&star_forest(spec), spec.p).expect("spec p is positive")
}

/// `K(n_1, …, n_r)`, classes laid out consecutively in the given order.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n = parts.iter().sum();
    let mut g = Graph::empty(n);
    let mut class_of = Vec::with_capacity(n);
    for (i, &size) in parts.iter().enumerate() {
        class_of.extend(core::iter::repeat_n(i, size));
    }
    for v in 0..n {
        for u in 0..v {
            if class_of[u] != class_of[v] {
                g.insert_edge(u, v);
            }
        }
    }
    g
}

/// Class sizes of `T_r(n)`, larger classes first.
pub fn turan_parts(r: usize, n: usize) -> Result<Vec<usize>> {
    if r == 0 {
        return Err(invalid("Turán graph needs r >= 1"));
    }
    Ok((0..r).map(|i| n / r + usize::from(i < n % r)).collect())
}

pub fn turan(r: usize, n: usize) -> Result<Graph> {
    Ok(complete_multipartite(&turan_parts(r, n)?))
}

/// Replaces each edge with a `K_{p+1}`. Original vertices keep their labels;
/// for every edge in lexicographic order `p - 1` new vertices are appended.
pub fn edge_blowup(g: &Graph, p: usize) -> Result<Graph> {
    if p == 0 {
        return Err(invalid("edge blow-up needs p >= 1"));
    }
    let extra = p - 1;
    let mut out = Graph::empty(g.n() + extra * g.edge_count());
    let mut next = g.n();
    for (u, v) in g.edges() {
        let mut clique = Vec::with_capacity(p + 1);
        clique.push(u);
        clique.push(v);
        clique.extend(next..next + extra);
        next += extra;
        for (i, &a) in clique.iter().enumerate() {
            for &b in &clique[i + 1..] {
                out.insert_edge(a, b);
            }
        }
    }
    Ok(out)
}

fn strip_isolated(g: &Graph) -> Graph {
    let keep: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    g.induced_on(&keep)
}

/// `K_{2r+3}` minus a near-perfect matching and one more edge at the
/// uncovered vertex: maximum degree `2r+1`, matching number `r+1`.
fn odd_degree_block(r: usize) -> Graph {
    let order = 2 * r + 3;
    let mut g = Graph::complete(order);
    for i in 0..=r {
        g.delete_edge(2 * i, 2 * i + 1);
    }
    g.delete_edge(0, order - 1);
    g
}

/// A graph with `ν(G) ≤ nu`, `Δ(G) ≤ delta` and exactly `f(nu, delta)` edges.
///
/// For `Δ = 2r`: `⌊ν/r⌋` copies of `K_{2r+1}` plus `ν mod r` copies of `S_{2r}`.
/// For `Δ = 2r+1`: `⌊ν/(r+1)⌋` copies of [`odd_degree_block`] plus
/// `ν mod (r+1)` copies of `S_{2r+1}`. Isolated vertices are dropped. If
/// either parameter is 0 the result is the null graph.
pub fn chvatal_hanson_graph(nu: usize, delta: usize) -> Result<Graph> {
    if nu == 0 || delta == 0 {
        return Ok(Graph::empty(0));
    }
    let r = delta / 2;
    let (block, per_block) = if delta.is_multiple_of(2) {
        (Graph::complete(2 * r + 1), r)
    } else {
        (odd_degree_block(r), r + 1)
    };
    let mut g = Graph::empty(0);
    for _ in 0..nu / per_block {
        g = g.disjoint_union(&block);
    }
    let leftover_star = star(delta)?;
    for _ in 0..nu % per_block {
        g = g.disjoint_union(&leftover_star);
    }
    let g = strip_isolated(&g);

    let target = f_formula(nu, delta);
    let matching = matching_number(&g)?;
    if matching > nu || g.max_degree() > delta || g.edge_count() != target {
        return Err(Error::Verification(format!(
            "Chvátal–Hanson graph for (ν={nu}, Δ={delta}) has ν={matching}, Δ={}, e={} (want e={target})",
            g.max_degree(),
            g.edge_count()
        )));
    }
    Ok(g)
}

/// A member of the extremal family together with its natural structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalLayout {
    pub graph: Graph,
    /// The `q - 1` universal vertices of `K_{q-1}`, labels `0..q-1`.
    pub core: Vec<usize>,
    /// The `p` Turán classes, larger classes first.
    pub classes: Vec<Vec<usize>>,
    /// Vertices carrying the planted Chvátal–Hanson graph (inside `classes[0]`).
    pub planted: Vec<usize>,
}

/// `K_{q-1} ∨ T_p(n-q+1)` with `chvatal_hanson_graph(k_q - 1, k_q - 1)`
/// planted on the lowest labels of the largest Turán class.
pub fn extremal_family_layout(n: usize, spec: &StarForestSpec) -> Result<ExtremalLayout> {
    let p = spec.p();
    let q = spec.q();
    if n + 1 < q + p {
        return Err(invalid(format!("n = {n} too small: need n - q + 1 >= p for {spec:?}")));
    }
    let rest = n + 1 - q;
    let parts = turan_parts(p, rest)?;
    let planted_graph = chvatal_hanson_graph(spec.smallest_k() - 1, spec.smallest_k() - 1)?;
    if planted_graph.n() > parts[0] {
        return Err(invalid(format!(
            "n = {n} too small: largest class has {} vertices, planted graph needs {}",
            parts[0],
            planted_graph.n()
        )));
    }

    let mut graph = Graph::complete(q - 1).join(&complete_multipartite(&parts));
    let core: Vec<usize> = (0..q - 1).collect();
    let mut classes = Vec::with_capacity(p);
    let mut start = q - 1;
    for &size in &parts {
        classes.push((start..start + size).collect::<Vec<_>>());
        start += size;
    }
    let planted: Vec<usize> = classes[0][..planted_graph.n()].to_vec();
    for (u, v) in planted_graph.edges() {
        graph.insert_edge(planted[u], planted[v]);
    }
    Ok(ExtremalLayout { graph, core, classes, planted })
}

pub fn extremal_family_member(n: usize, spec: &StarForestSpec) -> Result<Graph> {
    extremal_family_layout(n, spec).map(|layout| layout.graph)
}
