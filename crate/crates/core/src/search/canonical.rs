//! Canonical forms for small graphs: the least upper-triangle adjacency
//! bitstring over all relabelings that list vertices by non-decreasing
//! degree.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`canonical_form`].
pub const CANONICAL_LIMIT: usize = 10;

/// Bitstring `x(0,1), x(0,2), x(1,2), x(0,3), …` of the canonical relabeling,
/// packed most significant bit first so integer order is string order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    bits: u64,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        let total = self.n * self.n.saturating_sub(1) / 2;
        let mut g = Graph::empty(self.n);
        let mut k = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.bits >> (total - 1 - k) & 1 == 1 {
                    g.insert_edge(i, j);
                }
                k += 1;
            }
        }
        g
    }
}

struct Canon<'a> {
    g: &'a Graph,
    /// Degree class required at each position.
    slot_class: Vec<usize>,
    class: Vec<usize>,
    order: Vec<usize>,
    used: Vec<bool>,
    total: usize,
    best: Option<(u64, Vec<usize>)>,
}

impl Canon<'_> {
    fn run(&mut self, position: usize, prefix: u64, bits_so_far: usize) {
        if position == self.g.n() {
            if self.best.as_ref().is_none_or(|(b, _)| prefix < *b) {
                self.best = Some((prefix, self.order.clone()));
            }
            return;
        }
        for w in 0..self.g.n() {
            if self.used[w] || self.class[w] != self.slot_class[position] {
                continue;
            }
            let mut value = prefix;
            for &earlier in &self.order {
                value = value << 1 | u64::from(self.g.has_edge(earlier, w));
            }
            let bits = bits_so_far + position;
            if let Some((best, _)) = &self.best {
                if value > best >> (self.total - bits) {
                    continue;
                }
            }
            self.used[w] = true;
            self.order.push(w);
            self.run(position + 1, value, bits);
            self.order.pop();
            self.used[w] = false;
        }
    }
}

/// Canonical form and a relabeling achieving it: `order[i]` is the original
/// vertex placed at position `i`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.n();
    if n > CANONICAL_LIMIT {
        return Err(Error::BudgetExceeded { what: "vertices for canonical form", value: n, limit: CANONICAL_LIMIT });
    }
    let degrees = g.degrees();
    let mut sorted = degrees.clone();
    sorted.sort_unstable();
    let mut search = Canon {
        g,
        slot_class: sorted,
        class: degrees,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        total: n * n.saturating_sub(1) / 2,
        best: None,
    };
    search.run(0, 0, 0);
    let (bits, order) = search.best.expect("some relabeling is always feasible");
    Ok((CanonicalForm { n, bits }, order))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|(form, _)| form)
}

pub fn isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{star, turan};

    #[test]
    fn examples() {
        let c4 = Graph::cycle(4);
        let relabeled = c4.permuted(&[2, 0, 3, 1]).unwrap();
        assert_ne!(c4, relabeled);
        assert_eq!(canonical_form(&c4).unwrap(), canonical_form(&relabeled).unwrap());
        assert!(!isomorphic(&star(3).unwrap(), &Graph::path(4)).unwrap());
        assert!(isomorphic(&turan(2, 4).unwrap(), &c4).unwrap());
        assert!(canonical_form(&Graph::empty(11)).is_err());
    }

    #[test]
    fn representative_is_isomorphic_and_fixed() {
        for g in [Graph::cycle(7), turan(3, 8).unwrap(), Graph::path(5).disjoint_union(&Graph::complete(3))] {
            let (form, order) = canonical_labeling(&g).unwrap();
            let rep = form.to_graph();
            assert_eq!(canonical_form(&rep).unwrap(), form);
            // placing order[i] at position i reproduces the representative
            let mut perm = vec![0; g.n()];
            for (pos, &v) in order.iter().enumerate() {
                perm[v] = pos;
            }
            assert_eq!(g.permuted(&perm).unwrap(), rep);
        }
    }

    #[test]
    fn trivial_orders() {
        assert_eq!(canonical_form(&Graph::empty(0)).unwrap().to_graph(), Graph::empty(0));
        assert_eq!(canonical_form(&Graph::empty(1)).unwrap().to_graph(), Graph::empty(1));
        assert_ne!(canonical_form(&Graph::empty(3)).unwrap(), canonical_form(&Graph::empty(4)).unwrap());
    }
}
