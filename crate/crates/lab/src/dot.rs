//! Graphviz output: node list, edge list and optional class colors.

use std::fmt::Write;

use blowup_core::combinatorics::PartitionLabeling;
use blowup_core::Graph;

const PALETTE: [&str; 8] = ["#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5"];

/// Color used for class `c`; the palette repeats after eight classes.
pub fn class_color(c: usize) -> &'static str {
    PALETTE[c % PALETTE.len()]
}

/// Renders `g` as an undirected DOT graph. With a labeling, every vertex is
/// filled with the color of its class.
///
/// # Panics
///
/// If the labeling covers a different number of vertices than `g`.
pub fn emit_dot(g: &Graph, labeling: Option<&PartitionLabeling>) -> String {
    if let Some(l) = labeling {
        assert_eq!(l.assignment().len(), g.n(), "labeling does not match the graph");
    }
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        match labeling {
            Some(l) => {
                let c = l.class_of(v);
                writeln!(out, "  {v} [class={c}, style=filled, fillcolor=\"{}\"];", class_color(c)).unwrap();
            }
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use blowup_core::constructions::turan;

    #[test]
    fn turan_four() {
        let g = turan(2, 4).unwrap();
        let dot = emit_dot(&g, None);
        assert_eq!(dot.lines().filter(|l| l.contains("--")).count(), 4);
        assert_eq!(dot.lines().filter(|l| l.trim_end().ends_with(';') && !l.contains("--")).count(), 4);
        assert!(dot.starts_with("graph G {\n") && dot.ends_with("}\n"));
    }

    #[test]
    fn colored_classes() {
        let g = turan(2, 4).unwrap();
        let l = PartitionLabeling::new(2, vec![0, 0, 1, 1]).unwrap();
        let dot = emit_dot(&g, Some(&l));
        assert_eq!(dot.matches(class_color(0)).count(), 2);
        assert_eq!(dot.matches(class_color(1)).count(), 2);
    }
}
