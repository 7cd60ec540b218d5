//! Generator-labeled directed graphs with coordinate-vector nodes, and
//! their DOT serialization.

use std::collections::HashMap;
use std::fmt::Write;

use crate::word::letter;

/// Edge colors by generator index, mirroring the usual three-style
/// rendering of small divisor lattices.
const PALETTE: [&str; 8] = [
    "red", "gray", "black", "blue", "green", "orange", "purple", "brown",
];

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GraphNode {
    pub coords: Vec<usize>,
    pub label: String,
}

/// An edge `from → to` labeled by a generator, with `from`/`to` indices
/// into the node list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GraphEdge {
    pub from: usize,
    pub to: usize,
    pub gen: usize,
}

/// Nodes plus generator-labeled directed edges.
///
/// Two graphs compare equal exactly when they have the same coordinate
/// node set (with labels) and the same labeled edge set; constructors
/// canonicalize node and edge order so derived equality is structural.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledDigraph {
    gens: usize,
    nodes: Vec<GraphNode>,
    edges: Vec<GraphEdge>,
}

impl LabeledDigraph {
    pub fn new(gens: usize) -> Self {
        LabeledDigraph {
            gens,
            nodes: Vec::new(),
            edges: Vec::new(),
        }
    }

    pub fn add_node(&mut self, coords: Vec<usize>, label: String) -> usize {
        self.nodes.push(GraphNode { coords, label });
        self.nodes.len() - 1
    }

    pub fn add_edge(&mut self, from: usize, to: usize, gen: usize) {
        self.edges.push(GraphEdge { from, to, gen });
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn nodes(&self) -> &[GraphNode] {
        &self.nodes
    }

    pub fn edges(&self) -> &[GraphEdge] {
        &self.edges
    }

    /// Sorts nodes lexicographically by coordinates and edges by
    /// `(from, gen, to)`, remapping edge endpoints.
    pub fn canonicalize(&mut self) {
        let mut order: Vec<usize> = (0..self.nodes.len()).collect();
        order.sort_by(|&a, &b| self.nodes[a].cmp(&self.nodes[b]));
        let mut rank = vec![0; self.nodes.len()];
        for (new, &old) in order.iter().enumerate() {
            rank[old] = new;
        }
        let mut nodes = self.nodes.clone();
        nodes.sort();
        self.nodes = nodes;
        for e in &mut self.edges {
            e.from = rank[e.from];
            e.to = rank[e.to];
        }
        self.edges.sort_by_key(|e| (e.from, e.gen, e.to));
    }

    /// Outgoing edges of the node with the given coordinates, as
    /// `(generator, target coordinates)` pairs.
    pub fn out_edges(&self, coords: &[usize]) -> Vec<(usize, Vec<usize>)> {
        let idx = match self.nodes.iter().position(|v| v.coords == coords) {
            Some(i) => i,
            None => return Vec::new(),
        };
        self.edges
            .iter()
            .filter(|e| e.from == idx)
            .map(|e| (e.gen, self.nodes[e.to].coords.clone()))
            .collect()
    }

    /// Node coordinates at a given total degree (coordinate sum).
    pub fn nodes_at_degree(&self, d: usize) -> Vec<&GraphNode> {
        self.nodes
            .iter()
            .filter(|v| v.coords.iter().sum::<usize>() == d)
            .collect()
    }

    fn node_id(coords: &[usize]) -> String {
        coords
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join("_")
    }

    /// Serializes to DOT: node id = coordinate tuple, node label = the
    /// normal-form word, edge label = generator letter, edge color by
    /// generator index.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        writeln!(out, "digraph {name} {{").unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        writeln!(out, "  node [shape=plaintext];").unwrap();
        for v in &self.nodes {
            writeln!(out, "  \"{}\" [label=\"{}\"];", Self::node_id(&v.coords), v.label)
                .unwrap();
        }
        for e in &self.edges {
            writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}\", color=\"{}\"];",
                Self::node_id(&self.nodes[e.from].coords),
                Self::node_id(&self.nodes[e.to].coords),
                letter(e.gen, self.gens),
                PALETTE[e.gen % PALETTE.len()],
            )
            .unwrap();
        }
        writeln!(out, "}}").unwrap();
        out
    }
}

/// Index from coordinates to node position, for graph builders.
pub(crate) fn index_nodes(nodes: &[GraphNode]) -> HashMap<Vec<usize>, usize> {
    nodes
        .iter()
        .enumerate()
        .map(|(i, v)| (v.coords.clone(), i))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> LabeledDigraph {
        let mut g = LabeledDigraph::new(2);
        let a = g.add_node(vec![1, 0], "a".into());
        let o = g.add_node(vec![0, 0], "1".into());
        g.add_edge(o, a, 0);
        g.canonicalize();
        g
    }

    #[test]
    fn canonical_order_is_stable() {
        let g = square();
        assert_eq!(g.nodes()[0].coords, vec![0, 0]);
        assert_eq!(g.edges()[0], GraphEdge { from: 0, to: 1, gen: 0 });
    }

    #[test]
    fn equality_ignores_insertion_order() {
        let mut h = LabeledDigraph::new(2);
        let o = h.add_node(vec![0, 0], "1".into());
        let a = h.add_node(vec![1, 0], "a".into());
        h.add_edge(o, a, 0);
        h.canonicalize();
        assert_eq!(h, square());
    }

    #[test]
    fn dot_output_mentions_nodes_and_colors() {
        let dot = square().to_dot("divisors");
        assert!(dot.starts_with("digraph divisors {"));
        assert!(dot.contains("\"0_0\" [label=\"1\"]"));
        assert!(dot.contains("\"0_0\" -> \"1_0\" [label=\"a\", color=\"red\"]"));
    }
}
