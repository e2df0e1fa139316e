//! Simple graph containers shared by the builders and the algorithms.
//!
//! Vertices are dense indices `0..n`; each carries a label (a group element
//! index, a prime, or just its own index). Adjacency is kept as sorted
//! neighbor lists plus a bit matrix for graphs of up to
//! [`BIT_MATRIX_LIMIT`] vertices.

use std::collections::HashMap;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::Serialize;
use thiserror::Error;

pub const BIT_MATRIX_LIMIT: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph vertices are not labeled by group elements")]
    NotElementLabeled,
    #[error("graph has no identity vertex to remove")]
    NoIdentity,
    #[error("vertex sets differ")]
    VertexSetMismatch,
    #[error("graph has {0} vertices, above the limit of {1}")]
    TooLarge(usize, usize),
}

/// What vertex labels denote.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexKind {
    /// Group element indices; label 0 is the identity.
    Element,
    /// Prime numbers (prime graph).
    Prime,
    /// No meaning beyond the index.
    Plain,
}

#[derive(Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    kind: VertexKind,
    labels: Vec<u64>,
    neighbors: Vec<Vec<u32>>,
    matrix: Option<Vec<FixedBitSet>>,
    edge_count: usize,
}

impl std::fmt::Debug for UndirectedGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("UndirectedGraph")
            .field("kind", &self.kind)
            .field("vertices", &self.labels.len())
            .field("edges", &self.edge_count)
            .finish()
    }
}

impl UndirectedGraph {
    /// Builds a graph from index pairs. Loops and repeated edges are dropped.
    pub fn new(
        kind: VertexKind,
        labels: Vec<u64>,
        edges: impl IntoIterator<Item = (u32, u32)>,
    ) -> Self {
        let n = labels.len();
        let mut neighbors = vec![Vec::new(); n];
        for (u, v) in edges {
            if u != v {
                neighbors[u as usize].push(v);
                neighbors[v as usize].push(u);
            }
        }
        for list in &mut neighbors {
            list.sort_unstable();
            list.dedup();
        }
        Self::from_neighbors(kind, labels, neighbors)
    }

    /// Plain graph on `0..n`.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Self {
        Self::new(VertexKind::Plain, (0..n as u64).collect(), edges)
    }

    fn from_neighbors(kind: VertexKind, labels: Vec<u64>, neighbors: Vec<Vec<u32>>) -> Self {
        let n = labels.len();
        let matrix = (n <= BIT_MATRIX_LIMIT).then(|| {
            neighbors
                .iter()
                .map(|list| {
                    let mut row = FixedBitSet::with_capacity(n);
                    for &v in list {
                        row.insert(v as usize);
                    }
                    row
                })
                .collect()
        });
        let edge_count = neighbors.iter().map(Vec::len).sum::<usize>() / 2;
        UndirectedGraph {
            kind,
            labels,
            neighbors,
            matrix,
            edge_count,
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n as u32).flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)));
        Self::from_edges(n, edges)
    }

    pub fn kind(&self) -> VertexKind {
        self.kind
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn label(&self, v: u32) -> u64 {
        self.labels[v as usize]
    }

    /// Vertex carrying `label`, if any.
    pub fn vertex_with_label(&self, label: u64) -> Option<u32> {
        self.labels
            .iter()
            .position(|&l| l == label)
            .map(|i| i as u32)
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.neighbors[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.neighbors[v as usize].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    #[inline]
    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        match &self.matrix {
            Some(m) => m[u as usize].contains(v as usize),
            None => self.neighbors[u as usize].binary_search(&v).is_ok(),
        }
    }

    /// Adjacency row as a bit set, when the graph keeps a bit matrix.
    pub fn row(&self, v: u32) -> Option<&FixedBitSet> {
        self.matrix.as_ref().map(|m| &m[v as usize])
    }

    /// Edges `(u, v)` with `u < v`, in increasing order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.neighbors.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .filter(move |&&v| (v as usize) > u)
                .map(move |&v| (u as u32, v))
        })
    }

    /// Copy of the graph with the adjacency of `u` and `v` toggled.
    pub fn with_edge_flipped(&self, u: u32, v: u32) -> Self {
        let mut neighbors = self.neighbors.clone();
        if u != v {
            for (a, b) in [(u, v), (v, u)] {
                let list = &mut neighbors[a as usize];
                match list.binary_search(&b) {
                    Ok(i) => {
                        list.remove(i);
                    }
                    Err(i) => list.insert(i, b),
                }
            }
        }
        Self::from_neighbors(self.kind, self.labels.clone(), neighbors)
    }

    /// Copy of the graph without edge `{u, v}`.
    pub fn without_edge(&self, u: u32, v: u32) -> Self {
        if self.has_edge(u, v) {
            self.with_edge_flipped(u, v)
        } else {
            self.clone()
        }
    }

    /// Subgraph induced on `keep`, in the given order; labels follow.
    pub fn induced(&self, keep: &[u32]) -> Self {
        let mut position = vec![u32::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            position[v as usize] = i as u32;
        }
        let neighbors = keep
            .iter()
            .map(|&v| {
                let mut list: Vec<u32> = self.neighbors[v as usize]
                    .iter()
                    .filter_map(|&w| {
                        let p = position[w as usize];
                        (p != u32::MAX).then_some(p)
                    })
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        let labels = keep.iter().map(|&v| self.labels[v as usize]).collect();
        Self::from_neighbors(self.kind, labels, neighbors)
    }

    /// Removes the identity vertex (label 0) of an element-labeled graph.
    pub fn punctured(&self) -> Result<Self, GraphError> {
        if self.kind != VertexKind::Element {
            return Err(GraphError::NotElementLabeled);
        }
        let id = self.vertex_with_label(0).ok_or(GraphError::NoIdentity)?;
        let keep: Vec<u32> = (0..self.vertex_count() as u32)
            .filter(|&v| v != id)
            .collect();
        Ok(self.induced(&keep))
    }

    /// Edges as label pairs `(a, b)` with `a < b`, sorted.
    pub fn labeled_edges(&self) -> Vec<(u64, u64)> {
        let mut out: Vec<(u64, u64)> = self
            .edges()
            .map(|(u, v)| {
                let (a, b) = (self.label(u), self.label(v));
                (a.min(b), a.max(b))
            })
            .collect();
        out.sort_unstable();
        out
    }

    fn sorted_labels(&self) -> Vec<u64> {
        let mut labels = self.labels.clone();
        labels.sort_unstable();
        labels
    }

    /// Graphviz rendering with vertices named by label.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name:?} {{\n");
        for l in self.sorted_labels() {
            let _ = writeln!(out, "  {l};");
        }
        for (a, b) in self.labeled_edges() {
            let _ = writeln!(out, "  {a} -- {b};");
        }
        out.push_str("}\n");
        out
    }

    /// One `a b` line per edge after a `# vertices: n` header.
    pub fn to_edge_list(&self) -> String {
        edge_list_text(self.sorted_labels(), self.labeled_edges())
    }

    /// Map from label to vertex index.
    pub fn label_index(&self) -> HashMap<u64, u32> {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, &l)| (l, i as u32))
            .collect()
    }
}

fn edge_list_text(labels: Vec<u64>, edges: Vec<(u64, u64)>) -> String {
    let mut out = format!("# vertices: {}\n", labels.len());
    let names: Vec<String> = labels.iter().map(u64::to_string).collect();
    let _ = writeln!(out, "# labels: {}", names.join(" "));
    for (a, b) in edges {
        let _ = writeln!(out, "{a} {b}");
    }
    out
}

/// A loopless digraph on element-labeled vertices, with cached in/out lists.
#[derive(Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    labels: Vec<u64>,
    out: Vec<Vec<u32>>,
    inn: Vec<Vec<u32>>,
    matrix: Vec<FixedBitSet>,
}

impl std::fmt::Debug for DirectedGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("DirectedGraph")
            .field("vertices", &self.labels.len())
            .field("arcs", &self.arc_count())
            .finish()
    }
}

impl DirectedGraph {
    /// Builds from out-neighbor lists; loops are dropped.
    pub fn new(labels: Vec<u64>, mut out: Vec<Vec<u32>>) -> Self {
        let n = labels.len();
        for (u, list) in out.iter_mut().enumerate() {
            list.retain(|&v| v as usize != u);
            list.sort_unstable();
            list.dedup();
        }
        let mut inn = vec![Vec::new(); n];
        let mut matrix = vec![FixedBitSet::with_capacity(n); n];
        for (u, list) in out.iter().enumerate() {
            for &v in list {
                inn[v as usize].push(u as u32);
                matrix[u].insert(v as usize);
            }
        }
        DirectedGraph {
            labels,
            out,
            inn,
            matrix,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn label(&self, v: u32) -> u64 {
        self.labels[v as usize]
    }

    pub fn vertex_with_label(&self, label: u64) -> Option<u32> {
        self.labels
            .iter()
            .position(|&l| l == label)
            .map(|i| i as u32)
    }

    pub fn has_arc(&self, u: u32, v: u32) -> bool {
        self.matrix[u as usize].contains(v as usize)
    }

    pub fn out_neighbors(&self, v: u32) -> &[u32] {
        &self.out[v as usize]
    }

    pub fn in_neighbors(&self, v: u32) -> &[u32] {
        &self.inn[v as usize]
    }

    pub fn out_degree(&self, v: u32) -> usize {
        self.out[v as usize].len()
    }

    pub fn in_degree(&self, v: u32) -> usize {
        self.inn[v as usize].len()
    }

    /// Arcs as label pairs, sorted.
    pub fn labeled_arcs(&self) -> Vec<(u64, u64)> {
        let mut arcs: Vec<(u64, u64)> = self
            .out
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u as u32, v)))
            .map(|(u, v)| (self.label(u), self.label(v)))
            .collect();
        arcs.sort_unstable();
        arcs
    }

    /// The underlying simple graph: `u ~ v` iff there is an arc either way.
    pub fn symmetrized(&self) -> UndirectedGraph {
        let edges = self
            .out
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().map(move |&v| (u as u32, v)));
        UndirectedGraph::new(VertexKind::Element, self.labels.clone(), edges)
    }

    /// Removes the identity vertex (label 0).
    pub fn punctured(&self) -> Result<Self, GraphError> {
        let id = self.vertex_with_label(0).ok_or(GraphError::NoIdentity)?;
        let map = |v: u32| if v > id { v - 1 } else { v };
        let labels = self
            .labels
            .iter()
            .enumerate()
            .filter(|&(i, _)| i as u32 != id)
            .map(|(_, &l)| l)
            .collect();
        let out = self
            .out
            .iter()
            .enumerate()
            .filter(|&(i, _)| i as u32 != id)
            .map(|(_, list)| list.iter().filter(|&&v| v != id).map(|&v| map(v)).collect())
            .collect();
        Ok(Self::new(labels, out))
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut labels = self.labels.clone();
        labels.sort_unstable();
        let mut out = format!("digraph {name:?} {{\n");
        for l in labels {
            let _ = writeln!(out, "  {l};");
        }
        for (a, b) in self.labeled_arcs() {
            let _ = writeln!(out, "  {a} -> {b};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_edge_list(&self) -> String {
        let mut labels = self.labels.clone();
        labels.sort_unstable();
        edge_list_text(labels, self.labeled_arcs())
    }
}
