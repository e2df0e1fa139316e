use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::UndirectedGraph;

/// Outcome of a bipartiteness test, with its certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bipartiteness {
    /// Side (0 or 1) of every vertex.
    Bipartite { coloring: Vec<u8> },
    /// Vertices of an odd cycle, in cyclic order.
    OddCycle { cycle: Vec<u32> },
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite { .. })
    }

    /// Checks the certificate against `graph`.
    pub fn verify(&self, graph: &UndirectedGraph) -> bool {
        match self {
            Bipartiteness::Bipartite { coloring } => {
                coloring.len() == graph.vertex_count()
                    && graph
                        .edges()
                        .all(|(u, v)| coloring[u as usize] != coloring[v as usize])
            }
            Bipartiteness::OddCycle { cycle } => {
                let k = cycle.len();
                let mut distinct = cycle.clone();
                distinct.sort_unstable();
                distinct.dedup();
                k % 2 == 1
                    && k >= 3
                    && distinct.len() == k
                    && (0..k).all(|i| graph.has_edge(cycle[i], cycle[(i + 1) % k]))
            }
        }
    }
}

/// Breadth-first two-coloring; a monochromatic edge yields an odd cycle.
pub fn is_bipartite(graph: &UndirectedGraph) -> Bipartiteness {
    let n = graph.vertex_count();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![u32::MAX; n];
    let mut depth = vec![0usize; n];
    let mut queue = VecDeque::new();
    for start in 0..n {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        queue.push_back(start as u32);
        while let Some(v) = queue.pop_front() {
            for &w in graph.neighbors(v) {
                let wi = w as usize;
                if color[wi] == u8::MAX {
                    color[wi] = 1 - color[v as usize];
                    parent[wi] = v;
                    depth[wi] = depth[v as usize] + 1;
                    queue.push_back(w);
                } else if color[wi] == color[v as usize] {
                    return Bipartiteness::OddCycle {
                        cycle: tree_cycle(v, w, &parent, &depth),
                    };
                }
            }
        }
    }
    Bipartiteness::Bipartite { coloring: color }
}

/// Cycle formed by the edge `(u, v)` and the tree paths to their common ancestor.
fn tree_cycle(u: u32, v: u32, parent: &[u32], depth: &[usize]) -> Vec<u32> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a as usize] > depth[b as usize] {
        a = parent[a as usize];
        left.push(a);
    }
    while depth[b as usize] > depth[a as usize] {
        b = parent[b as usize];
        right.push(b);
    }
    while a != b {
        a = parent[a as usize];
        b = parent[b as usize];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}
