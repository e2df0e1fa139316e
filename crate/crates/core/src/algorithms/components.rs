use std::collections::VecDeque;

use crate::graph::UndirectedGraph;

/// Vertex sets of the connected components, each sorted, ordered by their
/// smallest vertex.
pub fn connected_components(graph: &UndirectedGraph) -> Vec<Vec<u32>> {
    let n = graph.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        queue.push_back(start as u32);
        let mut comp = Vec::new();
        while let Some(v) = queue.pop_front() {
            comp.push(v);
            for &w in graph.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// A graph with no vertices or a single component.
pub fn is_connected(graph: &UndirectedGraph) -> bool {
    connected_components(graph).len() <= 1
}
