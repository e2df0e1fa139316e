use crate::graph::{DirectedGraph, UndirectedGraph};
use crate::group::Group;

/// Edges lying on no cycle, as sorted `(u, v)` pairs with `u < v`.
///
/// Iterative Tarjan low-link search.
pub fn find_bridges(graph: &UndirectedGraph) -> Vec<(u32, u32)> {
    const UNSEEN: u32 = u32::MAX;
    let n = graph.vertex_count();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0u32; n];
    let mut time = 0u32;
    let mut bridges = Vec::new();
    // (vertex, parent, next neighbor position)
    let mut stack: Vec<(u32, u32, usize)> = Vec::new();
    for root in 0..n as u32 {
        if disc[root as usize] != UNSEEN {
            continue;
        }
        disc[root as usize] = time;
        low[root as usize] = time;
        time += 1;
        stack.push((root, UNSEEN, 0));
        while let Some(frame) = stack.last_mut() {
            let (v, parent, i) = *frame;
            let nbrs = graph.neighbors(v);
            if i < nbrs.len() {
                frame.2 += 1;
                let w = nbrs[i];
                if w == parent {
                    continue;
                }
                if disc[w as usize] == UNSEEN {
                    disc[w as usize] = time;
                    low[w as usize] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else {
                    low[v as usize] = low[v as usize].min(disc[w as usize]);
                }
            } else {
                stack.pop();
                if parent != UNSEEN {
                    low[parent as usize] = low[parent as usize].min(low[v as usize]);
                    if low[v as usize] > disc[parent as usize] {
                        bridges.push((parent.min(v), parent.max(v)));
                    }
                }
            }
        }
    }
    bridges.sort_unstable();
    bridges
}

/// Edges `{x, x^2}` predicted to be bridges of `P*(G)`: those where `x` has
/// order 3 and in- and out-degree 1 in the punctured directed power graph.
///
/// `dpg` must be the punctured directed power graph of `g`. Edges are given
/// as sorted pairs of element indices.
pub fn cut_edge_criterion(g: &Group, dpg: &DirectedGraph) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for v in 0..dpg.vertex_count() as u32 {
        let x = dpg.label(v);
        let order = g.element_orders()[x as usize];
        if order == 3 && dpg.in_degree(v) == 1 && dpg.out_degree(v) == 1 {
            let y = dpg.label(dpg.out_neighbors(v)[0]);
            out.push((x.min(y), x.max(y)));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::connected_components;
    use crate::group::{build_cyclic, build_from_permutations, symmetric, Permutation};
    use crate::power_graph::{build_punctured, build_punctured_directed};

    /// Bridges by definition: removal increases the component count.
    fn brute_force_bridges(g: &UndirectedGraph) -> Vec<(u32, u32)> {
        let base = connected_components(g).len();
        g.edges()
            .filter(|&(u, v)| connected_components(&g.without_edge(u, v)).len() == base + 1)
            .collect()
    }

    fn labeled(graph: &UndirectedGraph, edges: &[(u32, u32)]) -> Vec<(u64, u64)> {
        let mut out: Vec<(u64, u64)> = edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (graph.label(u), graph.label(v));
                (a.min(b), a.max(b))
            })
            .collect();
        out.sort_unstable();
        out
    }

    #[test]
    fn bridge_examples() {
        let s3 = build_punctured(&symmetric(3).unwrap());
        assert_eq!(find_bridges(&s3).len(), 1);

        let f21 = build_from_permutations(
            "F21",
            &[
                Permutation::from_cycles(7, &[(0..7).collect()]).unwrap(),
                Permutation::from_images((0..7).map(|i| 2 * i % 7).collect()).unwrap(),
            ],
        )
        .unwrap();
        let p = build_punctured(&f21);
        assert_eq!(find_bridges(&p).len(), 7);
        assert_eq!(find_bridges(&p), brute_force_bridges(&p));

        assert!(find_bridges(&UndirectedGraph::complete(4)).is_empty());
    }

    #[test]
    fn agrees_with_brute_force_on_small_graphs() {
        let path = UndirectedGraph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(find_bridges(&path).len(), 4);
        let barbell = UndirectedGraph::from_edges(
            6,
            [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)],
        );
        assert_eq!(find_bridges(&barbell), vec![(2, 3)]);
        for g in [path, barbell] {
            assert_eq!(find_bridges(&g), brute_force_bridges(&g));
        }
    }

    #[test]
    fn criterion_examples() {
        let s3 = symmetric(3).unwrap();
        let predicted = cut_edge_criterion(&s3, &build_punctured_directed(&s3));
        assert_eq!(predicted.len(), 1);
        let p = build_punctured(&s3);
        assert_eq!(predicted, labeled(&p, &find_bridges(&p)));

        let s4 = symmetric(4).unwrap();
        let predicted = cut_edge_criterion(&s4, &build_punctured_directed(&s4));
        assert_eq!(predicted.len(), 4);
        let p = build_punctured(&s4);
        assert_eq!(predicted, labeled(&p, &find_bridges(&p)));

        let z9 = build_cyclic(9).unwrap();
        assert!(cut_edge_criterion(&z9, &build_punctured_directed(&z9)).is_empty());
    }
}
