//! Graph properties used to classify power graphs.

mod bipartite;
mod bridges;
mod components;
mod isomorphism;
mod planarity;
mod srg;

pub use bipartite::{is_bipartite, Bipartiteness};
pub use bridges::{cut_edge_criterion, find_bridges};
pub use components::{connected_components, is_connected};
pub use isomorphism::{are_isomorphic, verify_isomorphism, ISOMORPHISM_LIMIT};
pub use planarity::{
    is_planar, verify_kuratowski, Embedding, Kuratowski, KuratowskiWitness, Planarity,
    PLANARITY_LIMIT,
};
pub use srg::{srg_parameters, SrgParameters, SrgRefusal};

use crate::graph::{GraphError, UndirectedGraph};
use crate::group::Group;

/// Connected with every degree even. A graph with at most one vertex counts
/// as Eulerian; a disconnected graph never does.
pub fn is_eulerian(graph: &UndirectedGraph) -> bool {
    graph.vertex_count() <= 1 || (is_connected(graph) && graph.degrees().iter().all(|d| d % 2 == 0))
}

/// Every vertex is adjacent to every other.
pub fn is_complete(graph: &UndirectedGraph) -> bool {
    let n = graph.vertex_count();
    graph.edge_count() * 2 == n * n.saturating_sub(1)
}

/// Connected and acyclic.
pub fn is_tree(graph: &UndirectedGraph) -> bool {
    graph.vertex_count() >= 1
        && graph.edge_count() + 1 == graph.vertex_count()
        && is_connected(graph)
}

/// Vertices adjacent to all other vertices.
pub fn universal_vertices(graph: &UndirectedGraph) -> Vec<u32> {
    let n = graph.vertex_count();
    (0..n as u32)
        .filter(|&v| graph.degree(v) + 1 == n)
        .collect()
}

/// Every edge of `sub` is an edge of `sup`, with vertices matched by label.
pub fn is_spanning_subgraph(
    sub: &UndirectedGraph,
    sup: &UndirectedGraph,
) -> Result<bool, GraphError> {
    let mut a = sub.labels().to_vec();
    let mut b = sup.labels().to_vec();
    a.sort_unstable();
    b.sort_unstable();
    if a != b || sub.kind() != sup.kind() {
        return Err(GraphError::VertexSetMismatch);
    }
    let index = sup.label_index();
    Ok(sub
        .edges()
        .all(|(u, v)| sup.has_edge(index[&sub.label(u)], index[&sub.label(v)])))
}

/// Both groups have the same number of elements of each order.
pub fn order_statistics_equal(a: &Group, b: &Group) -> bool {
    a.spectrum().s == b.spectrum().s
}

/// Every connected component is a complete graph.
pub fn is_disjoint_union_of_cliques(graph: &UndirectedGraph) -> bool {
    connected_components(graph)
        .iter()
        .all(|comp| comp.iter().all(|&v| graph.degree(v) + 1 == comp.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{
        alternating, build_cyclic, build_elementary_abelian, build_heisenberg, symmetric,
    };
    use crate::power_graph::{build_punctured, commuting_graph};

    #[test]
    fn eulerian_examples() {
        assert!(is_eulerian(&build_punctured(&build_cyclic(8).unwrap())));
        assert!(!is_eulerian(&build_punctured(&build_cyclic(6).unwrap())));
        assert!(is_eulerian(&build_punctured(&build_cyclic(2).unwrap())));
        assert!(is_eulerian(&build_punctured(&build_cyclic(1).unwrap())));
        assert!(!is_eulerian(&UndirectedGraph::from_edges(3, [])));
        // connected but an odd degree
        assert!(!is_eulerian(&UndirectedGraph::from_edges(2, [(0, 1)])));
    }

    #[test]
    fn spanning_subgraph_examples() {
        for g in [symmetric(3).unwrap(), alternating(4).unwrap()] {
            let p = build_punctured(&g);
            let c = commuting_graph(&g).unwrap();
            assert!(is_spanning_subgraph(&p, &c).unwrap());
            assert!(is_spanning_subgraph(&p, &p).unwrap());
        }
        let a4 = alternating(4).unwrap();
        let p = build_punctured(&a4);
        let c = commuting_graph(&a4).unwrap();
        assert!(!is_spanning_subgraph(&c, &p).unwrap());
        let other = build_punctured(&build_cyclic(5).unwrap());
        assert_eq!(
            is_spanning_subgraph(&p, &other),
            Err(GraphError::VertexSetMismatch)
        );
    }

    #[test]
    fn order_statistics_examples() {
        let e27 = build_elementary_abelian(3, 3).unwrap();
        let h3 = build_heisenberg(3).unwrap();
        assert!(order_statistics_equal(&e27, &h3));
        assert!(!order_statistics_equal(
            &build_cyclic(6).unwrap(),
            &symmetric(3).unwrap()
        ));
        assert!(order_statistics_equal(&h3, &h3));
    }

    #[test]
    fn tree_and_complete() {
        assert!(is_tree(&build_punctured(&build_cyclic(2).unwrap())));
        assert!(is_tree(&build_punctured(&build_cyclic(3).unwrap())));
        assert!(!is_tree(&build_punctured(&build_cyclic(4).unwrap())));
        assert!(is_complete(&build_punctured(&build_cyclic(9).unwrap())));
        assert!(!is_complete(&build_punctured(&build_cyclic(6).unwrap())));
    }
}
