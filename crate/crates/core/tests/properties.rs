use proptest::prelude::*;

use powergraph::algorithms::{
    are_isomorphic, connected_components, find_bridges, is_bipartite, is_planar,
    verify_isomorphism, verify_kuratowski, Planarity,
};
use powergraph::graph::UndirectedGraph;
use powergraph::group::build_cyclic;
use powergraph::number_theory::{crt_solve, divisors, euler_phi, CongruenceSystem};
use powergraph::power_graph::{build_punctured, cyclic_degree_formula, edge_count_closed_form};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = UndirectedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((0..n as u32, 0..n as u32), 0..=3 * n)
            .prop_map(move |edges| UndirectedGraph::from_edges(n, edges))
    })
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

proptest! {
    #[test]
    fn totient_counts_units(n in 1u64..5000) {
        let brute = (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64;
        prop_assert_eq!(euler_phi(n).unwrap(), brute);
    }

    #[test]
    fn totients_of_divisors_sum_to_n(n in 1u64..100_000) {
        let sum: u64 = divisors(n).unwrap().into_iter().map(|d| euler_phi(d).unwrap()).sum();
        prop_assert_eq!(sum, n);
    }

    #[test]
    fn crt_solution_satisfies_every_congruence(
        residues in proptest::collection::vec(0u64..1000, 1..4),
    ) {
        let moduli = [7u64, 11, 13, 16];
        let system: Vec<(u64, u64)> = residues.iter().zip(moduli).map(|(&r, m)| (r, m)).collect();
        let (x, modulus) = crt_solve(&CongruenceSystem::new(system.clone()).unwrap()).unwrap();
        prop_assert!(x < modulus);
        for (r, m) in system {
            prop_assert_eq!(x % m, r % m);
        }
    }

    #[test]
    fn cyclic_degrees_match_the_graph(n in 1usize..400, seed in any::<u64>()) {
        let m = 1 + seed % n as u64;
        let z = build_cyclic(n).unwrap();
        let g = powergraph::power_graph::build_undirected(&z);
        let v = g.vertex_with_label(m % n as u64).unwrap();
        prop_assert_eq!(cyclic_degree_formula(n as u64, m).unwrap().d_undirected, g.degree(v) as u64);
    }

    #[test]
    fn cyclic_edge_count_matches(n in 1usize..300) {
        let z = build_cyclic(n).unwrap();
        prop_assert_eq!(edge_count_closed_form(&z), build_punctured(&z).edge_count() as u64);
    }

    #[test]
    fn bridges_are_exactly_disconnecting_edges(g in graph_strategy(14)) {
        let base = connected_components(&g).len();
        let mut brute: Vec<(u32, u32)> = g
            .edges()
            .filter(|&(u, v)| connected_components(&g.without_edge(u, v)).len() > base)
            .collect();
        brute.sort_unstable();
        prop_assert_eq!(find_bridges(&g), brute);
    }

    #[test]
    fn bipartite_certificates_verify(g in graph_strategy(16)) {
        prop_assert!(is_bipartite(&g).verify(&g));
    }

    #[test]
    fn planarity_certificates_verify(g in graph_strategy(12)) {
        match is_planar(&g).unwrap() {
            Planarity::Planar(e) => prop_assert!(e.is_valid_for(&g)),
            Planarity::NonPlanar(w) => prop_assert!(verify_kuratowski(&g, &w)),
        }
    }

    #[test]
    fn relabeled_graphs_are_isomorphic(
        g in graph_strategy(20),
        perm_seed in proptest::collection::vec(any::<u32>(), 20),
    ) {
        let n = g.vertex_count();
        let mut perm: Vec<u32> = (0..n as u32).collect();
        perm.sort_by_key(|&v| (perm_seed[v as usize], v));
        let h = UndirectedGraph::from_edges(n, g.edges().map(|(u, v)| (perm[u as usize], perm[v as usize])));
        let map = are_isomorphic(&g, &h).unwrap().expect("relabeled copy");
        prop_assert!(verify_isomorphism(&g, &h, &map));
    }
}
