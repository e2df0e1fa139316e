use serde::Serialize;

use crate::graph::UndirectedGraph;

/// Parameters `(n, k, λ, μ)` of a strongly regular graph.
///
/// `lambda` is absent when the graph has no edges and `mu` is absent when it
/// has no non-adjacent pair. Complete graphs, edgeless graphs and disjoint
/// unions of equal cliques are all admitted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SrgParameters {
    pub n: usize,
    pub k: usize,
    pub lambda: Option<usize>,
    pub mu: Option<usize>,
}

impl std::fmt::Display for SrgParameters {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let show = |v: Option<usize>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
        write!(
            f,
            "({}, {}, {}, {})",
            self.n,
            self.k,
            show(self.lambda),
            show(self.mu)
        )
    }
}

/// Why a graph is not strongly regular: the first pair that breaks a condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum SrgRefusal {
    NotRegular {
        u: u32,
        v: u32,
        degree_u: usize,
        degree_v: usize,
    },
    AdjacentPair {
        u: u32,
        v: u32,
        expected: usize,
        found: usize,
    },
    NonAdjacentPair {
        u: u32,
        v: u32,
        expected: usize,
        found: usize,
    },
}

fn common_neighbors(graph: &UndirectedGraph, u: u32, v: u32) -> usize {
    match (graph.row(u), graph.row(v)) {
        (Some(a), Some(b)) => a.intersection(b).count(),
        _ => {
            let (a, b) = (graph.neighbors(u), graph.neighbors(v));
            a.iter().filter(|w| b.binary_search(w).is_ok()).count()
        }
    }
}

pub fn srg_parameters(graph: &UndirectedGraph) -> Result<SrgParameters, SrgRefusal> {
    let n = graph.vertex_count() as u32;
    let k = if n == 0 { 0 } else { graph.degree(0) };
    for v in 1..n {
        if graph.degree(v) != k {
            return Err(SrgRefusal::NotRegular {
                u: 0,
                v,
                degree_u: k,
                degree_v: graph.degree(v),
            });
        }
    }
    let mut lambda: Option<(usize, u32, u32)> = None;
    let mut mu: Option<(usize, u32, u32)> = None;
    for u in 0..n {
        for v in u + 1..n {
            let c = common_neighbors(graph, u, v);
            let adjacent = graph.has_edge(u, v);
            let slot = if adjacent { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some((c, u, v)),
                Some((expected, _, _)) if expected != c => {
                    return Err(if adjacent {
                        SrgRefusal::AdjacentPair {
                            u,
                            v,
                            expected,
                            found: c,
                        }
                    } else {
                        SrgRefusal::NonAdjacentPair {
                            u,
                            v,
                            expected,
                            found: c,
                        }
                    });
                }
                _ => {}
            }
        }
    }
    Ok(SrgParameters {
        n: n as usize,
        k,
        lambda: lambda.map(|t| t.0),
        mu: mu.map(|t| t.0),
    })
}
