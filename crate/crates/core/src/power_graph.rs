//! Power graphs and the other element graphs of a group, plus the closed
//! forms for their degrees and edge counts.

use thiserror::Error;

use crate::graph::{DirectedGraph, UndirectedGraph, VertexKind};
use crate::group::{Group, SpectrumInfo};
use crate::number_theory::{divisors, euler_phi};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PowerGraphError {
    #[error("the trivial group has no {0}")]
    TrivialGroup(&'static str),
    #[error("exponent m = {m} outside 1..={n}")]
    OutOfRange { m: u64, n: u64 },
    #[error("order-class sum {0} is odd; the spectrum is inconsistent")]
    OddSum(u64),
}

/// Directed power graph: arc `x -> y` iff `y` is a power of `x` and `y != x`.
pub fn build_directed(g: &Group) -> DirectedGraph {
    let out = g
        .elements()
        .map(|x| g.cyclic_subgroup_unchecked(x))
        .collect();
    DirectedGraph::new(g.elements().map(u64::from).collect(), out)
}

/// Undirected power graph: `x ~ y` iff one is a power of the other.
pub fn build_undirected(g: &Group) -> UndirectedGraph {
    let edges = g.elements().flat_map(|x| {
        g.cyclic_subgroup_unchecked(x)
            .into_iter()
            .filter(move |&y| y != x)
            .map(move |y| (x, y))
    });
    UndirectedGraph::new(
        VertexKind::Element,
        g.elements().map(u64::from).collect(),
        edges,
    )
}

/// Punctured undirected power graph `P*(G)`.
pub fn build_punctured(g: &Group) -> UndirectedGraph {
    build_undirected(g)
        .punctured()
        .expect("power graphs are element labeled")
}

/// Punctured directed power graph.
pub fn build_punctured_directed(g: &Group) -> DirectedGraph {
    build_directed(g)
        .punctured()
        .expect("power graphs contain the identity")
}

/// Degrees of `x^m` in the power graphs of `Z_n = <x>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclicDegrees {
    /// Out-degree in the directed graph, `n/(m,n) − 1`.
    pub d_plus: u64,
    /// Number of elements `y != x^m` with `x^m ∈ <y>`.
    pub d_minus_loopless: u64,
    /// `Σ_{d | (m,n)} φ(n/d)`, which also counts `x^m` itself.
    pub d_minus_printed: u64,
    /// Degree in the undirected power graph.
    pub d_undirected: u64,
}

pub fn cyclic_degree_formula(n: u64, m: u64) -> Result<CyclicDegrees, PowerGraphError> {
    use num_integer::Integer;
    if m == 0 || m > n {
        return Err(PowerGraphError::OutOfRange { m, n });
    }
    let g = m.gcd(&n);
    let phi = |v: u64| euler_phi(v).expect("positive");
    let ds = divisors(g).expect("positive");
    let printed: u64 = ds.iter().map(|&d| phi(n / d)).sum();
    let proper: u64 = ds.iter().filter(|&&d| d != g).map(|&d| phi(n / d)).sum();
    Ok(CyclicDegrees {
        d_plus: n / g - 1,
        d_minus_loopless: printed - 1,
        d_minus_printed: printed,
        d_undirected: n / g - 1 + proper,
    })
}

/// Edge count of `P*(G)` from element orders alone:
/// `2e* = Σ_{g != 1} (2 o(g) − φ(o(g)) − 3)`.
pub fn edge_count_closed_form(g: &Group) -> u64 {
    let total: u64 = g
        .element_orders()
        .iter()
        .skip(1)
        .map(|&o| order_term(o as u64))
        .sum();
    total / 2
}

fn order_term(o: u64) -> u64 {
    2 * o - euler_phi(o).expect("positive order") - 3
}

/// The same count from per-order element counts: `2e* = Σ s_n (2n − φ(n) − 3)`.
pub fn edge_count_by_order_classes(spec: &SpectrumInfo) -> Result<u64, PowerGraphError> {
    let total: u64 = spec
        .s
        .iter()
        .filter(|&(&n, _)| n > 1)
        .map(|(&n, &count)| count * order_term(n))
        .sum();
    if total % 2 == 1 {
        return Err(PowerGraphError::OddSum(total));
    }
    Ok(total / 2)
}

/// Gruenberg–Kegel graph: primes dividing `|G|`, `p ~ q` iff `pq ∈ π_e(G)`.
pub fn prime_graph(g: &Group) -> Result<UndirectedGraph, PowerGraphError> {
    if g.order() < 2 {
        return Err(PowerGraphError::TrivialGroup("prime graph"));
    }
    let spec = g.spectrum();
    let primes: Vec<u64> = spec.pi.iter().copied().collect();
    let mut edges = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        for (j, &q) in primes.iter().enumerate().skip(i + 1) {
            if spec.pi_e.contains(&(p * q)) {
                edges.push((i as u32, j as u32));
            }
        }
    }
    Ok(UndirectedGraph::new(VertexKind::Prime, primes, edges))
}

/// Commuting graph on the non-identity elements.
pub fn commuting_graph(g: &Group) -> Result<UndirectedGraph, PowerGraphError> {
    if g.order() < 2 {
        return Err(PowerGraphError::TrivialGroup("commuting graph"));
    }
    let n = g.order() as u32;
    let edges = (1..n).flat_map(|x| {
        (x + 1..n)
            .filter(move |&y| g.commute(x, y))
            .map(move |y| (x - 1, y - 1))
    });
    Ok(UndirectedGraph::new(
        VertexKind::Element,
        (1..n as u64).collect(),
        edges,
    ))
}
