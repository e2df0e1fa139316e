//! Executable checks of the structural claims about power graphs.
//!
//! Each registered claim is evaluated per group: the group-theoretic side
//! gives a prediction, the graph algorithms give an observation, and the
//! instance passes when the two agree.

mod catalog;
mod checks;

use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

pub use catalog::{catalog, dihedral_z3_squared, frobenius_147, frobenius_21};
pub use checks::{verify_order27_pair, verify_q4n_structure};

use crate::graph::{DirectedGraph, UndirectedGraph};
use crate::group::{Group, SpectrumInfo};
use crate::power_graph::{build_directed, build_undirected};

pub const SUITE_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Smallest catalog bound accepted by [`run_all`].
pub const MIN_SWEEP_ORDER: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error("max order {0} is below the minimum of {1}")]
    MaxOrderTooSmall(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimKind {
    /// Both directions are checked; predictions come out true and false.
    Equivalence,
    /// Only groups meeting the hypothesis produce instances.
    Implication,
    /// A formula or universal property compared value by value.
    Identity,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct TheoremInfo {
    pub id: &'static str,
    pub kind: ClaimKind,
    pub statement: &'static str,
}

const fn info(id: &'static str, kind: ClaimKind, statement: &'static str) -> TheoremInfo {
    TheoremInfo {
        id,
        kind,
        statement,
    }
}

use ClaimKind::{Equivalence, Identity, Implication};

/// Every registered claim, in report order.
pub static REGISTRY: &[TheoremInfo] = &[
    info("C2.6", Identity, "in a cyclic group, elements of equal order have equal degree in P(G)"),
    info("C2.8", Equivalence, "for a p-group, P*(G) is connected iff G is cyclic or generalized quaternion"),
    info("C5.2", Equivalence, "P*(G) is a tree iff G is Z2 or Z3"),
    info("C8.2", Identity, "2e* = sum over orders n > 1 of s_n (2n - phi(n) - 3)"),
    info("C8.3", Implication, "if P*(G) is bipartite, e* is half the number of elements of order 3"),
    info("L2.1", Equivalence, "P(G) is complete iff G is cyclic of order 1 or a prime power"),
    info("L2.2", Identity, "maximal-order elements have degree o(x) - 1; coprime orders and involutions are never adjacent; for EPPO groups P(G) is the union of the cliques on maximal cyclic subgroups, which meet only at the identity for EPO groups"),
    info("L2.3", Identity, "directed degrees of maximal-order elements, involutions are sinks, generators of one cyclic subgroup share neighbourhoods"),
    info("L2.4", Implication, "commuting elements with neither order dividing the other lie in one component of P*(G)"),
    info("L2.5", Identity, "cyclic out-degree, in-degree and undirected degree formulas"),
    info("L2.7", Equivalence, "for a p-group, P*(G) is connected iff G has a unique subgroup of order p"),
    info("L2.9", Equivalence, "P*(G) has a universal vertex iff G is cyclic or a generalized quaternion 2-group"),
    info("L2.10", Implication, "if |pi(Z(G))| >= 2 then P*(G) is connected"),
    info("L2.11", Equivalence, "with |pi(G)| >= 2 and Z(G) a p-group, P*(G) is connected iff every non-central element of order p is adjacent to a non-p-element"),
    info("L2.12", Implication, "if P*(G) is connected then the prime graph is connected"),
    info("L2.13", Implication, "P*(G) is a spanning subgraph of the commuting graph"),
    info("L3.1", Implication, "groups with isomorphic power graphs have the same number of elements of each order"),
    info("L8.1", Identity, "2e* = sum over non-identity g of (2o(g) - phi(o(g)) - 3), and e* = (p^m - 1)(p - 2)/2 for elementary abelian groups"),
    info("P6.1", Equivalence, "P*(Z_n) is Eulerian iff n is a power of 2"),
    info("P8.4", Identity, "sum_{i=1}^n phi(p^i)(2p^i - phi(p^i) - 3) = 2 C(p^n - 1, 2)"),
    info("PAIR27", Identity, "Z3^3 and Heis(3) have isomorphic power graphs and equal order statistics but are not isomorphic"),
    info("Q4n", Equivalence, "P*(Q_4m) is K1 joined to K_{2m-2} plus m copies of K2 iff m is a power of 2"),
    info("T4.1", Equivalence, "P*(G) is strongly regular iff G is a p-group of exponent p or of exponent |G|"),
    info("T5.1", Equivalence, "P*(G) is bipartite iff pi_e(G) is contained in {1, 2, 3}"),
    info("T5.3", Equivalence, "P*(G) is planar iff pi_e(G) is contained in {1, ..., 6}; EPPO power graphs are unions of maximal cyclic cliques"),
    info("T7.1", Equivalence, "an edge of P*(G) is a bridge iff it joins an element x of order 3 with in- and out-degree 1 to x^2"),
];

/// Claims whose statements quantify over all finite groups; only their
/// finite consequence (L3.1) is checked.
pub static OUT_OF_SCOPE: &[&str] = &["T3.5", "T3.6"];

pub fn theorem_info(id: &str) -> Option<&'static TheoremInfo> {
    REGISTRY.iter().find(|t| t.id == id)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremInstance {
    pub theorem_id: String,
    pub group: String,
    pub predicted: Value,
    pub observed: Value,
    pub status: Status,
    pub witness: Value,
    /// Group-side truth value for equivalences.
    #[serde(skip)]
    pub group_side: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coverage {
    pub theorem_id: String,
    pub kind: ClaimKind,
    pub instances: usize,
    pub predicted_true: usize,
    pub predicted_false: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport {
    pub version: String,
    pub max_order: usize,
    pub catalog: String,
    pub instances: Vec<TheoremInstance>,
    pub summary: Summary,
    pub coverage: Vec<Coverage>,
    pub out_of_scope: Vec<String>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn failures(&self) -> impl Iterator<Item = &TheoremInstance> {
        self.instances.iter().filter(|i| i.status == Status::Fail)
    }
}

/// A single toggled adjacency in `P(G)` for the group with this label,
/// between non-identity elements `a` and `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mutation {
    pub group: String,
    pub a: u32,
    pub b: u32,
}

/// Lazily built graphs of one group, shared by all checks.
pub(crate) struct Context<'g> {
    pub group: &'g Group,
    flip: Option<(u32, u32)>,
    spectrum: OnceLock<SpectrumInfo>,
    full: OnceLock<UndirectedGraph>,
    punctured: OnceLock<UndirectedGraph>,
    directed: OnceLock<DirectedGraph>,
    directed_punctured: OnceLock<DirectedGraph>,
}

impl<'g> Context<'g> {
    fn new(group: &'g Group, mutation: Option<&Mutation>) -> Self {
        let flip = mutation
            .filter(|m| m.group == group.label())
            .map(|m| (m.a, m.b));
        Context {
            group,
            flip,
            spectrum: OnceLock::new(),
            full: OnceLock::new(),
            punctured: OnceLock::new(),
            directed: OnceLock::new(),
            directed_punctured: OnceLock::new(),
        }
    }

    pub fn spectrum(&self) -> &SpectrumInfo {
        self.spectrum.get_or_init(|| self.group.spectrum())
    }

    pub fn full(&self) -> &UndirectedGraph {
        self.full.get_or_init(|| {
            let graph = build_undirected(self.group);
            match self.flip {
                Some((a, b)) => graph.with_edge_flipped(a, b),
                None => graph,
            }
        })
    }

    pub fn punctured(&self) -> &UndirectedGraph {
        self.punctured
            .get_or_init(|| self.full().punctured().expect("element labeled"))
    }

    pub fn directed(&self) -> &DirectedGraph {
        self.directed.get_or_init(|| build_directed(self.group))
    }

    pub fn directed_punctured(&self) -> &DirectedGraph {
        self.directed_punctured
            .get_or_init(|| self.directed().punctured().expect("has identity"))
    }
}

/// Outcome of one check before it becomes an instance.
pub(crate) struct Eval {
    pub predicted: Value,
    pub observed: Value,
    pub witness: Value,
    pub group_side: Option<bool>,
}

impl Eval {
    fn into_instance(self, theorem_id: &str, group: impl Into<String>) -> TheoremInstance {
        let status = if self.predicted == self.observed {
            Status::Pass
        } else {
            Status::Fail
        };
        TheoremInstance {
            theorem_id: theorem_id.to_string(),
            group: group.into(),
            predicted: self.predicted,
            observed: self.observed,
            status,
            witness: self.witness,
            group_side: self.group_side,
        }
    }
}

fn error_instance(theorem_id: &str, group: &str, message: String) -> TheoremInstance {
    TheoremInstance {
        theorem_id: theorem_id.to_string(),
        group: group.to_string(),
        predicted: Value::Null,
        observed: Value::String("error".into()),
        status: Status::Fail,
        witness: serde_json::json!({ "error": message }),
        group_side: None,
    }
}

fn check_ids<S: AsRef<str>>(ids: &[S]) -> Result<(), SuiteError> {
    for id in ids {
        if theorem_info(id.as_ref()).is_none() {
            return Err(SuiteError::UnknownTheorem(id.as_ref().to_string()));
        }
    }
    Ok(())
}

/// Evaluates one claim over `groups`.
pub fn verify(theorem_id: &str, groups: &[Group]) -> Result<Vec<TheoremInstance>, SuiteError> {
    run_on(&[theorem_id], groups, None)
}

/// Evaluates the given claims over `groups`, optionally with one adjacency
/// flipped. Instances are sorted by theorem id, then group label.
pub fn run_on<S: AsRef<str> + Sync>(
    ids: &[S],
    groups: &[Group],
    mutation: Option<&Mutation>,
) -> Result<Vec<TheoremInstance>, SuiteError> {
    check_ids(ids)?;
    let contexts: Vec<Context> = groups.iter().map(|g| Context::new(g, mutation)).collect();
    let mut instances: Vec<TheoremInstance> = ids
        .par_iter()
        .flat_map_iter(|id| {
            let id = id.as_ref();
            checks::whole_list(id, &contexts).unwrap_or_else(|| {
                contexts
                    .par_iter()
                    .filter_map(|ctx| {
                        checks::per_group(id, ctx).map(|outcome| match outcome {
                            Ok(eval) => eval.into_instance(id, ctx.group.label()),
                            Err(message) => error_instance(id, ctx.group.label(), message),
                        })
                    })
                    .collect()
            })
        })
        .collect();
    instances.sort_by(|a, b| (&a.theorem_id, &a.group).cmp(&(&b.theorem_id, &b.group)));
    Ok(instances)
}

fn summarize(instances: &[TheoremInstance], ids: &[&str]) -> (Summary, Vec<Coverage>) {
    let pass = instances
        .iter()
        .filter(|i| i.status == Status::Pass)
        .count();
    let summary = Summary {
        pass,
        fail: instances.len() - pass,
    };
    let coverage = ids
        .iter()
        .map(|&id| {
            let mine: Vec<&TheoremInstance> =
                instances.iter().filter(|i| i.theorem_id == id).collect();
            Coverage {
                theorem_id: id.to_string(),
                kind: theorem_info(id).expect("registered").kind,
                instances: mine.len(),
                predicted_true: mine.iter().filter(|i| i.group_side == Some(true)).count(),
                predicted_false: mine.iter().filter(|i| i.group_side == Some(false)).count(),
            }
        })
        .collect();
    (summary, coverage)
}

/// Runs the named claims (all of them for an empty list) over
/// `catalog(max_order)`.
pub fn run_selected<S: AsRef<str> + Sync>(
    ids: &[S],
    max_order: usize,
    mutation: Option<&Mutation>,
) -> Result<TheoremReport, SuiteError> {
    check_ids(ids)?;
    let ids: Vec<&str> = if ids.is_empty() {
        REGISTRY.iter().map(|t| t.id).collect()
    } else {
        ids.iter().map(AsRef::as_ref).collect()
    };
    let groups = catalog(max_order);
    let instances = run_on(&ids, &groups, mutation)?;
    let (summary, coverage) = summarize(&instances, &ids);
    Ok(TheoremReport {
        version: SUITE_VERSION.to_string(),
        max_order,
        catalog: format!(
            "{} constructed groups of order at most {max_order}: cyclic, elementary abelian, \
             generalized quaternion, dihedral, Heisenberg, symmetric, alternating, Frobenius \
             and direct products; not a census of all groups",
            groups.len()
        ),
        instances,
        summary,
        coverage,
        out_of_scope: OUT_OF_SCOPE.iter().map(|s| s.to_string()).collect(),
    })
}

/// Every registered claim over `catalog(max_order)`.
pub fn run_all(max_order: usize) -> Result<TheoremReport, SuiteError> {
    if max_order < MIN_SWEEP_ORDER {
        return Err(SuiteError::MaxOrderTooSmall(max_order, MIN_SWEEP_ORDER));
    }
    run_selected::<&str>(&[], max_order, None)
}
