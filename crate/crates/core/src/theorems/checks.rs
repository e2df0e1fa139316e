use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::{Context, Eval, TheoremInstance};
use crate::algorithms::{
    are_isomorphic, connected_components, cut_edge_criterion, find_bridges, is_bipartite,
    is_complete, is_connected, is_disjoint_union_of_cliques, is_eulerian, is_planar,
    is_spanning_subgraph, is_tree, order_statistics_equal, srg_parameters, universal_vertices,
    verify_isomorphism, Bipartiteness, Kuratowski, Planarity, SrgRefusal, ISOMORPHISM_LIMIT,
};
use crate::graph::UndirectedGraph;
use crate::group::{
    build_elementary_abelian, build_generalized_quaternion, build_heisenberg, Group,
};
use crate::number_theory::{
    euler_phi, is_power_of_two, is_prime, phi_identity_sides, prime_divisors, prime_power,
};
use crate::power_graph::{
    commuting_graph, cyclic_degree_formula, edge_count_by_order_classes, edge_count_closed_form,
    prime_graph,
};

/// Violations listed in a witness before truncation.
const WITNESS_LIMIT: usize = 5;

type Outcome = Result<Eval, String>;

fn equivalence(predicted: bool, observed: bool, witness: Value) -> Eval {
    Eval {
        predicted: Value::Bool(predicted),
        observed: Value::Bool(observed),
        witness,
        group_side: Some(predicted),
    }
}

fn implication(observed: bool, witness: Value) -> Eval {
    Eval {
        predicted: Value::Bool(true),
        observed: Value::Bool(observed),
        witness,
        group_side: None,
    }
}

fn identity(predicted: Value, observed: Value, witness: Value) -> Eval {
    Eval {
        predicted,
        observed,
        witness,
        group_side: None,
    }
}

/// Predicted zero violations against the number found.
fn violations(found: Vec<String>) -> Eval {
    let shown: Vec<&String> = found.iter().take(WITNESS_LIMIT).collect();
    identity(json!(0), json!(found.len()), json!({ "violations": shown }))
}

fn labels(graph: &UndirectedGraph, vertices: &[u32]) -> Vec<u64> {
    vertices.iter().map(|&v| graph.label(v)).collect()
}

fn is_p_power(n: u64, p: u64) -> bool {
    prime_power(n).is_some_and(|(q, _)| q == p)
}

/// Claims evaluated one group at a time; `None` when the claim does not
/// apply to this group.
pub(crate) fn per_group(id: &str, ctx: &Context) -> Option<Outcome> {
    let g = ctx.group;
    let trivial_ok = matches!(id, "L2.1" | "L2.2" | "L8.1" | "C8.2");
    if g.order() < 2 && !trivial_ok {
        return None;
    }
    match id {
        "L2.1" => Some(Ok(complete_power_graph(ctx))),
        "L2.2" => Some(Ok(elementary_facts(ctx))),
        "L2.3" => Some(Ok(directed_facts(ctx))),
        "L2.4" => commuting_pairs_component(ctx).map(Ok),
        "L2.5" => g.is_cyclic().then(|| cyclic_degrees(ctx)),
        "C2.6" => g.is_cyclic().then(|| Ok(cyclic_equal_degrees(ctx))),
        "L2.7" => g
            .p_group_prime()
            .map(|p| Ok(unique_minimal_subgroup(ctx, p))),
        "C2.8" => g.p_group_prime().map(|_| Ok(cyclic_or_quaternion(ctx))),
        "L2.9" => Some(Ok(universal_vertex(ctx))),
        "L2.10" => center_two_primes(ctx).map(Ok),
        "L2.11" => p_group_center_criterion(ctx).map(Ok),
        "L2.12" => connected_prime_graph(ctx),
        "L2.13" => Some(spanning_commuting(ctx)),
        "T4.1" => Some(Ok(strongly_regular(ctx))),
        "T5.1" => Some(Ok(bipartite(ctx))),
        "C5.2" => Some(Ok(tree(ctx))),
        "T5.3" => Some(planar(ctx)),
        "P6.1" => g.is_cyclic().then(|| Ok(eulerian_cyclic(ctx))),
        "T7.1" => Some(Ok(bridges(ctx))),
        "L8.1" => Some(Ok(edge_count(ctx))),
        "C8.2" => Some(edge_count_classes(ctx)),
        "C8.3" => bipartite_edge_count(ctx).map(Ok),
        _ => None,
    }
}

/// Claims that look at the group list as a whole (or at no group).
pub(crate) fn whole_list(id: &str, contexts: &[Context]) -> Option<Vec<TheoremInstance>> {
    match id {
        "L3.1" => Some(isomorphic_pairs(contexts)),
        "Q4n" => Some(
            contexts
                .par_iter()
                .filter(|ctx| ctx.group.is_generalized_quaternion())
                .map(|ctx| {
                    let m = ctx.group.order() / 4;
                    finish("Q4n", ctx.group.label(), q4n_structure(ctx, m))
                })
                .collect(),
        ),
        "PAIR27" => Some(vec![verify_order27_pair()]),
        "P8.4" => Some(phi_identity()),
        _ => None,
    }
}

fn finish(id: &str, label: &str, outcome: Outcome) -> TheoremInstance {
    match outcome {
        Ok(eval) => eval.into_instance(id, label),
        Err(message) => super::error_instance(id, label, message),
    }
}

fn complete_power_graph(ctx: &Context) -> Eval {
    let g = ctx.group;
    let n = g.order() as u64;
    let predicted = g.is_cyclic() && (n == 1 || prime_power(n).is_some());
    let full = ctx.full();
    let observed = is_complete(full);
    let witness = if observed {
        json!({ "vertices": full.vertex_count() })
    } else {
        let n = full.vertex_count() as u32;
        let pair = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .find(|&(u, v)| !full.has_edge(u, v))
            .map(|(u, v)| [full.label(u), full.label(v)]);
        json!({ "non_adjacent": pair })
    };
    equivalence(predicted, observed, witness)
}

fn elementary_facts(ctx: &Context) -> Eval {
    let g = ctx.group;
    let full = ctx.full();
    let spec = ctx.spectrum();
    let orders = g.element_orders();
    let mut found = Vec::new();
    for x in g.elements() {
        let o = orders[x as usize] as usize;
        if spec.mu.contains(&(o as u64)) && full.degree(x) != o - 1 {
            found.push(format!(
                "degree of {x} is {}, not {}",
                full.degree(x),
                o - 1
            ));
        }
    }
    for (x, y) in full.edges() {
        let (a, b) = (orders[x as usize], orders[y as usize]);
        if x != 0 && y != 0 && (a.gcd(&b) == 1 || (a == 2 && b == 2)) {
            found.push(format!("{x} and {y} of orders {a}, {b} are adjacent"));
        }
    }
    if spec.is_eppo() && !maximal_cyclic_clique_cover(ctx) {
        found.push("EPPO power graph is not covered by its maximal cyclic cliques".into());
    }
    if spec.is_epo() && !is_disjoint_union_of_cliques(ctx.punctured()) {
        found.push("EPO punctured power graph is not a disjoint union of cliques".into());
    }
    violations(found)
}

fn directed_facts(ctx: &Context) -> Eval {
    let g = ctx.group;
    let d = ctx.directed();
    let spec = ctx.spectrum();
    let orders = g.element_orders();
    let mut found = Vec::new();
    for x in g.elements() {
        let o = orders[x as usize] as u64;
        if spec.mu.contains(&o) {
            let phi = euler_phi(o).expect("positive") as usize;
            if d.out_degree(x) != o as usize - 1 || d.in_degree(x) != phi - 1 {
                found.push(format!(
                    "{x}: out {} in {}, expected {} and {}",
                    d.out_degree(x),
                    d.in_degree(x),
                    o - 1,
                    phi - 1
                ));
            }
        }
    }
    let dp = ctx.directed_punctured();
    for v in 0..dp.vertex_count() as u32 {
        let x = dp.label(v);
        if orders[x as usize] == 2 && dp.out_degree(v) != 0 {
            found.push(format!("involution {x} is not a sink"));
        }
    }
    let strip = |list: &[u32], drop: u32| -> Vec<u32> {
        list.iter().copied().filter(|&w| w != drop).collect()
    };
    for x in g.elements().skip(1) {
        let o = orders[x as usize] as u64;
        for k in 2..o {
            if k.gcd(&o) != 1 {
                continue;
            }
            let y = g.pow(x, k);
            if y < x {
                continue;
            }
            if strip(d.out_neighbors(x), y) != strip(d.out_neighbors(y), x)
                || strip(d.in_neighbors(x), y) != strip(d.in_neighbors(y), x)
            {
                found.push(format!(
                    "generators {x} and {y} have different neighbourhoods"
                ));
            }
        }
    }
    violations(found)
}

/// Every maximal cyclic subgroup spans a clique of `P(G)` and every edge lies
/// inside one of them.
fn maximal_cyclic_clique_cover(ctx: &Context) -> bool {
    let g = ctx.group;
    let full = ctx.full();
    let d = ctx.directed();
    let orders = g.element_orders();
    // x generates a maximal cyclic subgroup when every y with x in <y> has
    // the same order as x
    let mut seen = vec![false; g.order()];
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    let mut count = 0;
    for x in g.elements() {
        if seen[x as usize]
            || d.in_neighbors(x)
                .iter()
                .any(|&y| orders[y as usize] > orders[x as usize])
        {
            continue;
        }
        let members = g.cyclic_subgroup_unchecked(x);
        for &y in &members {
            if orders[y as usize] == orders[x as usize] {
                seen[y as usize] = true;
            }
            containing[y as usize].push(count);
        }
        for (i, &a) in members.iter().enumerate() {
            if members[i + 1..].iter().any(|&b| !full.has_edge(a, b)) {
                return false;
            }
        }
        count += 1;
    }
    full.edges().all(|(u, v)| {
        containing[u as usize]
            .iter()
            .any(|c| containing[v as usize].contains(c))
    })
}

fn component_index(graph: &UndirectedGraph) -> Vec<usize> {
    let mut index = vec![0usize; graph.vertex_count()];
    for (i, comp) in connected_components(graph).iter().enumerate() {
        for &v in comp {
            index[v as usize] = i;
        }
    }
    index
}

fn commuting_pairs_component(ctx: &Context) -> Option<Eval> {
    let g = ctx.group;
    let orders = g.element_orders();
    let p = ctx.punctured();
    let comp = component_index(p);
    let mut pairs = 0usize;
    let mut counterexample = None;
    for a in 1..g.order() as u32 {
        for b in a + 1..g.order() as u32 {
            let (oa, ob) = (orders[a as usize], orders[b as usize]);
            if oa % ob == 0 || ob % oa == 0 || !g.commute(a, b) {
                continue;
            }
            pairs += 1;
            // vertex x of P* has index x - 1
            if comp[a as usize - 1] != comp[b as usize - 1] && counterexample.is_none() {
                counterexample = Some([a, b]);
            }
        }
    }
    (pairs > 0).then(|| {
        implication(
            counterexample.is_none(),
            json!({ "pairs": pairs, "counterexample": counterexample }),
        )
    })
}

fn cyclic_degrees(ctx: &Context) -> Outcome {
    let g = ctx.group;
    let n = g.order() as u64;
    let generator = g
        .elements()
        .find(|&x| g.element_orders()[x as usize] as u64 == n)
        .expect("cyclic");
    let full = ctx.full();
    let d = ctx.directed();
    let mut found = Vec::new();
    for m in 1..=n {
        let y = g.pow(generator, m);
        let f = cyclic_degree_formula(n, m).map_err(|e| e.to_string())?;
        if full.degree(y) as u64 != f.d_undirected {
            found.push(format!(
                "m={m}: degree {} vs formula {}",
                full.degree(y),
                f.d_undirected
            ));
        }
        if d.out_degree(y) as u64 != f.d_plus {
            found.push(format!(
                "m={m}: out-degree {} vs formula {}",
                d.out_degree(y),
                f.d_plus
            ));
        }
        if d.in_degree(y) as u64 != f.d_minus_loopless {
            found.push(format!(
                "m={m}: in-degree {} vs loopless formula {}",
                d.in_degree(y),
                f.d_minus_loopless
            ));
        }
        if f.d_minus_printed != f.d_minus_loopless + 1 {
            found.push(format!("m={m}: printed in-degree is not loopless + 1"));
        }
    }
    Ok(violations(found))
}

fn cyclic_equal_degrees(ctx: &Context) -> Eval {
    let g = ctx.group;
    let full = ctx.full();
    let mut by_order: BTreeMap<u32, BTreeSet<usize>> = BTreeMap::new();
    for x in g.elements().skip(1) {
        by_order
            .entry(g.element_orders()[x as usize])
            .or_default()
            .insert(full.degree(x));
    }
    let found = by_order
        .iter()
        .filter(|(_, degrees)| degrees.len() > 1)
        .map(|(o, degrees)| format!("order {o} has degrees {degrees:?}"))
        .collect();
    violations(found)
}

fn connectivity_witness(graph: &UndirectedGraph) -> Value {
    json!({ "components": connected_components(graph).len() })
}

fn unique_minimal_subgroup(ctx: &Context, p: u64) -> Eval {
    let subgroups = ctx.group.count_order_p_subgroups(p).expect("prime");
    let p_star = ctx.punctured();
    let mut witness = connectivity_witness(p_star);
    witness["order_p_subgroups"] = json!(subgroups);
    equivalence(subgroups == 1, is_connected(p_star), witness)
}

fn cyclic_or_quaternion(ctx: &Context) -> Eval {
    let g = ctx.group;
    let predicted = g.is_cyclic() || g.is_generalized_quaternion();
    let p_star = ctx.punctured();
    equivalence(
        predicted,
        is_connected(p_star),
        connectivity_witness(p_star),
    )
}

fn universal_vertex(ctx: &Context) -> Eval {
    let g = ctx.group;
    let predicted =
        g.is_cyclic() || (g.is_generalized_quaternion() && g.p_group_prime() == Some(2));
    let p_star = ctx.punctured();
    let universal = universal_vertices(p_star);
    let shown: Vec<u64> = labels(p_star, &universal)
        .into_iter()
        .take(WITNESS_LIMIT)
        .collect();
    equivalence(
        predicted,
        !universal.is_empty(),
        json!({ "universal_vertices": universal.len(), "examples": shown }),
    )
}

fn center_primes(g: &Group) -> Vec<u64> {
    prime_divisors(g.center().len() as u64).unwrap_or_default()
}

fn center_two_primes(ctx: &Context) -> Option<Eval> {
    let primes = center_primes(ctx.group);
    (primes.len() >= 2).then(|| {
        let p_star = ctx.punctured();
        let mut witness = connectivity_witness(p_star);
        witness["center_primes"] = json!(primes);
        implication(is_connected(p_star), witness)
    })
}

/// With trivial centre every prime of `|G|` has to satisfy the criterion.
fn p_group_center_criterion(ctx: &Context) -> Option<Eval> {
    let g = ctx.group;
    let spec = ctx.spectrum();
    if spec.pi.len() < 2 {
        return None;
    }
    let center = g.center();
    let center_primes = center_primes(g);
    let primes: Vec<u64> = match center_primes.len() {
        0 => spec.pi.iter().copied().collect(),
        1 => center_primes,
        _ => return None,
    };
    let orders = g.element_orders();
    let mut failing = None;
    'primes: for &p in &primes {
        // elements lying in some cyclic subgroup generated by a non-p-element
        let mut covered = vec![false; g.order()];
        for h in g.elements().skip(1) {
            if !is_p_power(orders[h as usize] as u64, p) {
                for y in g.cyclic_subgroup_unchecked(h) {
                    covered[y as usize] = true;
                }
            }
        }
        for x in g.elements() {
            if orders[x as usize] as u64 == p && !center.contains(&x) && !covered[x as usize] {
                failing = Some(json!({ "prime": p, "element": x }));
                break 'primes;
            }
        }
    }
    let p_star = ctx.punctured();
    let mut witness = connectivity_witness(p_star);
    witness["primes_checked"] = json!(primes);
    witness["criterion_failure"] = failing.clone().unwrap_or(Value::Null);
    Some(equivalence(
        failing.is_none(),
        is_connected(p_star),
        witness,
    ))
}

fn connected_prime_graph(ctx: &Context) -> Option<Outcome> {
    if !is_connected(ctx.punctured()) {
        return None;
    }
    Some(prime_graph(ctx.group).map_err(|e| e.to_string()).map(|pg| {
        let witness = json!({ "primes": pg.labels(), "prime_graph_edges": pg.labeled_edges() });
        implication(is_connected(&pg), witness)
    }))
}

fn spanning_commuting(ctx: &Context) -> Outcome {
    let delta = commuting_graph(ctx.group).map_err(|e| e.to_string())?;
    let p_star = ctx.punctured();
    let holds = is_spanning_subgraph(p_star, &delta).map_err(|e| e.to_string())?;
    let extra = p_star
        .labeled_edges()
        .into_iter()
        .find(|&(a, b)| !ctx.group.commute(a as u32, b as u32));
    Ok(implication(holds, json!({ "non_commuting_edge": extra })))
}

fn strongly_regular(ctx: &Context) -> Eval {
    let g = ctx.group;
    let exponent = g.exponent();
    let predicted = g
        .p_group_prime()
        .is_some_and(|p| exponent == p || exponent == g.order() as u64);
    let p_star = ctx.punctured();
    let (observed, witness) = match srg_parameters(p_star) {
        Ok(params) => (true, json!({ "parameters": params })),
        Err(refusal) => {
            let (u, v) = match refusal {
                SrgRefusal::NotRegular { u, v, .. }
                | SrgRefusal::AdjacentPair { u, v, .. }
                | SrgRefusal::NonAdjacentPair { u, v, .. } => (u, v),
            };
            (
                false,
                json!({ "refusal": refusal, "elements": [p_star.label(u), p_star.label(v)] }),
            )
        }
    };
    let mut witness = witness;
    witness["exponent"] = json!(exponent);
    equivalence(predicted, observed, witness)
}

fn bipartite(ctx: &Context) -> Eval {
    let predicted = ctx.spectrum().within(&[1, 2, 3]);
    let p_star = ctx.punctured();
    let result = is_bipartite(p_star);
    let observed = result.is_bipartite();
    let witness = match &result {
        Bipartiteness::OddCycle { cycle } => json!({ "odd_cycle": labels(p_star, cycle) }),
        Bipartiteness::Bipartite { .. } => connectivity_witness(p_star),
    };
    let mut eval = equivalence(predicted, observed, witness);
    if predicted {
        // the graph should be isolated vertices and disjoint edges
        let small = connected_components(p_star).iter().all(|c| c.len() <= 2);
        eval.predicted = json!({ "bipartite": true, "k1_k2_components": true });
        eval.observed = json!({ "bipartite": observed, "k1_k2_components": small });
    }
    eval
}

fn tree(ctx: &Context) -> Eval {
    let predicted = matches!(ctx.group.order(), 2 | 3);
    let p_star = ctx.punctured();
    let witness = json!({ "vertices": p_star.vertex_count(), "edges": p_star.edge_count() });
    equivalence(predicted, is_tree(p_star), witness)
}

fn planar(ctx: &Context) -> Outcome {
    let spec = ctx.spectrum();
    let predicted = spec.within(&[1, 2, 3, 4, 5, 6]);
    let p_star = ctx.punctured();
    let result = is_planar(p_star).map_err(|e| e.to_string())?;
    let observed = result.is_planar();
    let witness = match &result {
        Planarity::Planar(embedding) => json!({
            "faces": embedding.faces().len(),
            "vertices": p_star.vertex_count(),
            "edges": p_star.edge_count(),
        }),
        Planarity::NonPlanar(w) => json!({
            "kuratowski": match w.kind { Kuratowski::K5 => "K5", Kuratowski::K33 => "K3,3" },
            "branch_vertices": labels(p_star, &w.branch_vertices),
            "paths": w.paths.iter().map(|path| labels(p_star, path)).collect::<Vec<_>>(),
        }),
    };
    let mut eval = equivalence(predicted, observed, witness);
    if spec.is_eppo() {
        eval.predicted = json!({ "planar": predicted, "maximal_cyclic_cliques": true });
        eval.observed = json!({
            "planar": observed,
            "maximal_cyclic_cliques": maximal_cyclic_clique_cover(ctx),
        });
    }
    Ok(eval)
}

fn eulerian_cyclic(ctx: &Context) -> Eval {
    let n = ctx.group.order() as u64;
    let p_star = ctx.punctured();
    let odd = (0..p_star.vertex_count() as u32)
        .find(|&v| p_star.degree(v) % 2 == 1)
        .map(|v| p_star.label(v));
    equivalence(
        is_power_of_two(n),
        is_eulerian(p_star),
        json!({ "odd_degree_vertex": odd, "connected": is_connected(p_star) }),
    )
}

fn bridges(ctx: &Context) -> Eval {
    let predicted = cut_edge_criterion(ctx.group, ctx.directed_punctured());
    let p_star = ctx.punctured();
    let observed: Vec<(u64, u64)> = {
        let mut edges: Vec<(u64, u64)> = find_bridges(p_star)
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (p_star.label(u), p_star.label(v));
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        edges
    };
    let group_side = !predicted.is_empty();
    Eval {
        witness: json!({ "bridges": observed.len() }),
        predicted: json!(predicted),
        observed: json!(observed),
        group_side: Some(group_side),
    }
}

fn edge_count(ctx: &Context) -> Eval {
    let g = ctx.group;
    let closed = edge_count_closed_form(g);
    let actual = ctx.punctured().edge_count() as u64;
    let exponent = g.exponent();
    let elementary = g.order() > 1 && is_prime(exponent) && g.is_abelian();
    if elementary {
        let formula = (g.order() as u64 - 1) * (exponent - 2) / 2;
        identity(
            json!({ "closed_form": closed, "elementary_abelian": formula }),
            json!({ "closed_form": actual, "elementary_abelian": actual }),
            json!({ "prime": exponent }),
        )
    } else {
        identity(json!(closed), json!(actual), Value::Null)
    }
}

fn edge_count_classes(ctx: &Context) -> Outcome {
    let by_classes = edge_count_by_order_classes(ctx.spectrum()).map_err(|e| e.to_string())?;
    let actual = ctx.punctured().edge_count() as u64;
    Ok(identity(
        json!(by_classes),
        json!(actual),
        json!({ "s": ctx.spectrum().s }),
    ))
}

fn bipartite_edge_count(ctx: &Context) -> Option<Eval> {
    let p_star = ctx.punctured();
    if !is_bipartite(p_star).is_bipartite() {
        return None;
    }
    let s3 = ctx.spectrum().count(3);
    Some(identity(
        json!(s3 / 2),
        json!(p_star.edge_count()),
        json!({ "order_3_elements": s3 }),
    ))
}

fn isomorphic_pairs(contexts: &[Context]) -> Vec<TheoremInstance> {
    let pairs: Vec<(usize, usize)> = (0..contexts.len())
        .flat_map(|i| (i + 1..contexts.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| {
            let (a, b) = (contexts[i].group, contexts[j].group);
            a.order() == b.order() && a.order() <= ISOMORPHISM_LIMIT
        })
        .collect();
    pairs
        .par_iter()
        .filter_map(|&(i, j)| {
            let (a, b) = (&contexts[i], &contexts[j]);
            let label = format!("{} ~ {}", a.group.label(), b.group.label());
            match are_isomorphic(a.full(), b.full()) {
                Ok(Some(map)) => {
                    let equal = order_statistics_equal(a.group, b.group);
                    let witness = json!({ "mapping": map });
                    Some(implication(equal, witness).into_instance("L3.1", label))
                }
                Ok(None) => None,
                Err(e) => Some(super::error_instance("L3.1", &label, e.to_string())),
            }
        })
        .collect()
}

fn q4n_model(m: usize) -> UndirectedGraph {
    let clique = 2 * m - 2;
    let n = 1 + clique + 2 * m;
    let mut edges: Vec<(u32, u32)> = (1..n as u32).map(|v| (0, v)).collect();
    for a in 1..=clique as u32 {
        for b in a + 1..=clique as u32 {
            edges.push((a, b));
        }
    }
    for t in 0..m as u32 {
        let first = 1 + clique as u32 + 2 * t;
        edges.push((first, first + 1));
    }
    UndirectedGraph::from_edges(n, edges)
}

fn q4n_structure(ctx: &Context, m: usize) -> Outcome {
    let g = ctx.group;
    let p_star = ctx.punctured();
    let mapping = are_isomorphic(p_star, &q4n_model(m)).map_err(|e| e.to_string())?;
    let involutions: Vec<u64> = g
        .elements()
        .filter(|&x| g.element_orders()[x as usize] == 2)
        .map(u64::from)
        .collect();
    let top: Vec<u64> = (0..p_star.vertex_count() as u32)
        .filter(|&v| p_star.degree(v) == 4 * m - 2)
        .map(|v| p_star.label(v))
        .collect();
    let observed = mapping.is_some() && involutions.len() == 1 && top == involutions;
    Ok(equivalence(
        is_power_of_two(m as u64),
        observed,
        json!({
            "m": m,
            "involutions": involutions,
            "degree_4m_minus_2": top,
            "mapping": mapping,
        }),
    ))
}

/// Checks that `P*(Q_4m)` has the join-of-cliques form exactly when `m` is a
/// power of 2.
pub fn verify_q4n_structure(m: usize) -> TheoremInstance {
    let label = format!("Q{}", 4 * m);
    match build_generalized_quaternion(m) {
        Ok(group) => {
            let ctx = Context::new(&group, None);
            finish("Q4n", &label, q4n_structure(&ctx, m))
        }
        Err(e) => super::error_instance("Q4n", &label, e.to_string()),
    }
}

/// `P(Z3^3)` against `P(Heis(3))`: isomorphic graphs, equal order statistics,
/// one group abelian and the other not.
pub fn verify_order27_pair() -> TheoremInstance {
    let e = build_elementary_abelian(3, 3).expect("order 27");
    let h = build_heisenberg(3).expect("order 27");
    let (ce, ch) = (Context::new(&e, None), Context::new(&h, None));
    let label = format!("{} ~ {}", e.label(), h.label());
    let mapping = match are_isomorphic(ce.full(), ch.full()) {
        Ok(m) => m,
        Err(err) => return super::error_instance("PAIR27", &label, err.to_string()),
    };
    let verified = mapping
        .as_ref()
        .is_some_and(|m| verify_isomorphism(ce.full(), ch.full(), m));
    let mut de = ce.full().degrees();
    let mut dh = ch.full().degrees();
    de.sort_unstable();
    dh.sort_unstable();
    let predicted = json!({
        "isomorphic_power_graphs": true,
        "equal_order_statistics": true,
        "groups_differ": true,
    });
    let observed = json!({
        "isomorphic_power_graphs": verified,
        "equal_order_statistics": order_statistics_equal(&e, &h),
        "groups_differ": e.is_abelian() != h.is_abelian(),
    });
    let witness = json!({ "mapping": mapping, "equal_degree_sequences": de == dh });
    identity(predicted, observed, witness).into_instance("PAIR27", label)
}

fn phi_identity() -> Vec<TheoremInstance> {
    let mut out = Vec::new();
    for p in (2..=13u64).filter(|&p| is_prime(p)) {
        let mut n = 1u32;
        while p.pow(n) <= 100_000 {
            let label = format!("p={p} n={n}");
            out.push(match phi_identity_sides(p, n) {
                Ok((lhs, rhs)) => {
                    identity(json!(rhs), json!(lhs), Value::Null).into_instance("P8.4", label)
                }
                Err(e) => super::error_instance("P8.4", &label, e.to_string()),
            });
            n += 1;
        }
    }
    out
}
