use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use powergraph::algorithms::{
    are_isomorphic, cut_edge_criterion, find_bridges, is_bipartite, is_connected, is_eulerian,
    is_planar, srg_parameters, universal_vertices, verify_isomorphism, verify_kuratowski,
    Planarity,
};
use powergraph::graph::UndirectedGraph;
use powergraph::group::{
    build_cyclic, build_elementary_abelian, build_generalized_quaternion, build_heisenberg, Group,
};
use powergraph::number_theory::{euler_phi, is_prime, phi_identity_sides};
use powergraph::power_graph::{
    build_punctured, build_punctured_directed, build_undirected, cyclic_degree_formula,
    edge_count_by_order_classes, edge_count_closed_form,
};
use powergraph::theorems::{catalog, run_on, Mutation, Status, REGISTRY};

type Check = Result<(), String>;
type Criterion = fn() -> Check;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Check {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// In Z_n, `b ∈ <a>` iff gcd(a, n) divides b.
fn in_cyclic_span(n: u64, a: u64, b: u64) -> bool {
    b.is_multiple_of(gcd(a, n))
}

fn degree_formula() -> Check {
    let start = Instant::now();
    for n in 1..=200u64 {
        let g = build_undirected(&build_cyclic(n as usize).unwrap());
        for m in 1..=n {
            let x = (m % n) as u32;
            let built = g.degree(g.vertex_with_label(x as u64).unwrap()) as u64;
            let brute = (0..n)
                .filter(|&y| y != m % n)
                .filter(|&y| in_cyclic_span(n, m % n, y) || in_cyclic_span(n, y, m % n))
                .count() as u64;
            let formula = cyclic_degree_formula(n, m).unwrap().d_undirected;
            ensure(formula == built && built == brute, || {
                format!("n={n} m={m}: formula {formula}, graph {built}, brute {brute}")
            })?;
        }
    }
    within(start, Duration::from_secs(10))
}

fn off_by_one() -> Check {
    let d = cyclic_degree_formula(6, 2).unwrap();
    let proper = (0..6u64)
        .filter(|&y| y != 2 && in_cyclic_span(6, y, 2))
        .count() as u64;
    ensure(
        d.d_minus_printed == 4 && proper == 3 && d.d_minus_loopless == 3,
        || format!("n=6 m=2: printed {} proper {proper}", d.d_minus_printed),
    )?;
    for n in 1..=200u64 {
        for m in 1..=n {
            let d = cyclic_degree_formula(n, m).unwrap();
            let x = m % n;
            let proper = (0..n)
                .filter(|&y| y != x && in_cyclic_span(n, y, x))
                .count() as u64;
            ensure(
                d.d_minus_loopless == d.d_minus_printed - 1 && d.d_minus_loopless == proper,
                || {
                    format!(
                        "n={n} m={m}: printed {} loopless {} proper {proper}",
                        d.d_minus_printed, d.d_minus_loopless
                    )
                },
            )?;
        }
    }
    Ok(())
}

fn edge_counts() -> Check {
    let start = Instant::now();
    for g in catalog(200) {
        let actual = build_punctured(&g).edge_count() as u64;
        let closed = edge_count_closed_form(&g);
        let classes = edge_count_by_order_classes(&g.spectrum()).map_err(|e| e.to_string())?;
        ensure(actual == closed && closed == classes, || {
            format!(
                "{}: graph {actual}, closed form {closed}, by classes {classes}",
                g.label()
            )
        })?;
    }
    within(start, Duration::from_secs(30))
}

fn elementary_abelian() -> Check {
    let cases = [(2usize, 1..=6u32), (3, 1..=4), (5, 1..=3)];
    for (p, ms) in cases {
        for m in ms {
            let g = build_elementary_abelian(p, m).unwrap();
            let actual = build_punctured(&g).edge_count() as u64;
            let p = p as u64;
            let expected = (p.pow(m) - 1) * (p - 2) / 2;
            ensure(actual == expected, || {
                format!("p={p} m={m}: {actual} != {expected}")
            })?;
        }
    }
    Ok(())
}

fn phi_identity() -> Check {
    let start = Instant::now();
    let mut count = 0;
    for p in (2..=13u64).filter(|&p| is_prime(p)) {
        let mut n = 1u32;
        while p.pow(n) <= 100_000 {
            let (lhs, rhs) = phi_identity_sides(p, n).map_err(|e| e.to_string())?;
            let q = p.pow(n);
            let oracle_rhs = (q - 1) * (q - 2);
            let oracle_lhs: u64 = (1..=n)
                .map(|i| {
                    let pi = p.pow(i);
                    let phi = euler_phi(pi).unwrap();
                    phi * (2 * pi - phi - 3)
                })
                .sum();
            ensure(lhs == rhs && rhs == oracle_rhs && lhs == oracle_lhs, || {
                format!("p={p} n={n}: lhs {lhs} rhs {rhs}")
            })?;
            count += 1;
            n += 1;
        }
    }
    ensure(count > 0, || "no cases".into())?;
    within(start, Duration::from_secs(1))
}

fn eulerian_sweep() -> Check {
    let found: BTreeSet<usize> = (1..=256)
        .filter(|&n| is_eulerian(&build_punctured(&build_cyclic(n).unwrap())))
        .collect();
    let expected: BTreeSet<usize> = (0..=8).map(|k| 1 << k).collect();
    ensure(found == expected, || format!("Eulerian for {found:?}"))
}

fn srg_sweep() -> Check {
    for g in catalog(81) {
        let order = g.order() as u64;
        let predicted = match g.p_group_prime() {
            Some(p) => g.exponent() == p || g.exponent() == order,
            None => false,
        };
        let observed = srg_parameters(&build_punctured(&g)).is_ok();
        ensure(predicted == observed, || {
            format!(
                "{}: predicted {predicted}, srg_parameters {observed}",
                g.label()
            )
        })?;
    }
    Ok(())
}

fn planar_verdict(g: &UndirectedGraph) -> Result<bool, String> {
    match is_planar(g).map_err(|e| e.to_string())? {
        Planarity::Planar(e) => {
            ensure(e.is_valid_for(g), || "invalid embedding".into()).map(|_| true)
        }
        Planarity::NonPlanar(w) => ensure(verify_kuratowski(g, &w), || {
            "invalid Kuratowski witness".into()
        })
        .map(|_| false),
    }
}

fn bipartite_planar() -> Check {
    let groups = catalog(200);
    for g in &groups {
        let p = build_punctured(g);
        let orders = g.spectrum().pi_e;
        let bip = is_bipartite(&p);
        ensure(bip.verify(&p), || {
            format!("{}: bad bipartite certificate", g.label())
        })?;
        let want_bip = orders.iter().all(|&o| o <= 3);
        ensure(bip.is_bipartite() == want_bip, || {
            format!("{}: bipartite mismatch", g.label())
        })?;
        let want_planar = orders.iter().all(|&o| o <= 6);
        let planar = planar_verdict(&p).map_err(|e| format!("{}: {e}", g.label()))?;
        ensure(planar == want_planar, || {
            format!(
                "{}: planar {planar}, spectrum says {want_planar}",
                g.label()
            )
        })?;
    }
    for (label, want) in [("Z6", true), ("S4", true), ("Z7", false)] {
        let g = groups
            .iter()
            .find(|g| g.label() == label)
            .ok_or(format!("{label} missing"))?;
        let planar = planar_verdict(&build_punctured(g))?;
        ensure(planar == want, || format!("{label}: planar {planar}"))?;
    }
    Ok(())
}

fn cut_edges() -> Check {
    let groups = catalog(200);
    for name in ["S3", "F21", "S4", "S3 x Z3", "S3 x S3", "[Z7 x Z7]Z3"] {
        ensure(groups.iter().any(|g| g.label() == name), || {
            format!("{name} missing from catalog")
        })?;
    }
    for g in &groups {
        let p = build_punctured(g);
        let mut bridges: Vec<(u64, u64)> = find_bridges(&p)
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (p.label(u), p.label(v));
                (a.min(b), a.max(b))
            })
            .collect();
        bridges.sort_unstable();
        let criterion = cut_edge_criterion(g, &build_punctured_directed(g));
        ensure(bridges == criterion, || {
            format!(
                "{}: bridges {bridges:?}, criterion {criterion:?}",
                g.label()
            )
        })?;
    }
    Ok(())
}

/// K1 joined to three disjoint edges.
fn q8_model() -> UndirectedGraph {
    let mut edges = vec![(1, 2), (3, 4), (5, 6)];
    edges.extend((1..7).map(|v| (0, v)));
    UndirectedGraph::from_edges(7, edges)
}

fn q8_golden() -> Check {
    let q8 = build_generalized_quaternion(2).unwrap();
    let p = build_punctured(&q8);
    let sixes = p.degrees().iter().filter(|&&d| d == 6).count();
    ensure(
        p.vertex_count() == 7 && p.edge_count() == 9 && sixes == 1,
        || {
            format!(
                "{} vertices, {} edges, {sixes} of degree 6",
                p.vertex_count(),
                p.edge_count()
            )
        },
    )?;
    let model = q8_model();
    let map = are_isomorphic(&p, &model)
        .map_err(|e| e.to_string())?
        .ok_or("not isomorphic to K1 v 3K2")?;
    ensure(verify_isomorphism(&p, &model, &map), || {
        "mapping does not verify".into()
    })
}

fn order_27() -> Check {
    let start = Instant::now();
    let e = build_elementary_abelian(3, 3).unwrap();
    let h = build_heisenberg(3).unwrap();
    let (pe, ph) = (build_undirected(&e), build_undirected(&h));
    let map = are_isomorphic(&pe, &ph)
        .map_err(|e| e.to_string())?
        .ok_or("power graphs not isomorphic")?;
    ensure(verify_isomorphism(&pe, &ph, &map), || {
        "mapping does not verify".into()
    })?;
    ensure(e.is_abelian() && !h.is_abelian(), || {
        "expected exactly one abelian group".into()
    })?;
    ensure(e.spectrum().s == h.spectrum().s, || {
        "order statistics differ".into()
    })?;
    within(start, Duration::from_secs(5))
}

fn connectivity() -> Check {
    let groups = catalog(200);
    let mut p_groups = 0;
    for g in &groups {
        let p = build_punctured(g);
        let connected = is_connected(&p);
        let cyc_or_q = g.is_cyclic() || g.is_generalized_quaternion();
        if g.p_group_prime().is_some() {
            p_groups += 1;
            ensure(connected == cyc_or_q, || {
                format!("{}: C2.8 connected {connected}", g.label())
            })?;
        }
        let two_power = g.order().is_power_of_two();
        let universal = !universal_vertices(&p).is_empty();
        let want = g.is_cyclic() || (g.is_generalized_quaternion() && two_power);
        ensure(universal == want, || {
            format!("{}: L2.9 universal vertex {universal}", g.label())
        })?;
        let centre: Vec<u32> = g.center().into_iter().collect();
        let centre_primes: BTreeSet<u64> = centre
            .iter()
            .flat_map(|&z| {
                powergraph::number_theory::prime_divisors(g.element_orders()[z as usize] as u64)
                    .unwrap()
            })
            .collect();
        if centre_primes.len() >= 2 {
            ensure(connected, || format!("{}: L2.10 counterexample", g.label()))?;
        }
        if connected {
            let prime = powergraph::power_graph::prime_graph(g).map_err(|e| e.to_string())?;
            ensure(is_connected(&prime), || {
                format!("{}: L2.12 counterexample", g.label())
            })?;
        }
    }
    ensure(p_groups >= 10, || format!("only {p_groups} p-groups"))
}

fn mutation() -> Check {
    let q8 = build_generalized_quaternion(2).unwrap();
    let ids: Vec<&str> = REGISTRY.iter().map(|t| t.id).collect();
    let groups: Vec<Group> = vec![q8.clone()];
    let clean = run_on(&ids, &groups, None).map_err(|e| e.to_string())?;
    ensure(clean.iter().all(|i| i.status == Status::Pass), || {
        "clean run fails".into()
    })?;
    let n = q8.order() as u32;
    for a in 1..n {
        for b in a + 1..n {
            let m = Mutation {
                group: q8.label().to_string(),
                a,
                b,
            };
            let out = run_on(&ids, &groups, Some(&m)).map_err(|e| e.to_string())?;
            ensure(out.iter().any(|i| i.status == Status::Fail), || {
                format!("flip {a}-{b} unnoticed")
            })?;
        }
    }
    Ok(())
}

fn cli_verify_all() -> Check {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_powergraph"))
        .args(["verify", "all", "--max-order", "60"])
        .env_remove("POWERGRAPH_MAX_ORDER")
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), || {
        format!(
            "exit {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        )
    })?;
    let report: serde_json::Value =
        serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    ensure(report["summary"]["fail"] == 0, || {
        "report lists failures".into()
    })?;
    within(start, Duration::from_secs(120))
}

fn main() {
    let criteria: [(&str, Criterion); 14] = [
        ("degree formula on Z_n, n <= 200", degree_formula),
        ("in-degree off-by-one", off_by_one),
        ("edge-count identities on catalog(200)", edge_counts),
        ("elementary abelian edge formula", elementary_abelian),
        ("phi identity for p <= 13", phi_identity),
        ("Eulerian sweep n <= 256", eulerian_sweep),
        ("SRG sweep on catalog(81)", srg_sweep),
        ("bipartite and planar sweeps", bipartite_planar),
        ("cut-edge equivalence", cut_edges),
        ("Q8 golden figure", q8_golden),
        ("order-27 pair", order_27),
        ("connectivity characterizations", connectivity),
        ("mutation sanity", mutation),
        ("verify all --max-order 60", cli_verify_all),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        match result {
            Ok(()) => println!("PASS {:>2} {name} ({took:.2?})", i + 1),
            Err(reason) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({took:.2?}): {reason}", i + 1);
            }
        }
    }
    println!(
        "{} of {} acceptance criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
