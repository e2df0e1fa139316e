use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use powergraph::algorithms::{find_bridges, is_eulerian, srg_parameters};
use powergraph::group::{
    build_cyclic, build_generalized_quaternion, load_cayley_table, symmetric, write_cayley_table,
    Group,
};
use powergraph::power_graph::{build_directed, build_punctured, build_punctured_directed};
use serde_json::Value;
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_powergraph"))
        .args(args)
        .env_remove("POWERGRAPH_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn save(dir: &TempDir, name: &str, g: &Group) -> PathBuf {
    let path = dir.path().join(name);
    let mut bytes = Vec::new();
    write_cayley_table(g, &mut bytes).unwrap();
    std::fs::write(&path, bytes).unwrap();
    path
}

fn load(path: &Path) -> Group {
    load_cayley_table(std::fs::read(path).unwrap().as_slice()).unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn build_cyclic_writes_table() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("z12.tbl");
    let out = run(&["build", "cyclic", "12", "-o", s(&path)]);
    assert!(out.status.success());
    let g = load(&path);
    assert_eq!(g.order(), 12);
    assert!(g.is_cyclic());
}

#[test]
fn build_genq_round_trips() {
    let out = run(&["build", "genq", "2"]);
    assert!(out.status.success());
    let g = load_cayley_table(out.stdout.as_slice()).unwrap();
    let q8 = build_generalized_quaternion(2).unwrap();
    assert_eq!(g.order(), 8);
    assert!(g.is_generalized_quaternion());
    assert_eq!(g.element_orders(), q8.element_orders());
}

#[test]
fn build_perm_closes_to_order_21() {
    let out = run(&["build", "perm", "(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let g = load_cayley_table(out.stdout.as_slice()).unwrap();
    assert_eq!(g.order(), 21);
    assert!(!g.is_abelian());
}

#[test]
fn build_product_and_table() {
    let dir = TempDir::new().unwrap();
    let a = save(&dir, "z2.tbl", &build_cyclic(2).unwrap());
    let b = save(&dir, "s3.tbl", &symmetric(3).unwrap());
    let out = run(&["build", "product", s(&a), s(&b), "--label", "D12ish"]);
    assert!(out.status.success());
    let g = load_cayley_table(out.stdout.as_slice()).unwrap();
    assert_eq!((g.order(), g.label()), (12, "D12ish"));
    let again = run(&["build", "table", s(&b)]);
    assert_eq!(
        load_cayley_table(again.stdout.as_slice()).unwrap().order(),
        6
    );
}

#[test]
fn build_errors_are_usage_errors() {
    for args in [
        &["build", "genq", "1"][..],
        &["build", "cyclic"][..],
        &["build", "cyclic", "x"][..],
        &["build", "elemab", "4", "2"][..],
        &["build", "nonsense", "3"][..],
        &["build", "table", "/no/such/file"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn check_matches_library() {
    let dir = TempDir::new().unwrap();
    let z8 = save(&dir, "z8.tbl", &build_cyclic(8).unwrap());
    assert_eq!(stdout(&run(&["check", "eulerian", s(&z8)])), "true\n");
    assert!(is_eulerian(&build_punctured(&load(&z8))));

    let s3 = symmetric(3).unwrap();
    let s3p = save(&dir, "s3.tbl", &s3);
    let text = stdout(&run(&["check", "bridges", s(&s3p)]));
    let p = build_punctured(&s3);
    let bridges = find_bridges(&p);
    assert_eq!(bridges.len(), 1);
    let (u, v) = bridges[0];
    assert_eq!(text, format!("true\n{} {}\n", p.label(u), p.label(v)));

    let z9 = save(&dir, "z9.tbl", &build_cyclic(9).unwrap());
    let text = stdout(&run(&["check", "srg", s(&z9)]));
    let params = srg_parameters(&build_punctured(&load(&z9))).unwrap();
    assert_eq!(text, format!("true\n{params}\n"));
    assert_eq!(text, "true\n(8, 7, 6, -)\n");
}

#[test]
fn check_full_versus_punctured() {
    let dir = TempDir::new().unwrap();
    let z6 = save(&dir, "z6.tbl", &build_cyclic(6).unwrap());
    let punct = stdout(&run(&["check", "connected", s(&z6)]));
    let explicit = stdout(&run(&["check", "connected", s(&z6), "--punctured"]));
    assert_eq!(punct, explicit);
    let s3 = save(&dir, "s3.tbl", &symmetric(3).unwrap());
    assert!(stdout(&run(&["check", "connected", s(&s3)])).starts_with("false\n"));
    assert_eq!(
        stdout(&run(&["check", "connected", s(&s3), "--full"])),
        "true\n"
    );
    let both = run(&["check", "connected", s(&s3), "--full", "--punctured"]);
    assert_eq!(both.status.code(), Some(2));
}

#[test]
fn check_json_verdicts() {
    let dir = TempDir::new().unwrap();
    let q8 = save(&dir, "q8.tbl", &build_generalized_quaternion(2).unwrap());
    let z7 = save(&dir, "z7.tbl", &build_cyclic(7).unwrap());
    let expect = [
        ("connected", &q8, true),
        ("bipartite", &q8, false),
        ("planar", &q8, true),
        ("planar", &z7, false),
        ("eulerian", &q8, true),
        ("eulerian", &z7, false),
        ("complete", &z7, true),
        ("tree", &q8, false),
        ("eppo", &q8, true),
        ("srg", &q8, false),
        ("bridges", &q8, false),
    ];
    for (prop, file, verdict) in expect {
        let out = run(&["check", prop, s(file), "--json"]);
        assert!(out.status.success());
        let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(v["property"], prop);
        assert_eq!(v["verdict"], verdict, "{prop} on {}", v["group"]);
    }
    let out = run(&["check", "planar", s(&z7), "--json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["witness"]["kind"], "K5");
}

#[test]
fn check_errors() {
    let out = run(&["check", "eulerian", "/no/such/file"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["check", "hamiltonian", "x"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn graph_summary() {
    let dir = TempDir::new().unwrap();
    let q8 = save(&dir, "q8.tbl", &build_generalized_quaternion(2).unwrap());
    let v: Value = serde_json::from_str(&stdout(&run(&["graph", s(&q8), "--json"]))).unwrap();
    assert_eq!(
        (v["vertices"].as_u64(), v["edges"].as_u64()),
        (Some(7), Some(9))
    );
    let v: Value =
        serde_json::from_str(&stdout(&run(&["graph", s(&q8), "--full", "--json"]))).unwrap();
    assert_eq!(
        (v["vertices"].as_u64(), v["edges"].as_u64()),
        (Some(8), Some(16))
    );
}

#[test]
fn export_q8_dot() {
    let dir = TempDir::new().unwrap();
    let q8 = build_generalized_quaternion(2).unwrap();
    let path = save(&dir, "q8.tbl", &q8);
    let text = stdout(&run(&["export", s(&path), "--punctured"]));
    assert_eq!(text, build_punctured(&q8).to_dot("P*(Q8)"));
    assert_eq!(text.lines().filter(|l| l.contains("--")).count(), 9);
    assert_eq!(
        text.lines()
            .filter(|l| l.trim_end().ends_with(';') && !l.contains("--"))
            .count(),
        7
    );
}

#[test]
fn export_z6_edges() {
    let dir = TempDir::new().unwrap();
    let z6 = build_cyclic(6).unwrap();
    let path = save(&dir, "z6.tbl", &z6);
    let text = stdout(&run(&[
        "export",
        s(&path),
        "--punctured",
        "--format",
        "edges",
    ]));
    assert!(text.starts_with("# vertices: 5\n"));
    let edges = text.lines().filter(|l| !l.starts_with('#')).count();
    let brute = (1..6u32)
        .flat_map(|a| (a + 1..6).map(move |b| (a, b)))
        .filter(|&(a, b)| (1..6).any(|k| a * k % 6 == b) || (1..6).any(|k| b * k % 6 == a))
        .count();
    assert_eq!(edges, brute);
    assert_eq!(edges, 8);
}

#[test]
fn export_directed_z3() {
    let dir = TempDir::new().unwrap();
    let z3 = build_cyclic(3).unwrap();
    let path = save(&dir, "z3.tbl", &z3);
    let text = stdout(&run(&[
        "export",
        s(&path),
        "--directed",
        "--format",
        "edges",
    ]));
    let arcs: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(arcs, ["1 0", "1 2", "2 0", "2 1"]);
    assert_eq!(text, build_directed(&z3).to_edge_list());
    let punct = stdout(&run(&[
        "export",
        s(&path),
        "--directed",
        "--punctured",
        "--format",
        "edges",
    ]));
    assert_eq!(punct, build_punctured_directed(&z3).to_edge_list());
}

#[test]
fn export_is_byte_identical_and_writes_files() {
    let dir = TempDir::new().unwrap();
    let path = save(&dir, "s4.tbl", &symmetric(4).unwrap());
    let out = dir.path().join("s4.dot");
    assert!(run(&["export", s(&path), "-o", s(&out)]).status.success());
    let first = std::fs::read(&out).unwrap();
    assert!(run(&["export", s(&path), "-o", s(&out)]).status.success());
    assert_eq!(first, std::fs::read(&out).unwrap());
    assert_eq!(
        run(&["export", s(&path), "--format", "png"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_subset_writes_report() {
    let dir = TempDir::new().unwrap();
    let report = dir.path().join("report.json");
    let out = run(&[
        "verify",
        "P6.1",
        "--max-order",
        "256",
        "--report",
        s(&report),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: Value = serde_json::from_slice(&std::fs::read(&report).unwrap()).unwrap();
    assert_eq!(v["summary"]["fail"], 0);
    let instances = v["instances"].as_array().unwrap();
    for n in 2..=256 {
        assert!(
            instances.iter().any(|i| i["group"] == format!("Z{n}")),
            "Z{n} missing"
        );
    }
    assert!(instances.iter().all(|i| i["theorem_id"] == "P6.1"));
}

#[test]
fn verify_reads_max_order_from_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_powergraph"))
        .args(["verify", "T5.1"])
        .env("POWERGRAPH_MAX_ORDER", "31")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["max_order"], 31);
}

#[test]
fn verify_usage_errors() {
    let out = run(&["verify", "NOPE"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert_eq!(
        run(&["verify", "all", "--max-order", "10"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "all", "T5.1"]).status.code(), Some(2));
}
