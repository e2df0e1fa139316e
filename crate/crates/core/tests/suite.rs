use std::time::Instant;

use powergraph::group::build_generalized_quaternion;
use powergraph::power_graph::build_punctured;
use powergraph::theorems::{
    run_all, run_on, run_selected, theorem_info, Mutation, Status, SuiteError, REGISTRY,
};
use serde_json::Value;

fn schema() -> Value {
    serde_json::from_str(include_str!("../schema/report.schema.json")).unwrap()
}

#[test]
fn full_sweep_at_60_passes() {
    let start = Instant::now();
    let report = run_all(60).unwrap();
    for f in report.failures() {
        eprintln!(
            "{} {}: predicted {} observed {} witness {}",
            f.theorem_id, f.group, f.predicted, f.observed, f.witness
        );
    }
    eprintln!(
        "{} instances in {:?}",
        report.instances.len(),
        start.elapsed()
    );
    assert!(report.passed());
    assert_eq!(report.summary.pass, report.instances.len());
    for id in REGISTRY.iter().map(|t| t.id) {
        assert!(
            report.instances.iter().any(|i| i.theorem_id == id),
            "{id} has no instances"
        );
    }
}

#[test]
fn equivalences_see_both_sides() {
    let report = run_all(60).unwrap();
    for c in &report.coverage {
        if c.kind == powergraph::theorems::ClaimKind::Equivalence {
            assert!(c.predicted_true >= 3 && c.predicted_false >= 3, "{c:?}");
        }
    }
}

#[test]
fn report_is_deterministic() {
    let a = run_all(48).unwrap().to_json();
    let b = run_all(48).unwrap().to_json();
    assert_eq!(a, b);
}

#[test]
fn report_is_ordered_by_id_then_group() {
    let report = run_all(40).unwrap();
    let keys: Vec<_> = report
        .instances
        .iter()
        .map(|i| (i.theorem_id.clone(), i.group.clone()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn report_matches_schema() {
    let report: Value = serde_json::from_str(&run_all(40).unwrap().to_json()).unwrap();
    let validator = jsonschema::JSONSchema::compile(&schema()).unwrap();
    let result = validator.validate(&report);
    if let Err(errors) = result {
        for e in errors {
            eprintln!("{e} at {}", e.instance_path);
        }
        panic!("report does not match schema");
    }
}

#[test]
fn schema_rejects_broken_reports() {
    let validator = jsonschema::JSONSchema::compile(&schema()).unwrap();
    let mut report: Value = serde_json::from_str(&run_all(30).unwrap().to_json()).unwrap();
    report["instances"][0]["status"] = Value::from("maybe");
    assert!(!validator.is_valid(&report));
    report.as_object_mut().unwrap().remove("summary");
    assert!(!validator.is_valid(&report));
}

#[test]
fn bad_arguments() {
    assert_eq!(
        run_all(10).unwrap_err(),
        SuiteError::MaxOrderTooSmall(10, 30)
    );
    assert!(
        matches!(run_selected(&["NOPE"], 60, None), Err(SuiteError::UnknownTheorem(id)) if id == "NOPE")
    );
    assert!(theorem_info("T3.5").is_none());
    let report = run_all(30).unwrap();
    assert_eq!(report.out_of_scope, vec!["T3.5", "T3.6"]);
}

#[test]
fn every_flip_in_punctured_q8_is_caught() {
    let q8 = build_generalized_quaternion(2).unwrap();
    let ids: Vec<&str> = REGISTRY.iter().map(|t| t.id).collect();
    let groups = vec![q8.clone()];
    let clean = run_on(&ids, &groups, None).unwrap();
    assert!(clean.iter().all(|i| i.status == Status::Pass));
    let n = q8.order() as u32;
    for a in 1..n {
        for b in a + 1..n {
            let m = Mutation {
                group: q8.label().to_string(),
                a,
                b,
            };
            let out = run_on(&ids, &groups, Some(&m)).unwrap();
            assert!(
                out.iter().any(|i| i.status == Status::Fail),
                "flip {a}-{b} went unnoticed"
            );
        }
    }
}

#[test]
fn mutation_fails_the_full_sweep() {
    let q8 = build_generalized_quaternion(2).unwrap();
    let p = build_punctured(&q8);
    let (u, v) = p.edges().next().unwrap();
    let m = Mutation {
        group: q8.label().to_string(),
        a: p.label(u) as u32,
        b: p.label(v) as u32,
    };
    let report = run_selected::<&str>(&[], 60, Some(&m)).unwrap();
    assert!(!report.passed());
    assert!(report.failures().all(|f| f.group.contains(q8.label())));
}
