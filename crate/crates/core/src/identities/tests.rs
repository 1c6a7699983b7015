use std::collections::BTreeSet;

use super::*;

#[test]
fn registry_ids_are_unique_and_expected() {
    let ids: BTreeSet<&str> = registry().iter().map(|r| r.id).collect();
    assert_eq!(ids.len(), registry().len());
    let expected: BTreeSet<&str> = expected_statuses().keys().map(String::as_str).collect();
    assert_eq!(ids, expected);
}

#[test]
fn small_scale_matches_expected() {
    let report = run_registry(Scale::Small, None);
    assert!(
        report.all_match(),
        "mismatched: {:?}",
        report.summary.mismatched
    );
    assert_eq!(report.summary.records, registry().len());
}

#[test]
fn failing_records_carry_counterexamples() {
    let report = run_registry(Scale::Small, None);
    for r in &report.records {
        let fails = matches!(
            r.status,
            Status::FailsAsPrinted | Status::Refuted | Status::Unresolved
        );
        assert_eq!(fails, r.counterexample.is_some(), "{}", r.id);
        if r.status == Status::FailsAsPrinted {
            assert!(r.correction.as_ref().is_some_and(|c| c.holds), "{}", r.id);
        }
    }
}

#[test]
fn report_is_deterministic() {
    let a = run_registry(Scale::Small, Some("palindrom*")).to_json();
    let b = run_registry(Scale::Small, Some("palindrom*")).to_json();
    assert_eq!(a, b);
    assert!(!a.contains("elapsed"));
}

#[test]
fn filter_selects_by_glob() {
    let report = run_registry(Scale::Small, Some("pell*"));
    let ids: Vec<&str> = report.records.iter().map(|r| r.id.as_str()).collect();
    assert_eq!(ids, ["pell", "pell-gf", "pell-proof-gf"]);
    assert!(run_registry(Scale::Small, Some("p?ll")).records.len() == 1);
}

#[test]
fn anchors_cover_every_citation() {
    let anchors: serde_json::Value =
        serde_json::from_str(include_str!("../../fixtures/anchors.json")).unwrap();
    let anchors = anchors["anchors"].as_array().unwrap();
    let ids: BTreeSet<&str> = registry().iter().map(|r| r.id).collect();
    let tables: BTreeSet<&str> = crate::tables::TableId::ALL
        .iter()
        .map(|t| t.name())
        .collect();
    let mut anchored = BTreeSet::new();
    for a in anchors {
        if let Some(id) = a["record"].as_str() {
            assert!(ids.contains(id), "anchor names unknown record {id}");
            anchored.insert(id);
        } else if let Some(t) = a["table"].as_str() {
            assert!(tables.contains(t), "anchor names unknown table {t}");
        } else {
            assert!(a["out_of_scope"].as_str().is_some_and(|s| !s.is_empty()));
        }
    }
    for r in registry() {
        assert!(anchored.contains(r.id), "{} has no anchor", r.id);
        assert!(
            anchors
                .iter()
                .any(|a| a["text"].as_str().unwrap().contains(r.citation)),
            "citation of {} is not inside any anchor",
            r.id
        );
    }
}

#[test]
fn conjecture_one_holds_only_below_the_diagonal() {
    let report = check_conjecture_1(6, 6, 6);
    assert!(!report.holds);
    assert_eq!(report.holds_when_restricted, Some(true));
    let cx = report.first_counterexample.unwrap();
    assert_eq!(cx.point["s"], 3);
    assert_eq!(cx.values, ["5", "0"]);
}

#[test]
fn run_length_conjecture_holds_small() {
    let report = check_runs_conjecture(10);
    assert!(report.holds);
    assert_eq!(report.bounds["max_n"], 10);
}

#[test]
fn erratum_probe_evaluates_all_readings() {
    let probe = erratum_probe("palindromes-without", Scale::Small).unwrap();
    let holds: Vec<bool> = probe.forms.iter().map(|f| f.holds).collect();
    assert_eq!(holds, [false, true, false, true]);
    assert!(erratum_probe("no-such-record", Scale::Small).is_none());
}

#[test]
fn values_compare_exactly() {
    assert!(Relation::Equal.holds(&[Value::from(3), Value::from(BigInt::from(3))]));
    assert!(!Relation::Equal.holds(&[Value::undefined("x"), Value::undefined("x")]));
    assert!(Relation::Nondecreasing.holds(&[Value::from(1), Value::from(1), Value::from(2)]));
    assert!(!Relation::Nondecreasing.holds(&[Value::from(2), Value::from(1)]));
}

#[test]
fn corrupted_sequence_is_caught() {
    let mut rec = registry()
        .iter()
        .find(|r| r.id == "a-recurrence")
        .unwrap()
        .clone();
    // An off-by-one in a(r,n) at a single point.
    rec.printed.eval = |p| {
        let (r, n) = (p[0], p[1]);
        let skew = |r: i64, n: i64| crate::sequences::a(r, n) + i64::from(r == 3 && n == 4);
        vec![
            Value::from(skew(r, n)),
            Value::from(skew(r - 1, n) + 2 * skew(r, n - 1) - skew(r - 1, n - 1)),
        ]
    };
    let report = rec.evaluate(Scale::Small, Some(Status::Verified));
    assert!(!report.matches_expected);
    let cx = report.counterexample.expect("counterexample recorded");
    assert!([(3, 4), (4, 4), (3, 5), (4, 5)].contains(&(cx.point["r"], cx.point["n"])));
}
