use std::collections::HashSet;

use qcharsum::verify::{find, registry, run_all, run_check, Budget, CheckParams, ParamOverrides, QSelect, Status};

#[test]
fn registry_ids_are_unique_and_cover_every_area() {
    let ids: HashSet<_> = registry().iter().map(|s| s.id).collect();
    assert_eq!(ids.len(), registry().len());
    for tag in ["gl", "u", "hl", "warnaar", "weyl", "oracle", "polycount", "qseries", "example"] {
        assert!(registry().iter().any(|s| s.has_tag(tag)), "no check tagged {tag}");
    }
    assert!(find("no-such-check").is_err());
}

#[test]
fn full_run_passes_and_is_deterministic() {
    let overrides = ParamOverrides::default();
    let a = run_all(None, Budget::Quick, &overrides);
    assert!(a.ok(), "{:?}", a.reports.iter().filter(|r| r.status != Status::Pass).collect::<Vec<_>>());
    assert_eq!(a.passed, registry().len());
    let b = run_all(None, Budget::Quick, &overrides);
    let strip = |s: &qcharsum::verify::RunSummary| {
        let rs: Vec<_> = s.reports.iter().cloned().map(|r| r.without_timing()).collect();
        serde_json::to_string(&rs).unwrap()
    };
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn tag_filter_selects_only_tagged_checks() {
    let s = run_all(Some("oracle"), Budget::Quick, &ParamOverrides::default());
    assert!(!s.reports.is_empty());
    for r in &s.reports {
        assert!(find(&r.id).unwrap().has_tag("oracle"), "{}", r.id);
    }
    assert!(s.ok());
}

#[test]
fn perturbed_group_order_is_caught_with_a_witness() {
    let spec = find("thm-even").unwrap();
    let params = CheckParams { nmax: 5, order: 0, q: QSelect::Symbolic, perturb_gamma: Some(3) };
    let r = run_check(spec, params);
    assert_eq!(r.status, Status::Fail);
    let w = r.witness.expect("failing check carries a witness");
    assert_ne!(w.lhs, w.rhs);
}

#[test]
fn numeric_q_lists_are_accepted() {
    let spec = find("thm-odd").unwrap();
    let r = run_check(spec, CheckParams { nmax: 6, order: 0, q: QSelect::List(vec![3, 5, 9]), perturb_gamma: None });
    assert_eq!(r.status, Status::Pass, "{r:?}");
}
