use std::collections::BTreeSet;

use bskernel::error::Error;
use bskernel::verify::{
    run_suite, run_suite_with, suite_anchors, suite_specs, Anchor, Expected, Status, Suite,
    VerifyConfig,
};

#[test]
fn kernel_identities_report() {
    let r = run_suite("kernel-identities", None).unwrap();
    assert_eq!(r.suite, Suite::KernelIdentities);
    for id in ["e1.exp", "e2.expm1", "r1.bessel-struve", "r2.corrected"] {
        assert_eq!(r.check(id).unwrap().status, Status::Pass, "{id}");
    }
    let printed = r.check("r2.printed").unwrap();
    assert_eq!(printed.status, Status::DocumentedMismatch);
    assert_eq!(printed.corrected_id.as_deref(), Some("r2.corrected"));
    assert!(r.passed());
}

#[test]
fn degenerate_power_rows_have_zero_deviation() {
    let r = run_suite("msm-lemmas", None).unwrap();
    for id in ["L1.degenerate", "L2.degenerate"] {
        let c = r.check(id).unwrap();
        assert_eq!(c.status, Status::Pass);
        assert!(c.max_rel_dev.unwrap() <= 1e-14, "{id}: {:?}", c.max_rel_dev);
    }
    assert_eq!(r.check("L2.degenerate").unwrap().max_rel_dev, Some(0.0));
}

#[test]
fn unknown_suite_is_an_error() {
    assert!(matches!(
        run_suite("nonexistent", None),
        Err(Error::UnknownSuite(s)) if s == "nonexistent"
    ));
}

#[test]
fn suite_all_covers_every_anchor() {
    let anchors = suite_anchors(Suite::All, &VerifyConfig::default());
    let names: BTreeSet<&str> = anchors.iter().map(|a| a.name()).collect();
    let expect: BTreeSet<&str> = [
        "L1",
        "L2",
        "L3",
        "T1",
        "T2",
        "T3",
        "T4",
        "T5",
        "T6",
        "T7",
        "T8",
        "e1",
        "e2",
        "r1",
        "r2",
        "W-delta",
        "density-norm",
    ]
    .into_iter()
    .collect();
    assert_eq!(names, expect);
}

#[test]
fn suites_partition_all() {
    let cfg = VerifyConfig::default();
    let mut union = Vec::new();
    for s in Suite::ALL.into_iter().filter(|&s| s != Suite::All) {
        union.extend(suite_specs(s, &cfg).into_iter().map(|c| c.id));
    }
    union.sort();
    let all: Vec<String> = suite_specs(Suite::All, &cfg)
        .into_iter()
        .map(|c| c.id)
        .collect();
    assert_eq!(union, all);
}

#[test]
fn every_mismatch_row_names_a_passing_correction() {
    let r = run_suite("all", None).unwrap();
    assert!(
        r.passed(),
        "{:#?}",
        r.checks
            .iter()
            .filter(|c| !matches!(c.status, Status::Pass | Status::DocumentedMismatch))
            .collect::<Vec<_>>()
    );
    let mut ids: Vec<&str> = r.checks.iter().map(|c| c.id.as_str()).collect();
    let sorted = {
        let mut s = ids.clone();
        s.sort();
        s
    };
    assert_eq!(ids, sorted, "report is ordered by id");
    ids.dedup();
    assert_eq!(ids.len(), r.checks.len());
    for c in &r.checks {
        if c.expected == Expected::DocumentedMismatch {
            let fix = r.check(c.corrected_id.as_deref().unwrap()).unwrap();
            assert_eq!(fix.status, Status::Pass, "{} -> {}", c.id, fix.id);
        }
    }
}

#[test]
fn tight_override_turns_rows_red_without_aborting() {
    let r = run_suite("kernel-identities", Some(1e-300)).unwrap();
    assert!(!r.passed());
    assert_eq!(r.checks.len(), 5);
    assert_eq!(r.check("e1.exp").unwrap().status, Status::Fail);
    // The printed-formula threshold is not overridden.
    assert_eq!(r.check("r2.printed").unwrap().tolerance, 1e-2);
}

#[test]
fn config_json_round_trips_and_fills_defaults() {
    let cfg = VerifyConfig::default();
    let text = serde_json::to_string(&cfg).unwrap();
    assert_eq!(VerifyConfig::from_json(&text).unwrap(), cfg);

    let partial = VerifyConfig::from_json(r#"{"grids": {"seed": 7, "x": [1.5]}}"#).unwrap();
    assert_eq!(partial.grids.seed, 7);
    assert_eq!(partial.grids.x, vec![1.5]);
    assert_eq!(partial.tolerances, cfg.tolerances);
    assert!(VerifyConfig::from_json(r#"{"grids": {"x": []}}"#).is_err());
    assert!(VerifyConfig::from_json("not json").is_err());
}

#[test]
fn seed_changes_points_but_not_the_verdict() {
    let mut cfg = VerifyConfig::default();
    cfg.grids.seed = 12345;
    let other = run_suite_with(Suite::MsmTheorems, &cfg, None).unwrap();
    let base = run_suite_with(Suite::MsmTheorems, &VerifyConfig::default(), None).unwrap();
    assert!(other.passed());
    assert_ne!(other.without_timing().checks, base.without_timing().checks);
}

#[test]
fn report_json_schema() {
    let r = run_suite("wright", None).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    for key in ["suite", "version", "config", "checks", "wall_ms"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert_eq!(v["suite"], "wright");
    let first = &v["checks"][0];
    for key in ["id", "status", "max_rel_dev", "worst_point", "n_points"] {
        assert!(first.get(key).is_some(), "{key}");
    }
    let back: bskernel::verify::Report = serde_json::from_value(v).unwrap();
    assert_eq!(back, r);
}

#[test]
fn anchors_map_to_their_suites() {
    assert_eq!(Anchor::T7.suite(), Suite::Pathway);
    assert_eq!(Anchor::WDelta.suite(), Suite::Wright);
    assert_eq!(Anchor::R2.suite(), Suite::KernelIdentities);
}
