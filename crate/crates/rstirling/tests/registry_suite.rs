//! End-to-end checks of the identity registry: catalogue shape, sweep
//! engine behaviour, determinism, and the full smoke-profile suite.

use num_traits::Zero;

use rstirling::exact::{rat_int, Rational};
use rstirling::registry::{
    Comparison, IdentityRecord, Param, Profile, Registry, RegistryError, Routes,
};

#[test]
fn catalogue_has_the_required_entries() {
    let reg = Registry::register_all();
    assert!(reg.len() >= 45, "expected >= 45 identities, got {}", reg.len());

    // the identity ids promised by the public surface
    let required = [
        "HS-KARGIN", "HS-CERE", "PROP-4", "BRODER-EXP", "CONV-52", "REM1",
        "REM2-RECUR", "REM2-N1", "R-TWOFORMS", "RBAR-NEG1", "RBAR-SHIFT",
        "RBAR-PRODUCT", "HH-CLOSED", "HH-HJ", "HH-DERIV-12", "HH-DERIV-13",
        "HH-DERIV-EVAL", "WUYU-14", "WUYU-SPECIAL", "KOLBIG", "MYRES-HISRES",
        "MYRES2-17", "P-R0", "EGF-RSTIRLING", "SPIESS-T16", "CONWAY-GUY",
        "FIN1", "FIN2", "FIN3", "FIN-EXAMPLE", "BERN-SHIFT", "FIN4", "FIN5",
        "BERN-NEGR", "BERN-R0", "P-RECUR-REMARK", "BER-23", "BER-BK",
        "BER-DERIV", "SP-T10", "SP-T13", "SP-15", "SP-15-EX1", "SP-15-EX2",
        "SP-15-EX3", "HORIZ-GF", "WANG-34", "WANG-322", "WANG-WA1",
        "WANG-WA2", "WANG-HSUM", "IT1", "IT2", "WANG-440", "IT5", "IT6",
        "IT7", "IT8", "W1508", "RSTIRLING-RECUR", "WUYUN-FINAL",
    ];
    for id in required {
        assert!(reg.get(id).is_some(), "missing identity {id}");
    }
    assert!(reg.get("UNKNOWN").is_none());

    let prop4 = reg.get("PROP-4").unwrap();
    assert_eq!(prop4.params.len(), 3);
    let names: Vec<&str> = prop4.params.iter().map(|p| p.name).collect();
    assert_eq!(names, ["m", "i", "n"]);
}

#[test]
fn audit_covers_every_record() {
    let reg = Registry::register_all();
    let audit = reg.audit();
    assert_eq!(audit.len(), reg.len());
    for entry in &audit {
        assert!(!entry.statement.is_empty(), "{} has no statement", entry.id);
        assert!(
            entry.comparison == "scalar-equality" || entry.comparison == "polynomial-equality"
        );
    }
    // ids are unique by construction (duplicate registration panics)
    let mut ids: Vec<&str> = audit.iter().map(|e| e.id.as_str()).collect();
    ids.sort_unstable();
    ids.dedup();
    assert_eq!(ids.len(), reg.len());
}

#[test]
#[should_panic(expected = "duplicate identity id")]
fn duplicate_registration_is_a_hard_error() {
    let mut reg = Registry::new();
    for _ in 0..2 {
        reg.register(IdentityRecord {
            id: "DUP",
            statement: "0 = 0",
            params: vec![],
            constraint: None,
            routes: Routes::Scalar {
                lhs: Box::new(|_| Rational::zero()),
                rhs: Box::new(|_| Rational::zero()),
            },
        });
    }
}

#[test]
fn rem2_n1_sweep_has_seven_cases() {
    let reg = Registry::register_all();
    let profile = Profile::uniform("tiny", 6);
    let report = reg.verify("REM2-N1", &profile).unwrap();
    assert!(report.passed);
    assert_eq!(report.cases, 7);
}

#[test]
fn prop4_desk_sweep_counts_cases() {
    let reg = Registry::register_all();
    let profile = Profile::uniform("x", 0)
        .with_cap("PROP-4", "m", 6)
        .with_cap("PROP-4", "i", 6)
        .with_cap("PROP-4", "n", 4);
    let report = reg.verify("PROP-4", &profile).unwrap();
    assert!(report.passed);
    // pairs 0 <= i <= m <= 6 give 28, times 5 values of n
    assert_eq!(report.cases, 28 * 5);
}

#[test]
fn unknown_identity_is_an_error() {
    let reg = Registry::register_all();
    assert_eq!(
        reg.verify("NOPE", &Profile::smoke()).unwrap_err(),
        RegistryError::UnknownIdentity("NOPE".to_string())
    );
}

#[test]
fn corrupted_fixture_fails_with_counterexample() {
    // engine soundness: an off-by-one right side must be caught
    let mut reg = Registry::new();
    reg.register(IdentityRecord {
        id: "CORRUPT",
        statement: "n = n + 1 (deliberately wrong)",
        params: vec![Param::index("n")],
        constraint: None,
        routes: Routes::Scalar {
            lhs: Box::new(|a| rat_int(a.idx("n") as i64)),
            rhs: Box::new(|a| rat_int(a.idx("n") as i64 + 1)),
        },
    });
    let report = reg.verify("CORRUPT", &Profile::uniform("t", 3)).unwrap();
    assert!(!report.passed);
    assert_eq!(report.cases, 4);
    assert_eq!(report.failures.len(), 4);
    let first = &report.failures[0];
    assert_eq!(first.assignment, vec![("n".to_string(), "0".to_string())]);
    assert_eq!(first.lhs, "0");
    assert_eq!(first.rhs, "1");
    let text = report.render_text();
    assert!(text.starts_with("FAIL CORRUPT"));
    assert!(text.contains("counterexample"));
}

#[test]
fn suite_is_deterministic_and_ordered() {
    let reg = Registry::register_all();
    let profile = Profile::uniform("tiny", 2);
    let a = reg.verify_suite(&profile);
    let b = reg.verify_suite(&profile);
    assert_eq!(a, b);
    let ids: Vec<&str> = a.iter().map(|r| r.id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    assert_eq!(ids, sorted);
    assert_eq!(a.len(), reg.len());
}

#[test]
fn empty_selection_produces_empty_report_list() {
    let reg = Registry::register_all();
    let profile = Profile::uniform("none", 4).with_selection(Vec::<String>::new());
    assert!(reg.verify_suite(&profile).is_empty());
}

#[test]
fn selection_restricts_the_suite() {
    let reg = Registry::register_all();
    let profile = Profile::uniform("pair", 3).with_selection(["PROP-4", "REM1"]);
    let reports = reg.verify_suite(&profile);
    let ids: Vec<&str> = reports.iter().map(|r| r.id.as_str()).collect();
    assert_eq!(ids, ["PROP-4", "REM1"]);
}

#[test]
fn polynomial_records_report_polynomial_comparison() {
    let reg = Registry::register_all();
    assert_eq!(
        reg.get("RBAR-SHIFT").unwrap().comparison(),
        Comparison::PolynomialEquality
    );
    assert_eq!(
        reg.get("PROP-4").unwrap().comparison(),
        Comparison::ScalarEquality
    );
}

#[test]
fn full_smoke_suite_passes() {
    let reg = Registry::register_all();
    let reports = reg.verify_suite(&Profile::smoke());
    assert_eq!(reports.len(), reg.len());
    let mut checked = 0u64;
    for report in &reports {
        assert!(
            report.passed,
            "identity {} failed:\n{}",
            report.id,
            report.render_text()
        );
        checked += report.cases;
    }
    // the smoke profile must actually exercise the catalogue
    assert!(checked > 1000, "only {checked} cases swept");
}
