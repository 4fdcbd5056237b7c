use std::process::{Command, Output};

use serde_json::Value;
use twistlab::cli::{run_suite, Suite, SuiteConfig};
use twistlab::frtkit::Budget;
use twistlab::report::Status;

fn twistlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn cocycle_report_has_three_passing_checks() {
    let o = twistlab(&["verify", "cocycle", "--order", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["suite"], "cocycle");
    let checks = v["checks"].as_array().unwrap();
    let names: Vec<&str> = checks.iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["cocycle", "counit-left", "counit-right"]);
    for c in checks {
        assert_eq!(c["status"], "pass");
        assert_eq!(c["residual_terms"], 0);
        assert!(!c["anchor"].as_str().unwrap().is_empty());
    }
    assert_eq!(v["config"]["order_rank3"], 4);
}

#[test]
fn json_reports_are_byte_identical() {
    let args = ["verify", "frt-det", "--format", "json"];
    assert_eq!(stdout(&twistlab(&args)), stdout(&twistlab(&args)));
}

#[test]
fn exit_codes() {
    assert_eq!(
        twistlab(&["verify", "no-such-suite"]).status.code(),
        Some(2)
    );
    assert_eq!(
        twistlab(&["verify", "cocycle", "--set", "h=1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        twistlab(&["verify", "cocycle", "--order", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(twistlab(&["dump", "nothing"]).status.code(), Some(2));
    assert_eq!(
        twistlab(&["verify", "cocycle", "--mutate", "swap-twist"])
            .status
            .code(),
        Some(1)
    );
    let tiny = twistlab(&["verify", "frt-sdet", "--budget", "steps=10,len=3"]);
    assert_eq!(tiny.status.code(), Some(3));
    assert!(stdout(&tiny).contains("inconclusive"));
}

#[test]
fn fail_is_not_masked_by_inconclusive() {
    let o = twistlab(&[
        "verify",
        "frt-det",
        "--mutate",
        "flip-rbar",
        "--budget",
        "steps=10",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn dump_twist_at_order_one() {
    let o = twistlab(&["dump", "F", "--order", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(1)*1⊗1 + (g)*Xp⊗Z + (-h)*H⊗Xp");
    let j: Value = serde_json::from_str(&stdout(&twistlab(&[
        "dump", "F", "--order", "1", "--format", "json",
    ])))
    .unwrap();
    assert_eq!(j["terms"].as_array().map(Vec::len), Some(3));
}

#[test]
fn dump_rmatrix_even_odd_block() {
    let o = twistlab(&["dump", "rmatrix99", "--format", "json"]);
    let m: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let entry = |i: usize, j: usize| -> twistlab::scalars::PolyHG {
        serde_json::from_value(m[i][j].clone()).unwrap()
    };
    use twistlab::scalars::{rat, PolyHG};
    assert_eq!(entry(1, 1), PolyHG::one());
    assert_eq!(entry(1, 2), PolyHG::g().scale(&rat(2, 1)));
    assert_eq!(entry(2, 1), PolyHG::zero());
    assert_eq!(entry(2, 2), PolyHG::one());
}

#[test]
fn dump_det_t() {
    let o = twistlab(&["dump", "detT"]);
    assert_eq!(stdout(&o).trim(), "(-1) b c + a d + (-h - g) a c");
}

#[test]
fn specialized_matrix_suites() {
    let o = twistlab(&["verify", "ybe", "--set", "h=1/2", "--set", "g=-3"]);
    assert_eq!(o.status.code(), Some(0));
    let o = twistlab(&["verify", "rmatrix-fundamental", "--set", "g=0"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn all_with_tiny_budget_never_passes_silently() {
    let cfg = SuiteConfig::default().with_order(1).with_budget(Budget {
        max_len: 3,
        max_steps: 10,
    });
    let r = run_suite(Suite::All, &cfg).unwrap();
    assert_eq!(r.status(), Status::Inconclusive);
    let sdet: Vec<_> = r
        .checks
        .iter()
        .filter(|c| c.name.starts_with("frt-sdet/sdet-commutes"))
        .collect();
    assert_eq!(sdet.len(), 9);
    assert!(sdet.iter().all(|c| c.status == Status::Inconclusive));
    assert!(r
        .checks
        .iter()
        .any(|c| c.name == "cocycle/cocycle" && c.passed()));
}

#[test]
fn spin_representations() {
    for j in ["1/2", "1", "3/2"] {
        let cfg = SuiteConfig::default().with_rep(format!("spin:{j}"));
        assert!(run_suite(Suite::RmatrixFundamental, &cfg)
            .unwrap()
            .all_pass());
        assert!(run_suite(Suite::Ybe, &cfg).unwrap().all_pass());
    }
}
