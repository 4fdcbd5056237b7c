//! Acceptance criteria, one line each. Every tolerance is exact zero.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use twistlab::cli::{run_suite, Suite, SuiteConfig};
use twistlab::enveloping::Enveloping;
use twistlab::report::{Check, Status};
use twistlab::representations::{r_matrix_fundamental, rep_by_name, verify_graded_ybe};
use twistlab::superalgebra::{sl12, Gen};
use twistlab::twistkit::closed_forms::{match_gl2_closed_forms, match_odd_closed_forms};
use twistlab::twistkit::jordanian::jordanian_check;
use twistlab::twistkit::{
    build_twist, build_universal_r, verify_cocycle, verify_r_properties, TwistedHopf,
};

struct Outcome {
    ok: bool,
    detail: String,
}

fn summarize(checks: &[Check]) -> Outcome {
    let bad: Vec<String> = checks
        .iter()
        .filter(|c| !c.passed())
        .map(|c| format!("{}={}({})", c.name, c.status, c.residual_terms))
        .collect();
    Outcome {
        ok: !checks.is_empty() && bad.is_empty(),
        detail: if bad.is_empty() {
            format!("{} checks, all residuals 0", checks.len())
        } else {
            format!("not passing: {}", bad.join(", "))
        },
    }
}

fn within(mut o: Outcome, elapsed: Duration, limit: Duration) -> Outcome {
    if elapsed > limit {
        o.ok = false;
        o.detail
            .push_str(&format!("; exceeded {}s", limit.as_secs()));
    }
    o
}

fn gl2_env() -> Enveloping {
    Enveloping::new(twistlab::superalgebra::gl2())
}

fn algebra_validation() -> Outcome {
    let v = sl12().validate();
    Outcome {
        ok: v.triples_checked == 512 && v.is_valid(),
        detail: format!(
            "{} triples, {} nonzero Jacobi residuals",
            v.triples_checked,
            v.jacobi_failures.len()
        ),
    }
}

fn cocycle() -> Outcome {
    let u = gl2_env();
    let tw = build_twist(&u, 4).expect("twist");
    let checks = verify_cocycle(&u, &tw);
    let mut o = summarize(&checks);
    o.ok &= checks.len() == 3;
    o
}

fn closed_forms() -> Outcome {
    let u = gl2_env();
    let hopf = TwistedHopf::new(&u, build_twist(&u, 5).expect("twist")).expect("hopf");
    let mut checks = match_gl2_closed_forms(&hopf);
    let s = Enveloping::new(sl12());
    let shopf = TwistedHopf::new(&s, build_twist(&s, 5).expect("twist")).expect("hopf");
    checks.extend(match_odd_closed_forms(&shopf));
    summarize(&checks)
}

fn universal_r() -> Outcome {
    let u = Enveloping::new(sl12());
    let tw = build_twist(&u, 5).expect("twist");
    let (r, routes) = build_universal_r(&u, &tw).expect("R");
    let hopf = TwistedHopf::new(&u, tw).expect("hopf");
    let mut checks = vec![routes];
    checks.extend(verify_r_properties(&hopf, &r, &[], 5));
    checks.extend(
        verify_r_properties(&hopf, &r, &Gen::ALL, 4)
            .into_iter()
            .skip(1),
    );
    summarize(&checks)
}

fn fundamental_r() -> Outcome {
    let rep = rep_by_name("fundamental").expect("rep");
    let (r, mut checks) = r_matrix_fundamental(&rep).expect("R");
    checks.extend(verify_graded_ybe(&r, &rep.space));
    summarize(&checks)
}

fn jordanian() -> Outcome {
    let u = gl2_env();
    let hopf = TwistedHopf::new(&u, build_twist(&u, 5).expect("twist")).expect("hopf");
    summarize(&jordanian_check(&hopf))
}

fn frt() -> Outcome {
    let cfg = SuiteConfig::default();
    let mut checks = Vec::new();
    for s in [
        Suite::FrtRelations,
        Suite::FrtDet,
        Suite::FrtSdet,
        Suite::FrtInverse,
    ] {
        checks.extend(run_suite(s, &cfg).expect("suite").checks);
    }
    summarize(&checks)
}

fn mutation_sensitivity() -> Outcome {
    let mut missed = Vec::new();
    let mut caught = 0;
    for suite in Suite::EACH {
        let fails = suite.mutations().iter().any(|&m| {
            let cfg = SuiteConfig::default().with_mutation(m);
            run_suite(suite, &cfg).expect("suite").status() == Status::Fail
        });
        if fails {
            caught += 1;
        } else {
            missed.push(suite.name());
        }
    }
    Outcome {
        ok: missed.is_empty(),
        detail: if missed.is_empty() {
            format!("{caught} suites fail under a documented mutation")
        } else {
            format!("no failing mutation for: {}", missed.join(", "))
        },
    }
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome, u64);
    let criteria: [Criterion; 8] = [
        (
            "algebra validation: graded Jacobi on all 512 sl(1/2) triples",
            algebra_validation,
            1,
        ),
        ("cocycle and counit conditions at N=4", cocycle, 60),
        (
            "closed-form coproducts and antipodes at N=5",
            closed_forms,
            300,
        ),
        (
            "universal R: two routes and triangularity at N=5, intertwiners at N=4",
            universal_r,
            300,
        ),
        (
            "fundamental R-matrix blocks and graded YBE",
            fundamental_r,
            10,
        ),
        ("Jordanian relations and Hopf maps at N=5", jordanian, 300),
        ("FRT relations, detT, sdet, M^-1 and Hopf maps", frt, 300),
        ("mutation sensitivity", mutation_sensitivity, 600),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let t = start.elapsed();
        let o = within(o, t, Duration::from_secs(*limit));
        if !o.ok {
            failed += 1;
        }
        println!(
            "criterion {}: {} - {} [{}] ({:.2}s)",
            i + 1,
            if o.ok { "PASS" } else { "FAIL" },
            name,
            o.detail,
            t.as_secs_f64()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
