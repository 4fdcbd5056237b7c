//! Running named suites, JSON reports, mutations and artifact dumps through
//! the library interface the `twistlab` binary wraps.

use twistlab::cli::{dump, run_suite, Format, Mutation, Selector, Suite, SuiteConfig};

fn main() -> twistlab::Result<()> {
    let report = run_suite(Suite::Cocycle, &SuiteConfig::default().with_order(4))?;
    print!("{report}");
    println!("{}", report.to_json());

    let cfg = SuiteConfig::default().with_mutation(Mutation::FlipRbar);
    let mutated = run_suite(Suite::RmatrixFundamental, &cfg)?;
    println!("rmatrix-fundamental with flip-rbar: {}", mutated.status());

    for suite in Suite::EACH {
        let r = run_suite(suite, &SuiteConfig::default())?;
        println!("{:<20} {}", suite, r.status());
    }

    let cfg = SuiteConfig::default().with_order(1);
    println!("{}", dump(Selector::Twist, &cfg, Format::Text)?);
    println!("{}", dump("detT".parse()?, &cfg, Format::Text)?);
    Ok(())
}
