use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use twistlab::cli::{dump, run_suite, Format, Mutation, Selector, Suite, SuiteConfig};
use twistlab::frtkit::Budget;
use twistlab::report::Status;
use twistlab::Error;

#[derive(Parser)]
#[command(
    name = "twistlab",
    version,
    about = "Exact verification of the two-parameter Jordanian twist"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a verification suite.
    Verify {
        suite: String,
        #[command(flatten)]
        opts: Opts,
        /// Deliberate corruption to show the suite can fail.
        #[arg(long)]
        mutate: Option<String>,
    },
    /// Print an expression, matrix or relation set.
    Dump {
        selector: String,
        #[command(flatten)]
        opts: Opts,
    },
}

#[derive(Args)]
struct Opts {
    #[arg(long)]
    order: Option<u32>,
    #[arg(long, default_value = "fundamental")]
    rep: String,
    /// `h=<rational>` or `g=<rational>`; repeatable.
    #[arg(long = "set")]
    set: Vec<String>,
    #[arg(long, default_value = "text")]
    format: String,
    /// `steps=K,len=L`.
    #[arg(long)]
    budget: Option<String>,
}

impl Opts {
    fn config(&self) -> Result<(SuiteConfig, Format), Error> {
        let mut cfg = SuiteConfig {
            order: self.order,
            rep: self.rep.clone(),
            ..SuiteConfig::default()
        };
        for s in &self.set {
            cfg.set(s)?;
        }
        if let Some(b) = &self.budget {
            cfg.budget = Budget::parse(b).map_err(|e| Error::Usage(e.to_string()))?;
        }
        Ok((cfg, self.format.parse()?))
    }
}

fn exit_for(status: Status) -> ExitCode {
    ExitCode::from(match status {
        Status::Pass => 0,
        Status::Fail => 1,
        Status::Inconclusive => 3,
    })
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.cmd {
        Cmd::Verify {
            suite,
            opts,
            mutate,
        } => {
            let (mut cfg, format) = opts.config()?;
            cfg.mutation = mutate.as_deref().map(str::parse::<Mutation>).transpose()?;
            let report = run_suite(suite.parse::<Suite>()?, &cfg)?;
            match format {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => print!("{report}"),
            }
            Ok(exit_for(report.status()))
        }
        Cmd::Dump { selector, opts } => {
            let (cfg, format) = opts.config()?;
            println!("{}", dump(selector.parse::<Selector>()?, &cfg, format)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e @ (Error::Usage(_) | Error::Parse(_) | Error::UnknownGenerator(_))) => {
            eprintln!("twistlab: {e}");
            ExitCode::from(2)
        }
        Err(e @ Error::BudgetExhausted) => {
            eprintln!("twistlab: {e}");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("twistlab: {e}");
            ExitCode::from(1)
        }
    }
}
