//! Named verification suites and artifact dumps. Everything here composes
//! the algebra modules; the binary only parses arguments.

mod dump;
mod suites;

use std::fmt;
use std::str::FromStr;

use serde_json::json;

use crate::frtkit::Budget;
use crate::scalars::{parse_rational, Rational};
use crate::Error;

pub use dump::{dump, Format, Selector};
pub use suites::run_suite;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    ValidateAlgebras,
    Cocycle,
    HopfGl2,
    HopfSl12,
    RmatrixUniversal,
    RmatrixFundamental,
    Ybe,
    Jordanian,
    FrtRelations,
    FrtDet,
    FrtSdet,
    FrtInverse,
    All,
}

impl Suite {
    /// Every suite except `all`, in execution order.
    pub const EACH: [Suite; 12] = [
        Suite::ValidateAlgebras,
        Suite::Cocycle,
        Suite::HopfGl2,
        Suite::HopfSl12,
        Suite::RmatrixUniversal,
        Suite::RmatrixFundamental,
        Suite::Ybe,
        Suite::Jordanian,
        Suite::FrtRelations,
        Suite::FrtDet,
        Suite::FrtSdet,
        Suite::FrtInverse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::ValidateAlgebras => "validate-algebras",
            Suite::Cocycle => "cocycle",
            Suite::HopfGl2 => "hopf-gl2",
            Suite::HopfSl12 => "hopf-sl12",
            Suite::RmatrixUniversal => "rmatrix-universal",
            Suite::RmatrixFundamental => "rmatrix-fundamental",
            Suite::Ybe => "ybe",
            Suite::Jordanian => "jordanian",
            Suite::FrtRelations => "frt-relations",
            Suite::FrtDet => "frt-det",
            Suite::FrtSdet => "frt-sdet",
            Suite::FrtInverse => "frt-inverse",
            Suite::All => "all",
        }
    }

    pub fn is_frt(self) -> bool {
        matches!(
            self,
            Suite::FrtRelations | Suite::FrtDet | Suite::FrtSdet | Suite::FrtInverse
        )
    }

    /// Suites whose objects are exact matrices and so accept `--set`.
    pub fn accepts_specialization(self) -> bool {
        matches!(self, Suite::RmatrixFundamental | Suite::Ybe)
    }

    pub fn mutations(self) -> &'static [Mutation] {
        use Mutation::*;
        match self {
            Suite::ValidateAlgebras => &[FlipBracket],
            Suite::Cocycle | Suite::HopfGl2 | Suite::HopfSl12 | Suite::Jordanian => &[SwapTwist],
            Suite::RmatrixUniversal => &[SwapTwist, DropZSigma],
            Suite::RmatrixFundamental | Suite::Ybe => &[FlipRbar],
            Suite::FrtRelations => &[FlipRbar, DropThetaSign],
            Suite::FrtDet | Suite::FrtSdet | Suite::FrtInverse => &[FlipRbar],
            Suite::All => &Mutation::ALL,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown suite {s}")))
    }
}

/// Deliberate corruptions used to show that the audits can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mutation {
    /// Twist exponentials multiplied in the opposite order.
    SwapTwist,
    /// Closed-form `R` without its `Z⊗σ` factor.
    DropZSigma,
    /// Sign of the `h² - g²` entry of `R̄` flipped.
    FlipRbar,
    /// Minus sign dropped from the printed `Θ`-sector relation block.
    DropThetaSign,
    /// `H` coefficient of `{vb+, v-}` flipped in `sl(1/2)`.
    FlipBracket,
}

impl Mutation {
    pub const ALL: [Mutation; 5] = [
        Mutation::SwapTwist,
        Mutation::DropZSigma,
        Mutation::FlipRbar,
        Mutation::DropThetaSign,
        Mutation::FlipBracket,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mutation::SwapTwist => "swap-twist",
            Mutation::DropZSigma => "drop-z-sigma",
            Mutation::FlipRbar => "flip-rbar",
            Mutation::DropThetaSign => "drop-theta-sign",
            Mutation::FlipBracket => "flip-bracket",
        }
    }
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Mutation::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown mutation {s}")))
    }
}

/// Configuration shared by every suite.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    /// Truncation order; `None` means 6 for rank-2 and 4 for rank-3 checks.
    pub order: Option<u32>,
    pub rep: String,
    pub h: Option<Rational>,
    pub g: Option<Rational>,
    pub budget: Budget,
    pub mutation: Option<Mutation>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            order: None,
            rep: "fundamental".into(),
            h: None,
            g: None,
            budget: Budget::default(),
            mutation: None,
        }
    }
}

impl SuiteConfig {
    pub fn with_order(mut self, n: u32) -> Self {
        self.order = Some(n);
        self
    }

    pub fn with_budget(mut self, b: Budget) -> Self {
        self.budget = b;
        self
    }

    pub fn with_mutation(mut self, m: Mutation) -> Self {
        self.mutation = Some(m);
        self
    }

    pub fn with_rep(mut self, rep: impl Into<String>) -> Self {
        self.rep = rep.into();
        self
    }

    /// Apply `h=<rational>` or `g=<rational>`.
    pub fn set(&mut self, assignment: &str) -> Result<(), Error> {
        let (k, v) = assignment.split_once('=').ok_or_else(|| {
            Error::Usage(format!(
                "expected h=<rational> or g=<rational>, got {assignment}"
            ))
        })?;
        let v = parse_rational(v)?;
        match k.trim() {
            "h" => self.h = Some(v),
            "g" => self.g = Some(v),
            other => return Err(Error::Usage(format!("unknown parameter {other}"))),
        }
        Ok(())
    }

    pub fn rank2_order(&self) -> u32 {
        self.order.unwrap_or(6)
    }

    pub fn rank3_order(&self) -> u32 {
        self.order.unwrap_or(4)
    }

    pub fn is_specialized(&self) -> bool {
        self.h.is_some() || self.g.is_some()
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.order == Some(0) {
            return Err(Error::Usage("order must be at least 1".into()));
        }
        if self.budget.max_len == 0 || self.budget.max_steps == 0 {
            return Err(Error::Usage("budgets must be positive".into()));
        }
        Ok(())
    }

    /// Configuration echo stored in every report.
    pub fn echo(&self) -> serde_json::Value {
        let r = |x: &Option<Rational>| x.as_ref().map(|v| v.to_string());
        json!({
            "order_rank2": self.rank2_order(),
            "order_rank3": self.rank3_order(),
            "rep": self.rep,
            "h": r(&self.h),
            "g": r(&self.g),
            "budget": {"steps": self.budget.max_steps, "len": self.budget.max_len},
            "mutation": self.mutation.map(Mutation::name),
        })
    }
}
