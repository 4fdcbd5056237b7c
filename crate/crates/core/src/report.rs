//! Check results and suite reports.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        })
    }
}

/// One verified identity. `residual_terms` counts the terms left in the
/// difference of the two sides after normalization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub residual_terms: usize,
    pub anchor: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

impl Check {
    pub fn from_residual(
        name: impl Into<String>,
        anchor: impl Into<String>,
        residual_terms: usize,
    ) -> Self {
        Self {
            name: name.into(),
            status: if residual_terms == 0 {
                Status::Pass
            } else {
                Status::Fail
            },
            residual_terms,
            anchor: anchor.into(),
            detail: None,
        }
    }

    pub fn from_bool(name: impl Into<String>, anchor: impl Into<String>, ok: bool) -> Self {
        Self::from_residual(name, anchor, usize::from(!ok))
    }

    pub fn inconclusive(
        name: impl Into<String>,
        anchor: impl Into<String>,
        why: impl Into<String>,
    ) -> Self {
        Self {
            name: name.into(),
            status: Status::Inconclusive,
            residual_terms: 0,
            anchor: anchor.into(),
            detail: Some(why.into()),
        }
    }

    pub fn with_detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub config: serde_json::Value,
    pub checks: Vec<Check>,
    /// Wall-clock time; left out of JSON so reports stay byte-identical.
    #[serde(skip)]
    pub elapsed: Option<std::time::Duration>,
}

impl Report {
    pub fn new(suite: impl Into<String>, config: serde_json::Value) -> Self {
        Self {
            suite: suite.into(),
            config,
            checks: Vec::new(),
            elapsed: None,
        }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, cs: impl IntoIterator<Item = Check>) {
        self.checks.extend(cs);
    }

    /// Fail dominates inconclusive, which dominates pass.
    pub fn status(&self) -> Status {
        if self.checks.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else if self.checks.iter().any(|c| c.status == Status::Inconclusive) {
            Status::Inconclusive
        } else {
            Status::Pass
        }
    }

    pub fn all_pass(&self) -> bool {
        self.status() == Status::Pass
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}: {}", self.suite, self.status())?;
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            write!(
                f,
                "  [{:>12}] {:<width$}  residual={}  ({})",
                c.status.to_string(),
                c.name,
                c.residual_terms,
                c.anchor,
                width = width
            )?;
            if let Some(d) = &c.detail {
                write!(f, "\n                 {}", d)?;
            }
            writeln!(f)?;
        }
        if let Some(t) = self.elapsed {
            writeln!(f, "  elapsed {:.3}s", t.as_secs_f64())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fail_dominates() {
        let mut r = Report::new("x", serde_json::json!({}));
        r.push(Check::from_residual("a", "", 0));
        assert_eq!(r.status(), Status::Pass);
        r.push(Check::inconclusive("b", "", "budget"));
        assert_eq!(r.status(), Status::Inconclusive);
        r.push(Check::from_residual("c", "", 3));
        assert_eq!(r.status(), Status::Fail);
    }
}
