use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::SuiteConfig;
use crate::enveloping::{Element, Enveloping, TensorElement};
use crate::frtkit::{derive_rmm_relations, hopf, Localization, RttSigns};
use crate::representations::{derive_fundamental_rep, r_matrix_exact, rep_by_name};
use crate::superalgebra::{gl2, sl12, Gen};
use crate::twistkit::{build_sigma, build_twist, r_from_twist, TwistedHopf};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(Error::Usage(format!("unknown format {s}"))),
        }
    }
}

/// What to dump.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selector {
    Sigma,
    Twist,
    R,
    Coproduct(Gen),
    Antipode(Gen),
    Rmatrix99,
    Relations,
    DetT,
    Sdet,
}

impl FromStr for Selector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let gen = |g: &str| {
            g.parse::<Gen>()
                .map_err(|_| Error::Usage(format!("unknown generator {g}")))
        };
        if let Some(g) = s.strip_prefix("coproduct:") {
            return Ok(Selector::Coproduct(gen(g)?));
        }
        if let Some(g) = s.strip_prefix("antipode:") {
            return Ok(Selector::Antipode(gen(g)?));
        }
        Ok(match s {
            "sigma" => Selector::Sigma,
            "F" => Selector::Twist,
            "R" => Selector::R,
            "rmatrix99" => Selector::Rmatrix99,
            "relations" => Selector::Relations,
            "detT" => Selector::DetT,
            "sdet" => Selector::Sdet,
            _ => return Err(Error::Usage(format!("unknown dump selector {s}"))),
        })
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selector::Sigma => f.write_str("sigma"),
            Selector::Twist => f.write_str("F"),
            Selector::R => f.write_str("R"),
            Selector::Coproduct(g) => write!(f, "coproduct:{g}"),
            Selector::Antipode(g) => write!(f, "antipode:{g}"),
            Selector::Rmatrix99 => f.write_str("rmatrix99"),
            Selector::Relations => f.write_str("relations"),
            Selector::DetT => f.write_str("detT"),
            Selector::Sdet => f.write_str("sdet"),
        }
    }
}

fn render<T: Serialize>(format: Format, json: &T, text: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(json).expect("artifact serializes"),
        Format::Text => text(),
    }
}

fn element(format: Format, x: &Element, cfg: &SuiteConfig) -> String {
    let x = x.specialize(cfg.h.as_ref(), cfg.g.as_ref());
    render(format, &x.to_json(), || x.to_string())
}

fn tensor(format: Format, x: &TensorElement, cfg: &SuiteConfig) -> String {
    let x = x.specialize(cfg.h.as_ref(), cfg.g.as_ref());
    render(format, &x.to_json(), || x.to_string())
}

/// Serialize one artifact. Expressions are truncated at the rank-2 order and
/// specialized at any fixed `h`, `g`.
pub fn dump(sel: Selector, cfg: &SuiteConfig, format: Format) -> Result<String, Error> {
    cfg.validate()?;
    let n = cfg.rank2_order();
    Ok(match sel {
        Selector::Sigma => element(format, &build_sigma(n), cfg),
        Selector::Twist => {
            let u = Enveloping::new(gl2());
            tensor(format, &build_twist(&u, n)?.f, cfg)
        }
        Selector::R => {
            let u = Enveloping::new(sl12());
            tensor(format, &r_from_twist(&u, &build_twist(&u, n)?).r, cfg)
        }
        Selector::Coproduct(g) | Selector::Antipode(g) => {
            let pres = if g.is_odd() { sl12() } else { gl2() };
            let u = Enveloping::new(pres);
            let hopf = TwistedHopf::new(&u, build_twist(&u, n)?)?;
            match sel {
                Selector::Coproduct(_) => tensor(format, &hopf.coproduct[&g], cfg),
                _ => element(format, &hopf.antipode[&g], cfg),
            }
        }
        Selector::Rmatrix99 => {
            let r =
                r_matrix_exact(&rep_by_name(&cfg.rep)?)?.specialize(cfg.h.as_ref(), cfg.g.as_ref());
            render(format, &r, || r.to_string())
        }
        Selector::Relations | Selector::DetT | Selector::Sdet => {
            let r = r_matrix_exact(&derive_fundamental_rep()?)?;
            let rels = derive_rmm_relations(&r, RttSigns::Operator)?;
            match sel {
                Selector::Relations => render(format, &rels.to_json(), || {
                    rels.relations.iter().map(|r| format!("{r}\n")).collect()
                }),
                Selector::DetT => {
                    let det = rels.rewrite_system().nf(&crate::frtkit::det::det_t());
                    render(format, &det.to_json(), || det.to_string())
                }
                _ => {
                    let loc = Localization::new(rels.rewrite_system())?;
                    let sd = hopf::sdet(&mut loc.ctx(cfg.budget))?;
                    render(format, &sd.to_json(), || sd.to_string())
                }
            }
        }
    })
}
