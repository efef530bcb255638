//! Quandle specs, either from flags or from one compact string:
//!
//! ```text
//! trivial(7)   dihedral(4)   conj(S4)   core(Z5)
//! alexander(Z4xZ4; matrix:[[0,1],[3,2]])
//! gen_alexander(S4; inner:(12))
//! raw(path/to/table.json)
//! ```

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use quandle_core::dsl::{AutomorphismSpec, GroupSpec};
use quandle_core::quandle::{Quandle, QuandleError, QuandleJson};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Trivial,
    Conj,
    Core,
    Dihedral,
    Alexander,
    GenAlexander,
    Raw,
}

impl FromStr for Family {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.trim() {
            "trivial" => Family::Trivial,
            "conj" => Family::Conj,
            "core" => Family::Core,
            "dihedral" => Family::Dihedral,
            "alexander" => Family::Alexander,
            "gen_alexander" => Family::GenAlexander,
            "raw" => Family::Raw,
            other => {
                return Err(CliError::Usage(format!(
                    "unknown family {other:?} (expected trivial, conj, core, dihedral, alexander, gen_alexander or raw)"
                )))
            }
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Trivial => "trivial",
            Family::Conj => "conj",
            Family::Core => "core",
            Family::Dihedral => "dihedral",
            Family::Alexander => "alexander",
            Family::GenAlexander => "gen_alexander",
            Family::Raw => "raw",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuandleSpec {
    Trivial(usize),
    Dihedral(usize),
    Conj(GroupSpec),
    Core(GroupSpec),
    Alexander(GroupSpec, AutomorphismSpec),
    GenAlexander(GroupSpec, AutomorphismSpec),
    Raw(PathBuf),
}

fn missing(family: Family, flag: &str) -> CliError {
    CliError::Usage(format!("family {family} needs {flag}"))
}

impl QuandleSpec {
    /// Assembles a spec from the separate `--family/--group/--phi/--n/--raw-path` flags.
    pub fn from_parts(
        family: Family,
        group: Option<&str>,
        automorphism: Option<&str>,
        n: Option<usize>,
        raw_path: Option<PathBuf>,
    ) -> Result<Self, CliError> {
        let group = || -> Result<GroupSpec, CliError> {
            Ok(group.ok_or_else(|| missing(family, "--group"))?.parse::<GroupSpec>()?)
        };
        let auto = || -> Result<AutomorphismSpec, CliError> {
            Ok(automorphism
                .ok_or_else(|| missing(family, "--phi"))?
                .parse::<AutomorphismSpec>()?)
        };
        Ok(match family {
            Family::Trivial => QuandleSpec::Trivial(n.ok_or_else(|| missing(family, "--n"))?),
            Family::Dihedral => QuandleSpec::Dihedral(n.ok_or_else(|| missing(family, "--n"))?),
            Family::Conj => QuandleSpec::Conj(group()?),
            Family::Core => QuandleSpec::Core(group()?),
            Family::Alexander => QuandleSpec::Alexander(group()?, auto()?),
            Family::GenAlexander => QuandleSpec::GenAlexander(group()?, auto()?),
            Family::Raw => QuandleSpec::Raw(raw_path.ok_or_else(|| missing(family, "--raw-path"))?),
        })
    }

    pub fn build(&self) -> Result<Quandle, CliError> {
        let q = match self {
            QuandleSpec::Trivial(n) => Quandle::trivial(*n)?,
            QuandleSpec::Dihedral(n) => Quandle::dihedral(*n)?,
            QuandleSpec::Conj(g) => Quandle::conjugation(&g.build()?)?,
            QuandleSpec::Core(g) => Quandle::core(&g.build()?)?,
            QuandleSpec::Alexander(g, t) => {
                let g = g.build()?;
                Quandle::alexander(&g, &t.build(&g)?)?
            }
            QuandleSpec::GenAlexander(g, phi) => {
                let g = g.build()?;
                Quandle::generalized_alexander(&g, &phi.build(&g)?)?
            }
            QuandleSpec::Raw(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
                QuandleJson::parse(&text)?.into_quandle()?
            }
        };
        Ok(q)
    }
}

impl fmt::Display for QuandleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuandleSpec::Trivial(n) => write!(f, "trivial({n})"),
            QuandleSpec::Dihedral(n) => write!(f, "dihedral({n})"),
            QuandleSpec::Conj(g) => write!(f, "conj({g})"),
            QuandleSpec::Core(g) => write!(f, "core({g})"),
            QuandleSpec::Alexander(g, t) => write!(f, "alexander({g}; {t})"),
            QuandleSpec::GenAlexander(g, t) => write!(f, "gen_alexander({g}; {t})"),
            QuandleSpec::Raw(p) => write!(f, "raw({})", p.display()),
        }
    }
}

fn parse_error(pos: usize, message: impl Into<String>) -> CliError {
    CliError::Usage(format!("parse error at position {pos}: {}", message.into()))
}

impl FromStr for QuandleSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let open = s.find('(').ok_or_else(|| parse_error(s.len(), "expected '('"))?;
        let close = s.rfind(')').filter(|&c| c > open).ok_or_else(|| parse_error(s.len(), "expected ')'"))?;
        if !s[close + 1..].trim().is_empty() {
            return Err(parse_error(close + 1, "trailing input after ')'"));
        }
        let family: Family = s[..open].parse()?;
        let body = &s[open + 1..close];
        let number = || -> Result<usize, CliError> {
            body.trim()
                .parse()
                .map_err(|_| parse_error(open + 1, format!("expected a number, found {body:?}")))
        };
        let (group, auto) = match body.split_once(';') {
            Some((g, a)) => (g.trim(), Some(a.trim())),
            None => (body.trim(), None),
        };
        if auto.is_some() && !matches!(family, Family::Alexander | Family::GenAlexander) {
            return Err(parse_error(open + 1 + body.find(';').unwrap(), format!("{family} takes no automorphism")));
        }
        match family {
            Family::Trivial | Family::Dihedral => {
                QuandleSpec::from_parts(family, None, None, Some(number()?), None)
            }
            Family::Raw => QuandleSpec::from_parts(family, None, None, None, Some(PathBuf::from(body.trim()))),
            _ => QuandleSpec::from_parts(family, Some(group), auto, None, None),
        }
    }
}

impl From<QuandleError> for CliError {
    fn from(e: QuandleError) -> Self {
        match e {
            QuandleError::Axiom(w) => CliError::Domain(format!("not a quandle: {w}")),
            other => CliError::Usage(other.to_string()),
        }
    }
}
