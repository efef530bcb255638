use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::VerifyError;

/// One entry per structural result the crate can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremId {
    TrivialEdgeless,
    ConjugationComponents,
    DihedralQuandle,
    TakasakiWindow,
    AlexanderComponents,
    AlexanderIso,
    GeneralizedRegularity,
    OrbitCoset,
    DihedralInnerExample,
    S4Example,
    QuandleAxioms,
    RightTranslations,
    InnerOrbits,
    FixedPointLemma,
}

impl TheoremId {
    pub const ALL: [TheoremId; 14] = [
        TheoremId::TrivialEdgeless,
        TheoremId::ConjugationComponents,
        TheoremId::DihedralQuandle,
        TheoremId::TakasakiWindow,
        TheoremId::AlexanderComponents,
        TheoremId::AlexanderIso,
        TheoremId::GeneralizedRegularity,
        TheoremId::OrbitCoset,
        TheoremId::DihedralInnerExample,
        TheoremId::S4Example,
        TheoremId::QuandleAxioms,
        TheoremId::RightTranslations,
        TheoremId::InnerOrbits,
        TheoremId::FixedPointLemma,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::TrivialEdgeless => "trivial_edgeless",
            TheoremId::ConjugationComponents => "conjugation_components",
            TheoremId::DihedralQuandle => "dihedral_quandle",
            TheoremId::TakasakiWindow => "takasaki_window",
            TheoremId::AlexanderComponents => "alexander_components",
            TheoremId::AlexanderIso => "alexander_iso",
            TheoremId::GeneralizedRegularity => "generalized_regularity",
            TheoremId::OrbitCoset => "orbit_coset",
            TheoremId::DihedralInnerExample => "dihedral_inner_example",
            TheoremId::S4Example => "s4_example",
            TheoremId::QuandleAxioms => "quandle_axioms",
            TheoremId::RightTranslations => "right_translations",
            TheoremId::InnerOrbits => "inner_orbits",
            TheoremId::FixedPointLemma => "fixed_point_lemma",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            TheoremId::TrivialEdgeless => "Γ_Q has only loops iff Q is trivial",
            TheoremId::ConjugationComponents => {
                "components of Γ(Conj G) are the conjugacy classes, each complete"
            }
            TheoremId::DihedralQuandle => {
                "Γ(R_n) is K_n for odd n and two copies of K_(n/2) for even n"
            }
            TheoremId::TakasakiWindow => "Takasaki quandle of Z: edges join equal parities",
            TheoremId::AlexanderComponents => {
                "components of Γ(A_t(G)) are the cosets of im(id - t), each complete"
            }
            TheoremId::AlexanderIso => "Γ(A_t1) ≅ Γ(A_t2) iff |im(id - t1)| = |im(id - t2)|",
            TheoremId::GeneralizedRegularity => {
                "Γ of a generalized Alexander quandle is [G:Fix φ]-regular"
            }
            TheoremId::OrbitCoset => {
                "for φ inner by h, forward orbits are the cosets of N = <[h,G]>"
            }
            TheoremId::DihedralInnerExample => {
                "D_m with φ inner by r: components are directed cycles"
            }
            TheoremId::S4Example => "S4 with φ inner by (12): Fix φ has order 4, Γ is 6-regular",
            TheoremId::QuandleAxioms => "idempotency, right invertibility, self-distributivity",
            TheoremId::RightTranslations => "every right translation is a quandle automorphism",
            TheoremId::InnerOrbits => "forward orbits equal Inn(Q)-orbits and reachability",
            TheoremId::FixedPointLemma => "x ▷ y = x ▷ z iff φ(yz⁻¹) = yz⁻¹",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = VerifyError;

    /// Accepts the full id or a short alias (`trivial`, `conj`, `dihedral`,
    /// `takasaki`, `alexander`, `regularity`, `coset`, `dihedral_inner`, `s4`,
    /// `axioms`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        let alias = match key.as_str() {
            "trivial" => Some(TheoremId::TrivialEdgeless),
            "conj" | "conjugation" => Some(TheoremId::ConjugationComponents),
            "dihedral" => Some(TheoremId::DihedralQuandle),
            "takasaki" => Some(TheoremId::TakasakiWindow),
            "alexander" => Some(TheoremId::AlexanderComponents),
            "regularity" => Some(TheoremId::GeneralizedRegularity),
            "coset" | "orbits" => Some(TheoremId::OrbitCoset),
            "dihedral_inner" => Some(TheoremId::DihedralInnerExample),
            "s4" => Some(TheoremId::S4Example),
            "axioms" => Some(TheoremId::QuandleAxioms),
            _ => None,
        };
        alias
            .or_else(|| TheoremId::ALL.into_iter().find(|t| t.as_str() == key))
            .ok_or_else(|| VerifyError::UnknownTheorem(s.to_string()))
    }
}

/// Smallest evidence that a check failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A single offending element or vertex.
    Element { element: String, detail: String },
    /// An offending ordered pair (usually an edge or a non-edge).
    Pair {
        first: String,
        second: String,
        detail: String,
    },
    /// A set that should have equalled another one.
    Sets {
        detail: String,
        expected: Vec<String>,
        found: Vec<String>,
    },
    /// Anything else, e.g. a count mismatch.
    Note { detail: String },
}

impl Witness {
    pub fn element(element: impl Into<String>, detail: impl Into<String>) -> Self {
        Witness::Element {
            element: element.into(),
            detail: detail.into(),
        }
    }

    pub fn pair(first: impl Into<String>, second: impl Into<String>, detail: impl Into<String>) -> Self {
        Witness::Pair {
            first: first.into(),
            second: second.into(),
            detail: detail.into(),
        }
    }

    pub fn sets(detail: impl Into<String>, expected: Vec<String>, found: Vec<String>) -> Self {
        Witness::Sets {
            detail: detail.into(),
            expected,
            found,
        }
    }

    pub fn note(detail: impl Into<String>) -> Self {
        Witness::Note {
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Element { element, detail } => write!(f, "{detail} (at {element})"),
            Witness::Pair {
                first,
                second,
                detail,
            } => write!(f, "{detail} (at {first}, {second})"),
            Witness::Sets {
                detail,
                expected,
                found,
            } => write!(
                f,
                "{detail}: expected {{{}}}, found {{{}}}",
                expected.join(", "),
                found.join(", ")
            ),
            Witness::Note { detail } => f.write_str(detail),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem_id: TheoremId,
    pub instance: String,
    pub passed: bool,
    pub witness: Option<Witness>,
    /// Wall-clock time of the check, in seconds.
    #[serde(with = "seconds")]
    pub elapsed: Duration,
}

impl VerificationReport {
    /// One line: `PASS theorem instance` or `FAIL theorem instance: witness`.
    pub fn summary_line(&self, timings: bool) -> String {
        let mut line = format!(
            "{} {} {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.theorem_id,
            self.instance
        );
        if let Some(w) = &self.witness {
            line.push_str(": ");
            line.push_str(&w.to_string());
        }
        if timings {
            line.push_str(&format!(" [{:.3} ms]", self.elapsed.as_secs_f64() * 1e3));
        }
        line
    }
}

mod seconds {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        let secs = f64::deserialize(d)?;
        Duration::try_from_secs_f64(secs).map_err(serde::de::Error::custom)
    }
}

/// Why a check body stopped: a counterexample, or an input it cannot handle.
#[derive(Debug)]
pub(crate) enum Stop {
    Witness(Witness),
    Error(VerifyError),
}

impl From<Witness> for Stop {
    fn from(w: Witness) -> Self {
        Stop::Witness(w)
    }
}

macro_rules! stop_from_error {
    ($($t:ty),*) => {$(
        impl From<$t> for Stop {
            fn from(e: $t) -> Self {
                Stop::Error(e.into())
            }
        }
    )*};
}

stop_from_error!(
    VerifyError,
    crate::group::GroupError,
    crate::quandle::QuandleError,
    crate::graph::GraphError
);

pub(crate) fn ensure(cond: bool, witness: impl FnOnce() -> Witness) -> Result<(), Stop> {
    if cond {
        Ok(())
    } else {
        Err(Stop::Witness(witness()))
    }
}

/// Times `body` and turns its outcome into a report. Input errors propagate.
pub(crate) fn run(
    theorem_id: TheoremId,
    instance: impl Into<String>,
    body: impl FnOnce() -> Result<(), Stop>,
) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let witness = match outcome {
        Ok(()) => None,
        Err(Stop::Witness(w)) => Some(w),
        Err(Stop::Error(e)) => return Err(e),
    };
    Ok(VerificationReport {
        theorem_id,
        instance: instance.into(),
        passed: witness.is_none(),
        witness,
        elapsed,
    })
}
