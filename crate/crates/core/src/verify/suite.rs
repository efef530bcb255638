use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dsl::GroupSpec;

use super::checks::*;
use super::registry::{
    abelian_groups, automorphism_families, parse_registry, quandle_families,
    DEFAULT_NONABELIAN_REGISTRY,
};
use super::report::{TheoremId, VerificationReport};
use super::VerifyError;

/// A table injected into the `quandle_axioms` sweep as-is.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawTable {
    pub label: String,
    pub rhd: Vec<Vec<usize>>,
}

/// What [`run_suite`] sweeps. Every field has a default, so `{}` is a valid
/// config.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    /// Abelian groups of every order up to this, all isomorphism types.
    pub abelian_order_cap: usize,
    /// Nonabelian (or otherwise interesting) groups, as DSL strings.
    pub nonabelian_registry: Vec<String>,
    /// Inclusive range of `n` for the dihedral quandles `R_n`.
    pub dihedral_range: [usize; 2],
    /// Inclusive range of `m` for the `D_m` inner-by-`r` example.
    pub dihedral_group_range: [usize; 2],
    /// Takasaki windows `-w..=w` for `w = 1..=takasaki_window`.
    pub takasaki_window: usize,
    /// Checks to run; empty means all of them.
    pub checks: Vec<TheoremId>,
    pub raw_tables: Vec<RawTable>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            abelian_order_cap: 16,
            nonabelian_registry: DEFAULT_NONABELIAN_REGISTRY.map(String::from).to_vec(),
            dihedral_range: [2, 50],
            dihedral_group_range: [2, 12],
            takasaki_window: 20,
            checks: Vec::new(),
            raw_tables: Vec::new(),
        }
    }
}

impl SuiteConfig {
    pub fn from_json(text: &str) -> Result<Self, VerifyError> {
        serde_json::from_str(text).map_err(|e| VerifyError::Config(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config is always serializable")
    }

    fn runs(&self, id: TheoremId) -> bool {
        self.checks.is_empty() || self.checks.contains(&id)
    }

    fn validate(&self) -> Result<(), VerifyError> {
        for (name, [lo, hi]) in [
            ("dihedral_range", self.dihedral_range),
            ("dihedral_group_range", self.dihedral_group_range),
        ] {
            if lo < 2 || lo > hi {
                return Err(VerifyError::Config(format!(
                    "{name} must satisfy 2 <= start <= end, got {lo}..{hi}"
                )));
            }
        }
        if self.abelian_order_cap > crate::group::DEFAULT_AUTOMORPHISM_CAP {
            return Err(VerifyError::Config(format!(
                "abelian_order_cap {} exceeds the automorphism enumeration cap {}",
                self.abelian_order_cap,
                crate::group::DEFAULT_AUTOMORPHISM_CAP
            )));
        }
        Ok(())
    }
}

type Job<'a> = Box<dyn FnOnce() -> Result<VerificationReport, VerifyError> + Send + 'a>;

fn group_jobs<'a>(
    specs: &'a [GroupSpec],
    check: fn(&crate::group::FiniteGroup) -> Result<VerificationReport, VerifyError>,
) -> Vec<Job<'a>> {
    specs
        .iter()
        .map(|spec| -> Job<'a> { Box::new(move || check(&spec.build()?)) })
        .collect()
}

/// Runs every selected check on every instance the config describes.
/// Instances run in parallel but reports come back in a fixed order: checks
/// in [`TheoremId::ALL`] order, instances in registry order.
pub fn run_suite(config: &SuiteConfig) -> Result<Vec<VerificationReport>, VerifyError> {
    config.validate()?;
    let registry = parse_registry(&config.nonabelian_registry)?;
    let abelian = abelian_groups(config.abelian_order_cap);
    let mut all_groups = abelian.clone();
    all_groups.extend(registry.iter().cloned());

    let needs_quandles = [
        TheoremId::QuandleAxioms,
        TheoremId::RightTranslations,
        TheoremId::InnerOrbits,
    ]
    .into_iter()
    .any(|id| config.runs(id));
    let quandle_fams = if needs_quandles {
        quandle_families(&registry, config.abelian_order_cap)?
    } else {
        Vec::new()
    };
    let needs_autos = config.runs(TheoremId::GeneralizedRegularity) || config.runs(TheoremId::FixedPointLemma);
    let auto_fams = if needs_autos {
        automorphism_families(&registry)?
    } else {
        Vec::new()
    };

    let mut jobs: Vec<Job> = Vec::new();
    for id in TheoremId::ALL {
        if !config.runs(id) {
            continue;
        }
        match id {
            TheoremId::TrivialEdgeless => {
                let registry = &registry;
                for n in 1..=config.abelian_order_cap {
                    jobs.push(Box::new(move || check_trivial_edgeless(n, registry)));
                }
            }
            TheoremId::ConjugationComponents => {
                jobs.extend(group_jobs(&all_groups, check_conjugation_components));
            }
            TheoremId::DihedralQuandle => {
                let [lo, hi] = config.dihedral_range;
                for n in lo..=hi {
                    jobs.push(Box::new(move || check_dihedral_quandle(n)));
                }
            }
            TheoremId::TakasakiWindow => {
                for w in 1..=config.takasaki_window {
                    jobs.push(Box::new(move || check_takasaki_window(w)));
                }
            }
            TheoremId::AlexanderComponents => {
                jobs.extend(group_jobs(&abelian, check_alexander_components_all));
            }
            TheoremId::AlexanderIso => {
                jobs.extend(group_jobs(&abelian, check_alexander_iso_all));
            }
            TheoremId::GeneralizedRegularity => {
                for fam in &auto_fams {
                    jobs.push(Box::new(move || check_generalized_regularity_all(fam)));
                }
            }
            TheoremId::OrbitCoset => {
                jobs.extend(group_jobs(&registry, check_orbit_coset_all));
            }
            TheoremId::DihedralInnerExample => {
                let [lo, hi] = config.dihedral_group_range;
                for m in lo..=hi {
                    jobs.push(Box::new(move || check_dihedral_inner_example(m)));
                }
            }
            TheoremId::S4Example => jobs.push(Box::new(check_s4_example)),
            TheoremId::QuandleAxioms => {
                for fam in &quandle_fams {
                    jobs.push(Box::new(move || check_quandle_axioms_family(fam)));
                }
                for raw in &config.raw_tables {
                    jobs.push(Box::new(move || check_quandle_axioms(&raw.label, &raw.rhd)));
                }
            }
            TheoremId::RightTranslations => {
                for fam in &quandle_fams {
                    jobs.push(Box::new(move || check_right_translations_family(fam)));
                }
            }
            TheoremId::InnerOrbits => {
                for fam in &quandle_fams {
                    jobs.push(Box::new(move || check_inner_orbits_family(fam)));
                }
            }
            TheoremId::FixedPointLemma => {
                for fam in &auto_fams {
                    jobs.push(Box::new(move || check_fixed_point_lemma_all(fam)));
                }
            }
        }
    }
    jobs.into_par_iter().map(|job| job()).collect()
}
