use crate::dsl::GroupSpec;
use crate::group::{enumerate_automorphisms, Automorphism, FiniteGroup};
use crate::quandle::Quandle;

use super::VerifyError;

pub const DEFAULT_NONABELIAN_REGISTRY: [&str; 9] =
    ["S3", "S4", "D2", "D3", "D4", "D5", "D6", "D7", "D8"];

/// Largest quandle order swept by the lemma checks.
pub const LEMMA_ORDER_CAP: usize = 24;

/// Abelian groups whose Alexander quandles are swept over every automorphism
/// by the lemma checks. Larger ones only get the components/iso sweeps.
const LEMMA_ALEXANDER_ORDER_CAP: usize = 8;

/// Invariant factor lists `d1 | d2 | ... | dk` with product `n`, one per
/// isomorphism type of abelian group of order `n`. `[1]` for the trivial group.
pub fn invariant_factor_lists(n: usize) -> Vec<Vec<usize>> {
    // each factor is a multiple of the previous one, and what remains must
    // still be a multiple of it so the list can be completed
    fn extend(remaining: usize, previous: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 1 {
            out.push(prefix.clone());
            return;
        }
        for d in (previous.max(2)..=remaining).filter(|&d| d.is_multiple_of(previous)) {
            if remaining == d || (remaining.is_multiple_of(d) && (remaining / d).is_multiple_of(d)) {
                prefix.push(d);
                extend(remaining / d, d, prefix, out);
                prefix.pop();
            }
        }
    }
    if n == 1 {
        return vec![vec![1]];
    }
    let mut out = Vec::new();
    extend(n, 1, &mut Vec::new(), &mut out);
    out
}

/// Every abelian group of order `1..=cap` up to isomorphism, by order.
pub fn abelian_groups(cap: usize) -> Vec<GroupSpec> {
    (1..=cap)
        .flat_map(invariant_factor_lists)
        .filter_map(|factors| GroupSpec::cyclic_product(&factors))
        .collect()
}

pub fn parse_registry(names: &[String]) -> Result<Vec<GroupSpec>, VerifyError> {
    names.iter().map(|s| Ok(s.parse::<GroupSpec>()?)).collect()
}

/// Inner automorphisms by every element, one per element (repeats kept).
pub fn inner_automorphisms(g: &FiniteGroup) -> Vec<Automorphism> {
    g.elements()
        .map(|h| Automorphism::inner(g, h).expect("element in range"))
        .collect()
}

/// A labelled batch of quandles that a lemma check sweeps in one report.
#[derive(Debug, Clone)]
pub struct QuandleFamily {
    pub label: String,
    pub quandles: Vec<Quandle>,
}

/// Generalized Alexander data `(G, φ)` swept by the fixed-point lemma.
#[derive(Debug, Clone)]
pub struct AutomorphismFamily {
    pub label: String,
    pub group: FiniteGroup,
    pub automorphisms: Vec<Automorphism>,
}

/// Groups from the nonabelian registry with their inner automorphisms, then
/// small abelian groups with all automorphisms.
pub fn automorphism_families(nonabelian: &[GroupSpec]) -> Result<Vec<AutomorphismFamily>, VerifyError> {
    let mut out = Vec::new();
    for spec in nonabelian {
        let g = spec.build()?;
        if g.order() > LEMMA_ORDER_CAP {
            continue;
        }
        out.push(AutomorphismFamily {
            label: format!("{} (inner)", g.label()),
            automorphisms: inner_automorphisms(&g),
            group: g,
        });
    }
    for spec in abelian_groups(LEMMA_ALEXANDER_ORDER_CAP) {
        let g = spec.build()?;
        out.push(AutomorphismFamily {
            label: format!("{} (all automorphisms)", g.label()),
            automorphisms: enumerate_automorphisms(&g)?,
            group: g,
        });
    }
    Ok(out)
}

/// The quandles the lemma checks run on, all of order at most
/// [`LEMMA_ORDER_CAP`]: trivial and dihedral quandles, conjugation and core
/// quandles of every registered group, generalized Alexander quandles by
/// inner automorphisms, Alexander quandles of small abelian groups by every
/// automorphism, and the two `Z4 x Z4` examples.
pub fn quandle_families(nonabelian: &[GroupSpec], abelian_cap: usize) -> Result<Vec<QuandleFamily>, VerifyError> {
    let mut out = vec![
        QuandleFamily {
            label: "trivial T_1..T_8".into(),
            quandles: (1..=8).map(Quandle::trivial).collect::<Result<_, _>>()?,
        },
        QuandleFamily {
            label: format!("dihedral R_2..R_{LEMMA_ORDER_CAP}"),
            quandles: (2..=LEMMA_ORDER_CAP)
                .map(Quandle::dihedral)
                .collect::<Result<_, _>>()?,
        },
    ];
    for spec in nonabelian {
        let g = spec.build()?;
        if g.order() > LEMMA_ORDER_CAP {
            continue;
        }
        let mut quandles = vec![Quandle::conjugation(&g)?, Quandle::core(&g)?];
        for phi in inner_automorphisms(&g) {
            quandles.push(Quandle::generalized_alexander(&g, &phi)?);
        }
        out.push(QuandleFamily {
            label: format!("{}: Conj, Core, inner generalized Alexander", g.label()),
            quandles,
        });
    }
    for spec in abelian_groups(abelian_cap.min(LEMMA_ORDER_CAP)) {
        let g = spec.build()?;
        let mut quandles = vec![Quandle::core(&g)?];
        if g.order() <= LEMMA_ALEXANDER_ORDER_CAP {
            for t in enumerate_automorphisms(&g)? {
                quandles.push(Quandle::alexander(&g, &t)?);
            }
        }
        out.push(QuandleFamily {
            label: format!("{}: Core, Alexander", g.label()),
            quandles,
        });
    }
    let z4z4 = FiniteGroup::direct_product(&FiniteGroup::cyclic(4)?, &FiniteGroup::cyclic(4)?)?;
    out.push(QuandleFamily {
        label: "Z4xZ4: Alexander by t1, t2".into(),
        quandles: vec![
            Quandle::alexander(&z4z4, &Automorphism::from_matrix(&z4z4, T1)?)?,
            Quandle::alexander(&z4z4, &Automorphism::from_matrix(&z4z4, T2)?)?,
        ],
    });
    Ok(out)
}

/// `t1(x, y) = (y, 3x + 2y)` on `Z4 x Z4`.
pub const T1: [[i64; 2]; 2] = [[0, 1], [3, 2]];
/// `t2(x, y) = (x + 2y, 2x + y)` on `Z4 x Z4`.
pub const T2: [[i64; 2]; 2] = [[1, 2], [2, 1]];

/// Every quandle of order `n` the registry can build: trivial, dihedral,
/// conjugation and core quandles of groups of order `n`, and their
/// (generalized) Alexander quandles.
pub fn quandles_of_order(n: usize, nonabelian: &[GroupSpec]) -> Result<Vec<Quandle>, VerifyError> {
    let mut out = vec![Quandle::trivial(n)?];
    if n >= 2 {
        out.push(Quandle::dihedral(n)?);
    }
    for spec in invariant_factor_lists(n)
        .iter()
        .filter_map(|f| GroupSpec::cyclic_product(f))
    {
        let g = spec.build()?;
        out.push(Quandle::core(&g)?);
        if n <= crate::group::DEFAULT_AUTOMORPHISM_CAP {
            for t in enumerate_automorphisms(&g)? {
                out.push(Quandle::alexander(&g, &t)?);
            }
        }
    }
    for spec in nonabelian {
        let g = spec.build()?;
        if g.order() != n {
            continue;
        }
        out.push(Quandle::conjugation(&g)?);
        out.push(Quandle::core(&g)?);
        for phi in inner_automorphisms(&g) {
            out.push(Quandle::generalized_alexander(&g, &phi)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_type_counts() {
        let counts: Vec<usize> = (1..=16).map(|n| invariant_factor_lists(n).len()).collect();
        assert_eq!(counts, [1, 1, 1, 2, 1, 1, 1, 3, 2, 1, 1, 2, 1, 1, 1, 5]);
        assert_eq!(abelian_groups(16).len(), 25);
        assert_eq!(
            invariant_factor_lists(16),
            vec![vec![2, 2, 2, 2], vec![2, 2, 4], vec![2, 8], vec![4, 4], vec![16]]
        );
        assert_eq!(invariant_factor_lists(12), vec![vec![2, 6], vec![12]]);
    }

    #[test]
    fn abelian_groups_build() {
        for spec in abelian_groups(16) {
            let g = spec.build().unwrap();
            assert!(g.is_abelian(), "{spec}");
        }
    }

    #[test]
    fn families_stay_small() {
        let registry = parse_registry(&DEFAULT_NONABELIAN_REGISTRY.map(String::from)).unwrap();
        for family in quandle_families(&registry, 16).unwrap() {
            assert!(family.quandles.iter().all(|q| q.order() <= LEMMA_ORDER_CAP), "{}", family.label);
        }
        let six = quandles_of_order(6, &registry).unwrap();
        assert!(six.iter().any(|q| q.is_trivial()));
        assert!(six.iter().any(|q| !q.is_trivial()));
    }
}
