//! Finite quandles stored as full `x ▷ y` tables.

mod axioms;
mod inner;
mod json;

pub use axioms::{verify_quandle_axioms, AxiomReport, AxiomWitness};
pub use inner::{
    PermGroup, RightTranslation, DEFAULT_INNER_DEGREE_CAP, DEFAULT_INNER_SIZE_CAP,
};
pub use json::QuandleJson;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{Automorphism, FiniteGroup, GroupError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuandleError {
    #[error("quandle must have at least one element")]
    Empty,
    #[error("dihedral quandle R_{0} is not supported (need n >= 2)")]
    DihedralTooSmall(usize),
    #[error("row {row} has length {len}, expected {expected}")]
    Ragged {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("table entry {value} out of range for order {order}")]
    OutOfRange { value: usize, order: usize },
    #[error("element {index} out of range for a quandle of order {order}")]
    ElementOutOfRange { index: usize, order: usize },
    #[error("{0}")]
    Axiom(AxiomWitness),
    #[error("{names} names given for a quandle of order {order}")]
    NameCount { names: usize, order: usize },
    #[error("quandle of order {order} exceeds the inner group degree cap {cap}")]
    DegreeCapExceeded { order: usize, cap: usize },
    #[error("inner group closure exceeded {cap} permutations")]
    ClosureCapExceeded { cap: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("malformed quandle JSON: {0}")]
    Json(String),
}

/// Which construction produced a quandle, with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Provenance {
    Trivial { n: usize },
    Conj { group: String },
    Core { group: String },
    Dihedral { n: usize },
    Alexander { group: String, automorphism: String },
    GenAlexander { group: String, automorphism: String },
    Raw,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quandle {
    order: usize,
    table: Vec<usize>,
    label: String,
    names: Vec<String>,
    provenance: Provenance,
}

impl Quandle {
    /// Builds a quandle from `table[x][y] = x ▷ y`, rejecting tables that
    /// fail any axiom.
    pub fn from_table(
        label: impl Into<String>,
        names: Vec<String>,
        table: &[Vec<usize>],
        provenance: Provenance,
    ) -> Result<Self, QuandleError> {
        let order = axioms::check_shape(table)?;
        let flat = table.iter().flatten().copied().collect();
        Self::checked(label.into(), names, flat, provenance, order)
    }

    fn checked(
        label: String,
        names: Vec<String>,
        table: Vec<usize>,
        provenance: Provenance,
        order: usize,
    ) -> Result<Self, QuandleError> {
        if names.len() != order {
            return Err(QuandleError::NameCount {
                names: names.len(),
                order,
            });
        }
        if let Some(w) = axioms::check_flat(&table, order).first_failure() {
            return Err(QuandleError::Axiom(w));
        }
        Ok(Quandle {
            order,
            table,
            label,
            names,
            provenance,
        })
    }

    fn over_group(
        g: &FiniteGroup,
        label: String,
        provenance: Provenance,
        op: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, QuandleError> {
        let n = g.order();
        let table = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .map(|(x, y)| op(x, y))
            .collect();
        Self::checked(label, g.names().to_vec(), table, provenance, n)
    }

    /// `x ▷ y = x` on `n` points.
    pub fn trivial(n: usize) -> Result<Self, QuandleError> {
        if n == 0 {
            return Err(QuandleError::Empty);
        }
        let table = (0..n * n).map(|i| i / n).collect();
        let names = (0..n).map(|i| i.to_string()).collect();
        Self::checked(format!("T_{n}"), names, table, Provenance::Trivial { n }, n)
    }

    /// `x ▷ y = y^-1 x y`.
    pub fn conjugation(g: &FiniteGroup) -> Result<Self, QuandleError> {
        Self::over_group(
            g,
            format!("Conj({})", g.label()),
            Provenance::Conj {
                group: g.label().into(),
            },
            |x, y| g.conjugate(x, y),
        )
    }

    /// `x ▷ y = y x^-1 y`; the Takasaki quandle when `g` is abelian.
    pub fn core(g: &FiniteGroup) -> Result<Self, QuandleError> {
        Self::over_group(
            g,
            format!("Core({})", g.label()),
            Provenance::Core {
                group: g.label().into(),
            },
            |x, y| g.mul(g.mul(y, g.inv(x)), y),
        )
    }

    /// `R_n`: `a ▷ b = 2b - a mod n`.
    pub fn dihedral(n: usize) -> Result<Self, QuandleError> {
        if n < 2 {
            return Err(QuandleError::DihedralTooSmall(n));
        }
        let table = (0..n * n)
            .map(|i| {
                let (a, b) = (i / n, i % n);
                (2 * b + n - a) % n
            })
            .collect();
        let names = (0..n).map(|i| i.to_string()).collect();
        Self::checked(format!("R_{n}"), names, table, Provenance::Dihedral { n }, n)
    }

    /// `x ▷ y = t(x) + y - t(y)`, evaluated multiplicatively as
    /// `t(x) y t(y)^-1`. Abelian groups only.
    pub fn alexander(g: &FiniteGroup, t: &Automorphism) -> Result<Self, QuandleError> {
        if !g.is_abelian() {
            return Err(GroupError::NotAbelian(g.label().to_string()).into());
        }
        check_automorphism(g, t)?;
        Self::over_group(
            g,
            format!("A_{{{}}}({})", t.label(), g.label()),
            Provenance::Alexander {
                group: g.label().into(),
                automorphism: t.label().into(),
            },
            |x, y| g.mul(g.mul(t.apply(x), y), g.inv(t.apply(y))),
        )
    }

    /// `x ▷ y = phi(x y^-1) y`.
    pub fn generalized_alexander(
        g: &FiniteGroup,
        phi: &Automorphism,
    ) -> Result<Self, QuandleError> {
        check_automorphism(g, phi)?;
        Self::over_group(
            g,
            format!("GA_{{{}}}({})", phi.label(), g.label()),
            Provenance::GenAlexander {
                group: g.label().into(),
                automorphism: phi.label().into(),
            },
            |x, y| g.mul(phi.apply(g.mul(x, g.inv(y))), y),
        )
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn rhd(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn check_element(&self, x: usize) -> Result<(), QuandleError> {
        if x < self.order {
            Ok(())
        } else {
            Err(QuandleError::ElementOutOfRange {
                index: x,
                order: self.order,
            })
        }
    }

    /// `(x ▷ y) ▷ y = x` for all `x, y`.
    pub fn is_involutory(&self) -> bool {
        (0..self.order).all(|x| (0..self.order).all(|y| self.rhd(self.rhd(x, y), y) == x))
    }

    /// `x ▷ y = x` for all `x, y`.
    pub fn is_trivial(&self) -> bool {
        (0..self.order).all(|x| (0..self.order).all(|y| self.rhd(x, y) == x))
    }

    pub fn axiom_report(&self) -> AxiomReport {
        axioms::check_flat(&self.table, self.order)
    }
}

fn check_automorphism(g: &FiniteGroup, t: &Automorphism) -> Result<(), QuandleError> {
    if t.map().len() != g.order() {
        return Err(GroupError::NotAutomorphism(format!(
            "defined on {} elements, group has {}",
            t.map().len(),
            g.order()
        ))
        .into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> FiniteGroup {
        FiniteGroup::cyclic(n).unwrap()
    }

    #[test]
    fn trivial_quandles() {
        let q = Quandle::trivial(1).unwrap();
        assert_eq!(q.rhd(0, 0), 0);
        let q5 = Quandle::trivial(5).unwrap();
        assert!(q5.is_trivial());
        assert!((0..5).all(|y| (0..5).all(|x| q5.rhd(x, y) == x)));
        assert_eq!(Quandle::trivial(0), Err(QuandleError::Empty));
    }

    #[test]
    fn conjugation_quandles() {
        assert!(Quandle::conjugation(&z(6)).unwrap().is_trivial());
        let s4 = FiniteGroup::symmetric(4).unwrap();
        let q = Quandle::conjugation(&s4).unwrap();
        assert_eq!(q.order(), 24);
        assert!(q.axiom_report().passed());
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert!(!Quandle::conjugation(&s3).unwrap().is_involutory());
    }

    #[test]
    fn core_quandles() {
        let z7 = z(7);
        let q = Quandle::core(&z7).unwrap();
        assert!((0..7).all(|x| (0..7).all(|y| q.rhd(x, y) == (2 * y + 7 - x) % 7)));
        assert_eq!(q.rows(), Quandle::dihedral(7).unwrap().rows());
        assert_eq!(
            Quandle::core(&z(5)).unwrap().rows(),
            Quandle::dihedral(5).unwrap().rows()
        );
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert!(Quandle::core(&s3).unwrap().is_involutory());
    }

    #[test]
    fn dihedral_quandles() {
        assert!(Quandle::dihedral(2).unwrap().is_trivial());
        let r3 = Quandle::dihedral(3).unwrap();
        assert!(r3.is_involutory());
        for n in 2..=12 {
            assert!(Quandle::dihedral(n).unwrap().is_involutory());
        }
        assert_eq!(Quandle::dihedral(1), Err(QuandleError::DihedralTooSmall(1)));
    }

    #[test]
    fn alexander_quandles() {
        let z4 = z(4);
        let g = FiniteGroup::direct_product(&z4, &z4).unwrap();
        let neg = Automorphism::inversion(&g).unwrap();
        assert_eq!(
            Quandle::alexander(&g, &neg).unwrap().rows(),
            Quandle::core(&g).unwrap().rows()
        );
        let id = Automorphism::identity(&g);
        assert!(Quandle::alexander(&g, &id).unwrap().is_trivial());

        let t1 = Automorphism::from_matrix(&g, [[0, 1], [3, 2]]).unwrap();
        let q1 = Quandle::alexander(&g, &t1).unwrap();
        assert_eq!(q1.order(), 16);
        // A_t is involutory exactly when t^2 = id.
        let t2 = Automorphism::from_matrix(&g, [[1, 2], [2, 1]]).unwrap();
        assert!(!q1.is_involutory());
        assert!(Quandle::alexander(&g, &t2).unwrap().is_involutory());

        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert!(matches!(
            Quandle::alexander(&s3, &Automorphism::identity(&s3)),
            Err(QuandleError::Group(GroupError::NotAbelian(_)))
        ));
    }

    #[test]
    fn generalized_alexander_matches_alexander_on_abelian_groups() {
        let g = FiniteGroup::direct_product(&z(2), &z(4)).unwrap();
        for t in crate::group::enumerate_automorphisms(&g).unwrap() {
            assert_eq!(
                Quandle::generalized_alexander(&g, &t).unwrap().rows(),
                Quandle::alexander(&g, &t).unwrap().rows()
            );
        }
    }

    #[test]
    fn dihedral_group_inner_by_r() {
        let d6 = FiniteGroup::dihedral(6).unwrap();
        let r = d6.element_by_name("r").unwrap();
        let phi = Automorphism::inner(&d6, r).unwrap();
        let q = Quandle::generalized_alexander(&d6, &phi).unwrap();
        for i in 0..6 {
            for j in 0..6 {
                // r^i ▷ r^j s = r^(i+2)
                assert_eq!(q.rhd(i, 6 + j), (i + 2) % 6);
                assert_eq!(q.rhd(i, j), i);
            }
        }
    }

    #[test]
    fn from_table_rejects_broken_tables() {
        let names: Vec<String> = (0..2).map(|i| i.to_string()).collect();
        let err = Quandle::from_table("bad", names, &[vec![1, 0], vec![0, 1]], Provenance::Raw)
            .unwrap_err();
        assert!(matches!(err, QuandleError::Axiom(AxiomWitness::Idempotency { x: 0, .. })));
    }
}
