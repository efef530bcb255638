//! Finite groups stored as explicit multiplication tables.
//!
//! Elements are dense indices `0..order`. Every constructor fills the full
//! table once and the rest of the crate only ever looks things up in it.

mod automorphism;
mod subgroup;

pub use automorphism::{enumerate_automorphisms, enumerate_automorphisms_capped, Automorphism};
pub use subgroup::{
    commutator_subgroup_with, conjugacy_classes, cosets, fixed_point_subgroup,
    image_id_minus_t, is_normal, subgroup_generated, CosetPartition, CosetSide, Subgroup,
};

use std::fmt;

use thiserror::Error;

/// Largest `n` accepted by [`FiniteGroup::symmetric`].
pub const DEFAULT_SYMMETRIC_CAP: usize = 6;

/// Largest group order accepted by [`enumerate_automorphisms`].
pub const DEFAULT_AUTOMORPHISM_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group order must be positive")]
    EmptyGroup,
    #[error("dihedral group D_{0} is not supported (need m >= 2)")]
    DihedralTooSmall(usize),
    #[error("symmetric group S_{n} exceeds the configured cap S_{cap}")]
    SymmetricCapExceeded { n: usize, cap: usize },
    #[error("group of order {order} exceeds the automorphism enumeration cap {cap}")]
    AutomorphismCapExceeded { order: usize, cap: usize },
    #[error("element index {index} out of range for a group of order {order}")]
    ElementOutOfRange { index: usize, order: usize },
    #[error("no element named {0:?}")]
    UnknownElement(String),
    #[error("malformed multiplication table: {0}")]
    MalformedTable(String),
    #[error("group axiom violated: {0}")]
    AxiomViolation(String),
    #[error("group {0} is not abelian")]
    NotAbelian(String),
    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("subgroup belongs to a group of order {found}, expected {expected}")]
    ParentMismatch { expected: usize, found: usize },
}

/// How a group was assembled. Drives display labels, canonical DSL strings
/// and coordinate-based automorphisms such as matrices on `Z_n x Z_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Product(Box<Structure>, Box<Structure>),
    Table,
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Structure::Cyclic(n) => write!(f, "Z{n}"),
            Structure::Dihedral(m) => write!(f, "D{m}"),
            Structure::Symmetric(n) => write!(f, "S{n}"),
            Structure::Product(a, b) => write!(f, "{a}x{b}"),
            Structure::Table => write!(f, "table"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<usize>,
    identity: usize,
    inv: Vec<usize>,
    label: String,
    names: Vec<String>,
    structure: Structure,
    abelian: bool,
}

impl FiniteGroup {
    /// Builds a group from a full multiplication table and checks every group
    /// axiom by exhaustive scan.
    pub fn from_table(
        label: impl Into<String>,
        names: Vec<String>,
        table: Vec<Vec<usize>>,
    ) -> Result<Self, GroupError> {
        let order = table.len();
        if order == 0 {
            return Err(GroupError::EmptyGroup);
        }
        if names.len() != order {
            return Err(GroupError::MalformedTable(format!(
                "{} names for {} elements",
                names.len(),
                order
            )));
        }
        let mut mul = Vec::with_capacity(order * order);
        for (i, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::MalformedTable(format!(
                    "row {i} has length {}, expected {order}",
                    row.len()
                )));
            }
            for &v in row {
                if v >= order {
                    return Err(GroupError::ElementOutOfRange { index: v, order });
                }
            }
            mul.extend_from_slice(row);
        }
        let group = Self::assemble(label.into(), names, mul, Structure::Table)?;
        group.check_axioms()?;
        Ok(group)
    }

    /// Locates the identity and inverses. Constructors with a known
    /// multiplication rule skip the cubic associativity scan; call
    /// [`FiniteGroup::check_axioms`] for that.
    fn assemble(
        label: String,
        names: Vec<String>,
        mul: Vec<usize>,
        structure: Structure,
    ) -> Result<Self, GroupError> {
        let order = names.len();
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| mul[e * order + x] == x && mul[x * order + e] == x))
            .ok_or_else(|| GroupError::AxiomViolation("no two-sided identity".into()))?;
        let mut inv = vec![usize::MAX; order];
        for x in 0..order {
            let y = (0..order)
                .find(|&y| mul[x * order + y] == identity && mul[y * order + x] == identity)
                .ok_or_else(|| {
                    GroupError::AxiomViolation(format!("element {} has no inverse", names[x]))
                })?;
            inv[x] = y;
        }
        let abelian = (0..order).all(|x| (0..x).all(|y| mul[x * order + y] == mul[y * order + x]));
        let group = FiniteGroup {
            order,
            mul,
            identity,
            inv,
            label,
            names,
            structure,
            abelian,
        };
        Ok(group)
    }

    /// Full table scan: Latin square rows/columns, identity, inverses and
    /// associativity.
    pub fn check_axioms(&self) -> Result<(), GroupError> {
        let n = self.order;
        for x in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for y in 0..n {
                let r = self.mul(x, y);
                let c = self.mul(y, x);
                if row_seen[r] {
                    return Err(GroupError::AxiomViolation(format!(
                        "row of {} repeats {}",
                        self.names[x], self.names[r]
                    )));
                }
                if col_seen[c] {
                    return Err(GroupError::AxiomViolation(format!(
                        "column of {} repeats {}",
                        self.names[x], self.names[c]
                    )));
                }
                row_seen[r] = true;
                col_seen[c] = true;
            }
            if self.mul(self.identity, x) != x || self.mul(x, self.identity) != x {
                return Err(GroupError::AxiomViolation(format!(
                    "identity fails at {}",
                    self.names[x]
                )));
            }
            let xi = self.inv[x];
            if self.mul(x, xi) != self.identity || self.mul(xi, x) != self.identity {
                return Err(GroupError::AxiomViolation(format!(
                    "inverse fails at {}",
                    self.names[x]
                )));
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = self.mul(x, y);
                for z in 0..n {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return Err(GroupError::AxiomViolation(format!(
                            "associativity fails at ({}, {}, {})",
                            self.names[x], self.names[y], self.names[z]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `Z/nZ` under addition; element `i` is named `"i"`.
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::EmptyGroup);
        }
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                mul.push((a + b) % n);
            }
        }
        let names = (0..n).map(|i| i.to_string()).collect();
        Self::assemble(format!("Z{n}"), names, mul, Structure::Cyclic(n))
    }

    /// Componentwise product. The pair `(x, y)` gets index `x * |b| + y`, and
    /// nested products flatten their names, so `Z2xZ2xZ2` names read `(0,1,1)`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<Self, GroupError> {
        let (na, nb) = (a.order, b.order);
        let n = na * nb;
        let mut mul = Vec::with_capacity(n * n);
        for x in 0..n {
            let (xa, xb) = (x / nb, x % nb);
            for y in 0..n {
                let (ya, yb) = (y / nb, y % nb);
                mul.push(a.mul(xa, ya) * nb + b.mul(xb, yb));
            }
        }
        let names = (0..n)
            .map(|x| {
                format!(
                    "({},{})",
                    a.tuple_part(x / nb),
                    b.tuple_part(x % nb)
                )
            })
            .collect();
        let structure = Structure::Product(Box::new(a.structure.clone()), Box::new(b.structure.clone()));
        Self::assemble(format!("{}x{}", a.label, b.label), names, mul, structure)
    }

    fn tuple_part(&self, x: usize) -> &str {
        let name = &self.names[x];
        if matches!(self.structure, Structure::Product(..)) {
            &name[1..name.len() - 1]
        } else {
            name
        }
    }

    /// Dihedral group of order `2m`. Index `i` is `r^i`, index `m + i` is
    /// `r^i s`, with `s r s = r^-1`.
    pub fn dihedral(m: usize) -> Result<Self, GroupError> {
        if m < 2 {
            return Err(GroupError::DihedralTooSmall(m));
        }
        let n = 2 * m;
        let mut mul = Vec::with_capacity(n * n);
        for x in 0..n {
            let (a, xs) = (x % m, x >= m);
            for y in 0..n {
                let (b, ys) = (y % m, y >= m);
                // r^a s^xs . r^b s^ys = r^(a +- b) s^(xs + ys)
                let rot = if xs { (a + m - b) % m } else { (a + b) % m };
                let refl = xs != ys;
                mul.push(if refl { m + rot } else { rot });
            }
        }
        let rpow = |i: usize| match i {
            0 => String::new(),
            1 => "r".to_string(),
            _ => format!("r^{i}"),
        };
        let names = (0..n)
            .map(|x| {
                let i = x % m;
                match (x >= m, i) {
                    (false, 0) => "e".to_string(),
                    (false, _) => rpow(i),
                    (true, _) => format!("{}s", rpow(i)),
                }
            })
            .collect();
        Self::assemble(format!("D{m}"), names, mul, Structure::Dihedral(m))
    }

    /// Symmetric group on `{1..n}` with the default cap.
    pub fn symmetric(n: usize) -> Result<Self, GroupError> {
        Self::symmetric_capped(n, DEFAULT_SYMMETRIC_CAP)
    }

    /// Permutations of `{1..n}` in lexicographic order (identity first),
    /// composed right to left: `(p q)(i) = p(q(i))`.
    pub fn symmetric_capped(n: usize, cap: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::EmptyGroup);
        }
        if n > cap {
            return Err(GroupError::SymmetricCapExceeded { n, cap });
        }
        let perms = lexicographic_permutations(n);
        let index: std::collections::HashMap<&[usize], usize> =
            perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
        let order = perms.len();
        let mut mul = Vec::with_capacity(order * order);
        let mut buf = vec![0; n];
        for p in &perms {
            for q in &perms {
                for i in 0..n {
                    buf[i] = p[q[i]];
                }
                mul.push(index[buf.as_slice()]);
            }
        }
        let names = perms.iter().map(|p| cycle_notation(p)).collect();
        Self::assemble(format!("S{n}"), names, mul, Structure::Symmetric(n))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn structure(&self) -> &Structure {
        &self.structure
    }

    pub fn is_abelian(&self) -> bool {
        self.abelian
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Looks an element up by display name, ignoring whitespace and
    /// surrounding quotes.
    pub fn element_by_name(&self, name: &str) -> Result<usize, GroupError> {
        let wanted: String = name
            .trim()
            .trim_matches(|c| c == '"' || c == '\'')
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect();
        let aliases: &[&str] = match wanted.as_str() {
            "e" | "id" | "1" | "()" => &["e", "id"],
            _ => &[],
        };
        self.names
            .iter()
            .position(|n| *n == wanted)
            .or_else(|| {
                aliases
                    .iter()
                    .find_map(|a| self.names.iter().position(|n| n == a))
            })
            .ok_or(GroupError::UnknownElement(name.to_string()))
    }

    pub fn check_element(&self, x: usize) -> Result<(), GroupError> {
        if x < self.order {
            Ok(())
        } else {
            Err(GroupError::ElementOutOfRange {
                index: x,
                order: self.order,
            })
        }
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, x))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// `[a, b] = a b a^-1 b^-1`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ab_ai = self.mul(ab, self.inv(a));
        self.mul(ab_ai, self.inv(b))
    }

    /// `b^-1 x b`.
    pub fn conjugate(&self, x: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(b), x), b)
    }

    /// Sorted multiset of element orders; a cheap isomorphism invariant.
    pub fn order_census(&self) -> Vec<usize> {
        let mut orders: Vec<usize> = self.elements().map(|x| self.element_order(x)).collect();
        orders.sort_unstable();
        orders
    }

    pub fn center(&self) -> Vec<usize> {
        self.elements()
            .filter(|&z| self.elements().all(|x| self.mul(z, x) == self.mul(x, z)))
            .collect()
    }

    /// Greedy generating set: repeatedly adds an element of largest order that
    /// is not yet in the generated subgroup.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut by_order: Vec<usize> = self.elements().collect();
        by_order.sort_by_key(|&x| (std::cmp::Reverse(self.element_order(x)), x));
        let mut gens = Vec::new();
        let mut span = vec![false; self.order];
        span[self.identity] = true;
        for x in by_order {
            if span[x] {
                continue;
            }
            gens.push(x);
            let closure = subgroup::closure(self, &gens);
            span.iter_mut().for_each(|s| *s = false);
            for y in closure {
                span[y] = true;
            }
            if span.iter().all(|&s| s) {
                break;
            }
        }
        gens
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.label, self.order)
    }
}

fn lexicographic_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        // next permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
    }
    out
}

/// Cycle notation on `{1..n}`, each cycle starting at its smallest point,
/// fixed points omitted; the identity is `id`.
fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            out.push_str(&(i + 1).to_string());
            i = p[i];
        }
        out.push(')');
    }
    if out.is_empty() {
        "id".to_string()
    } else {
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_basics() {
        let z1 = FiniteGroup::cyclic(1).unwrap();
        assert_eq!(z1.order(), 1);
        assert_eq!(z1.identity(), 0);

        let z4 = FiniteGroup::cyclic(4).unwrap();
        assert_eq!(z4.mul(2, 3), 1);
        assert_eq!(z4.inv(1), 3);

        let z5 = FiniteGroup::cyclic(5).unwrap();
        assert!((1..5).all(|x| z5.element_order(x) == 5));

        assert_eq!(FiniteGroup::cyclic(0), Err(GroupError::EmptyGroup));
    }

    #[test]
    fn direct_products() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let v4 = FiniteGroup::direct_product(&z2, &z2).unwrap();
        assert_eq!(v4.order(), 4);
        assert!(v4.elements().all(|x| v4.inv(x) == x));
        assert_eq!(v4.name(3), "(1,1)");

        let z4 = FiniteGroup::cyclic(4).unwrap();
        let z44 = FiniteGroup::direct_product(&z4, &z4).unwrap();
        assert_eq!(z44.order(), 16);
        assert_eq!(z44.label(), "Z4xZ4");

        let z3 = FiniteGroup::cyclic(3).unwrap();
        let z6 = FiniteGroup::cyclic(6).unwrap();
        let z2z3 = FiniteGroup::direct_product(&z2, &z3).unwrap();
        assert_eq!(z2z3.order_census(), z6.order_census());

        let v8 = FiniteGroup::direct_product(&v4, &z2).unwrap();
        assert_eq!(v8.name(5), "(1,0,1)");
    }

    #[test]
    fn dihedral_groups() {
        let d2 = FiniteGroup::dihedral(2).unwrap();
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let v4 = FiniteGroup::direct_product(&z2, &z2).unwrap();
        assert!(d2.is_abelian());
        assert_eq!(d2.order_census(), v4.order_census());

        let d3 = FiniteGroup::dihedral(3).unwrap();
        assert!(!d3.is_abelian());
        let r = d3.element_by_name("r").unwrap();
        let s = d3.element_by_name("s").unwrap();
        let srs = d3.mul(d3.mul(s, r), s);
        assert_eq!(srs, d3.element_by_name("r^2").unwrap());

        let d6 = FiniteGroup::dihedral(6).unwrap();
        assert_eq!(d6.order(), 12);
        let center: Vec<&str> = d6.center().into_iter().map(|z| d6.name(z)).collect();
        assert_eq!(center, ["e", "r^3"]);

        assert_eq!(FiniteGroup::dihedral(1), Err(GroupError::DihedralTooSmall(1)));
    }

    #[test]
    fn symmetric_groups() {
        let s1 = FiniteGroup::symmetric(1).unwrap();
        assert_eq!(s1.order(), 1);

        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        let transpositions = s3.elements().filter(|&x| s3.element_order(x) == 2).count();
        assert_eq!(transpositions, 3);
        assert_eq!(s3.name(0), "id");

        let s4 = FiniteGroup::symmetric(4).unwrap();
        assert_eq!(s4.order(), 24);
        // (12)(23) = (123) when composing right to left
        let a = s4.element_by_name("(12)").unwrap();
        let b = s4.element_by_name("(23)").unwrap();
        assert_eq!(s4.name(s4.mul(a, b)), "(123)");

        assert!(matches!(
            FiniteGroup::symmetric(7),
            Err(GroupError::SymmetricCapExceeded { n: 7, cap: 6 })
        ));
        assert!(FiniteGroup::symmetric_capped(5, 4).is_err());
        assert_eq!(FiniteGroup::symmetric_capped(5, 5).unwrap().order(), 120);
    }

    #[test]
    fn constructed_groups_satisfy_axioms() {
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let z4 = FiniteGroup::cyclic(4).unwrap();
        for g in [
            FiniteGroup::cyclic(1).unwrap(),
            FiniteGroup::cyclic(12).unwrap(),
            FiniteGroup::direct_product(&z3, &z4).unwrap(),
            FiniteGroup::direct_product(&z4, &z4).unwrap(),
            FiniteGroup::dihedral(2).unwrap(),
            FiniteGroup::dihedral(7).unwrap(),
            FiniteGroup::symmetric(3).unwrap(),
            FiniteGroup::symmetric(4).unwrap(),
        ] {
            g.check_axioms().unwrap();
        }
    }

    #[test]
    fn from_table_rejects_non_groups() {
        let names = vec!["a".to_string(), "b".to_string()];
        let bad = FiniteGroup::from_table("bad", names.clone(), vec![vec![0, 1], vec![1, 1]]);
        assert!(matches!(bad, Err(GroupError::AxiomViolation(_))));
        let ragged = FiniteGroup::from_table("r", names.clone(), vec![vec![0, 1], vec![1]]);
        assert!(matches!(ragged, Err(GroupError::MalformedTable(_))));
        let ok = FiniteGroup::from_table("z2", names, vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(ok.structure(), &Structure::Table);
    }

    #[test]
    fn generating_sets_generate() {
        for g in [
            FiniteGroup::symmetric(4).unwrap(),
            FiniteGroup::dihedral(5).unwrap(),
            FiniteGroup::direct_product(
                &FiniteGroup::cyclic(2).unwrap(),
                &FiniteGroup::cyclic(4).unwrap(),
            )
            .unwrap(),
        ] {
            let gens = g.generating_set();
            assert_eq!(subgroup::closure(&g, &gens).len(), g.order());
        }
    }
}
