use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{Automorphism, FiniteGroup, GroupError};

/// A subgroup of a particular parent group, stored as a sorted member list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    parent_order: usize,
    members: Vec<usize>,
}

impl Subgroup {
    /// Validates that `members` contains the identity and is closed under
    /// multiplication and inversion.
    pub fn from_members(g: &FiniteGroup, members: &[usize]) -> Result<Self, GroupError> {
        let mut mask = vec![false; g.order()];
        for &x in members {
            g.check_element(x)?;
            mask[x] = true;
        }
        if !mask[g.identity()] {
            return Err(GroupError::NotSubgroup("identity missing".into()));
        }
        let sorted: Vec<usize> = (0..g.order()).filter(|&x| mask[x]).collect();
        for &a in &sorted {
            if !mask[g.inv(a)] {
                return Err(GroupError::NotSubgroup(format!(
                    "inverse of {} missing",
                    g.name(a)
                )));
            }
            for &b in &sorted {
                if !mask[g.mul(a, b)] {
                    return Err(GroupError::NotSubgroup(format!(
                        "{} * {} leaves the set",
                        g.name(a),
                        g.name(b)
                    )));
                }
            }
        }
        Ok(Subgroup {
            parent_order: g.order(),
            members: sorted,
        })
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        Subgroup {
            parent_order: g.order(),
            members: vec![g.identity()],
        }
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Subgroup {
            parent_order: g.order(),
            members: g.elements().collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn index(&self) -> usize {
        self.parent_order / self.members.len()
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    fn check_parent(&self, g: &FiniteGroup) -> Result<(), GroupError> {
        if self.parent_order == g.order() {
            Ok(())
        } else {
            Err(GroupError::ParentMismatch {
                expected: g.order(),
                found: self.parent_order,
            })
        }
    }
}

/// Closure of `gens` under multiplication, returned sorted. In a finite group
/// closure under products already gives inverses.
pub(crate) fn closure(g: &FiniteGroup, gens: &[usize]) -> Vec<usize> {
    let mut mask = vec![false; g.order()];
    mask[g.identity()] = true;
    let mut queue = VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        for &s in gens {
            let y = g.mul(x, s);
            if !mask[y] {
                mask[y] = true;
                queue.push_back(y);
            }
        }
    }
    (0..g.order()).filter(|&x| mask[x]).collect()
}

/// Smallest subgroup containing `gens`; the empty set generates `{e}`.
pub fn subgroup_generated(g: &FiniteGroup, gens: &[usize]) -> Result<Subgroup, GroupError> {
    for &x in gens {
        g.check_element(x)?;
    }
    Ok(Subgroup {
        parent_order: g.order(),
        members: closure(g, gens),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CosetSide {
    /// Blocks `xS`.
    #[default]
    Left,
    /// Blocks `Sx`.
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetPartition {
    pub subgroup: Subgroup,
    pub side: CosetSide,
    /// Sorted blocks, ordered by smallest member.
    pub blocks: Vec<Vec<usize>>,
}

impl CosetPartition {
    pub fn block_of(&self, x: usize) -> Option<&[usize]> {
        self.blocks
            .iter()
            .find(|b| b.binary_search(&x).is_ok())
            .map(Vec::as_slice)
    }
}

pub fn cosets(g: &FiniteGroup, s: &Subgroup, side: CosetSide) -> Result<CosetPartition, GroupError> {
    s.check_parent(g)?;
    let mut assigned = vec![false; g.order()];
    let mut blocks = Vec::with_capacity(s.index());
    for x in g.elements() {
        if assigned[x] {
            continue;
        }
        let mut block: Vec<usize> = s
            .members()
            .iter()
            .map(|&h| match side {
                CosetSide::Left => g.mul(x, h),
                CosetSide::Right => g.mul(h, x),
            })
            .collect();
        block.sort_unstable();
        for &y in &block {
            assigned[y] = true;
        }
        blocks.push(block);
    }
    Ok(CosetPartition {
        subgroup: s.clone(),
        side,
        blocks,
    })
}

/// True iff `x s x^-1` lies in `s` for every `x` in `g`.
pub fn is_normal(g: &FiniteGroup, s: &Subgroup) -> bool {
    s.parent_order == g.order()
        && g.elements().all(|x| {
            s.members()
                .iter()
                .all(|&m| s.contains(g.mul(g.mul(x, m), g.inv(x))))
        })
}

/// `N = <[h, g] : g in G>` with `[h, g] = h g h^-1 g^-1`.
pub fn commutator_subgroup_with(g: &FiniteGroup, h: usize) -> Result<Subgroup, GroupError> {
    g.check_element(h)?;
    let mut gens: Vec<usize> = g.elements().map(|x| g.commutator(h, x)).collect();
    gens.sort_unstable();
    gens.dedup();
    subgroup_generated(g, &gens)
}

pub fn fixed_point_subgroup(g: &FiniteGroup, phi: &Automorphism) -> Result<Subgroup, GroupError> {
    phi.check_group(g)?;
    let fixed: Vec<usize> = g.elements().filter(|&x| phi.apply(x) == x).collect();
    Subgroup::from_members(g, &fixed)
}

/// `{x - t(x)}` written multiplicatively as `{x t(x)^-1}`; needs an abelian
/// group so that `id - t` is an endomorphism.
pub fn image_id_minus_t(g: &FiniteGroup, t: &Automorphism) -> Result<Subgroup, GroupError> {
    if !g.is_abelian() {
        return Err(GroupError::NotAbelian(g.label().to_string()));
    }
    t.check_group(g)?;
    let image: Vec<usize> = g
        .elements()
        .map(|x| g.mul(x, g.inv(t.apply(x))))
        .collect();
    Subgroup::from_members(g, &image)
}

/// Classes of `x ~ b^-1 x b`, each sorted, ordered by smallest member.
pub fn conjugacy_classes(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; g.order()];
    let mut classes = Vec::new();
    for x in g.elements() {
        if assigned[x] {
            continue;
        }
        let mut class: Vec<usize> = g.elements().map(|b| g.conjugate(x, b)).collect();
        class.sort_unstable();
        class.dedup();
        for &y in &class {
            assigned[y] = true;
        }
        classes.push(class);
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(g: &FiniteGroup, xs: &[usize]) -> Vec<String> {
        xs.iter().map(|&x| g.name(x).to_string()).collect()
    }

    #[test]
    fn generated_subgroups() {
        let z6 = FiniteGroup::cyclic(6).unwrap();
        assert_eq!(subgroup_generated(&z6, &[2]).unwrap().members(), [0, 2, 4]);
        assert_eq!(subgroup_generated(&z6, &[]).unwrap().members(), [0]);
        assert!(matches!(
            subgroup_generated(&z6, &[6]),
            Err(GroupError::ElementOutOfRange { index: 6, order: 6 })
        ));
    }

    #[test]
    fn coset_partitions() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let s = subgroup_generated(&z4, &[2]).unwrap();
        let p = cosets(&z4, &s, CosetSide::Left).unwrap();
        assert_eq!(p.blocks, vec![vec![0, 2], vec![1, 3]]);

        let whole = Subgroup::whole(&z4);
        assert_eq!(cosets(&z4, &whole, CosetSide::Right).unwrap().blocks.len(), 1);

        let z6 = FiniteGroup::cyclic(6).unwrap();
        assert!(matches!(
            cosets(&z6, &s, CosetSide::Left),
            Err(GroupError::ParentMismatch { .. })
        ));
    }

    #[test]
    fn left_and_right_cosets_differ_for_non_normal() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let t = s3.element_by_name("(12)").unwrap();
        let h = subgroup_generated(&s3, &[t]).unwrap();
        let left = cosets(&s3, &h, CosetSide::Left).unwrap();
        let right = cosets(&s3, &h, CosetSide::Right).unwrap();
        assert_ne!(left.blocks, right.blocks);
        assert!(left.blocks.iter().all(|b| b.len() == 2));
    }

    #[test]
    fn normality() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let rot = subgroup_generated(&s3, &[s3.element_by_name("(123)").unwrap()]).unwrap();
        let refl = subgroup_generated(&s3, &[s3.element_by_name("(12)").unwrap()]).unwrap();
        assert!(is_normal(&s3, &rot));
        assert!(!is_normal(&s3, &refl));

        let z8 = FiniteGroup::cyclic(8).unwrap();
        for x in z8.elements() {
            assert!(is_normal(&z8, &subgroup_generated(&z8, &[x]).unwrap()));
        }
    }

    #[test]
    fn commutator_subgroups() {
        let s4 = FiniteGroup::symmetric(4).unwrap();
        assert_eq!(commutator_subgroup_with(&s4, s4.identity()).unwrap().order(), 1);

        let n = commutator_subgroup_with(&s4, s4.element_by_name("(12)").unwrap()).unwrap();
        assert_eq!(n.order(), 12);
        for x in s4.elements() {
            let order = s4.element_order(x);
            let is_three_cycle = order == 3;
            let is_double_transposition = order == 2 && s4.name(x).matches('(').count() == 2;
            if is_three_cycle || is_double_transposition {
                assert!(n.contains(x), "{}", s4.name(x));
            }
        }

        let d6 = FiniteGroup::dihedral(6).unwrap();
        let n = commutator_subgroup_with(&d6, d6.element_by_name("r").unwrap()).unwrap();
        assert_eq!(names(&d6, n.members()), ["e", "r^2", "r^4"]);
    }

    #[test]
    fn fixed_points() {
        let s4 = FiniteGroup::symmetric(4).unwrap();
        let id = Automorphism::identity(&s4);
        assert_eq!(fixed_point_subgroup(&s4, &id).unwrap().order(), 24);

        let t = s4.element_by_name("(12)").unwrap();
        let phi = Automorphism::inner(&s4, t).unwrap();
        let h = fixed_point_subgroup(&s4, &phi).unwrap();
        let mut got = names(&s4, h.members());
        got.sort();
        assert_eq!(got, ["(12)", "(12)(34)", "(34)", "id"]);
    }

    #[test]
    fn conjugacy_class_sizes() {
        let z5 = FiniteGroup::cyclic(5).unwrap();
        assert!(conjugacy_classes(&z5).iter().all(|c| c.len() == 1));

        let sizes = |g: &FiniteGroup| -> Vec<usize> {
            conjugacy_classes(g).iter().map(Vec::len).collect()
        };
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let mut s3_sizes = sizes(&s3);
        s3_sizes.sort();
        assert_eq!(s3_sizes, [1, 2, 3]);
        let s4 = FiniteGroup::symmetric(4).unwrap();
        let mut s4_sizes = sizes(&s4);
        s4_sizes.sort();
        assert_eq!(s4_sizes, [1, 3, 6, 6, 8]);
    }

    #[test]
    fn image_of_id_minus_t() {
        let z8 = FiniteGroup::cyclic(8).unwrap();
        let id = Automorphism::identity(&z8);
        assert_eq!(image_id_minus_t(&z8, &id).unwrap().members(), [0]);
        let triple = Automorphism::power_map(&z8, 3).unwrap();
        assert_eq!(image_id_minus_t(&z8, &triple).unwrap().members(), [0, 2, 4, 6]);

        let s3 = FiniteGroup::symmetric(3).unwrap();
        let id = Automorphism::identity(&s3);
        assert!(matches!(image_id_minus_t(&s3, &id), Err(GroupError::NotAbelian(_))));
    }
}
