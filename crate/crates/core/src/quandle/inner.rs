use std::collections::{HashSet, VecDeque};

use super::{Quandle, QuandleError};

pub const DEFAULT_INNER_DEGREE_CAP: usize = 64;
pub const DEFAULT_INNER_SIZE_CAP: usize = 1_000_000;

/// `R_b : x -> x ▷ b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightTranslation {
    pub b: usize,
    pub perm: Vec<usize>,
}

impl RightTranslation {
    pub fn apply(&self, x: usize) -> usize {
        self.perm[x]
    }

    pub fn is_bijection(&self) -> bool {
        let mut seen = vec![false; self.perm.len()];
        self.perm
            .iter()
            .all(|&y| y < seen.len() && !std::mem::replace(&mut seen[y], true))
    }

    /// `R_b(x ▷ y) = R_b(x) ▷ R_b(y)` for all `x, y`.
    pub fn is_endomorphism_of(&self, q: &Quandle) -> bool {
        let n = q.order();
        (0..n).all(|x| {
            (0..n).all(|y| self.apply(q.rhd(x, y)) == q.rhd(self.apply(x), self.apply(y)))
        })
    }

    pub fn is_automorphism_of(&self, q: &Quandle) -> bool {
        self.perm.len() == q.order() && self.is_bijection() && self.is_endomorphism_of(q)
    }
}

/// A permutation group given by generators and its full member list.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Vec<usize>>,
    members: Vec<Vec<usize>>,
}

impl PermGroup {
    /// Breadth-first closure of `generators` under composition. Inverses come
    /// for free because every permutation of a finite set has finite order.
    pub fn closure(
        degree: usize,
        generators: Vec<Vec<usize>>,
        size_cap: usize,
    ) -> Result<Self, QuandleError> {
        let identity: Vec<usize> = (0..degree).collect();
        let mut seen: HashSet<Vec<usize>> = HashSet::from([identity.clone()]);
        let mut members = vec![identity.clone()];
        let mut queue = VecDeque::from([identity]);
        let mut distinct_gens: Vec<&Vec<usize>> = Vec::new();
        for g in &generators {
            if !distinct_gens.contains(&g) {
                distinct_gens.push(g);
            }
        }
        while let Some(p) = queue.pop_front() {
            for g in &distinct_gens {
                let next: Vec<usize> = p.iter().map(|&x| g[x]).collect();
                if seen.insert(next.clone()) {
                    if members.len() >= size_cap {
                        return Err(QuandleError::ClosureCapExceeded { cap: size_cap });
                    }
                    members.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            members,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[Vec<usize>] {
        &self.members
    }

    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }

    pub fn contains(&self, p: &[usize]) -> bool {
        self.members.iter().any(|m| m == p)
    }

    /// `{g(x) : g in group}`, sorted.
    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut hit = vec![false; self.degree];
        for m in &self.members {
            hit[m[x]] = true;
        }
        (0..self.degree).filter(|&y| hit[y]).collect()
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if !assigned[x] {
                let orbit = self.orbit(x);
                for &y in &orbit {
                    assigned[y] = true;
                }
                out.push(orbit);
            }
        }
        out
    }
}

impl Quandle {
    pub fn right_translation(&self, b: usize) -> Result<RightTranslation, QuandleError> {
        self.check_element(b)?;
        Ok(RightTranslation {
            b,
            perm: (0..self.order()).map(|x| self.rhd(x, b)).collect(),
        })
    }

    pub fn right_translations(&self) -> Vec<RightTranslation> {
        (0..self.order())
            .map(|b| RightTranslation {
                b,
                perm: (0..self.order()).map(|x| self.rhd(x, b)).collect(),
            })
            .collect()
    }

    /// `Inn(Q) = <R_b : b in Q>` with the default caps.
    pub fn inner_group(&self) -> Result<PermGroup, QuandleError> {
        self.inner_group_capped(DEFAULT_INNER_DEGREE_CAP, DEFAULT_INNER_SIZE_CAP)
    }

    pub fn inner_group_capped(
        &self,
        degree_cap: usize,
        size_cap: usize,
    ) -> Result<PermGroup, QuandleError> {
        if self.order() > degree_cap {
            return Err(QuandleError::DegreeCapExceeded {
                order: self.order(),
                cap: degree_cap,
            });
        }
        let gens = self.right_translations().into_iter().map(|r| r.perm).collect();
        PermGroup::closure(self.order(), gens, size_cap)
    }

    /// Least set containing `x` and closed under every right translation,
    /// found by breadth-first search. Sorted.
    pub fn forward_orbit(&self, x: usize) -> Result<Vec<usize>, QuandleError> {
        self.check_element(x)?;
        let n = self.order();
        let mut hit = vec![false; n];
        hit[x] = true;
        let mut queue = VecDeque::from([x]);
        while let Some(s) = queue.pop_front() {
            for y in 0..n {
                let t = self.rhd(s, y);
                if !hit[t] {
                    hit[t] = true;
                    queue.push_back(t);
                }
            }
        }
        Ok((0..n).filter(|&y| hit[y]).collect())
    }
}
