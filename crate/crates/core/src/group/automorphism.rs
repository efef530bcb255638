use super::{FiniteGroup, GroupError, Structure, DEFAULT_AUTOMORPHISM_CAP};

/// A multiplication-preserving permutation of a group's elements.
///
/// Equality and hashing look only at the map, not at the label.
#[derive(Debug, Clone)]
pub struct Automorphism {
    map: Vec<usize>,
    label: String,
}

impl PartialEq for Automorphism {
    fn eq(&self, other: &Self) -> bool {
        self.map == other.map
    }
}

impl Eq for Automorphism {}

impl std::hash::Hash for Automorphism {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.map.hash(state);
    }
}

impl Automorphism {
    /// Checks bijectivity and `map(xy) = map(x) map(y)` over the full table.
    pub fn new(g: &FiniteGroup, map: Vec<usize>) -> Result<Self, GroupError> {
        let label = format!("perm:{map:?}").replace(' ', "");
        Self::validated(g, map, label)
    }

    fn validated(g: &FiniteGroup, map: Vec<usize>, label: String) -> Result<Self, GroupError> {
        let n = g.order();
        if map.len() != n {
            return Err(GroupError::NotAutomorphism(format!(
                "map has {} entries, group has {n} elements",
                map.len()
            )));
        }
        let mut hit = vec![false; n];
        for &y in &map {
            g.check_element(y)?;
            if hit[y] {
                return Err(GroupError::NotAutomorphism(format!(
                    "{} is hit twice",
                    g.name(y)
                )));
            }
            hit[y] = true;
        }
        if map[g.identity()] != g.identity() {
            return Err(GroupError::NotAutomorphism("identity not fixed".into()));
        }
        for x in 0..n {
            for y in 0..n {
                if map[g.mul(x, y)] != g.mul(map[x], map[y]) {
                    return Err(GroupError::NotAutomorphism(format!(
                        "fails to preserve {} * {}",
                        g.name(x),
                        g.name(y)
                    )));
                }
            }
        }
        Ok(Automorphism { map, label })
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        Automorphism {
            map: g.elements().collect(),
            label: "id".into(),
        }
    }

    /// `x -> h x h^-1`.
    pub fn inner(g: &FiniteGroup, h: usize) -> Result<Self, GroupError> {
        g.check_element(h)?;
        let hi = g.inv(h);
        let map = g.elements().map(|x| g.mul(g.mul(h, x), hi)).collect();
        Self::validated(g, map, format!("inner:{}", g.name(h)))
    }

    /// `x -> x^-1`, i.e. negation in additive notation. Abelian groups only.
    pub fn inversion(g: &FiniteGroup) -> Result<Self, GroupError> {
        if !g.is_abelian() {
            return Err(GroupError::NotAbelian(g.label().to_string()));
        }
        let map = g.elements().map(|x| g.inv(x)).collect();
        Self::validated(g, map, "neg".into())
    }

    /// `x -> x^k` (`k x` additively). An automorphism of an abelian group
    /// exactly when `k` is coprime to the exponent.
    pub fn power_map(g: &FiniteGroup, k: usize) -> Result<Self, GroupError> {
        if !g.is_abelian() {
            return Err(GroupError::NotAbelian(g.label().to_string()));
        }
        let map = g.elements().map(|x| g.pow(x, k)).collect();
        Self::validated(g, map, format!("pow:{k}"))
    }

    /// `(x, y) -> (a x + b y, c x + d y)` on `Z_n x Z_n`, entries mod `n`.
    /// The matrix must be invertible over `Z_n`.
    pub fn from_matrix(g: &FiniteGroup, m: [[i64; 2]; 2]) -> Result<Self, GroupError> {
        let n = match g.structure() {
            Structure::Product(a, b) => match (a.as_ref(), b.as_ref()) {
                (Structure::Cyclic(p), Structure::Cyclic(q)) if p == q => *p,
                _ => {
                    return Err(GroupError::NotAutomorphism(format!(
                        "matrix automorphisms need Z_n x Z_n, got {}",
                        g.label()
                    )))
                }
            },
            _ => {
                return Err(GroupError::NotAutomorphism(format!(
                    "matrix automorphisms need Z_n x Z_n, got {}",
                    g.label()
                )))
            }
        };
        let ni = n as i64;
        let det = (m[0][0] * m[1][1] - m[0][1] * m[1][0]).rem_euclid(ni);
        if gcd(det as u64, n as u64) != 1 {
            return Err(GroupError::NotAutomorphism(format!(
                "determinant {det} is not a unit mod {n}"
            )));
        }
        let map = (0..n * n)
            .map(|i| {
                let (x, y) = ((i / n) as i64, (i % n) as i64);
                let u = (m[0][0] * x + m[0][1] * y).rem_euclid(ni) as usize;
                let v = (m[1][0] * x + m[1][1] * y).rem_euclid(ni) as usize;
                u * n + v
            })
            .collect();
        let label = format!(
            "matrix:[[{},{}],[{},{}]]",
            m[0][0], m[0][1], m[1][0], m[1][1]
        );
        Self::validated(g, map, label)
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// Spec string that rebuilds this automorphism.
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &y)| i == y)
    }

    /// `self . other`, applying `other` first.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            map: other.map.iter().map(|&x| self.map[x]).collect(),
            label: format!("({})*({})", self.label, other.label),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut map = vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            map[y] = x;
        }
        Automorphism {
            label: format!("({})^-1", self.label),
            map,
        }
    }

    pub(crate) fn check_group(&self, g: &FiniteGroup) -> Result<(), GroupError> {
        if self.map.len() == g.order() {
            Ok(())
        } else {
            Err(GroupError::NotAutomorphism(format!(
                "defined on {} elements, group has {}",
                self.map.len(),
                g.order()
            )))
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn enumerate_automorphisms(g: &FiniteGroup) -> Result<Vec<Automorphism>, GroupError> {
    enumerate_automorphisms_capped(g, DEFAULT_AUTOMORPHISM_CAP)
}

/// All automorphisms, found by backtracking over images of a greedy
/// generating set. Output is sorted by map, so for groups whose identity is
/// element 0 the identity automorphism comes first.
pub fn enumerate_automorphisms_capped(
    g: &FiniteGroup,
    cap: usize,
) -> Result<Vec<Automorphism>, GroupError> {
    if g.order() > cap {
        return Err(GroupError::AutomorphismCapExceeded {
            order: g.order(),
            cap,
        });
    }
    let gens = g.generating_set();
    let orders: Vec<usize> = gens.iter().map(|&x| g.element_order(x)).collect();
    let candidates: Vec<Vec<usize>> = orders
        .iter()
        .map(|&k| g.elements().filter(|&y| g.element_order(y) == k).collect())
        .collect();
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(gens.len());
    search(g, &gens, &candidates, &mut images, &mut out);
    out.sort_by(|a, b| a.map.cmp(&b.map));
    Ok(out)
}

fn search(
    g: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    out: &mut Vec<Automorphism>,
) {
    let depth = images.len();
    if depth == gens.len() {
        if let Some(map) = extend(g, gens, images) {
            let label = format!("perm:{map:?}").replace(' ', "");
            out.push(Automorphism { map, label });
        }
        return;
    }
    for &y in &candidates[depth] {
        if images.contains(&y) {
            continue;
        }
        images.push(y);
        search(g, gens, candidates, images, out);
        images.pop();
    }
}

/// Extends generator images to the whole group by `f(x s) = f(x) f(s)`,
/// rejecting conflicts and non-injective results.
fn extend(g: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let n = g.order();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[g.identity()] = g.identity();
    used[g.identity()] = true;
    let mut queue = std::collections::VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        for (&s, &fs) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let fy = g.mul(map[x], fs);
            if map[y] == usize::MAX {
                if used[fy] {
                    return None;
                }
                map[y] = fy;
                used[fy] = true;
                queue.push_back(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn klein() -> FiniteGroup {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        FiniteGroup::direct_product(&z2, &z2).unwrap()
    }

    #[test]
    fn automorphism_counts() {
        // |Aut(Z_n)| = phi(n)
        for (n, phi) in [(1, 1), (5, 4), (8, 4), (9, 6), (12, 4), (16, 8)] {
            let g = FiniteGroup::cyclic(n).unwrap();
            assert_eq!(enumerate_automorphisms(&g).unwrap().len(), phi, "Z{n}");
        }
        assert_eq!(enumerate_automorphisms(&klein()).unwrap().len(), 6);
        let trivial = FiniteGroup::cyclic(1).unwrap();
        let auts = enumerate_automorphisms(&trivial).unwrap();
        assert_eq!(auts.len(), 1);
        assert!(auts[0].is_identity());
    }

    #[test]
    fn enumeration_respects_cap() {
        let s4 = FiniteGroup::symmetric(4).unwrap();
        assert!(matches!(
            enumerate_automorphisms(&s4),
            Err(GroupError::AutomorphismCapExceeded { order: 24, cap: 16 })
        ));
        // Aut(S3) = Inn(S3) has order 6
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(enumerate_automorphisms(&s3).unwrap().len(), 6);
    }

    #[test]
    fn enumeration_is_a_group() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let g = FiniteGroup::direct_product(&z2, &z4).unwrap();
        let auts = enumerate_automorphisms(&g).unwrap();
        assert_eq!(auts.len(), 8);
        assert!(auts[0].is_identity());
        for a in &auts {
            Automorphism::new(&g, a.map().to_vec()).unwrap();
            assert!(auts.iter().any(|b| b.map() == a.inverse().map()));
            for b in &auts {
                let ab = a.compose(b);
                assert!(auts.iter().any(|c| c.map() == ab.map()));
            }
        }
    }

    #[test]
    fn inner_automorphisms() {
        let s4 = FiniteGroup::symmetric(4).unwrap();
        assert!(Automorphism::inner(&s4, s4.identity()).unwrap().is_identity());
        let z6 = FiniteGroup::cyclic(6).unwrap();
        assert!(z6.elements().all(|h| Automorphism::inner(&z6, h).unwrap().is_identity()));
    }

    #[test]
    fn rejects_non_automorphisms() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        assert!(Automorphism::new(&z4, vec![0, 2, 1, 3]).is_err());
        assert!(Automorphism::new(&z4, vec![0, 3, 2, 1]).is_ok());
        assert!(Automorphism::new(&z4, vec![0, 1, 2]).is_err());
        assert!(Automorphism::power_map(&z4, 2).is_err());
    }

    #[test]
    fn matrices_on_z4_squared() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let g = FiniteGroup::direct_product(&z4, &z4).unwrap();
        let t1 = Automorphism::from_matrix(&g, [[0, 1], [3, 2]]).unwrap();
        let t2 = Automorphism::from_matrix(&g, [[1, 2], [2, 1]]).unwrap();
        // t1(1,0) = (0,3)
        assert_eq!(g.name(t1.apply(4)), "(0,3)");
        assert!(!t1.compose(&t1).is_identity());
        assert!(t2.compose(&t2).is_identity());
        assert!(Automorphism::from_matrix(&g, [[2, 0], [0, 1]]).is_err());
        assert!(Automorphism::from_matrix(&z4, [[1, 0], [0, 1]]).is_err());
        let neg = Automorphism::inversion(&g).unwrap();
        assert_eq!(neg.map(), Automorphism::from_matrix(&g, [[3, 0], [0, 3]]).unwrap().map());
    }
}
