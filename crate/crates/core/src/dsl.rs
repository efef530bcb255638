//! Group and automorphism spec strings.
//!
//! Groups: `Zn | Dm | Sn | spec x spec`, e.g. `Z4xZ4`, `D6`, `S4`, `Z2xZ2xZ3`.
//! Products associate to the left.
//!
//! Automorphisms: `id`, `inner:<element-name>`, `matrix:[[a,b],[c,d]]`
//! (on `Z_n x Z_n`), `perm:[i0,i1,...]` (image of each element index), `neg`
//! (`x -> -x`, abelian only) and `pow:k` (`x -> k x`, abelian only).

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::group::{Automorphism, FiniteGroup, GroupError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("parse error at position {pos}: {message}")]
    Parse { pos: usize, message: String },
    #[error(transparent)]
    Group(#[from] GroupError),
}

fn parse_error(pos: usize, message: impl Into<String>) -> DslError {
    DslError::Parse {
        pos,
        message: message.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup, GroupError> {
        match self {
            GroupSpec::Cyclic(n) => FiniteGroup::cyclic(*n),
            GroupSpec::Dihedral(m) => FiniteGroup::dihedral(*m),
            GroupSpec::Symmetric(n) => FiniteGroup::symmetric(*n),
            GroupSpec::Product(a, b) => FiniteGroup::direct_product(&a.build()?, &b.build()?),
        }
    }

    /// Product of cyclic groups, left-associated.
    pub fn cyclic_product(orders: &[usize]) -> Option<GroupSpec> {
        let (first, rest) = orders.split_first()?;
        Some(rest.iter().fold(GroupSpec::Cyclic(*first), |acc, &n| {
            GroupSpec::Product(Box::new(acc), Box::new(GroupSpec::Cyclic(n)))
        }))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "Z{n}"),
            GroupSpec::Dihedral(m) => write!(f, "D{m}"),
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
            GroupSpec::Product(a, b) => write!(f, "{a}x{b}"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = DslError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bytes = s.as_bytes();
        let mut pos = 0;
        let mut factors: Vec<GroupSpec> = Vec::new();
        loop {
            while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            let start = pos;
            let Some(&kind) = bytes.get(pos) else {
                return Err(parse_error(pos, "expected Z<n>, D<m> or S<n>"));
            };
            if !matches!(kind, b'Z' | b'D' | b'S') {
                return Err(parse_error(start, "expected Z<n>, D<m> or S<n>"));
            }
            pos += 1;
            let digits_start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if digits_start == pos {
                return Err(parse_error(pos, "expected a number"));
            }
            let n: usize = s[digits_start..pos]
                .parse()
                .map_err(|_| parse_error(digits_start, "number too large"))?;
            factors.push(match kind {
                b'Z' => GroupSpec::Cyclic(n),
                b'D' => GroupSpec::Dihedral(n),
                _ => GroupSpec::Symmetric(n),
            });
            while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            match bytes.get(pos) {
                None => break,
                Some(b'x') => pos += 1,
                Some(_) => return Err(parse_error(pos, "expected 'x' or end of input")),
            }
        }
        let mut iter = factors.into_iter();
        let first = iter.next().expect("at least one factor parsed");
        Ok(iter.fold(first, |acc, g| GroupSpec::Product(Box::new(acc), Box::new(g))))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AutomorphismSpec {
    Identity,
    Inner(String),
    Matrix([[i64; 2]; 2]),
    Perm(Vec<usize>),
    Neg,
    Pow(usize),
}

impl AutomorphismSpec {
    pub fn build(&self, g: &FiniteGroup) -> Result<Automorphism, GroupError> {
        match self {
            AutomorphismSpec::Identity => Ok(Automorphism::identity(g)),
            AutomorphismSpec::Inner(name) => Automorphism::inner(g, g.element_by_name(name)?),
            AutomorphismSpec::Matrix(m) => Automorphism::from_matrix(g, *m),
            AutomorphismSpec::Perm(images) => Automorphism::new(g, images.clone()),
            AutomorphismSpec::Neg => Automorphism::inversion(g),
            AutomorphismSpec::Pow(k) => Automorphism::power_map(g, *k),
        }
    }
}

impl fmt::Display for AutomorphismSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutomorphismSpec::Identity => write!(f, "id"),
            AutomorphismSpec::Inner(name) => write!(f, "inner:{name}"),
            AutomorphismSpec::Matrix(m) => write!(
                f,
                "matrix:[[{},{}],[{},{}]]",
                m[0][0], m[0][1], m[1][0], m[1][1]
            ),
            AutomorphismSpec::Perm(images) => {
                let body: Vec<String> = images.iter().map(usize::to_string).collect();
                write!(f, "perm:[{}]", body.join(","))
            }
            AutomorphismSpec::Neg => write!(f, "neg"),
            AutomorphismSpec::Pow(k) => write!(f, "pow:{k}"),
        }
    }
}

impl FromStr for AutomorphismSpec {
    type Err = DslError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (head, rest) = match s.split_once(':') {
            Some((h, r)) => (h.trim(), Some(r)),
            None => (s, None),
        };
        let arg_pos = head.len() + 1;
        match (head, rest) {
            ("id" | "identity", None) => Ok(AutomorphismSpec::Identity),
            ("neg", None) => Ok(AutomorphismSpec::Neg),
            ("inner", Some(name)) => {
                let name = name.trim().trim_matches(|c| c == '"' || c == '\'');
                if name.is_empty() {
                    return Err(parse_error(arg_pos, "missing element name"));
                }
                Ok(AutomorphismSpec::Inner(name.to_string()))
            }
            ("matrix", Some(body)) => serde_json::from_str::<[[i64; 2]; 2]>(body)
                .map(AutomorphismSpec::Matrix)
                .map_err(|e| parse_error(arg_pos + e.column().saturating_sub(1), e.to_string())),
            ("perm", Some(body)) => serde_json::from_str::<Vec<usize>>(body)
                .map(AutomorphismSpec::Perm)
                .map_err(|e| parse_error(arg_pos + e.column().saturating_sub(1), e.to_string())),
            ("pow", Some(k)) => k
                .trim()
                .parse()
                .map(AutomorphismSpec::Pow)
                .map_err(|_| parse_error(arg_pos, "expected a nonnegative integer")),
            _ => Err(parse_error(
                0,
                format!("unknown automorphism spec {s:?} (expected id, inner:, matrix:, perm:, neg or pow:)"),
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_groups() {
        let g: GroupSpec = "Z4xZ4".parse().unwrap();
        assert_eq!(g.to_string(), "Z4xZ4");
        assert_eq!(g.build().unwrap().order(), 16);
        assert_eq!("D6".parse::<GroupSpec>().unwrap(), GroupSpec::Dihedral(6));
        assert_eq!("S4".parse::<GroupSpec>().unwrap().build().unwrap().order(), 24);
        assert_eq!(
            " Z2 x Z2 x Z3 ".parse::<GroupSpec>().unwrap().to_string(),
            "Z2xZ2xZ3"
        );
    }

    #[test]
    fn reports_positions() {
        let err = |s: &str| match s.parse::<GroupSpec>() {
            Err(DslError::Parse { pos, .. }) => pos,
            other => panic!("{s}: {other:?}"),
        };
        assert_eq!(err(""), 0);
        assert_eq!(err("Q8"), 0);
        assert_eq!(err("Z"), 1);
        assert_eq!(err("Z4xx"), 3);
        assert_eq!(err("Z4y"), 2);
    }

    #[test]
    fn semantic_errors_surface_from_build() {
        assert!("D1".parse::<GroupSpec>().unwrap().build().is_err());
        assert!("S9".parse::<GroupSpec>().unwrap().build().is_err());
        assert!("Z0".parse::<GroupSpec>().unwrap().build().is_err());
    }

    #[test]
    fn parses_automorphisms() {
        let s4 = "S4".parse::<GroupSpec>().unwrap().build().unwrap();
        let phi = "inner:(12)".parse::<AutomorphismSpec>().unwrap();
        assert_eq!(phi, AutomorphismSpec::Inner("(12)".into()));
        assert_eq!(phi.build(&s4).unwrap().label(), "inner:(12)");
        let quoted = "inner:\"(12)\"".parse::<AutomorphismSpec>().unwrap();
        assert_eq!(quoted, phi);

        let z44 = "Z4xZ4".parse::<GroupSpec>().unwrap().build().unwrap();
        let t1 = "matrix:[[0,1],[3,2]]".parse::<AutomorphismSpec>().unwrap();
        assert_eq!(t1, AutomorphismSpec::Matrix([[0, 1], [3, 2]]));
        assert!(t1.build(&z44).is_ok());
        let singular = "matrix:[[2,0],[0,2]]".parse::<AutomorphismSpec>().unwrap();
        assert!(singular.build(&z44).is_err());

        let z5 = FiniteGroup::cyclic(5).unwrap();
        let p = "perm:[0,2,4,1,3]".parse::<AutomorphismSpec>().unwrap();
        assert_eq!(p.build(&z5).unwrap().map(), [0, 2, 4, 1, 3]);
        assert_eq!(
            "pow:2".parse::<AutomorphismSpec>().unwrap().build(&z5).unwrap().map(),
            [0, 2, 4, 1, 3]
        );
        assert!("neg".parse::<AutomorphismSpec>().unwrap().build(&s4).is_err());
        assert!("inner:(15)".parse::<AutomorphismSpec>().unwrap().build(&s4).is_err());
        assert!("twist".parse::<AutomorphismSpec>().is_err());
        assert!("matrix:[[1,2]]".parse::<AutomorphismSpec>().is_err());
    }

    fn group_spec() -> impl Strategy<Value = GroupSpec> {
        let leaf = prop_oneof![
            (1usize..20).prop_map(GroupSpec::Cyclic),
            (2usize..20).prop_map(GroupSpec::Dihedral),
            (1usize..7).prop_map(GroupSpec::Symmetric),
        ];
        leaf.prop_recursive(3, 8, 2, |inner| {
            (inner.clone(), inner).prop_map(|(a, b)| GroupSpec::Product(Box::new(a), Box::new(b)))
        })
    }

    proptest! {
        #[test]
        fn canonical_strings_round_trip(spec in group_spec()) {
            // Printing flattens products left-associatively, so compare by
            // reparsing the canonical form.
            let canonical = spec.to_string();
            let reparsed: GroupSpec = canonical.parse().unwrap();
            prop_assert_eq!(reparsed.to_string(), canonical);
        }

        #[test]
        fn automorphism_specs_round_trip(a in -9i64..9, b in -9i64..9, c in -9i64..9, d in -9i64..9, k in 0usize..50) {
            for spec in [AutomorphismSpec::Matrix([[a, b], [c, d]]), AutomorphismSpec::Pow(k)] {
                prop_assert_eq!(spec.to_string().parse::<AutomorphismSpec>().unwrap(), spec);
            }
        }
    }
}
