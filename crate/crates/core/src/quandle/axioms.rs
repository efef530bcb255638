use serde::{Deserialize, Serialize};

use super::QuandleError;

/// Counterexample to one of the quandle axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum AxiomWitness {
    /// `x ▷ x != x`.
    Idempotency { x: usize, got: usize },
    /// `R_y` is not injective: `x1 ▷ y = x2 ▷ y` with `x1 != x2`.
    RightInvertibility { y: usize, x1: usize, x2: usize },
    /// `(x ▷ y) ▷ z != (x ▷ z) ▷ (y ▷ z)`.
    SelfDistributivity { x: usize, y: usize, z: usize },
}

impl std::fmt::Display for AxiomWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            AxiomWitness::Idempotency { x, got } => {
                write!(f, "idempotency fails at x={x}: x ▷ x = {got}")
            }
            AxiomWitness::RightInvertibility { y, x1, x2 } => write!(
                f,
                "right invertibility fails at y={y}: {x1} ▷ {y} = {x2} ▷ {y}"
            ),
            AxiomWitness::SelfDistributivity { x, y, z } => write!(
                f,
                "self-distributivity fails at (x, y, z) = ({x}, {y}, {z})"
            ),
        }
    }
}

/// Per-axiom outcome; `None` means the axiom holds.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub idempotency: Option<AxiomWitness>,
    pub right_invertibility: Option<AxiomWitness>,
    pub self_distributivity: Option<AxiomWitness>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.first_failure().is_none()
    }

    pub fn first_failure(&self) -> Option<AxiomWitness> {
        self.idempotency
            .or(self.right_invertibility)
            .or(self.self_distributivity)
    }
}

/// Checks the shape of a table: square, nonempty, entries in range.
pub(crate) fn check_shape(table: &[Vec<usize>]) -> Result<usize, QuandleError> {
    let n = table.len();
    if n == 0 {
        return Err(QuandleError::Empty);
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(QuandleError::Ragged {
                row: i,
                len: row.len(),
                expected: n,
            });
        }
        if let Some(&v) = row.iter().find(|&&v| v >= n) {
            return Err(QuandleError::OutOfRange { value: v, order: n });
        }
    }
    Ok(n)
}

/// Exhaustively checks idempotency, right invertibility and
/// self-distributivity of `table[x][y] = x ▷ y`.
pub fn verify_quandle_axioms(table: &[Vec<usize>]) -> Result<AxiomReport, QuandleError> {
    let n = check_shape(table)?;
    let flat: Vec<usize> = table.iter().flatten().copied().collect();
    Ok(check_flat(&flat, n))
}

pub(crate) fn check_flat(t: &[usize], n: usize) -> AxiomReport {
    let op = |x: usize, y: usize| t[x * n + y];
    let mut report = AxiomReport {
        idempotency: (0..n)
            .find(|&x| op(x, x) != x)
            .map(|x| AxiomWitness::Idempotency { x, got: op(x, x) }),
        ..AxiomReport::default()
    };

    'columns: for y in 0..n {
        let mut preimage = vec![usize::MAX; n];
        for x in 0..n {
            let v = op(x, y);
            if preimage[v] != usize::MAX {
                report.right_invertibility = Some(AxiomWitness::RightInvertibility {
                    y,
                    x1: preimage[v],
                    x2: x,
                });
                break 'columns;
            }
            preimage[v] = x;
        }
    }

    'outer: for x in 0..n {
        for y in 0..n {
            let xy = op(x, y);
            for z in 0..n {
                if op(xy, z) != op(op(x, z), op(y, z)) {
                    report.self_distributivity = Some(AxiomWitness::SelfDistributivity { x, y, z });
                    break 'outer;
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(n: usize, f: impl Fn(usize, usize) -> usize) -> Vec<Vec<usize>> {
        (0..n).map(|x| (0..n).map(|y| f(x, y)).collect()).collect()
    }

    #[test]
    fn trivial_and_dihedral_tables_pass() {
        assert!(verify_quandle_axioms(&table(4, |x, _| x)).unwrap().passed());
        let r3 = table(3, |a, b| (2 * b + 3 - a) % 3);
        assert!(verify_quandle_axioms(&r3).unwrap().passed());
    }

    #[test]
    fn forced_idempotency_failure() {
        let mut t = table(3, |x, _| x);
        t[0][0] = 1;
        let report = verify_quandle_axioms(&t).unwrap();
        assert_eq!(
            report.idempotency,
            Some(AxiomWitness::Idempotency { x: 0, got: 1 })
        );
        assert!(!report.passed());
    }

    #[test]
    fn non_bijective_column() {
        // x ▷ y = y is idempotent but sends every column to a constant.
        let t = table(2, |_, y| y);
        let report = verify_quandle_axioms(&t).unwrap();
        assert_eq!(report.idempotency, None);
        assert_eq!(
            report.right_invertibility,
            Some(AxiomWitness::RightInvertibility { y: 0, x1: 0, x2: 1 })
        );
    }

    #[test]
    fn self_distributivity_failure() {
        // Idempotent with bijective columns, but (0 ▷ 1) ▷ 0 = 1 while
        // (0 ▷ 0) ▷ (1 ▷ 0) = 0.
        let t = vec![vec![0, 2, 0], vec![2, 1, 1], vec![1, 0, 2]];
        let report = verify_quandle_axioms(&t).unwrap();
        assert_eq!(report.idempotency, None);
        assert_eq!(report.right_invertibility, None);
        assert_eq!(
            report.self_distributivity,
            Some(AxiomWitness::SelfDistributivity { x: 0, y: 1, z: 0 })
        );
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(verify_quandle_axioms(&[]), Err(QuandleError::Empty)));
        assert!(matches!(
            verify_quandle_axioms(&[vec![0, 1], vec![1]]),
            Err(QuandleError::Ragged { row: 1, .. })
        ));
        assert!(matches!(
            verify_quandle_axioms(&[vec![0, 2], vec![1, 1]]),
            Err(QuandleError::OutOfRange { value: 2, order: 2 })
        ));
    }
}
