use serde::{Deserialize, Serialize};

use super::{axioms, AxiomReport, Provenance, Quandle, QuandleError};

/// Serialized form of a quandle. `rhd` is the table as a list of rows, so
/// `rhd[x][y] = x ▷ y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuandleJson {
    pub order: usize,
    pub names: Vec<String>,
    pub rhd: Vec<Vec<usize>>,
    #[serde(default = "raw")]
    pub provenance: Provenance,
}

fn raw() -> Provenance {
    Provenance::Raw
}

impl QuandleJson {
    pub fn parse(text: &str) -> Result<Self, QuandleError> {
        let parsed: QuandleJson =
            serde_json::from_str(text).map_err(|e| QuandleError::Json(e.to_string()))?;
        if parsed.order != parsed.rhd.len() {
            return Err(QuandleError::Json(format!(
                "order {} but {} rows",
                parsed.order,
                parsed.rhd.len()
            )));
        }
        Ok(parsed)
    }

    /// Runs the axiom checks without requiring them to pass.
    pub fn axiom_report(&self) -> Result<AxiomReport, QuandleError> {
        axioms::verify_quandle_axioms(&self.rhd)
    }

    pub fn into_quandle(self) -> Result<Quandle, QuandleError> {
        let label = match &self.provenance {
            Provenance::Raw => format!("raw({})", self.order),
            _ => "imported".to_string(),
        };
        Quandle::from_table(label, self.names, &self.rhd, self.provenance)
    }
}

impl From<&Quandle> for QuandleJson {
    fn from(q: &Quandle) -> Self {
        QuandleJson {
            order: q.order(),
            names: q.names().to_vec(),
            rhd: q.rows(),
            provenance: q.provenance().clone(),
        }
    }
}

impl Quandle {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&QuandleJson::from(self)).expect("quandle JSON is always serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, QuandleError> {
        QuandleJson::parse(text)?.into_quandle()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Automorphism, FiniteGroup};

    #[test]
    fn json_round_trip() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let phi = Automorphism::inner(&s3, 1).unwrap();
        for q in [
            Quandle::dihedral(4).unwrap(),
            Quandle::generalized_alexander(&s3, &phi).unwrap(),
        ] {
            let back = Quandle::from_json(&q.to_json()).unwrap();
            assert_eq!(back.rows(), q.rows());
            assert_eq!(back.names(), q.names());
            assert_eq!(back.provenance(), q.provenance());
        }
    }

    #[test]
    fn dihedral_json_shape() {
        let text = Quandle::dihedral(4).unwrap().to_json();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["order"], 4);
        assert_eq!(v["rhd"][1], serde_json::json!([3, 1, 3, 1]));
        assert_eq!(v["provenance"]["family"], "dihedral");
    }

    #[test]
    fn broken_tables_are_reported_not_accepted() {
        let text = r#"{"order":2,"names":["a","b"],"rhd":[[1,0],[0,1]]}"#;
        let parsed = QuandleJson::parse(text).unwrap();
        assert_eq!(parsed.provenance, Provenance::Raw);
        assert!(!parsed.axiom_report().unwrap().passed());
        assert!(matches!(Quandle::from_json(text), Err(QuandleError::Axiom(_))));
        assert!(matches!(
            QuandleJson::parse(r#"{"order":3,"names":[],"rhd":[]}"#),
            Err(QuandleError::Json(_))
        ));
    }
}
