//! JSON interchange format for algebras.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use leibniz_core::{Algebra, Rational};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, thiserror::Error)]
pub enum DocumentError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema_version `{0}` (expected \"1\")")]
    Schema(String),
    #[error("unsupported field `{0}` (expected \"Q\")")]
    Field(String),
    #[error("dim is {dim} but {labels} labels are declared")]
    LabelCount { dim: usize, labels: usize },
    #[error("label `{0}` declared twice")]
    DuplicateLabel(String),
    #[error("label `{0}` is not declared")]
    UnknownLabel(String),
    #[error("bracket [{0},{1}] listed twice")]
    DuplicateBracket(String, String),
    #[error("bad rational {num}/{den}")]
    BadRational { num: String, den: String },
    #[error(transparent)]
    Algebra(#[from] leibniz_core::AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub basis: String,
    pub num: String,
    pub den: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bracket {
    pub left: String,
    pub right: String,
    pub terms: Vec<Term>,
}

/// Omitted brackets are zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDocument {
    pub schema_version: String,
    pub dim: usize,
    pub field: String,
    pub labels: Vec<String>,
    pub brackets: Vec<Bracket>,
}

impl AlgebraDocument {
    pub fn from_algebra(a: &Algebra) -> Self {
        let labels = a.labels().to_vec();
        let mut brackets = Vec::new();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let t = a.basis_bracket(i, j);
                if t.is_empty() {
                    continue;
                }
                brackets.push(Bracket {
                    left: labels[i].clone(),
                    right: labels[j].clone(),
                    terms: t
                        .iter()
                        .map(|(k, v)| Term {
                            basis: labels[*k].clone(),
                            num: v.numer().to_string(),
                            den: v.denom().to_string(),
                        })
                        .collect(),
                });
            }
        }
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            dim: a.dim(),
            field: "Q".to_string(),
            labels,
            brackets,
        }
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let doc: Self = serde_json::from_str(text)?;
        doc.to_algebra()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn to_algebra(&self) -> Result<Algebra, DocumentError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(DocumentError::Schema(self.schema_version.clone()));
        }
        if self.field != "Q" {
            return Err(DocumentError::Field(self.field.clone()));
        }
        if self.labels.len() != self.dim {
            return Err(DocumentError::LabelCount { dim: self.dim, labels: self.labels.len() });
        }
        let mut index = HashMap::new();
        for (i, l) in self.labels.iter().enumerate() {
            if index.insert(l.as_str(), i).is_some() {
                return Err(DocumentError::DuplicateLabel(l.clone()));
            }
        }
        let lookup = |l: &str| index.get(l).copied().ok_or_else(|| DocumentError::UnknownLabel(l.to_string()));
        let n = self.dim;
        let mut c = vec![Rational::ZERO; n * n * n];
        let mut seen = HashSet::new();
        for b in &self.brackets {
            let (i, j) = (lookup(&b.left)?, lookup(&b.right)?);
            if !seen.insert((i, j)) {
                return Err(DocumentError::DuplicateBracket(b.left.clone(), b.right.clone()));
            }
            for t in &b.terms {
                let k = lookup(&t.basis)?;
                let v: Rational = format!("{}/{}", t.num.trim(), t.den.trim())
                    .parse()
                    .map_err(|_| DocumentError::BadRational { num: t.num.clone(), den: t.den.clone() })?;
                c[(i * n + j) * n + k] += v;
            }
        }
        Ok(Algebra::from_tensor(n, self.labels.clone(), c)?)
    }

    /// `sha256:` followed by the hex digest of the compact JSON encoding.
    pub fn fingerprint(&self) -> String {
        let bytes = serde_json::to_vec(self).expect("document serializes");
        hex_digest(&bytes)
    }
}

pub fn hex_digest(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use leibniz_core::catalog::default_suite;

    #[test]
    fn round_trip_on_catalog() {
        for e in default_suite() {
            let a = e.id.build().unwrap();
            let doc = AlgebraDocument::from_algebra(&a);
            let back = AlgebraDocument::parse(&doc.to_json()).unwrap();
            assert_eq!(back, doc);
            assert!(back.to_algebra().unwrap() == a, "{}", e.id);
        }
    }

    #[test]
    fn rejects_malformed_documents() {
        let base = r#"{"schema_version":"1","dim":2,"field":"Q","labels":["a","b"],"brackets":[]}"#;
        assert!(AlgebraDocument::parse(base).is_ok());
        let bad = [
            base.replace(r#""schema_version":"1""#, r#""schema_version":"2""#),
            base.replace(r#""field":"Q""#, r#""field":"R""#),
            base.replace(r#""dim":2"#, r#""dim":3"#),
            base.replace(r#"["a","b"]"#, r#"["a","a"]"#),
            base.replace(
                r#""brackets":[]"#,
                r#""brackets":[{"left":"a","right":"c","terms":[]}]"#,
            ),
            base.replace(
                r#""brackets":[]"#,
                r#""brackets":[{"left":"a","right":"b","terms":[{"basis":"a","num":"1","den":"0"}]}]"#,
            ),
            base.replace(
                r#""brackets":[]"#,
                r#""brackets":[{"left":"a","right":"b","terms":[]},{"left":"a","right":"b","terms":[]}]"#,
            ),
            "{".to_string(),
        ];
        for b in bad {
            assert!(AlgebraDocument::parse(&b).is_err(), "{b}");
        }
    }

    #[test]
    fn fingerprint_is_stable() {
        let a = "g1n1:n=5".parse::<leibniz_core::CatalogId>().unwrap().build().unwrap();
        let d = AlgebraDocument::from_algebra(&a);
        assert_eq!(d.fingerprint(), AlgebraDocument::from_algebra(&a).fingerprint());
        assert!(d.fingerprint().starts_with("sha256:"));
        assert_eq!(d.fingerprint().len(), 7 + 64);
    }
}
