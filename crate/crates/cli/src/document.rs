//! JSON serialization of algebras.
//!
//! ```json
//! {
//!   "format": 1,
//!   "dim": 1,
//!   "params": [],
//!   "signature": "associative",
//!   "ops": { "mul": [[["1"]]] },
//!   "alpha": [["1"]]
//! }
//! ```
//!
//! `ops[name][i][j]` lists the coordinates of `e_i ∘ e_j`; maps are row-major
//! and act on columns.

use std::collections::BTreeMap;
use std::path::Path;

use homtwist::{parse_scalar, AlgebraError, BilinearOp, Class, HomAlgebra, LinearMap, Params, RotaBaxter, Scalar};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const FORMAT: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub format: u32,
    pub dim: usize,
    #[serde(default)]
    pub params: Vec<String>,
    pub signature: String,
    pub ops: BTreeMap<String, Vec<Vec<Vec<String>>>>,
    pub alpha: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rb: Option<RbDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RbDocument {
    pub weight: String,
    pub map: Vec<Vec<String>>,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("cannot read `{path}`: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported format {0} (expected {FORMAT})")]
    Format(u32),
    #[error("{field}: expected {expected} entries, found {found}")]
    Shape { field: String, expected: usize, found: usize },
    #[error("{field}: cannot parse `{text}`: {message}")]
    Scalar { field: String, text: String, message: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

fn map_rows(m: &LinearMap) -> Vec<Vec<String>> {
    m.rows().map(|r| r.iter().map(Scalar::to_string).collect()).collect()
}

fn is_default_labels(labels: &[String]) -> bool {
    labels.iter().enumerate().all(|(i, l)| *l == format!("e{}", i + 1))
}

impl AlgebraDocument {
    pub fn from_algebra(a: &HomAlgebra) -> Self {
        let n = a.dim();
        let ops = a
            .ops()
            .iter()
            .map(|(name, op)| {
                let rows = (0..n)
                    .map(|i| (0..n).map(|j| op.product(i, j).iter().map(Scalar::to_string).collect()).collect())
                    .collect();
                (name.clone(), rows)
            })
            .collect();
        AlgebraDocument {
            format: FORMAT,
            dim: n,
            params: a.params().names().to_vec(),
            signature: a.class().to_string(),
            ops,
            alpha: map_rows(a.alpha()),
            rb: a.rb().map(|rb| RbDocument {
                weight: rb.weight.to_string(),
                map: map_rows(&rb.map),
            }),
            labels: (!is_default_labels(a.labels())).then(|| a.labels().to_vec()),
        }
    }

    pub fn to_algebra(&self) -> Result<HomAlgebra, DocumentError> {
        if self.format != FORMAT {
            return Err(DocumentError::Format(self.format));
        }
        let n = self.dim;
        let params = Params::new(self.params.iter().map(String::as_str)).map_err(AlgebraError::from)?;
        let class: Class = self.signature.parse()?;
        let scalar = |field: &str, text: &str| {
            parse_scalar(text, &params).map_err(|e| DocumentError::Scalar {
                field: field.to_string(),
                text: text.to_string(),
                message: e.to_string(),
            })
        };
        let shape = |field: String, expected: usize, found: usize| {
            if expected == found {
                Ok(())
            } else {
                Err(DocumentError::Shape { field, expected, found })
            }
        };
        let matrix = |field: &str, rows: &[Vec<String>]| -> Result<LinearMap, DocumentError> {
            shape(field.to_string(), n, rows.len())?;
            let mut entries = Vec::with_capacity(n * n);
            for (i, row) in rows.iter().enumerate() {
                shape(format!("{field}[{}]", i + 1), n, row.len())?;
                for text in row {
                    entries.push(scalar(field, text)?);
                }
            }
            Ok(LinearMap::new(n, entries)?)
        };

        let mut ops = BTreeMap::new();
        for (name, rows) in &self.ops {
            let field = format!("ops.{name}");
            shape(field.clone(), n, rows.len())?;
            let mut coeffs = Vec::with_capacity(n * n * n);
            for (i, row) in rows.iter().enumerate() {
                shape(format!("{field}[{}]", i + 1), n, row.len())?;
                for (j, product) in row.iter().enumerate() {
                    shape(format!("{field}[{}][{}]", i + 1, j + 1), n, product.len())?;
                    for text in product {
                        coeffs.push(scalar(&field, text)?);
                    }
                }
            }
            ops.insert(name.clone(), BilinearOp::new(n, coeffs)?);
        }
        let alpha = matrix("alpha", &self.alpha)?;
        let mut a = HomAlgebra::new(params.clone(), class, ops, alpha)?;
        if let Some(rb) = &self.rb {
            let weight = scalar("rb.weight", &rb.weight)?;
            let map = matrix("rb.map", &rb.map)?;
            a = a.with_rb(Some(RotaBaxter { weight, map }))?;
        }
        if let Some(labels) = &self.labels {
            a = a.with_labels(labels.clone())?;
        }
        Ok(a)
    }
}

pub fn save(a: &HomAlgebra) -> String {
    let mut text = serde_json::to_string_pretty(&AlgebraDocument::from_algebra(a)).expect("plain data");
    text.push('\n');
    text
}

pub fn load(text: &str) -> Result<HomAlgebra, DocumentError> {
    let doc: AlgebraDocument = serde_json::from_str(text)?;
    doc.to_algebra()
}

pub fn read_file(path: &Path) -> Result<HomAlgebra, DocumentError> {
    let text = std::fs::read_to_string(path).map_err(|source| DocumentError::Io {
        path: path.display().to_string(),
        source,
    })?;
    load(&text)
}

pub fn write_file(path: &Path, a: &HomAlgebra) -> Result<(), DocumentError> {
    std::fs::write(path, save(a)).map_err(|source| DocumentError::Io {
        path: path.display().to_string(),
        source,
    })
}
