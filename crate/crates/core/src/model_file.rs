//! The shared matrix-model file format.
//!
//! ```json
//! {"field": {"cyclotomic": 4}, "dim": 2, "label": "…",
//!  "generators": [{"name": "s1", "matrix": [[…, …], […, …]]}],
//!  "group": {"d": 1, "e": 4, "r": 2}}
//! ```
//!
//! Scalars use the exact JSON forms of [`crate::arith::serial`]. Models over
//! ℚ(q) use `{"function_field": true}` and may carry `"action": "row"` when the
//! matrices act on row vectors.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::serial::ScalarJson;
use crate::groups::GroupParams;

#[derive(Debug, Error)]
pub enum ModelFileError {
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldSpec {
    Cyclotomic(u32),
    FunctionField(bool),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorJson {
    pub name: String,
    pub matrix: Vec<Vec<ScalarJson>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelFile {
    pub field: FieldSpec,
    pub dim: usize,
    pub generators: Vec<GeneratorJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupParams>,
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<String>,
}

impl ModelFile {
    pub fn read(path: &std::path::Path) -> Result<Self, ModelFileError> {
        let text = std::fs::read_to_string(path)?;
        let m: ModelFile = serde_json::from_str(&text)?;
        m.check_shape()?;
        Ok(m)
    }

    pub fn write(&self, path: &std::path::Path) -> Result<(), ModelFileError> {
        std::fs::write(path, serde_json::to_string_pretty(self)?)?;
        Ok(())
    }

    /// Every generator must be dim × dim.
    pub fn check_shape(&self) -> Result<(), ModelFileError> {
        for g in &self.generators {
            if g.matrix.len() != self.dim || g.matrix.iter().any(|row| row.len() != self.dim) {
                return Err(ModelFileError::Invalid(format!(
                    "dimension mismatch: generator {} is not {}×{}",
                    g.name, self.dim, self.dim
                )));
            }
        }
        Ok(())
    }
}
