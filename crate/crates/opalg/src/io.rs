//! JSON file formats.
//!
//! * matrix: `{"dim": d, "entries": [[re, im], ...]}`, row-major, `d²` entries
//! * algebra state: `{"densities": [matrix, ...]}`, one per summand
//! * 2-form: `{"coefficients": [[re, im] × 6]}` over `e₁₂, e₁₃, e₁₄, e₂₃, e₂₄, e₃₄`
//! * exemplar: `{"name": "s2xs2", "params": [1, 2]}`

use std::fs;
use std::path::Path;

use opalg_core::curvature::Exemplar;
use opalg_core::torus::TorusForm;
use opalg_core::{ComplexMatrix, C64};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub dim: usize,
    pub entries: Vec<[f64; 2]>,
}

impl MatrixFile {
    pub fn from_matrix(m: &ComplexMatrix) -> Self {
        Self { dim: m.rows(), entries: m.as_slice().iter().map(|z| [z.re, z.im]).collect() }
    }

    pub fn to_matrix(&self) -> opalg_core::Result<ComplexMatrix> {
        let data = self.entries.iter().map(|&[re, im]| C64::new(re, im)).collect();
        ComplexMatrix::square(self.dim, data)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    pub densities: Vec<MatrixFile>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormFile {
    pub coefficients: [[f64; 2]; 6],
}

impl FormFile {
    pub fn to_form(&self) -> TorusForm {
        TorusForm::new(self.coefficients.map(|[re, im]| C64::new(re, im)))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExemplarFile {
    pub name: String,
    #[serde(default)]
    pub params: Vec<f64>,
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read { path: path.into(), source })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json { path: path.into(), source })
}

fn invalid(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError::Format { path: path.into(), reason: e.to_string() }
}

pub fn read_matrix(path: &Path) -> Result<ComplexMatrix> {
    let file: MatrixFile = read_json(path)?;
    file.to_matrix().map_err(|e| invalid(path, e))
}

pub fn read_state(path: &Path) -> Result<Vec<ComplexMatrix>> {
    let file: StateFile = read_json(path)?;
    file.densities.iter().map(|m| m.to_matrix().map_err(|e| invalid(path, e))).collect()
}

pub fn read_form(path: &Path) -> Result<TorusForm> {
    let file: FormFile = read_json(path)?;
    Ok(file.to_form())
}

pub fn read_exemplar(path: &Path) -> Result<(Exemplar, Vec<f64>)> {
    let file: ExemplarFile = read_json(path)?;
    let name = file.name.parse().map_err(|e| invalid(path, e))?;
    Ok((name, file.params))
}

pub fn matrix_value(m: &ComplexMatrix) -> Value {
    serde_json::to_value(MatrixFile::from_matrix(m)).expect("matrix serializes")
}

pub fn complex_value(z: C64) -> Value {
    serde_json::json!([z.re, z.im])
}

pub fn form_value(w: &TorusForm) -> Value {
    Value::Array(w.coefficients.iter().map(|&z| complex_value(z)).collect())
}
