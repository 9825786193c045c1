//! Problem files: a JSON document naming the field, the generators, the
//! truncation degree and optional matrix data.

use std::collections::BTreeMap;
use std::path::Path;

use freestar::repvar::MatrixTuple;
use freestar::scalar::parse_rational;
use freestar::{parse_poly, FieldMode, Matrix, Polynomial, Rational, Scalar};
use serde::Deserialize;

use crate::error::CliError;

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Text(String),
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    #[serde(default)]
    pub field: Option<String>,
    pub g: usize,
    #[serde(default)]
    pub generators: Vec<String>,
    #[serde(default)]
    pub degree: Option<usize>,
    #[serde(default)]
    pub q: Option<String>,
    /// Named tuples: name → list of matrices → rows → entries.
    #[serde(default)]
    pub matrices: BTreeMap<String, Vec<Vec<Vec<Entry>>>>,
    #[serde(default)]
    pub vectors: BTreeMap<String, Vec<Entry>>,
}

impl ProblemFile {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Usage(format!("invalid problem file: {e}")))
    }

    pub fn field(&self) -> Result<Option<FieldMode>, CliError> {
        self.field.as_deref().map(parse_field).transpose()
    }
}

pub fn parse_field(s: &str) -> Result<FieldMode, CliError> {
    match s {
        "Q" => Ok(FieldMode::Rational),
        "Qi" => Ok(FieldMode::GaussianRational),
        other => Err(CliError::Usage(format!("unknown field {other:?} (expected Q or Qi)"))),
    }
}

pub fn parse_q(s: &str) -> Result<Rational, CliError> {
    parse_rational(s).ok_or_else(|| CliError::Usage(format!("invalid rational {s:?}")))
}

/// A problem file with every string parsed over the field `S`.
#[derive(Clone, Debug)]
pub struct Problem<S: Scalar> {
    pub g: usize,
    pub generators: Vec<Polynomial<S>>,
    pub degree: Option<usize>,
    pub q: Option<Rational>,
    pub matrices: BTreeMap<String, MatrixTuple<S>>,
    pub vectors: BTreeMap<String, Vec<S>>,
}

fn scalar<S: Scalar>(e: &Entry, g: usize) -> Result<S, CliError> {
    match e {
        Entry::Int(n) => Ok(S::from_i64(*n)),
        Entry::Text(s) => parse_poly::<S>(s, g)?
            .as_constant()
            .ok_or_else(|| CliError::Usage(format!("matrix entry {s:?} is not a constant"))),
    }
}

impl<S: Scalar> Problem<S> {
    pub fn from_file(file: &ProblemFile) -> Result<Self, CliError> {
        let g = file.g;
        if g == 0 {
            return Err(CliError::Usage("g must be at least 1".into()));
        }
        let generators = file
            .generators
            .iter()
            .map(|s| parse_poly(s, g))
            .collect::<freestar::Result<Vec<_>>>()?;
        let mut matrices = BTreeMap::new();
        for (name, mats) in &file.matrices {
            let parsed = mats
                .iter()
                .map(|rows| {
                    let rows = rows
                        .iter()
                        .map(|r| r.iter().map(|e| scalar::<S>(e, g)).collect::<Result<Vec<_>, _>>())
                        .collect::<Result<Vec<_>, _>>()?;
                    Ok(Matrix::from_rows(rows)?)
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            if parsed.len() != g {
                return Err(CliError::Usage(format!(
                    "tuple {name:?} has {} matrices but g = {g}",
                    parsed.len()
                )));
            }
            matrices.insert(name.clone(), MatrixTuple::new(parsed)?);
        }
        let mut vectors = BTreeMap::new();
        for (name, v) in &file.vectors {
            let parsed = v.iter().map(|e| scalar::<S>(e, g)).collect::<Result<Vec<_>, _>>()?;
            vectors.insert(name.clone(), parsed);
        }
        Ok(Problem {
            g,
            generators,
            degree: file.degree,
            q: file.q.as_deref().map(parse_q).transpose()?,
            matrices,
            vectors,
        })
    }
}
