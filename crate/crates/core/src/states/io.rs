//! JSON state files:
//!
//! ```json
//! {"dim_a": 2, "dim_b": 2, "matrix": [[[0.5, 0.0], [0.0, 0.0], ...], ...]}
//! ```
//!
//! `matrix` is row-major, each entry an `[re, im]` pair.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{make_state, BipartiteState, StateError};
use crate::numerics::ComplexMatrix;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    pub dim_a: usize,
    pub dim_b: usize,
    pub matrix: Vec<Vec<[f64; 2]>>,
}

impl From<&BipartiteState> for StateFile {
    fn from(s: &BipartiteState) -> Self {
        let rho = s.rho();
        let matrix = (0..rho.rows())
            .map(|i| {
                (0..rho.cols())
                    .map(|j| [rho[(i, j)].re, rho[(i, j)].im])
                    .collect()
            })
            .collect();
        StateFile {
            dim_a: s.dim_a(),
            dim_b: s.dim_b(),
            matrix,
        }
    }
}

impl StateFile {
    pub fn into_state(self) -> Result<BipartiteState, StateError> {
        let dim = self.dim_a * self.dim_b;
        if self.matrix.len() != dim {
            return Err(StateError::Dimension(format!(
                "{}⊗{} needs {dim} rows, file has {}",
                self.dim_a,
                self.dim_b,
                self.matrix.len()
            )));
        }
        let mut data = Vec::with_capacity(dim * dim);
        for (i, row) in self.matrix.iter().enumerate() {
            if row.len() != dim {
                return Err(StateError::Dimension(format!(
                    "row {i} has {} entries, expected {dim}",
                    row.len()
                )));
            }
            data.extend(row.iter().map(|&[re, im]| Complex64::new(re, im)));
        }
        make_state(self.dim_a, self.dim_b, ComplexMatrix::new(dim, dim, data)?)
    }
}

pub fn state_from_json(text: &str) -> Result<BipartiteState, StateError> {
    let file: StateFile = serde_json::from_str(text).map_err(|e| StateError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.into_state()
}

pub fn state_to_json(s: &BipartiteState) -> String {
    serde_json::to_string_pretty(&StateFile::from(s)).expect("finite entries serialize")
}

pub fn read_state_file(path: impl AsRef<Path>) -> Result<BipartiteState, StateError> {
    state_from_json(&fs::read_to_string(path)?)
}

pub fn write_state_file(path: impl AsRef<Path>, s: &BipartiteState) -> Result<(), StateError> {
    fs::write(path, state_to_json(s) + "\n")?;
    Ok(())
}
