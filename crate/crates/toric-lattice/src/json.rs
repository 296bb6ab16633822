use serde::{Deserialize, Serialize};

use crate::decomposition::Decomposition;
use crate::lattice::DiagonalGroupLattice;
use crate::ToricError;

/// Wire form of a decomposition. Group generators are written over the point
/// denominator, so one integer denominator covers the whole file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DecompositionJson {
    pub n: usize,
    pub denominator: i64,
    pub group_generators: Vec<Vec<i64>>,
    pub vertices: Vec<Vec<i64>>,
    pub maximal_cells: Vec<Vec<usize>>,
}

impl DecompositionJson {
    pub fn from_decomposition(d: &Decomposition) -> Result<Self, ToricError> {
        Ok(DecompositionJson {
            n: d.n(),
            denominator: d.denominator(),
            group_generators: d.lattice().generators_over(d.denominator())?,
            vertices: d.vertices().to_vec(),
            maximal_cells: d.cells().to_vec(),
        })
    }

    pub fn to_decomposition(&self) -> Result<Decomposition, ToricError> {
        let lat = DiagonalGroupLattice::new(self.n, self.denominator, self.group_generators.clone())?;
        Decomposition::new(lat, self.denominator, self.vertices.clone(), self.maximal_cells.clone())
    }
}

impl Decomposition {
    pub fn to_json_string(&self) -> Result<String, ToricError> {
        let j = DecompositionJson::from_decomposition(self)?;
        serde_json::to_string_pretty(&j).map_err(|e| ToricError::Input(e.to_string()))
    }

    pub fn from_json_str(s: &str) -> Result<Self, ToricError> {
        let j: DecompositionJson = serde_json::from_str(s).map_err(|e| ToricError::Input(e.to_string()))?;
        j.to_decomposition()
    }
}
