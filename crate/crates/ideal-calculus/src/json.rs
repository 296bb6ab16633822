//! JSON form of a torus-fixed ideal.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::staircase::{StaircaseData, StaircaseKind, PAIRS};
use crate::IdealError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct IdealJson {
    pub r: i64,
    #[serde(rename = "type")]
    pub kind: String,
    pub l: [i64; 4],
    /// keyed "12", "13", …
    pub l_pair: BTreeMap<String, i64>,
    /// minimal monomial generators as exponent vectors
    pub generators: Vec<Vec<i64>>,
}

impl IdealJson {
    pub fn from_staircase(s: &StaircaseData) -> Self {
        IdealJson {
            r: s.r,
            kind: s.kind.name(),
            l: s.l,
            l_pair: PAIRS
                .iter()
                .zip(&s.l_pair)
                .map(|(&(i, j), &x)| (format!("{}{}", i + 1, j + 1), x))
                .collect(),
            generators: s.ideal().generators,
        }
    }

    /// Rebuilds the staircase and checks every stored field against it.
    pub fn to_staircase(&self) -> Result<StaircaseData, IdealError> {
        let kind = StaircaseKind::parse(&self.kind)
            .ok_or_else(|| IdealError::Input(format!("unknown staircase type {:?}", self.kind)))?;
        let s = StaircaseData::from_l(self.r, self.l, kind);
        if !s.satisfies_relations() {
            return Err(IdealError::Structure(format!("l = {:?} is not a {} staircase", self.l, self.kind)));
        }
        if IdealJson::from_staircase(&s) != *self {
            return Err(IdealError::Structure("stored lPair or generators disagree with l".into()));
        }
        Ok(s)
    }

    pub fn to_string_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_str(text: &str) -> Result<Self, IdealError> {
        serde_json::from_str(text).map_err(|e| IdealError::Input(e.to_string()))
    }
}
