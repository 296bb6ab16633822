//! Hilb^{𝔄₄}(ℂ³): the representation **3**, invariants, the graded coinvariant
//! pieces, the four central ideals and exact checks of the four affine charts.

pub mod central;
pub mod charts;
pub mod coinvariants;
pub mod group;
pub mod invariants;
pub mod quotient;
pub mod report;
pub mod tree;

use serde::Serialize;
use symbolic_core::{AlgebraError, Poly, Scalar};

pub use central::{central_ideals, verify_central_ideal, CentralIdealA4};
pub use charts::{chart, verify_chart, verify_conjugate_pair, verify_global_volume_form, ChartA4, ChartName};
pub use coinvariants::{auxiliary_pieces, coinvariant_decomposition, pieces, CoinvariantReport, GradedPiece};
pub use group::{GroupRepresentation, Irrep};
pub use invariants::{
    verify_discriminant, verify_eq_tri, verify_fxy, verify_invariants, verify_invariants_on_hyperplane, InvariantSet,
};
pub use quotient::Quotient;
pub use report::{run_suite, SuiteReport};
pub use tree::{verify_inclusion_tree, verify_module_equalities, TREE_EDGES};

#[derive(Debug, thiserror::Error)]
pub enum A4Error {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Structure(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    /// the literal transcription fails and a stated correction passes
    Corrected,
    Fail,
}

/// One named check of a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Check {
    pub name: String,
    pub status: Status,
    /// nonzero residue (or error text) of the failing reading
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residue: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub samples: Vec<Vec<String>>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Pass,
            residue: None,
            note: None,
            samples: Vec::new(),
        }
    }

    pub fn fail(name: impl Into<String>, residue: impl Into<String>) -> Self {
        Check {
            status: Status::Fail,
            residue: Some(residue.into()),
            ..Check::pass(name)
        }
    }

    pub fn zero<C: Scalar>(name: impl Into<String>, r: &Poly<C>) -> Self {
        if r.is_zero() {
            Check::pass(name)
        } else {
            Check::fail(name, r.to_string())
        }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, why: impl Into<String>) -> Self {
        if ok {
            Check::pass(name)
        } else {
            Check::fail(name, why)
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn with_samples(mut self, samples: Vec<Vec<String>>) -> Self {
        self.samples = samples;
        self
    }
}
