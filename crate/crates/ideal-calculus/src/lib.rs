//! Ideals of the G-Hilbert scheme of A_r(4): monomial (torus-fixed) ideals,
//! their staircases, the chart ideals I(y) on Ξ*, and the γ-relation catalog.

pub mod character;
pub mod colength;
pub mod families;
pub mod gamma;
pub mod json;
pub mod monomial;
pub mod staircase;

pub use character::CharacterClass;
pub use colength::{certify_colength, certify_colength_with, ColengthReport};
pub use families::{chart_generators, chart_ideal_generators, ChartGenerator, FamilyKind, GeneratorFamily};
pub use gamma::{a1_catalog, block_catalog, verify_gamma_relations, Certificate, GammaEntry, GammaOutcome, Rung};
pub use json::IdealJson;
pub use monomial::{eigenspace_generators, io_ideal, is_regular_quotient, MonomialIdeal, RegularCheck};
pub use staircase::{
    cell_of_ideal, cone_staircase, enumerate_central_ideals, ideal_of_cell, pair_index, StaircaseData,
    StaircaseKind, PAIRS,
};

use ar_singularity::ArError;
use symbolic_core::AlgebraError;

#[derive(Debug, thiserror::Error)]
pub enum IdealError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("structural failure: {0}")]
    Structure(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Ar(#[from] ArError),
}
