//! Lattices N ⊇ ℤⁿ of diagonal abelian groups, decompositions of the
//! standard simplex Δ, and the certificates read off them: crepancy,
//! smoothness, Euler number, canonical divisor, charts and dual cones.

pub mod chart;
pub mod cone;
pub mod decomposition;
pub mod json;
pub mod lattice;

pub use chart::ChartDescriptor;
pub use cone::{verify_4sing, ConeStatus, DualConeGenerators};
pub use decomposition::{polytope_faces, Cell, Decomposition, FaceIndex};
pub use json::DecompositionJson;
pub use lattice::DiagonalGroupLattice;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ToricError {
    #[error("input error: {0}")]
    Input(String),
    #[error("structural error: {0}")]
    Structure(String),
    #[error("cell {0} is not a simplex")]
    NotSimplicial(usize),
    #[error("cell {cell} is not unimodular (normalized determinant {det})")]
    NonUnimodular { cell: usize, det: String },
}
