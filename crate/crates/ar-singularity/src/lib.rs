//! The A_r(n) family: the hyperplane decomposition Ξ of Δ, its refinement Ξ*
//! at octahedron centers, the crepant resolutions Ξ_choice and flops between them.
//!
//! Points are stored over the denominator 2(r+1). In the coordinates
//! y = (r+1)·x the lattice points of Δ are the integer vectors with Σy = r+1
//! and the octahedron centers are half-integral; doubling makes both integral.

pub mod resolve;
pub mod star;
pub mod xi;

pub use resolve::{FlopChoice, Resolution, ResolutionJson};
pub use star::{ExceptionalDivisor, XiStar};
pub use xi::{build_xi, classify_cell, CellCounts, CellLabel, CellType, Octahedron, Xi};

use toric_lattice::{DiagonalGroupLattice, ToricError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArError {
    #[error("unsupported group A_{r}({n})")]
    Unsupported { r: i64, n: usize },
    #[error("input error: {0}")]
    Input(String),
    #[error("structural error: {0}")]
    Structure(String),
    #[error(transparent)]
    Toric(#[from] ToricError),
}

/// A_r(n) = {diag(ζ^{k_1}, …, ζ^{k_n}) : ζ^{r+1} = 1, Σk_i ≡ 0}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ArGroup {
    pub r: i64,
    pub n: usize,
}

impl ArGroup {
    pub fn new(r: i64, n: usize) -> Result<Self, ArError> {
        if r < 1 || !(2..=5).contains(&n) {
            return Err(ArError::Unsupported { r, n });
        }
        Ok(ArGroup { r, n })
    }

    /// |G| = (r+1)^{n−1}
    pub fn order(&self) -> usize {
        (self.r + 1).pow(self.n as u32 - 1) as usize
    }

    pub fn lattice(&self) -> DiagonalGroupLattice {
        DiagonalGroupLattice::ar(self.r, self.n).expect("valid A_r(n)")
    }

    /// Common point denominator 2(r+1).
    pub fn den(&self) -> i64 {
        2 * (self.r + 1)
    }

    /// (r+1)(r+2)(r+3)/6, (r−1)r(r+1)/6, r(r+1)(r+2)/6 for n = 4.
    pub fn expected_counts(&self) -> CellCounts {
        let r = self.r;
        CellCounts {
            delta_u: ((r + 1) * (r + 2) * (r + 3) / 6) as usize,
            delta_d: ((r - 1) * r * (r + 1) / 6) as usize,
            octahedra: (r * (r + 1) * (r + 2) / 6) as usize,
            hypersimplices: 0,
        }
    }
}
