//! Exact scalars (ℚ and ℚ(ω)), sparse Laurent-capable polynomials, monomial
//! orders, Buchberger's algorithm and a few calculus helpers.

pub mod calculus;
pub mod groebner;
pub mod linalg;
pub mod order;
pub mod parse;
pub mod poly;
pub mod rng;
pub mod scalar;

pub use calculus::{jacobian_determinant, RationalFunction};
pub use groebner::{
    buchberger, buchberger_with_budget, colength, ideal_contains, leading_exponent, normal_form,
    spair_budget, standard_monomials, Colength,
};
pub use order::{MonomialOrder, OrderKind};
pub use parse::{parse_poly, Env};
pub use poly::{ExponentVector, Poly, QPoly, Ring, RingRef, WPoly};
pub use rng::SampleRng;
pub use scalar::{int, rat, Cyclotomic, Rational, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("negative exponent where a polynomial was required")]
    NegativeExponent,
    #[error("division by zero")]
    DivisionByZero,
    #[error("empty basis")]
    EmptyBasis,
    #[error("S-pair budget of {0} exhausted")]
    BudgetExceeded(usize),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("singular matrix")]
    Singular,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}
