//! Exact arithmetic over Q and Q(i), sparse multivariate polynomials,
//! gcds, resultants and real-root isolation.

mod gaussian;
mod gcd;
mod poly;
mod rational;
mod realroots;
mod resultant;
mod roots;

pub use gaussian::GaussianRational;
pub use gcd::{
    content, content_and_primitive_part, content_in_vars, gcd, is_square_free, poly_gcd, primitive_part,
    primitive_part_in_vars, pseudo_remainder,
};
pub use poly::{Monomial, MultiPoly, Vars, MAX_VARS};
pub use rational::Rational;
pub use realroots::{isolate_real_roots, sample_points_between_roots, RootInterval, UniPoly};
pub use resultant::{
    bezout_matrix, determinant, resultant, resultant_allow_constant, resultant_idx, sylvester_matrix,
    PolyMatrix, ResultantMethod,
};
pub use roots::rth_root;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(String),
    #[error("gcd of two zero polynomials is undefined")]
    GcdUndefined,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("both polynomials are constant in `{0}`")]
    NothingToEliminate(String),
    #[error("polynomial is not a perfect power")]
    NotPerfectPower,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
