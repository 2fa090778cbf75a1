//! Planar pipeline: support function, rational parametrization, tracing
//! index and defining polynomial.

mod implicit;
mod param;

use crate::exactalg::{AlgError, Rational};

pub use implicit::{
    implicitize, predicted_total_degree, tracing_index, verify_vanishing, ImplicitReport, Prediction, Vanishing,
};
pub use param::{p1_at_i, point_at_pi, rational_parametrization, ParamDegrees, RationalCurveParam};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CurveError {
    #[error("empty support function")]
    EmptySupport,
    #[error("circle case: use classify")]
    CircleCase,
    #[error("degenerate parametrization")]
    Degenerate,
    #[error("tracing-index contradiction")]
    TracingContradiction,
    #[error("defining polynomial does not vanish at t = {0}")]
    NotVanishing(Rational),
    #[error(transparent)]
    Alg(#[from] AlgError),
}

/// Fixed parameter values used for exact vanishing checks.
pub fn sample_parameters() -> Vec<Rational> {
    [
        (0, 1),
        (1, 1),
        (-1, 1),
        (2, 1),
        (-3, 1),
        (1, 2),
        (-1, 3),
        (7, 5),
        (-5, 7),
        (3, 1),
        (-2, 9),
        (11, 4),
        (-13, 6),
        (1, 10),
        (-17, 3),
        (5, 1),
        (-8, 1),
        (19, 11),
        (-1, 7),
        (23, 2),
    ]
    .into_iter()
    .map(|(n, d)| Rational::frac(n, d))
    .collect()
}
