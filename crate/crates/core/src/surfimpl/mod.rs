//! Surface pipeline: rational parametrizations of revolution and
//! spherical-harmonic surfaces, the general-position checks, partial degrees
//! of the defining polynomial, and full implicitization for small inputs.

mod assumptions;
mod build;
mod degrees;
mod small;
pub mod tables;

use std::fmt;

use crate::exactalg::{gcd, AlgError, MultiPoly, Rational, Vars};

pub use assumptions::{general_assumptions_check, prepare, Assumptions, Prepared};
pub use build::{harmonic_surface, revolution_surface};
pub use degrees::{estimate_cost, sendra_degrees, sendra_degrees_with, CostEstimate, DegreeReport, RawDegrees, SendraOptions};
pub use small::{surface_implicitize_small, SMALL_DEGREE_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SurfaceError {
    #[error("degenerate revolution")]
    DegenerateRevolution,
    #[error("general assumptions violated: {0}")]
    Assumption(String),
    #[error("assumption failure: deg_t1(S) = {s} but deg_t2(T) = {t}")]
    InconsistentDegrees { s: i64, t: i64 },
    #[error("components not independent")]
    NotIndependent,
    #[error("instance too large ({0}); use the slow tier")]
    TooExpensive(String),
    #[error("instance too large; use sendra_degrees")]
    TooLargeForImplicit,
    #[error("timed out after {0} s")]
    Timeout(u64),
    #[error(transparent)]
    Alg(#[from] AlgError),
}

/// One coordinate `num / den` of a surface parametrization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalComponent {
    pub num: MultiPoly,
    pub den: MultiPoly,
}

impl RationalComponent {
    /// Cancels `gcd(num, den)` and scales so that `den` has coprime integer
    /// coefficients and a positive leading coefficient.
    pub fn reduced(num: MultiPoly, den: MultiPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let g = gcd(&num, &den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        let (k, den) = den.normalize_with_factor();
        let num = num.scale(&k.recip().expect("nonzero"));
        RationalComponent { num, den }
    }

    pub fn eval(&self, point: &[Rational]) -> Option<Rational> {
        let d = self.den.eval_rational(point);
        (!d.is_zero()).then(|| &self.num.eval_rational(point) / &d)
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn involves(&self, idx: usize) -> bool {
        self.num.involves(idx) || self.den.involves(idx)
    }
}

/// `(t1, t2) ↦ (p1/q1, p2/q2, p3/q3)` over the ring `t1, t2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceParam {
    pub components: [RationalComponent; 3],
}

impl SurfaceParam {
    pub fn new(components: [RationalComponent; 3]) -> Self {
        SurfaceParam { components }
    }

    pub fn ring() -> Vars {
        Vars::new(&["t1", "t2"])
    }

    pub fn point(&self, t1: &Rational, t2: &Rational) -> Option<[Rational; 3]> {
        let v = [t1.clone(), t2.clone()];
        let [a, b, c] = &self.components;
        Some([a.eval(&v)?, b.eval(&v)?, c.eval(&v)?])
    }

    /// Largest total degree among all numerators and denominators.
    pub fn max_degree(&self) -> i64 {
        self.components.iter().flat_map(|c| [c.num.total_degree(), c.den.total_degree()]).max().unwrap_or(0)
    }
}

impl fmt::Display for SurfaceParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, c) in ["x", "y", "z"].iter().zip(&self.components) {
            writeln!(f, "{name} = ({}) / ({})", c.num, c.den)?;
        }
        Ok(())
    }
}
