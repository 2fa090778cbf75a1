use serde::{Deserialize, Serialize};

use super::{RationalComponent, SurfaceError, SurfaceParam};
use crate::exactalg::{Monomial, MultiPoly, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Assumptions {
    Ok,
    Violation { clause: String },
}

pub(crate) const DEPENDENT_GRADIENTS: &str = "dependent gradients of the first two components";
pub(crate) const CONSTANT_THIRD: &str = "third component is constant";
pub(crate) const AT_INFINITY: &str = "a component curve passes through (0:1:0)";
pub(crate) const FIRST_NOT_BIVARIATE: &str = "first component does not involve both parameters";

/// Numerator of `∂(p/q)/∂t_idx`.
fn quotient_derivative(c: &RationalComponent, idx: usize) -> MultiPoly {
    &(&c.num.derivative(idx) * &c.den) - &(&c.num * &c.den.derivative(idx))
}

fn jacobian_vanishes(a: &RationalComponent, b: &RationalComponent) -> bool {
    let (a1, a2) = (quotient_derivative(a, 0), quotient_derivative(a, 1));
    let (b1, b2) = (quotient_derivative(b, 0), quotient_derivative(b, 1));
    // a nonzero value at any point settles it
    let probes = [(3, 7), (-5, 2), (11, -4), (1, 9)];
    for (u, v) in probes {
        let pt = [Rational::frac(u, 13), Rational::frac(v, 17)];
        let det = &(&a1.eval_rational(&pt) * &b2.eval_rational(&pt)) - &(&a2.eval_rational(&pt) * &b1.eval_rational(&pt));
        if !det.is_zero() {
            return false;
        }
    }
    (&(&a1 * &b2) - &(&a2 * &b1)).is_zero()
}

/// The coefficient of `t2^d` is nonzero, `d` the total degree.
fn misses_infinity(p: &MultiPoly) -> bool {
    if p.is_zero() {
        return true;
    }
    let d = p.total_degree() as u32;
    !p.coefficient(&Monomial::single(1, d)).is_zero()
}

fn infinity_clear(p: &SurfaceParam) -> bool {
    p.components.iter().all(|c| misses_infinity(&c.num) && misses_infinity(&c.den))
}

fn settled_violation(p: &SurfaceParam) -> Option<&'static str> {
    let [a, b, c] = &p.components;
    if jacobian_vanishes(a, b) {
        return Some(DEPENDENT_GRADIENTS);
    }
    if c.is_constant() {
        return Some(CONSTANT_THIRD);
    }
    None
}

/// Checks, in order: independent gradients of the first two components,
/// a nonconstant third component, and that every numerator and denominator
/// reaches its total degree in a pure power of `t2`.
pub fn general_assumptions_check(p: &SurfaceParam) -> Assumptions {
    if let Some(clause) = settled_violation(p) {
        return Assumptions::Violation { clause: clause.into() };
    }
    if !infinity_clear(p) {
        return Assumptions::Violation { clause: AT_INFINITY.into() };
    }
    Assumptions::Ok
}

/// A parametrization brought into the form the degree engine needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prepared {
    pub param: SurfaceParam,
    /// `permutation[i]` is the original coordinate placed at position `i`.
    pub permutation: [usize; 3],
    /// `c` in `t1 ↦ t1 + c·t2`; 0 when no shift was needed.
    pub shift: u32,
}

const PERMUTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
const MAX_SHIFT: u32 = 16;

fn shifted(p: &SurfaceParam, c: u32) -> SurfaceParam {
    if c == 0 {
        return p.clone();
    }
    let ring = SurfaceParam::ring();
    let t1 = &MultiPoly::var_idx(&ring, 0) + &MultiPoly::var_idx(&ring, 1).scale(&Rational::from(c as i64));
    let sub = |q: &MultiPoly| q.substitute(0, &t1);
    SurfaceParam::new(p.components.clone().map(|comp| RationalComponent::reduced(sub(&comp.num), sub(&comp.den))))
}

/// Tries the coordinate orders in a fixed sequence (identity first) until
/// the first two components have independent gradients, the third is
/// nonconstant and the first involves both parameters; then applies the
/// smallest shift `t1 ↦ t1 + c·t2` that clears the point at infinity.
pub fn prepare(p: &SurfaceParam) -> Result<Prepared, SurfaceError> {
    let mut first_failure = None;
    for perm in PERMUTATIONS {
        let candidate = SurfaceParam::new(perm.map(|i| p.components[i].clone()));
        let failure = settled_violation(&candidate).or_else(|| {
            let c = &candidate.components[0];
            (!(c.involves(0) && c.involves(1))).then_some(FIRST_NOT_BIVARIATE)
        });
        if let Some(clause) = failure {
            first_failure.get_or_insert(clause);
            continue;
        }
        for c in 0..=MAX_SHIFT {
            let param = shifted(&candidate, c);
            if infinity_clear(&param) {
                return Ok(Prepared { param, permutation: perm, shift: c });
            }
        }
        first_failure.get_or_insert(AT_INFINITY);
    }
    Err(SurfaceError::Assumption(first_failure.unwrap_or(DEPENDENT_GRADIENTS).into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surfimpl::{harmonic_surface, revolution_surface};
    use crate::trigsupport::{SphericalSupport, TrigPoly};

    fn comp(num: &str, den: &str) -> RationalComponent {
        let r = SurfaceParam::ring();
        RationalComponent::reduced(MultiPoly::parse(num, &r).unwrap(), MultiPoly::parse(den, &r).unwrap())
    }

    #[test]
    fn dependent_gradients() {
        let p = SurfaceParam::new([comp("t1", "1"), comp("t1", "1"), comp("t2", "1")]);
        assert_eq!(general_assumptions_check(&p), Assumptions::Violation { clause: DEPENDENT_GRADIENTS.into() });
    }

    #[test]
    fn constant_third() {
        let p = SurfaceParam::new([comp("t1", "1"), comp("t2", "1"), comp("3", "1")]);
        assert_eq!(general_assumptions_check(&p), Assumptions::Violation { clause: CONSTANT_THIRD.into() });
    }

    #[test]
    fn sphere_after_fix_up() {
        let s = harmonic_surface(&SphericalSupport::constant(Rational::one())).unwrap();
        let prepared = prepare(&s).unwrap();
        assert_eq!(general_assumptions_check(&prepared.param), Assumptions::Ok);
    }

    #[test]
    fn revolution_is_settled() {
        let s = revolution_surface(&TrigPoly::cos_term(3, Rational::one())).unwrap();
        assert!(!matches!(general_assumptions_check(&s), Assumptions::Violation { ref clause } if clause != AT_INFINITY));
        let prepared = prepare(&s).unwrap();
        assert_eq!(general_assumptions_check(&prepared.param), Assumptions::Ok);
        assert_ne!(prepared.permutation[0], 0);
    }

    #[test]
    fn hopeless_input() {
        let p = SurfaceParam::new([comp("t1", "1"), comp("2*t1", "1"), comp("t1 + 1", "1")]);
        assert!(matches!(prepare(&p), Err(SurfaceError::Assumption(_))));
    }
}
