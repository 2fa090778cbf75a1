//! Exact decision of `p + p″ ≥ 0`.

use serde::{Deserialize, Serialize};

use super::{cheb_c_in, cheb_s_in, curvature_radius, TrigPoly};
use crate::exactalg::{isolate_real_roots, sample_points_between_roots, MultiPoly, Rational, RootInterval, UniPoly, Vars};

/// Sign of `R(t) = ρ(θ)(1+t²)^N` between consecutive real roots, plus the
/// value at `θ = π`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignTable {
    pub numerator: String,
    pub roots: Vec<(Rational, Rational)>,
    pub samples: Vec<(Rational, i32)>,
    pub rho_at_pi: Rational,
}

/// A point where `ρ < 0`: `t = tan(θ/2)`, with `t = None` for `θ = π`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NegativeWitness {
    pub t: Option<Rational>,
    pub theta: f64,
    pub rho: Rational,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Convexity {
    Convex { certificate: SignTable },
    NotConvex { witness: NegativeWitness },
}

impl Convexity {
    pub fn is_convex(&self) -> bool {
        matches!(self, Convexity::Convex { .. })
    }
}

/// `q(θ)(1+t²)^N` as a polynomial in `t`, `N` the degree of `q`.
pub fn half_angle_numerator(q: &TrigPoly) -> MultiPoly {
    let vars = Vars::new(&["t"]);
    let n = q.degree();
    let base = MultiPoly::parse("t^2 + 1", &vars).expect("literal");
    let mut out = base.pow(n).scale(q.a0());
    for k in 1..=n {
        let (a, b) = (q.a(k), q.b(k));
        if a.is_zero() && b.is_zero() {
            continue;
        }
        let part = &cheb_c_in(&vars, 0, k).scale(&a) + &cheb_s_in(&vars, 0, k).scale(&b);
        out = &out + &(&part * &base.pow(n - k));
    }
    out
}

fn to_uni(p: &MultiPoly) -> UniPoly {
    let deg = p.degree_idx(0).max(0) as usize;
    let mut coeffs = vec![Rational::zero(); deg + 1];
    for (m, c) in p.terms() {
        coeffs[m.exp(0) as usize] = c.clone();
    }
    UniPoly::new(coeffs)
}

/// Decides `ρ = p + p″ ≥ 0` on the whole circle. The witness search looks
/// at `θ = 0`, then `θ = π`, then the sign-table sample points.
pub fn is_convex(p: &TrigPoly) -> Convexity {
    let rho = curvature_radius(p);
    let n = rho.degree();
    let r = to_uni(&half_angle_numerator(&rho));
    let rho_at = |t: &Rational| {
        let denom = (&Rational::one() + &(t * t)).pow(n);
        &r.eval(t) / &denom
    };
    let at_pi = rho.value_at_pi();
    let zero = Rational::zero();
    if rho_at(&zero).is_negative() {
        return Convexity::NotConvex { witness: NegativeWitness { t: Some(zero.clone()), theta: 0.0, rho: rho_at(&zero) } };
    }
    if at_pi.is_negative() {
        return Convexity::NotConvex {
            witness: NegativeWitness { t: None, theta: std::f64::consts::PI, rho: at_pi },
        };
    }
    let roots: Vec<RootInterval> = isolate_real_roots(&r);
    let points = sample_points_between_roots(&roots);
    let mut samples = Vec::with_capacity(points.len());
    for t in points {
        let s = r.sign_at(&t);
        if s < 0 {
            let theta = 2.0 * t.to_f64().atan();
            return Convexity::NotConvex { witness: NegativeWitness { rho: rho_at(&t), t: Some(t), theta } };
        }
        samples.push((t, s));
    }
    let numerator = MultiPoly::from_terms(
        &Vars::new(&["t"]),
        r.coeffs().iter().enumerate().map(|(e, c)| (crate::exactalg::Monomial::single(0, e as u32), c.clone())),
    );
    Convexity::Convex {
        certificate: SignTable {
            numerator: numerator.to_string(),
            roots: roots.into_iter().map(|iv| (iv.lo, iv.hi)).collect(),
            samples,
            rho_at_pi: at_pi,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn reuleaux_like_is_convex() {
        let p = TrigPoly::new(q(1, 2), [(3, q(1, 16))], []);
        let Convexity::Convex { certificate } = is_convex(&p) else { panic!("expected convex") };
        // ρ = (1 − cos 3θ)/2 touches zero at θ = 0, ±2π/3
        assert_eq!(certificate.roots.len(), 3);
        assert!(certificate.samples.iter().all(|(_, s)| *s > 0));
    }

    #[test]
    fn cos3_fails_at_zero() {
        let p = TrigPoly::cos_term(3, q(1, 1));
        match is_convex(&p) {
            Convexity::NotConvex { witness } => {
                assert_eq!(witness.t, Some(Rational::zero()));
                assert_eq!(witness.rho, Rational::from(-8));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn constants() {
        assert!(is_convex(&TrigPoly::constant(q(1, 1))).is_convex());
        assert!(!is_convex(&TrigPoly::constant(q(-1, 1))).is_convex());
    }

    #[test]
    fn witnesses_at_zero_and_pi() {
        // ρ = 1 − (3/2)cos 2θ is negative at θ = 0
        let p = TrigPoly::new(q(1, 1), [(2, q(1, 2))], []);
        let Convexity::NotConvex { witness } = is_convex(&p) else { panic!("expected not convex") };
        assert!(witness.rho.is_negative());
        // ρ = 1 + 2 cos 3θ is positive at θ = 0 and negative at θ = π
        let p = TrigPoly::new(q(1, 1), [(3, q(-1, 4))], []);
        match is_convex(&p) {
            Convexity::NotConvex { witness } => assert_eq!(witness.t, None),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn numerator_degree() {
        let r = half_angle_numerator(&TrigPoly::new(q(1, 2), [(3, q(-1, 2))], []));
        assert!(r.total_degree() <= 6);
        assert_eq!(r.eval_rational(&[Rational::zero()]), Rational::zero());
    }
}
