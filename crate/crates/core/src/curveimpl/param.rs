use serde::{Deserialize, Serialize};

use super::CurveError;
use crate::exactalg::{gcd, GaussianRational, MultiPoly, Rational, Vars};
use crate::trigsupport::{cheb_c_in, cheb_s_in, TrigPoly};

/// `γ(θ) = (P1(t)/Q(t), P2(t)/Q(t))` with `t = tan(θ/2)`, polynomials in the
/// single variable `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalCurveParam {
    pub p1: MultiPoly,
    pub p2: MultiPoly,
    pub q: MultiPoly,
    pub n: u32,
}

impl RationalCurveParam {
    /// Exact point at parameter `t`.
    pub fn point(&self, t: &Rational) -> (Rational, Rational) {
        let v = [t.clone()];
        let q = self.q.eval_rational(&v);
        (&self.p1.eval_rational(&v) / &q, &self.p2.eval_rational(&v) / &q)
    }

    pub fn degrees(&self) -> ParamDegrees {
        ParamDegrees { p1: self.p1.total_degree(), p2: self.p2.total_degree(), q: self.q.total_degree() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamDegrees {
    pub p1: i64,
    pub p2: i64,
    pub q: i64,
}

pub(crate) fn t_ring() -> Vars {
    Vars::new(&["t"])
}

/// Builds `P1`, `P2`, `Q = (1+t²)^(N+1)` from the half-angle forms of
/// `x = p cos θ − p′ sin θ`, `y = p sin θ + p′ cos θ`, then cancels any
/// factor common to all three (only possible for `N ≤ 1`).
pub fn rational_parametrization(p: &TrigPoly) -> Result<RationalCurveParam, CurveError> {
    if p.is_zero() {
        return Err(CurveError::EmptySupport);
    }
    let vars = t_ring();
    let n = p.degree();
    let base = MultiPoly::parse("t^2 + 1", &vars).expect("literal");
    let cos1 = MultiPoly::parse("1 - t^2", &vars).expect("literal");
    let sin1 = MultiPoly::parse("2*t", &vars).expect("literal");
    // value = p·(1+t²)^N and slope = p′·(1+t²)^N
    let mut value = base.pow(n).scale(p.a0());
    let mut slope = MultiPoly::zero(&vars);
    for k in 1..=n {
        let (a, b) = (p.a(k), p.b(k));
        if a.is_zero() && b.is_zero() {
            continue;
        }
        let c = cheb_c_in(&vars, 0, k);
        let s = cheb_s_in(&vars, 0, k);
        let w = base.pow(n - k);
        value = &value + &(&(&c.scale(&a) + &s.scale(&b)) * &w);
        let kk = Rational::from(k as i64);
        slope = &slope + &(&(&c.scale(&(&b * &kk)) - &s.scale(&(&a * &kk))) * &w);
    }
    let mut p1 = &(&cos1 * &value) - &(&sin1 * &slope);
    let mut p2 = &(&sin1 * &value) + &(&cos1 * &slope);
    let mut q = base.pow(n + 1);
    let g = gcd(&gcd(&p1, &p2), &q);
    if !g.is_constant() {
        p1 = p1.div_exact(&g).expect("common factor");
        p2 = p2.div_exact(&g).expect("common factor");
        q = q.div_exact(&g).expect("common factor");
        let lc = q.leading_coefficient();
        let inv = lc.recip().expect("nonzero");
        p1 = p1.scale(&inv);
        p2 = p2.scale(&inv);
        q = q.scale(&inv);
    }
    if n >= 2 {
        let value = p1.eval_slice(&[GaussianRational::i()]);
        debug_assert_eq!(value, p1_at_i(p));
        debug_assert!(!value.is_zero(), "P1(i) vanishes although N >= 2");
    }
    Ok(RationalCurveParam { p1, p2, q, n })
}

/// `P1(i) = 2^(2N)(a_N + i b_N)(1 − N)`.
pub fn p1_at_i(p: &TrigPoly) -> GaussianRational {
    let n = p.degree();
    let scale = &Rational::from(2).pow(2 * n) * &Rational::from(1 - n as i64);
    GaussianRational::new(&p.a(n) * &scale, &p.b(n) * &scale)
}

/// `γ(π) = (−p(π), −p′(π))`, the point the half-angle chart misses.
pub fn point_at_pi(p: &TrigPoly) -> (Rational, Rational) {
    (-p.value_at_pi(), -p.derivative_at_pi())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    fn t(s: &str) -> MultiPoly {
        MultiPoly::parse(s, &t_ring()).unwrap()
    }

    #[test]
    fn constant_is_circle() {
        let r = rational_parametrization(&TrigPoly::constant(q(3, 1))).unwrap();
        assert_eq!(r.p1, t("-3*t^2 + 3"));
        assert_eq!(r.p2, t("6*t"));
        assert_eq!(r.q, t("t^2 + 1"));
    }

    #[test]
    fn degree_one_reduces() {
        let p = TrigPoly::new(q(2, 1), [(1, q(1, 1))], [(1, q(-3, 1))]);
        let r = rational_parametrization(&p).unwrap();
        assert_eq!(r.q, t("t^2 + 1"));
        // center (1, −3), radius 2
        assert_eq!(r.point(&Rational::zero()), (q(3, 1), q(-3, 1)));
    }

    #[test]
    fn reuleaux_point_at_zero() {
        let p = TrigPoly::new(q(1, 2), [(3, q(1, 16))], []);
        let r = rational_parametrization(&p).unwrap();
        assert_eq!(r.q, t("t^2 + 1").pow(4));
        assert!(r.p1.total_degree() <= 10 && r.p2.total_degree() <= 10);
        assert_eq!(r.point(&Rational::zero()), (q(9, 16), q(0, 1)));
    }

    #[test]
    fn value_at_i() {
        let p = &TrigPoly::cos_term(3, q(1, 1)) + &TrigPoly::sin_term(3, q(1, 1));
        let r = rational_parametrization(&p).unwrap();
        assert_eq!(r.p1.eval_slice(&[GaussianRational::i()]), p1_at_i(&p));
        assert_eq!(p1_at_i(&p), GaussianRational::new(q(-128, 1), q(-128, 1)));
    }

    #[test]
    fn matches_floating_curve() {
        let p = TrigPoly::new(q(1, 2), [(2, q(1, 6)), (5, q(-1, 40))], [(3, q(1, 17))]);
        let r = rational_parametrization(&p).unwrap();
        for tv in [q(-3, 1), q(-1, 7), q(0, 1), q(2, 5), q(4, 1)] {
            let (x, y) = r.point(&tv);
            let (fx, fy) = p.curve_point_f64(2.0 * tv.to_f64().atan());
            assert!((x.to_f64() - fx).abs() < 1e-12 && (y.to_f64() - fy).abs() < 1e-12);
        }
        let (x, y) = point_at_pi(&p);
        let (fx, fy) = p.curve_point_f64(std::f64::consts::PI);
        assert!((x.to_f64() - fx).abs() < 1e-12 && (y.to_f64() - fy).abs() < 1e-12);
    }

    #[test]
    fn empty_is_rejected() {
        assert!(matches!(rational_parametrization(&TrigPoly::default()), Err(CurveError::EmptySupport)));
    }
}
