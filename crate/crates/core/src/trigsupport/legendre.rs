use num_bigint::BigInt;

use super::SupportError;
use crate::exactalg::{MultiPoly, Rational, Vars};

/// `P_l^m(u) = s^m · W(u)` with `s = √(1 − u²)` and
/// `W = (−1)^(m+l)/(2^l l!) · d^(l+m)/du^(l+m) (1 − u²)^l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LegendreAssoc {
    pub l: u32,
    pub m: u32,
    /// `W` as a polynomial in `u`.
    pub w: MultiPoly,
}

impl LegendreAssoc {
    /// `m mod 2`: the power of `s` left after folding `s²` into `u`.
    pub fn parity(&self) -> u32 {
        self.m % 2
    }

    /// `W · (1 − u²)^⌊m/2⌋`, so that `P_l^m = s^parity · expanded`.
    pub fn expanded(&self) -> MultiPoly {
        let base = MultiPoly::parse("1 - u^2", self.w.vars()).expect("literal");
        &self.w * &base.pow(self.m / 2)
    }

    pub fn eval_f64(&self, u: f64) -> f64 {
        let w: f64 = self.w.terms().map(|(mono, c)| c.to_f64() * u.powi(mono.exp(0) as i32)).sum();
        (1.0 - u * u).sqrt().powi(self.m as i32) * w
    }
}

pub fn legendre_assoc(l: i64, m: i64) -> Result<LegendreAssoc, SupportError> {
    if l < 0 || m < 0 || m > l {
        return Err(SupportError::InvalidLegendre { l, m });
    }
    let (l, m) = (l as u32, m as u32);
    let vars = Vars::new(&["u"]);
    let mut d = MultiPoly::parse("1 - u^2", &vars).expect("literal").pow(l);
    for _ in 0..l + m {
        d = d.derivative(0);
    }
    let factorial: BigInt = (1..=l as i64).map(BigInt::from).product();
    let mut scale = Rational::new(1, BigInt::from(2).pow(l) * factorial).expect("nonzero");
    if (m + l) % 2 == 1 {
        scale = -scale;
    }
    Ok(LegendreAssoc { l, m, w: d.scale(&scale) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(s: &str) -> MultiPoly {
        MultiPoly::parse(s, &Vars::new(&["u"])).unwrap()
    }

    #[test]
    fn low_orders() {
        assert_eq!(legendre_assoc(0, 0).unwrap().w, u("1"));
        assert_eq!(legendre_assoc(1, 0).unwrap().w, u("u"));
        let p11 = legendre_assoc(1, 1).unwrap();
        assert_eq!((p11.parity(), p11.expanded()), (1, u("-1")));
        assert_eq!(legendre_assoc(2, 0).unwrap().w, u("3/2*u^2 - 1/2"));
        let p22 = legendre_assoc(2, 2).unwrap();
        assert_eq!((p22.parity(), p22.expanded()), (0, u("-3*u^2 + 3")));
    }

    #[test]
    fn rejects_bad_indices() {
        assert!(legendre_assoc(1, 2).is_err());
        assert!(legendre_assoc(-1, 0).is_err());
        assert!(legendre_assoc(2, -1).is_err());
    }

    /// Standard recurrences with the Condon–Shortley phase.
    fn reference(l: u32, m: u32, x: f64) -> f64 {
        let s = (1.0 - x * x).sqrt();
        let mut pmm = 1.0;
        for i in 1..=m {
            pmm *= -((2 * i - 1) as f64) * s;
        }
        if l == m {
            return pmm;
        }
        let mut pm1 = x * (2 * m + 1) as f64 * pmm;
        if l == m + 1 {
            return pm1;
        }
        let mut p = 0.0;
        for ll in m + 2..=l {
            p = (x * (2 * ll - 1) as f64 * pm1 - (ll + m - 1) as f64 * pmm) / (ll - m) as f64;
            pmm = pm1;
            pm1 = p;
        }
        p
    }

    #[test]
    fn agrees_with_recurrence() {
        for l in 0..=5u32 {
            for m in 0..=l {
                let p = legendre_assoc(l as i64, m as i64).unwrap();
                for x in [-0.9, -0.35, 0.0, 0.2, 0.77] {
                    assert!((p.eval_f64(x) - reference(l, m, x)).abs() < 1e-9, "P_{l}^{m}({x})");
                }
            }
        }
    }
}
