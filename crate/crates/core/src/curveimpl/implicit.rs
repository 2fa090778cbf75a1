use serde::{Deserialize, Serialize};

use super::param::{point_at_pi, rational_parametrization};
use super::{sample_parameters, CurveError};
use crate::exactalg::{resultant_idx, rth_root, AlgError, MultiPoly, Rational, ResultantMethod, Vars};
use crate::trigsupport::{classify, parity_class, ClassKind, Classification, Parity, TrigPoly};

/// Defining polynomial of the curve with its degree data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImplicitReport {
    pub support: TrigPoly,
    pub classification: Classification,
    pub tracing_index: u32,
    pub predicted_total_degree: i64,
    pub total_degree: i64,
    pub deg_x: i64,
    pub deg_y: i64,
    #[serde(rename = "polynomial", with = "xy_text")]
    pub f: MultiPoly,
}

mod xy_text {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::exactalg::{MultiPoly, Vars};

    pub fn serialize<S: Serializer>(f: &MultiPoly, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&f.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<MultiPoly, D::Error> {
        let text = String::deserialize(d)?;
        MultiPoly::parse(&text, &Vars::new(&["x", "y"])).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn xy_ring() -> Vars {
    Vars::new(&["x", "y"])
}

/// 1 when some even harmonic (including `a0`) is present, 2 otherwise.
pub fn tracing_index(p: &TrigPoly) -> Result<u32, CurveError> {
    if p.degree() <= 1 {
        return Err(CurveError::CircleCase);
    }
    Ok(match parity_class(p) {
        Parity::HasEvenHarmonic => 1,
        Parity::OddOnly => 2,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub total_degree: i64,
    pub circle: bool,
}

/// `N + 1` for odd-only spectra, `2N + 2` otherwise; circles give 2.
pub fn predicted_total_degree(p: &TrigPoly) -> Prediction {
    let n = p.degree() as i64;
    if n <= 1 {
        return Prediction { total_degree: 2, circle: true };
    }
    let d = match parity_class(p) {
        Parity::OddOnly => n + 1,
        Parity::HasEvenHarmonic => 2 * n + 2,
    };
    if !p.a0().is_zero() {
        match classify(p).kind {
            ClassKind::ConstantWidth { .. } => debug_assert_eq!(d, 4 * ((n - 1) / 2) + 4),
            ClassKind::Rotor { n: order, .. } if (n - 1) % order as i64 == 0 => {
                debug_assert_eq!(d, 2 * (n - 1) + 4)
            }
            _ => {}
        }
    }
    Prediction { total_degree: d, circle: false }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Vanishing {
    Ok,
    Counterexample { t: Rational },
}

/// Evaluates `f` (over `x`, `y`) at the curve points of the given parameters.
pub fn verify_vanishing(f: &MultiPoly, p: &TrigPoly, samples: &[Rational]) -> Result<Vanishing, CurveError> {
    let param = rational_parametrization(p)?;
    let f = f.to_ring(&xy_ring())?;
    for t in samples {
        let (x, y) = param.point(t);
        if !f.eval_rational(&[x, y]).is_zero() {
            return Ok(Vanishing::Counterexample { t: t.clone() });
        }
    }
    Ok(Vanishing::Ok)
}

fn circle(p: &TrigPoly) -> Result<MultiPoly, CurveError> {
    if p.a0().is_zero() {
        return Err(CurveError::Degenerate);
    }
    let v = xy_ring();
    let x = MultiPoly::var_idx(&v, 0);
    let y = MultiPoly::var_idx(&v, 1);
    let cx = &x - &MultiPoly::constant(&v, p.a(1));
    let cy = &y - &MultiPoly::constant(&v, p.b(1));
    let f = &(&cx.pow(2) + &cy.pow(2)) - &MultiPoly::constant(&v, p.a0().pow(2));
    Ok(f.normalize())
}

/// `f` from `Res_t(x·Q − P1, y·Q − P2)` by the Bézout matrix, taking the
/// square root when the curve is traced twice.
pub fn implicitize(p: &TrigPoly) -> Result<ImplicitReport, CurveError> {
    if p.is_zero() {
        return Err(CurveError::EmptySupport);
    }
    let classification = classify(p);
    let prediction = predicted_total_degree(p);
    let (f, r) = if p.degree() <= 1 {
        (circle(p)?, 1)
    } else {
        let r = tracing_index(p)?;
        let param = rational_parametrization(p)?;
        let ring = Vars::new(&["t", "x", "y"]);
        let embed = |q: &MultiPoly| q.embed(&ring, &[0]);
        let (p1, p2, q) = (embed(&param.p1), embed(&param.p2), embed(&param.q));
        let h1 = &(&MultiPoly::var_idx(&ring, 1) * &q) - &p1;
        let h2 = &(&MultiPoly::var_idx(&ring, 2) * &q) - &p2;
        let res = resultant_idx(&h1, &h2, 0, ResultantMethod::Bezout)?;
        if res.is_zero() {
            return Err(CurveError::Degenerate);
        }
        let f = match rth_root(&res, r) {
            Ok(f) => f,
            Err(AlgError::NotPerfectPower) => return Err(CurveError::TracingContradiction),
            Err(e) => return Err(e.into()),
        };
        (f.to_ring(&xy_ring())?, r)
    };
    if let Vanishing::Counterexample { t } = verify_vanishing(&f, p, &sample_parameters())? {
        return Err(CurveError::NotVanishing(t));
    }
    let (px, py) = point_at_pi(p);
    debug_assert!(f.eval_rational(&[px, py]).is_zero(), "f must vanish at the point for θ = π");
    Ok(ImplicitReport {
        support: p.clone(),
        classification,
        tracing_index: r,
        predicted_total_degree: prediction.total_degree,
        total_degree: f.total_degree(),
        deg_x: f.degree_idx(0),
        deg_y: f.degree_idx(1),
        f,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    fn xy(s: &str) -> MultiPoly {
        MultiPoly::parse(s, &xy_ring()).unwrap()
    }

    #[test]
    fn unit_circle() {
        let r = implicitize(&TrigPoly::constant(q(1, 1))).unwrap();
        assert_eq!(r.f, xy("x^2 + y^2 - 1"));
        assert_eq!((r.total_degree, r.tracing_index), (2, 1));
    }

    #[test]
    fn shifted_circle() {
        let p = TrigPoly::new(q(2, 1), [(1, q(1, 1))], [(1, q(-3, 1))]);
        let r = implicitize(&p).unwrap();
        assert_eq!(r.f, xy("x^2 + y^2 - 2*x + 6*y + 6"));
        assert!(matches!(implicitize(&TrigPoly::cos_term(1, q(1, 1))), Err(CurveError::Degenerate)));
    }

    #[test]
    fn tracing() {
        assert_eq!(tracing_index(&TrigPoly::new(q(1, 2), [(3, q(1, 16))], [])).unwrap(), 1);
        assert_eq!(tracing_index(&TrigPoly::cos_term(3, q(1, 1))).unwrap(), 2);
        assert_eq!(tracing_index(&(&TrigPoly::cos_term(4, q(1, 1)) + &TrigPoly::sin_term(3, q(1, 1)))).unwrap(), 1);
        assert!(matches!(tracing_index(&TrigPoly::constant(q(1, 1))), Err(CurveError::CircleCase)));
    }

    #[test]
    fn predictions() {
        let p = TrigPoly::new(q(1, 2), [(3, q(1, 16))], []);
        assert_eq!(predicted_total_degree(&p).total_degree, 8);
        let p = TrigPoly::new(q(1, 2), [(2, q(1, 6))], []);
        assert_eq!(predicted_total_degree(&p).total_degree, 6);
        assert_eq!(predicted_total_degree(&TrigPoly::cos_term(5, q(1, 1))).total_degree, 6);
        assert_eq!(predicted_total_degree(&TrigPoly::constant(q(1, 1))), Prediction { total_degree: 2, circle: true });
    }

    #[test]
    fn odd_only_quartic() {
        let r = implicitize(&TrigPoly::cos_term(3, q(1, 1))).unwrap();
        assert_eq!((r.tracing_index, r.total_degree), (2, 4));
    }

    #[test]
    fn vanishing_checks() {
        let one = TrigPoly::constant(q(1, 1));
        let s = sample_parameters();
        assert_eq!(verify_vanishing(&xy("x^2 + y^2 - 1"), &one, &s).unwrap(), Vanishing::Ok);
        assert!(matches!(verify_vanishing(&xy("x + y"), &one, &s).unwrap(), Vanishing::Counterexample { .. }));
    }

    #[test]
    fn empty_support() {
        assert!(matches!(implicitize(&TrigPoly::default()), Err(CurveError::EmptySupport)));
    }
}
