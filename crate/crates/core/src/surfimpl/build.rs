use num_bigint::BigInt;

use super::{RationalComponent, SurfaceError, SurfaceParam};
use crate::curveimpl::rational_parametrization;
use crate::exactalg::{MultiPoly, Rational, Vars};
use crate::trigsupport::{legendre_assoc, SphericalSupport, TrigPoly};

/// Rotation of the curve of `p` about the x-axis:
/// `(x(θ), y(θ) sin φ, y(θ) cos φ)` with `t2 = tan(θ/2)`, `t1 = tan(φ/2)`.
pub fn revolution_surface(p: &TrigPoly) -> Result<SurfaceParam, SurfaceError> {
    let curve = rational_parametrization(p).map_err(|_| SurfaceError::DegenerateRevolution)?;
    if curve.p2.is_zero() {
        return Err(SurfaceError::DegenerateRevolution);
    }
    let ring = SurfaceParam::ring();
    let lift = |q: &MultiPoly| q.embed(&ring, &[1]);
    let (p1, p2, q) = (lift(&curve.p1), lift(&curve.p2), lift(&curve.q));
    let sin_num = MultiPoly::parse("2*t1", &ring).expect("literal");
    let cos_num = MultiPoly::parse("1 - t1^2", &ring).expect("literal");
    let d1 = MultiPoly::parse("1 + t1^2", &ring).expect("literal");
    let den = &q * &d1;
    Ok(SurfaceParam::new([
        RationalComponent::reduced(p1, q),
        RationalComponent::reduced(&p2 * &sin_num, den.clone()),
        RationalComponent::reduced(&p2 * &cos_num, den),
    ]))
}

fn trig_ring() -> Vars {
    Vars::new(&["c", "s", "C", "S"])
}

const C_TH: usize = 0;
const S_TH: usize = 1;
const C_PH: usize = 2;
const S_PH: usize = 3;

fn binomial(n: u32, k: u32) -> Rational {
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rational::from(acc)
}

/// `(cos mφ, sin mφ)` as polynomials in `C = cos φ`, `S = sin φ`.
fn multiple_angle(ring: &Vars, m: u32) -> (MultiPoly, MultiPoly) {
    let c = MultiPoly::var_idx(ring, C_PH);
    let s = MultiPoly::var_idx(ring, S_PH);
    let mut re = MultiPoly::zero(ring);
    let mut im = MultiPoly::zero(ring);
    for j in 0..=m {
        let mut coeff = binomial(m, j);
        if (j / 2) % 2 == 1 {
            coeff = -coeff;
        }
        let term = (&c.pow(m - j) * &s.pow(j)).scale(&coeff);
        if j % 2 == 0 {
            re = &re + &term;
        } else {
            im = &im + &term;
        }
    }
    (re, im)
}

/// `h`, `∂h/∂θ` and `(∂h/∂φ)/sin θ` as polynomials in
/// `c = cos θ, s = sin θ, C = cos φ, S = sin φ`.
fn support_and_derivatives(h: &SphericalSupport) -> [MultiPoly; 3] {
    let ring = trig_ring();
    let c = MultiPoly::var_idx(&ring, C_TH);
    let s = MultiPoly::var_idx(&ring, S_TH);
    let mut value = MultiPoly::zero(&ring);
    let mut d_theta = MultiPoly::zero(&ring);
    let mut d_phi_over_s = MultiPoly::zero(&ring);
    for term in h.terms() {
        let leg = legendre_assoc(term.l as i64, term.m as i64).expect("valid indices");
        let w = leg.w.embed(&ring, &[C_TH]);
        let dw = leg.w.derivative(0).embed(&ring, &[C_TH]);
        let m = term.m;
        let (cos_m, sin_m) = multiple_angle(&ring, m);
        let angle = &cos_m.scale(&term.a) + &sin_m.scale(&term.b);
        let s_m = s.pow(m);
        value = &value + &(&(&s_m * &w) * &angle);
        // d/dθ [s^m W(c)] = m s^(m−1) c W − s^(m+1) W′
        let mut radial = -(&s.pow(m + 1) * &dw);
        if m > 0 {
            let mm = Rational::from(m as i64);
            radial = &radial + &(&(&s.pow(m - 1) * &c) * &w).scale(&mm);
            // ∂/∂φ (a cos mφ + b sin mφ) = m(−a sin mφ + b cos mφ), one s cancels
            let dangle = (&cos_m.scale(&term.b) - &sin_m.scale(&term.a)).scale(&mm);
            d_phi_over_s = &d_phi_over_s + &(&(&s.pow(m - 1) * &w) * &dangle);
        }
        d_theta = &d_theta + &(&radial * &angle);
    }
    [value, d_theta, d_phi_over_s]
}

/// Rewrites a polynomial in `(cos θ, sin θ, cos φ, sin φ)` as a reduced
/// rational function of `t2 = tan(θ/2)`, `t1 = tan(φ/2)`.
fn half_angle(expr: &MultiPoly) -> RationalComponent {
    let ring = SurfaceParam::ring();
    let lit = |s: &str| MultiPoly::parse(s, &ring).expect("literal");
    let base = [lit("1 - t2^2"), lit("2*t2"), lit("1 - t1^2"), lit("2*t1")];
    let d2 = lit("1 + t2^2");
    let d1 = lit("1 + t1^2");
    let mut deg_theta = 0;
    let mut deg_phi = 0;
    for (m, _) in expr.terms() {
        deg_theta = deg_theta.max(m.exp(C_TH) + m.exp(S_TH));
        deg_phi = deg_phi.max(m.exp(C_PH) + m.exp(S_PH));
    }
    let mut num = MultiPoly::zero(&ring);
    for (m, coeff) in expr.terms() {
        let e: Vec<u32> = (0..4).map(|i| m.exp(i)).collect();
        let mut t = MultiPoly::constant(&ring, coeff.clone());
        for (i, b) in base.iter().enumerate() {
            t = &t * &b.pow(e[i]);
        }
        t = &t * &d2.pow(deg_theta - e[0] - e[1]);
        t = &t * &d1.pow(deg_phi - e[2] - e[3]);
        num = &num + &t;
    }
    let den = &d2.pow(deg_theta) * &d1.pow(deg_phi);
    RationalComponent::reduced(num, den)
}

/// `h u + h_θ v + (h_φ / sin θ) w` in the moving frame
/// `u = (s C, s S, c)`, `v = (c C, c S, −s)`, `w = (−S, C, 0)`.
pub fn harmonic_surface(h: &SphericalSupport) -> Result<SurfaceParam, SurfaceError> {
    let ring = trig_ring();
    let [value, d_theta, d_phi] = support_and_derivatives(h);
    let v = |i| MultiPoly::var_idx(&ring, i);
    let (c, s, cp, sp) = (v(C_TH), v(S_TH), v(C_PH), v(S_PH));
    let radial = &(&value * &s) + &(&d_theta * &c);
    let x = &(&radial * &cp) - &(&d_phi * &sp);
    let y = &(&radial * &sp) + &(&d_phi * &cp);
    let z = &(&value * &c) - &(&d_theta * &s);
    Ok(SurfaceParam::new([half_angle(&x), half_angle(&y), half_angle(&z)]))
}
