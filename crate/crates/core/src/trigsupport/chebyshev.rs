//! Tangent half-angle forms of `cos nθ` and `sin nθ`: with `t = tan(θ/2)`,
//! `cos nθ = C_n(t)/(1+t²)^n` and `sin nθ = S_n(t)/(1+t²)^n`.

use num_bigint::BigInt;

use super::SupportError;
use crate::exactalg::{Monomial, MultiPoly, Rational, Vars};

fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `(1 + it)^(2n)` split into real and imaginary parts; these are
/// `C_n` and `S_n` since `(1 − t² + 2it)/(1 + t²) = e^{iθ}`.
fn half_angle_parts(vars: &Vars, idx: usize, n: u32) -> (MultiPoly, MultiPoly) {
    let mut c = MultiPoly::zero(vars);
    let mut s = MultiPoly::zero(vars);
    for j in 0..=2 * n {
        let mut coeff = Rational::from(binomial(2 * n, j));
        if (j / 2) % 2 == 1 {
            coeff = -coeff;
        }
        let term = MultiPoly::monomial(vars, Monomial::single(idx, j), coeff);
        if j % 2 == 0 {
            c = &c + &term;
        } else {
            s = &s + &term;
        }
    }
    (c, s)
}

fn check(n: i64) -> Result<u32, SupportError> {
    u32::try_from(n).map_err(|_| SupportError::NegativeIndex(n))
}

/// `C_n` in the single variable `t`.
pub fn cheb_c(n: i64) -> Result<MultiPoly, SupportError> {
    Ok(cheb_c_in(&Vars::new(&["t"]), 0, check(n)?))
}

/// `S_n` in the single variable `t`.
pub fn cheb_s(n: i64) -> Result<MultiPoly, SupportError> {
    Ok(cheb_s_in(&Vars::new(&["t"]), 0, check(n)?))
}

/// `C_n` in the variable at `idx` of `vars`.
pub fn cheb_c_in(vars: &Vars, idx: usize, n: u32) -> MultiPoly {
    half_angle_parts(vars, idx, n).0
}

/// `S_n` in the variable at `idx` of `vars`.
pub fn cheb_s_in(vars: &Vars, idx: usize, n: u32) -> MultiPoly {
    half_angle_parts(vars, idx, n).1
}
