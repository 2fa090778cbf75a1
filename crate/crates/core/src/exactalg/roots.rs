use super::gcd::{coefficient_gcd, gcd};
use super::{AlgError, MultiPoly};

/// Recovers `g` from `c · g^r`, `g` square-free, returned normalized.
///
/// Splits off the content in the first occurring variable and, on the
/// primitive part `f^r`, uses `gcd(f^r, ∂f^r) = f^(r−1)`; the content is
/// handled recursively in the remaining variables.
pub fn rth_root(p: &MultiPoly, r: u32) -> Result<MultiPoly, AlgError> {
    if p.is_zero() {
        return Err(AlgError::ZeroPolynomial);
    }
    if r == 0 {
        return Err(AlgError::InvalidArgument("root index must be positive".into()));
    }
    let p = p.normalize();
    if r == 1 {
        return Ok(p);
    }
    root_rec(&p, r)
}

fn root_rec(p: &MultiPoly, r: u32) -> Result<MultiPoly, AlgError> {
    let vars = p.vars().clone();
    if p.is_constant() {
        return Ok(MultiPoly::one(&vars));
    }
    let main = (0..vars.len()).find(|&i| p.involves(i)).expect("nonconstant");
    let content = coefficient_gcd(p, main);
    let primitive = p.div_exact(&content).expect("content divides").normalize();
    let g = gcd(&primitive, &primitive.derivative(main));
    let base = primitive.div_exact(&g).ok_or(AlgError::NotPerfectPower)?.normalize();
    if base.pow(r).normalize() != primitive {
        return Err(AlgError::NotPerfectPower);
    }
    let rest = root_rec(&content, r)?;
    Ok((&base * &rest).normalize())
}
