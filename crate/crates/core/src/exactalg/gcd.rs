//! Greatest common divisors, contents and primitive parts.
//!
//! Multivariate gcds are computed recursively: split off the content with
//! respect to the first occurring variable, run a subresultant remainder
//! sequence on the primitive parts, and recurse on the contents.

use super::{AlgError, MultiPoly};

/// Full gcd over Q[vars], normalized (integer coprime coefficients, positive
/// graded-lex leading coefficient). `gcd(0, 0) = 0`.
pub fn gcd(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    if p.is_zero() {
        return q.normalize();
    }
    if q.is_zero() {
        return p.normalize();
    }
    let vars = p.vars().clone();
    if p.is_constant() || q.is_constant() {
        return MultiPoly::one(&vars);
    }
    let p = p.normalize();
    let q = q.normalize();
    if p == q {
        return p;
    }
    let main = (0..vars.len()).find(|&i| p.involves(i) || q.involves(i)).expect("nonconstant");
    match (p.involves(main), q.involves(main)) {
        (true, false) => coefficient_gcd_with(&p, main, q),
        (false, true) => coefficient_gcd_with(&q, main, p),
        _ => {
            let cp = coefficient_gcd(&p, main);
            let cq = coefficient_gcd(&q, main);
            let pp = p.div_exact(&cp).expect("content divides");
            let qq = q.div_exact(&cq).expect("content divides");
            let gc = gcd(&cp, &cq);
            let gp = primitive_prs_gcd(&pp, &qq, main);
            (&gc * &gp).normalize()
        }
    }
}

/// gcd of `seed` with every coefficient of `p` viewed in the variable `idx`.
fn coefficient_gcd_with(p: &MultiPoly, idx: usize, seed: MultiPoly) -> MultiPoly {
    let mut g = seed;
    for c in p.coefficients_in(idx).iter().rev() {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, c);
        if g.is_constant() {
            break;
        }
    }
    g
}

/// Normalized gcd of the coefficients of `p` in the variable `idx`.
pub(crate) fn coefficient_gcd(p: &MultiPoly, idx: usize) -> MultiPoly {
    let vars = p.vars().clone();
    let coeffs = p.coefficients_in(idx);
    let mut nonzero: Vec<&MultiPoly> = coeffs.iter().filter(|c| !c.is_zero()).collect();
    if nonzero.is_empty() {
        return MultiPoly::zero(&vars);
    }
    // small coefficients first keeps the intermediate gcds small
    nonzero.sort_by_key(|c| (c.total_degree(), c.num_terms()));
    let mut g = nonzero[0].normalize();
    for c in &nonzero[1..] {
        if g.is_constant() {
            break;
        }
        g = gcd(&g, c);
    }
    if g.is_constant() {
        MultiPoly::one(&vars)
    } else {
        g
    }
}

/// Pseudo-remainder `lc_v(b)^(deg a − deg b + 1) · a mod b` in the variable
/// `idx`.
pub fn pseudo_remainder(a: &MultiPoly, b: &MultiPoly, idx: usize) -> MultiPoly {
    let vars = a.vars().clone();
    let db = b.degree_idx(idx);
    assert!(db >= 0, "pseudo-division by zero");
    let mut r = a.coefficients_in(idx);
    let bc = b.coefficients_in(idx);
    let lcb = bc.last().unwrap().clone();
    let db = db as usize;
    if r.len() <= db {
        return a.clone();
    }
    let steps = r.len() - db;
    for _ in 0..steps {
        let top_idx = r.len() - 1;
        let top = r.pop().unwrap();
        for c in r.iter_mut() {
            *c = &*c * &lcb;
        }
        if !top.is_zero() {
            let shift = top_idx - db;
            for (j, bj) in bc.iter().enumerate().take(db) {
                let t = &top * bj;
                r[shift + j] = &r[shift + j] - &t;
            }
        }
    }
    MultiPoly::from_coefficients(&vars, idx, &r)
}

/// gcd of two polynomials that are primitive in `idx` and both involve it,
/// via the subresultant remainder sequence.
fn primitive_prs_gcd(p: &MultiPoly, q: &MultiPoly, idx: usize) -> MultiPoly {
    let vars = p.vars().clone();
    let (mut a, mut b) = if p.degree_idx(idx) >= q.degree_idx(idx) { (p.clone(), q.clone()) } else { (q.clone(), p.clone()) };
    let mut g = MultiPoly::one(&vars);
    let mut h = MultiPoly::one(&vars);
    loop {
        let delta = (a.degree_idx(idx) - b.degree_idx(idx)) as u32;
        let r = pseudo_remainder(&a, &b, idx);
        if r.is_zero() {
            let c = coefficient_gcd(&b, idx);
            return b.div_exact(&c).expect("content divides").normalize();
        }
        if r.degree_idx(idx) == 0 {
            return MultiPoly::one(&vars);
        }
        let beta = &g * &h.pow(delta);
        a = b;
        b = r.div_exact(&beta).expect("subresultant division is exact");
        g = a.leading_coefficient_in(idx);
        h = if delta == 0 {
            h
        } else {
            g.pow(delta).div_exact(&h.pow(delta - 1)).expect("subresultant h update is exact")
        };
    }
}

/// gcd in `var` over the fraction field of the remaining variables, made
/// primitive in `var` and normalized.
pub fn poly_gcd(p: &MultiPoly, q: &MultiPoly, var: &str) -> Result<MultiPoly, AlgError> {
    if p.is_zero() && q.is_zero() {
        return Err(AlgError::GcdUndefined);
    }
    let idx = p.vars().index(var)?;
    let g = gcd(p, q);
    let c = coefficient_gcd(&g, idx);
    Ok(g.div_exact(&c).expect("content divides").normalize())
}

/// Content of `p` in `var`: the gcd of its coefficients, scaled so that the
/// matching primitive part has coprime integer coefficients and a positive
/// leading coefficient.
pub fn content(p: &MultiPoly, var: &str) -> Result<MultiPoly, AlgError> {
    Ok(content_and_primitive_part(p, var)?.0)
}

pub fn primitive_part(p: &MultiPoly, var: &str) -> Result<MultiPoly, AlgError> {
    Ok(content_and_primitive_part(p, var)?.1)
}

/// `(content, primitive part)` with `p = content · primitive part` exactly.
pub fn content_and_primitive_part(p: &MultiPoly, var: &str) -> Result<(MultiPoly, MultiPoly), AlgError> {
    if p.is_zero() {
        return Err(AlgError::ZeroPolynomial);
    }
    let idx = p.vars().index(var)?;
    let c = coefficient_gcd(p, idx);
    let pp0 = p.div_exact(&c).expect("content divides");
    let (k, pp) = pp0.normalize_with_factor();
    Ok((c.scale(&k), pp))
}

/// Content with respect to a group of variables: the gcd, over the ring of
/// the remaining variables, of the coefficients of every monomial in the
/// group. Returned normalized.
pub fn content_in_vars(p: &MultiPoly, group: &[usize]) -> MultiPoly {
    let vars = p.vars().clone();
    if p.is_zero() {
        return MultiPoly::zero(&vars);
    }
    let mut buckets: std::collections::BTreeMap<Vec<u32>, MultiPoly> = std::collections::BTreeMap::new();
    for (m, c) in p.terms() {
        let key: Vec<u32> = group.iter().map(|&i| m.exp(i)).collect();
        let mut stripped = *m;
        for &i in group {
            stripped = stripped.with_exp(i, 0);
        }
        buckets
            .entry(key)
            .or_insert_with(|| MultiPoly::zero(&vars))
            .add_term(stripped, c);
    }
    let mut coeffs: Vec<MultiPoly> = buckets.into_values().collect();
    coeffs.sort_by_key(|c| (c.total_degree(), c.num_terms()));
    let mut g = coeffs[0].normalize();
    for c in &coeffs[1..] {
        if g.is_constant() {
            break;
        }
        g = gcd(&g, c);
    }
    g
}

/// Primitive part with respect to a group of variables: divides out every
/// factor that does not involve any variable of the group.
pub fn primitive_part_in_vars(p: &MultiPoly, group: &[usize]) -> Result<MultiPoly, AlgError> {
    if p.is_zero() {
        return Err(AlgError::ZeroPolynomial);
    }
    let c = content_in_vars(p, group);
    Ok(p.div_exact(&c).expect("content divides").normalize())
}

/// Square-free test via gcd with every partial derivative.
pub fn is_square_free(p: &MultiPoly) -> bool {
    if p.is_constant() {
        return true;
    }
    let mut g = p.normalize();
    for idx in 0..p.vars().len() {
        if !p.involves(idx) {
            continue;
        }
        g = gcd(&g, &p.derivative(idx));
        if g.is_constant() {
            return true;
        }
    }
    g.is_constant()
}
