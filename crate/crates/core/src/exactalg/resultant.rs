//! Resultants through Sylvester and Bézout matrices, with determinants taken
//! by fraction-free (Bareiss) elimination over the polynomial ring.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::gcd::pseudo_remainder;
use super::{AlgError, MultiPoly, Vars};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ResultantMethod {
    Sylvester,
    Bezout,
    /// Subresultant pseudo-remainder sequence, no matrix.
    Subresultant,
}

/// Square matrix of polynomials, row-major.
pub type PolyMatrix = Vec<Vec<MultiPoly>>;

/// Rows below which elimination steps stay on the calling thread.
const PARALLEL_ROWS: usize = 8;

/// Determinant by Bareiss elimination. Every division is exact, so entries
/// stay polynomial; when the input entries have integer coefficients all
/// arithmetic stays in Z[vars].
pub fn determinant(mut m: PolyMatrix, vars: &Vars) -> MultiPoly {
    let n = m.len();
    if n == 0 {
        return MultiPoly::one(vars);
    }
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    let mut negate = false;
    let mut prev = MultiPoly::one(vars);
    for k in 0..n - 1 {
        // sparsest nonzero pivot in column k
        let pivot = (k..n)
            .filter(|&i| !m[i][k].is_zero())
            .min_by_key(|&i| (m[i][k].num_terms(), i));
        let Some(pivot) = pivot else {
            return MultiPoly::zero(vars);
        };
        if pivot != k {
            m.swap(pivot, k);
            negate = !negate;
        }
        let (head, tail) = m.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let akk = &pivot_row[k];
        let update = |row: &mut Vec<MultiPoly>| {
            let aik = row[k].clone();
            for j in k + 1..n {
                let mut v = &row[j] * akk;
                if !aik.is_zero() && !pivot_row[j].is_zero() {
                    v = &v - &(&aik * &pivot_row[j]);
                }
                row[j] = if k == 0 { v } else { v.div_exact(&prev).expect("Bareiss division is exact") };
            }
            row[k] = MultiPoly::zero(vars);
        };
        if n - k - 1 >= PARALLEL_ROWS {
            tail.par_iter_mut().for_each(update);
        } else {
            tail.iter_mut().for_each(update);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Sylvester matrix of `p` (degree m) and `q` (degree n) in the variable at
/// `idx`: n shifted rows of p-coefficients followed by m rows of
/// q-coefficients, highest power first.
pub fn sylvester_matrix(p: &MultiPoly, q: &MultiPoly, idx: usize) -> PolyMatrix {
    let vars = p.vars();
    let pc = p.coefficients_in(idx);
    let qc = q.coefficients_in(idx);
    let m = pc.len() - 1;
    let n = qc.len() - 1;
    let size = m + n;
    let mut mat = vec![vec![MultiPoly::zero(vars); size]; size];
    for r in 0..n {
        for (k, c) in pc.iter().rev().enumerate() {
            mat[r][r + k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in qc.iter().rev().enumerate() {
            mat[n + r][r + k] = c.clone();
        }
    }
    mat
}

/// Bézout matrix `(b_ij)` of `p`, `q` in the variable at `idx`, defined by
/// `(p(s)q(t) − p(t)q(s)) / (s − t) = Σ b_ij s^i t^j`; its size is the larger
/// of the two degrees.
pub fn bezout_matrix(p: &MultiPoly, q: &MultiPoly, idx: usize) -> PolyMatrix {
    let vars = p.vars();
    let pc = p.coefficients_in(idx);
    let qc = q.coefficients_in(idx);
    let size = (pc.len().max(qc.len())) - 1;
    let zero = MultiPoly::zero(vars);
    let coeff = |v: &[MultiPoly], i: usize| v.get(i).cloned().unwrap_or_else(|| zero.clone());
    let mut mat = vec![vec![MultiPoly::zero(vars); size]; size];
    for i in 1..=size {
        for j in 0..i {
            let pi = coeff(&pc, i);
            let pj = coeff(&pc, j);
            let qi = coeff(&qc, i);
            let qj = coeff(&qc, j);
            let w = &(&pi * &qj) - &(&pj * &qi);
            if w.is_zero() {
                continue;
            }
            // s^j t^j (s^(i-j) - t^(i-j)) / (s - t) = Σ_k s^(j+k) t^(i-1-k)
            for k in 0..i - j {
                let (r, c) = (j + k, i - 1 - k);
                mat[r][c] = &mat[r][c] + &w;
            }
        }
    }
    mat
}

/// Resultant of `p` and `q` eliminating `var`. Both methods return the
/// Sylvester-determinant value (p-block rows first).
pub fn resultant(p: &MultiPoly, q: &MultiPoly, var: &str, method: ResultantMethod) -> Result<MultiPoly, AlgError> {
    let idx = p.vars().index(var)?;
    resultant_idx(p, q, idx, method)
}

pub fn resultant_idx(p: &MultiPoly, q: &MultiPoly, idx: usize, method: ResultantMethod) -> Result<MultiPoly, AlgError> {
    if p.is_zero() || q.is_zero() {
        return Err(AlgError::ZeroPolynomial);
    }
    let vars = p.vars().clone();
    let m = p.degree_idx(idx);
    let n = q.degree_idx(idx);
    if m == 0 || n == 0 {
        return Err(AlgError::NothingToEliminate(vars.name(idx).to_string()));
    }
    // work with integer coefficients: Res(a·P, b·Q) = a^n b^m Res(P, Q)
    let (kp, pi) = p.normalize_with_factor();
    let (kq, qi) = q.normalize_with_factor();
    let scale = &kp.pow(n as u32) * &kq.pow(m as u32);
    let core = match method {
        ResultantMethod::Sylvester => determinant(sylvester_matrix(&pi, &qi, idx), &vars),
        ResultantMethod::Bezout => bezout_resultant(&pi, &qi, idx),
        ResultantMethod::Subresultant => prs_resultant(&pi, &qi, idx),
    };
    Ok(core.scale(&scale))
}

/// det(Bez_m(p, q)) = (−1)^(m(m−1)/2) · lc(p)^(m−n) · Res(p, q) for
/// m = deg p ≥ n = deg q; this undoes both factors.
fn bezout_resultant(p: &MultiPoly, q: &MultiPoly, idx: usize) -> MultiPoly {
    let vars = p.vars().clone();
    let m = p.degree_idx(idx) as usize;
    let n = q.degree_idx(idx) as usize;
    if m < n {
        // Res(p, q) = (−1)^(mn) Res(q, p)
        let r = bezout_resultant(q, p, idx);
        return if (m * n) % 2 == 1 { -r } else { r };
    }
    let det = determinant(bezout_matrix(p, q, idx), &vars);
    let mut res = if m > n {
        let lc = p.leading_coefficient_in(idx).pow((m - n) as u32);
        det.div_exact(&lc).expect("leading coefficient power divides the Bézout determinant")
    } else {
        det
    };
    if (m * (m - 1) / 2) % 2 == 1 {
        res = -res;
    }
    res
}

/// Collins' subresultant recurrence; every division is exact.
fn prs_resultant(p: &MultiPoly, q: &MultiPoly, idx: usize) -> MultiPoly {
    let vars = p.vars().clone();
    let (mut a, mut b) = (p.clone(), q.clone());
    let mut negate = false;
    if a.degree_idx(idx) < b.degree_idx(idx) {
        std::mem::swap(&mut a, &mut b);
        negate = a.degree_idx(idx) % 2 == 1 && b.degree_idx(idx) % 2 == 1;
    }
    let mut g = MultiPoly::one(&vars);
    let mut h = MultiPoly::one(&vars);
    loop {
        let (da, db) = (a.degree_idx(idx), b.degree_idx(idx));
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = pseudo_remainder(&a, &b, idx);
        a = b;
        if r.is_zero() {
            return MultiPoly::zero(&vars);
        }
        b = r.div_exact(&(&g * &h.pow(delta))).expect("subresultant division is exact");
        g = a.leading_coefficient_in(idx);
        if delta > 0 {
            h = g.pow(delta).div_exact(&h.pow(delta - 1)).expect("subresultant h update is exact");
        }
        if b.degree_idx(idx) == 0 {
            break;
        }
    }
    let da = a.degree_idx(idx) as u32;
    let top = b.pow(da);
    let res = if da == 0 { top } else { top.div_exact(&h.pow(da - 1)).expect("final subresultant division is exact") };
    if negate {
        -res
    } else {
        res
    }
}

/// Resultant of univariate data without the degree-0 guard: for a constant
/// `q` the Sylvester convention gives `q^deg p`.
pub fn resultant_allow_constant(p: &MultiPoly, q: &MultiPoly, idx: usize, method: ResultantMethod) -> Result<MultiPoly, AlgError> {
    if p.is_zero() || q.is_zero() {
        return Err(AlgError::ZeroPolynomial);
    }
    let m = p.degree_idx(idx);
    let n = q.degree_idx(idx);
    match (m, n) {
        (0, 0) => Ok(MultiPoly::one(p.vars())),
        (_, 0) => Ok(q.pow(m as u32)),
        (0, _) => Ok(p.pow(n as u32)),
        _ => resultant_idx(p, q, idx, method),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Vars {
        Vars::new(&["t", "x", "y"])
    }

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(s, &ring()).unwrap()
    }

    #[test]
    fn two_by_two() {
        let r = resultant(&p("x*t - 1"), &p("y*t - 1"), "t", ResultantMethod::Sylvester).unwrap();
        // det [[x, -1], [y, -1]] = -x + y
        assert_eq!(r, p("y - x"));
        let rb = resultant(&p("x*t - 1"), &p("y*t - 1"), "t", ResultantMethod::Bezout).unwrap();
        assert_eq!(rb, r);
    }

    #[test]
    fn product_formula_on_known_roots() {
        // p = 2(t-1)(t-2)(t+3), q = t^2 + 1: Res = 2^2 · q(1) q(2) q(-3)
        let pp = p("2*t^3 - 14*t + 12");
        let q = p("t^2 + 1");
        let expected = crate::exactalg::Rational::from(4 * 2 * 5 * 10);
        for method in [ResultantMethod::Sylvester, ResultantMethod::Bezout, ResultantMethod::Subresultant] {
            let r = resultant(&pp, &q, "t", method).unwrap();
            assert_eq!(r.constant_value().unwrap(), expected, "{method:?}");
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(
            resultant(&p("x + 1"), &p("t"), "t", ResultantMethod::Sylvester),
            Err(AlgError::NothingToEliminate(_))
        ));
        assert!(matches!(
            resultant(&p("0"), &p("t"), "t", ResultantMethod::Bezout),
            Err(AlgError::ZeroPolynomial)
        ));
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let v = ring();
        let m: PolyMatrix = vec![
            vec![p("x"), p("1"), p("t")],
            vec![p("2"), p("y"), p("0")],
            vec![p("1"), p("x + y"), p("3")],
        ];
        // x(3y - 0) - 1(6 - 0) + t(2x + 2y - y)
        assert_eq!(determinant(m, &v), p("3*x*y - 6 + 2*x*t + y*t"));
    }

    #[test]
    fn zero_column_gives_zero() {
        let v = ring();
        let m: PolyMatrix = vec![vec![p("0"), p("x")], vec![p("0"), p("y")]];
        assert!(determinant(m, &v).is_zero());
    }

    #[test]
    fn three_methods_agree() {
        let cases = [
            ("x*t^3 + y*t - 1", "t^2 - x*y"),
            ("t^2 + x", "y*t^3 - t + x"),
            ("3*t^4 - x*t^3 + y", "x*t^4 + t^2 - y*t + 1"),
            ("t^5 - x*y*t^2 + 7", "2*x*t^3 + y*t^2 - t"),
            ("t - x", "t^3 + y"),
        ];
        for (a, b) in cases {
            let (a, b) = (p(a), p(b));
            let syl = resultant(&a, &b, "t", ResultantMethod::Sylvester).unwrap();
            for method in [ResultantMethod::Bezout, ResultantMethod::Subresultant] {
                assert_eq!(resultant(&a, &b, "t", method).unwrap(), syl, "{method:?}");
                assert_eq!(resultant(&b, &a, "t", method).unwrap(), resultant(&b, &a, "t", ResultantMethod::Sylvester).unwrap());
            }
        }
    }

    #[test]
    fn common_root_gives_zero() {
        let r = resultant(&p("t^2 - x^2"), &p("t^3 - x*t^2 + t - x"), "t", ResultantMethod::Subresultant).unwrap();
        assert!(r.is_zero());
    }
}
