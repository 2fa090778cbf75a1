use rayon::prelude::*;

use super::assumptions::prepare;
use super::degrees::sendra_degrees;
use super::{SurfaceError, SurfaceParam};
use crate::exactalg::{
    gcd, pseudo_remainder, resultant_allow_constant, rth_root, AlgError, Monomial, MultiPoly, Rational,
    ResultantMethod, Vars,
};

/// Largest total degree of a numerator or denominator accepted by
/// [`surface_implicitize_small`].
pub const SMALL_DEGREE_LIMIT: i64 = 4;

const T1: usize = 0;
const T2: usize = 1;
const X3: usize = 2;
const AUX_VALUES: [((i64, i64), (i64, i64)); 3] = [((2, 3), (-5, 7)), ((-3, 2), (4, 11)), ((7, 5), (1, 3))];

pub(crate) fn xyz_ring() -> Vars {
    Vars::new(&["x", "y", "z"])
}

fn sample_points() -> Vec<(Rational, Rational)> {
    [(1, 2, 1, 3), (-2, 1, 3, 4), (3, 1, -1, 5), (2, 7, 5, 3), (-3, 4, 7, 5), (11, 6, -1, 9), (5, 1, 2, 1), (-1, 6, -7, 2), (4, 3, 9, 10), (-5, 8, 1, 1)]
        .into_iter()
        .map(|(a, b, c, d)| (Rational::frac(a, b), Rational::frac(c, d)))
        .collect()
}

fn res(p: &MultiPoly, q: &MultiPoly, idx: usize) -> Result<MultiPoly, SurfaceError> {
    match resultant_allow_constant(p, q, idx, ResultantMethod::Subresultant) {
        Ok(r) if !r.is_zero() => Ok(r),
        Ok(_) | Err(AlgError::NothingToEliminate(_)) | Err(AlgError::ZeroPolynomial) => Err(SurfaceError::NotIndependent),
        Err(e) => Err(e.into()),
    }
}

/// `Res(p, q)` up to a nonzero constant for `p` with numeric coefficients,
/// reducing `q` modulo `p` first.
fn res_mod(p: &MultiPoly, q: &MultiPoly, idx: usize) -> Result<MultiPoly, SurfaceError> {
    let r = pseudo_remainder(q, p, idx);
    if r.is_zero() {
        return Err(SurfaceError::NotIndependent);
    }
    if r.degree_idx(idx) == 0 {
        return Ok(r.pow(p.degree_idx(idx) as u32));
    }
    res(p, &r, idx)
}

fn strip(p: &MultiPoly, base: &MultiPoly) -> MultiPoly {
    p.div_exact(&gcd(p, base)).expect("gcd divides")
}

/// The nested elimination along the line `x1 = a`, `x2 = b` with `x3`
/// symbolic.
struct Fibres {
    ring: Vars,
    comps: Vec<(MultiPoly, MultiPoly)>,
    base_s: MultiPoly,
    base_t: MultiPoly,
}

impl Fibres {
    fn new(p: &SurfaceParam) -> Result<Self, SurfaceError> {
        let ring = Vars::new(&["t1", "t2", "x3"]);
        let comps = p.components.iter().map(|c| (c.num.embed(&ring, &[T1, T2]), c.den.embed(&ring, &[T1, T2]))).collect();
        let mut f = Fibres { base_s: MultiPoly::one(&ring), base_t: MultiPoly::one(&ring), ring, comps };
        // factors shared by every line come from base points and denominators
        let mut s_all = Vec::new();
        let mut t_all = Vec::new();
        for (n1, d1, n2, d2) in [(3, 5, -2, 7), (5, 11, 7, 13), (-4, 9, 1, 17)] {
            let (g1, g2) = (f.line(0, &Rational::frac(n1, d1)), f.line(1, &Rational::frac(n2, d2)));
            s_all.push(res(&g1, &g2, T2)?);
            t_all.push(res(&g1, &g2, T1)?);
        }
        f.base_s = s_all[1..].iter().fold(s_all[0].clone(), |acc, q| gcd(&acc, q));
        f.base_t = t_all[1..].iter().fold(t_all[0].clone(), |acc, q| gcd(&acc, q));
        Ok(f)
    }

    fn line(&self, k: usize, v: &Rational) -> MultiPoly {
        &self.comps[k].0 - &self.comps[k].1.scale(v)
    }

    /// `pp_x3(h)` on the line, a polynomial in `x3` alone.
    fn power_at(&self, a: &Rational, b: &Rational) -> Result<MultiPoly, SurfaceError> {
        let (g1, g2) = (self.line(0, a), self.line(1, b));
        let g3 = &self.comps[2].0 - &(&MultiPoly::var_idx(&self.ring, X3) * &self.comps[2].1);
        let s12 = strip(&res(&g1, &g2, T2)?, &self.base_s);
        let t12 = strip(&res(&g1, &g2, T1)?, &self.base_t);
        // the content in Z, W as a gcd over generic values of Z, W
        let mut h = MultiPoly::zero(&self.ring);
        for (z, w) in AUX_VALUES {
            let aux = &(&g3 + &g1.scale(&Rational::frac(z.0, z.1))) + &g2.scale(&Rational::frac(w.0, w.1));
            let k = res_mod(&s12, &aux, T1)?;
            h = gcd(&h, &res_mod(&t12, &k, T2)?);
        }
        Ok(h)
    }
}

/// Basis vector of the kernel when it is one-dimensional.
fn kernel_vector(mut rows: Vec<Vec<Rational>>, n: usize) -> Option<Vec<Rational>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].recip().expect("nonzero pivot");
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v = &*v - &(&f * pv);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if pivots.len() + 1 != n {
        return None;
    }
    let free = (0..n).find(|c| !pivots.contains(c))?;
    let mut v = vec![Rational::zero(); n];
    v[free] = Rational::one();
    for (row, &c) in pivots.iter().enumerate() {
        v[c] = -rows[row][free].clone();
    }
    Some(v)
}

/// Implicit equation from the nested resultants `S_12`, `T_12`,
/// `K = Res_t1(S_12, G3 + Z G1 + W G2)` and `h = Content_{Z,W}(Res_t2(T_12, K))`,
/// evaluated on lines `x1 = a, x2 = b` where `pp_x3(h) = F^r`. The `r`-th
/// roots along a grid of lines determine `F` within the partial degrees
/// reported by [`sendra_degrees`].
pub fn surface_implicitize_small(p: &SurfaceParam) -> Result<MultiPoly, SurfaceError> {
    let prepared = prepare(p)?;
    if p.max_degree() > SMALL_DEGREE_LIMIT || prepared.param.max_degree() > SMALL_DEGREE_LIMIT {
        return Err(SurfaceError::TooLargeForImplicit);
    }
    let report = sendra_degrees(p)?;
    let orig = [report.deg_x, report.deg_y, report.deg_z];
    // partial degrees of F in the prepared order
    let d: Vec<usize> = prepared.permutation.iter().map(|&o| (orig[o] / report.map_degree) as usize).collect();
    let fibres = Fibres::new(&prepared.param)?;
    let unknowns = (d[0] + 1) * (d[1] + 1) * (d[2] + 1);
    let index = |i: usize, j: usize, k: usize| (i * (d[1] + 1) + j) * (d[2] + 1) + k;
    // a tensor grid fine enough for f_k·F_top − F_k·f_top to vanish identically
    let grid: Vec<(usize, usize)> = (0..2 * d[0] + 1).flat_map(|i| (0..2 * d[1] + 1).map(move |j| (i, j))).collect();
    let per_line = |&(i, j): &(usize, usize)| -> Result<Vec<Vec<Rational>>, SurfaceError> {
        let a = Rational::frac(2 * i as i64 + 1, i as i64 + 3);
        let b = Rational::frac(-(3 * j as i64 + 2), 2 * j as i64 + 5);
        let h = fibres.power_at(&a, &b)?;
        // the exponent is a multiple of the map degree, read off the degree
        let deg = h.degree_idx(X3) as usize;
        if d[2] == 0 || deg % d[2] != 0 || deg / d[2] == 0 {
            return Ok(Vec::new());
        }
        let Ok(f) = rth_root(&h, (deg / d[2]) as u32) else { return Ok(Vec::new()) };
        let coeffs: Vec<Rational> = f.coefficients_in(X3).iter().map(|c| c.constant_value().expect("univariate in x3")).collect();
        let powers: Vec<(usize, usize, Rational)> =
            (0..=d[0]).flat_map(|u| (0..=d[1]).map(move |v| (u, v))).map(|(u, v)| (u, v, &a.pow(u as u32) * &b.pow(v as u32))).collect();
        let mut rows = Vec::new();
        for (k, ck) in coeffs.iter().enumerate().take(d[2]) {
            let m = ck / &coeffs[d[2]];
            let mut row = vec![Rational::zero(); unknowns];
            for (u, v, w) in &powers {
                row[index(*u, *v, k)] = w.clone();
                row[index(*u, *v, d[2])] = -(&m * w);
            }
            rows.push(row);
        }
        Ok(rows)
    };
    let blocks: Vec<Vec<Vec<Rational>>> = grid.par_iter().map(per_line).collect::<Result<_, _>>()?;
    let rows = blocks.into_iter().flatten().collect();
    let v = kernel_vector(rows, unknowns).ok_or(SurfaceError::NotIndependent)?;
    let ring = xyz_ring();
    let perm = prepared.permutation;
    let mut f = MultiPoly::zero(&ring);
    for i in 0..=d[0] {
        for j in 0..=d[1] {
            for k in 0..=d[2] {
                let c = &v[index(i, j, k)];
                if c.is_zero() {
                    continue;
                }
                let mut e = [0u32; 3];
                e[perm[0]] = i as u32;
                e[perm[1]] = j as u32;
                e[perm[2]] = k as u32;
                f = &f + &MultiPoly::monomial(&ring, Monomial::from_exponents(&e), c.clone());
            }
        }
    }
    let f = f.normalize();
    for (t1, t2) in sample_points() {
        if let Some(pt) = p.point(&t1, &t2) {
            if !f.eval_rational(&pt).is_zero() {
                return Err(SurfaceError::NotIndependent);
            }
        }
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surfimpl::{harmonic_surface, revolution_surface};
    use crate::trigsupport::{HarmonicTerm, SphericalSupport, TrigPoly};

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    fn xyz(s: &str) -> MultiPoly {
        MultiPoly::parse(s, &xyz_ring()).unwrap()
    }

    #[test]
    fn unit_sphere() {
        let s = harmonic_surface(&SphericalSupport::constant(q(1, 1))).unwrap();
        assert_eq!(surface_implicitize_small(&s).unwrap(), xyz("x^2 + y^2 + z^2 - 1"));
    }

    #[test]
    fn translated_sphere() {
        let term = |l, m, a, b| HarmonicTerm { l, m, a, b };
        let h = SphericalSupport::new([term(0, 0, q(2, 1), q(0, 1)), term(1, 0, q(1, 3), q(0, 1)), term(1, 1, q(-1, 2), q(3, 1))]);
        let s = harmonic_surface(&h).unwrap();
        let r = xyz_ring();
        let shifted = |i: usize, c: Rational| &MultiPoly::var_idx(&r, i) - &MultiPoly::constant(&r, c);
        let sum = &(&shifted(0, q(1, 2)).pow(2) + &shifted(1, q(-3, 1)).pow(2)) + &shifted(2, q(1, 3)).pow(2);
        let expect = (&sum - &MultiPoly::constant(&r, q(4, 1))).normalize();
        assert_eq!(surface_implicitize_small(&s).unwrap(), expect);
    }

    #[test]
    fn revolved_circle() {
        let s = revolution_surface(&TrigPoly::constant(q(3, 1))).unwrap();
        assert_eq!(surface_implicitize_small(&s).unwrap(), xyz("x^2 + y^2 + z^2 - 9"));
    }

    #[test]
    fn guard() {
        let s = revolution_surface(&TrigPoly::cos_term(3, q(1, 1))).unwrap();
        assert_eq!(surface_implicitize_small(&s), Err(SurfaceError::TooLargeForImplicit));
    }

    #[test]
    fn one_dimensional_kernel() {
        let rows = vec![vec![q(1, 1), q(-1, 1), q(0, 1)], vec![q(0, 1), q(1, 1), q(-2, 1)]];
        assert_eq!(kernel_vector(rows, 3).unwrap(), vec![q(2, 1), q(2, 1), q(1, 1)]);
        assert!(kernel_vector(vec![vec![q(1, 1), q(1, 1), q(1, 1)]], 3).is_none());
    }
}
