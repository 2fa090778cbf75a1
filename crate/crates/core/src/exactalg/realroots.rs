//! Real-root isolation for univariate rational polynomials via Sturm
//! sequences.

use super::Rational;

/// Dense univariate polynomial, lowest coefficient first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly(Vec<Rational>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.0.len() as i64 - 1
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn sign_at(&self, x: &Rational) -> i32 {
        self.eval(x).signum()
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Rational::from(i as i64))
                .collect(),
        )
    }

    fn lc(&self) -> &Rational {
        self.0.last().expect("nonzero polynomial")
    }

    /// Remainder of Euclidean division over Q.
    pub fn rem(&self, d: &UniPoly) -> UniPoly {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut r = self.0.clone();
        let dd = d.0.len() - 1;
        let inv = d.lc().recip().expect("nonzero");
        while r.len() > dd && !r.is_empty() {
            let q = &r[r.len() - 1] * &inv;
            let shift = r.len() - 1 - dd;
            for (j, c) in d.0.iter().enumerate() {
                r[shift + j] = &r[shift + j] - &(&q * c);
            }
            r.pop();
            while r.last().is_some_and(Rational::is_zero) {
                r.pop();
            }
        }
        UniPoly::new(r)
    }

    pub fn div_exact(&self, d: &UniPoly) -> UniPoly {
        let mut r = self.0.clone();
        let dd = d.0.len() - 1;
        let inv = d.lc().recip().expect("nonzero");
        let mut q = vec![Rational::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd {
            let c = &r[r.len() - 1] * &inv;
            let shift = r.len() - 1 - dd;
            for (j, dc) in d.0.iter().enumerate() {
                r[shift + j] = &r[shift + j] - &(&c * dc);
            }
            q[shift] = c;
            r.pop();
        }
        debug_assert!(r.iter().all(Rational::is_zero));
        UniPoly::new(q)
    }

    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let inv = a.lc().recip().expect("nonzero");
        UniPoly::new(a.0.iter().map(|c| c * &inv).collect())
    }

    /// `p / gcd(p, p')`.
    pub fn square_free_part(&self) -> UniPoly {
        if self.degree() <= 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g)
    }
}

fn sturm_sequence(p: &UniPoly) -> Vec<UniPoly> {
    let mut seq = vec![p.clone(), p.derivative()];
    while !seq.last().unwrap().is_zero() {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(UniPoly::new(r.0.into_iter().map(|c| -c).collect()));
    }
    seq.retain(|q| !q.is_zero());
    seq
}

fn sign_changes(seq: &[UniPoly], x: &Rational) -> usize {
    let signs: Vec<i32> = seq.iter().map(|q| q.sign_at(x)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// An isolating interval `[lo, hi]` containing exactly one real root;
/// `lo == hi` when the root is that rational number, otherwise neither
/// endpoint is a root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
}

/// Sorted isolating intervals for the distinct real roots. Neighbours may
/// share an endpoint, which is then not a root.
pub fn isolate_real_roots(p: &UniPoly) -> Vec<RootInterval> {
    if p.degree() <= 0 {
        return Vec::new();
    }
    let sf = p.square_free_part();
    let seq = sturm_sequence(&sf);
    let lc = sf.lc().abs();
    let bound = Rational::one()
        + sf.coeffs()[..sf.coeffs().len() - 1]
            .iter()
            .map(|c| &c.abs() / &lc)
            .max()
            .unwrap_or_default();
    let mut out = Vec::new();
    let mut stack = vec![(-&bound, bound.clone())];
    while let Some((a, b)) = stack.pop() {
        let count = sign_changes(&seq, &a) - sign_changes(&seq, &b);
        match count {
            0 => {}
            1 => out.push(RootInterval { lo: a, hi: b }),
            _ => {
                let mid = split_point(&sf, &a, &b);
                match mid {
                    Split::Root(r) => {
                        out.push(RootInterval { lo: r.clone(), hi: r.clone() });
                        let (l, h) = nonroot_neighbours(&sf, &a, &r, &b);
                        stack.push((a, l));
                        stack.push((h, b));
                    }
                    Split::At(m) => {
                        stack.push((a, m.clone()));
                        stack.push((m, b));
                    }
                }
            }
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

enum Split {
    At(Rational),
    Root(Rational),
}

fn split_point(p: &UniPoly, a: &Rational, b: &Rational) -> Split {
    let two = Rational::from(2);
    let mid = &(a + b) / &two;
    if p.sign_at(&mid) == 0 {
        Split::Root(mid)
    } else {
        Split::At(mid)
    }
}

/// Non-root points strictly between `a` and `r` and between `r` and `b`,
/// close enough to `r` that no other root is skipped.
fn nonroot_neighbours(p: &UniPoly, a: &Rational, r: &Rational, b: &Rational) -> (Rational, Rational) {
    let seq = sturm_sequence(p);
    let two = Rational::from(2);
    let mut width = std::cmp::min(r - a, b - r);
    loop {
        width = &width / &two;
        let lo = r - &width;
        let hi = r + &width;
        if p.sign_at(&lo) != 0 && p.sign_at(&hi) != 0 && sign_changes(&seq, &lo) - sign_changes(&seq, &hi) == 1 {
            return (lo, hi);
        }
    }
}

/// One sample point in every open interval between consecutive distinct
/// real roots (plus one before the first and one after the last root).
pub fn sample_points_between_roots(roots: &[RootInterval]) -> Vec<Rational> {
    let two = Rational::from(2);
    if roots.is_empty() {
        return vec![Rational::zero()];
    }
    let mut pts = vec![&roots[0].lo - &Rational::one()];
    for w in roots.windows(2) {
        pts.push(&(&w[0].hi + &w[1].lo) / &two);
    }
    pts.push(&roots[roots.len() - 1].hi + &Rational::one());
    pts
}
