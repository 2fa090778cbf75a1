//! Support functions: trigonometric polynomials in the plane, spherical
//! harmonic expansions in space, and exact transforms on them.

mod chebyshev;
mod classify;
mod convexity;
mod legendre;
mod parse;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactalg::Rational;

pub use chebyshev::{cheb_c, cheb_c_in, cheb_s, cheb_s_in};
pub use classify::{classify, parity_class, ClassKind, Classification, Parity};
pub use convexity::{half_angle_numerator, is_convex, Convexity, NegativeWitness, SignTable};
pub use legendre::{legendre_assoc, LegendreAssoc};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SupportError {
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("index must be nonnegative, got {0}")]
    NegativeIndex(i64),
    #[error("associated Legendre function needs 0 <= m <= l, got l = {l}, m = {m}")]
    InvalidLegendre { l: i64, m: i64 },
}

/// `p(θ) = a0 + Σ_{k=1..N} (a_k cos kθ + b_k sin kθ)`. Only nonzero
/// coefficients are stored, so `N` is always the effective degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct TrigPoly {
    a0: Rational,
    cos: BTreeMap<u32, Rational>,
    sin: BTreeMap<u32, Rational>,
}

impl TrigPoly {
    pub fn new<A, B>(a0: Rational, cos: A, sin: B) -> Self
    where
        A: IntoIterator<Item = (u32, Rational)>,
        B: IntoIterator<Item = (u32, Rational)>,
    {
        let mut p = TrigPoly { a0, ..Default::default() };
        for (k, c) in cos {
            p.add_cos(k, &c);
        }
        for (k, c) in sin {
            p.add_sin(k, &c);
        }
        p
    }

    pub fn constant(a0: Rational) -> Self {
        TrigPoly { a0, ..Default::default() }
    }

    pub fn cos_term(k: u32, c: Rational) -> Self {
        TrigPoly::new(Rational::zero(), [(k, c)], [])
    }

    pub fn sin_term(k: u32, c: Rational) -> Self {
        TrigPoly::new(Rational::zero(), [], [(k, c)])
    }

    fn add_cos(&mut self, k: u32, c: &Rational) {
        if k == 0 {
            self.a0 += c;
            return;
        }
        let e = self.cos.entry(k).or_default();
        *e += c;
        if e.is_zero() {
            self.cos.remove(&k);
        }
    }

    fn add_sin(&mut self, k: u32, c: &Rational) {
        assert!(k >= 1, "sin 0 is identically zero");
        let e = self.sin.entry(k).or_default();
        *e += c;
        if e.is_zero() {
            self.sin.remove(&k);
        }
    }

    pub fn a0(&self) -> &Rational {
        &self.a0
    }

    pub fn a(&self, k: u32) -> Rational {
        if k == 0 {
            return self.a0.clone();
        }
        self.cos.get(&k).cloned().unwrap_or_default()
    }

    pub fn b(&self, k: u32) -> Rational {
        self.sin.get(&k).cloned().unwrap_or_default()
    }

    pub fn cos_terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.cos.iter().map(|(k, c)| (*k, c))
    }

    pub fn sin_terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.sin.iter().map(|(k, c)| (*k, c))
    }

    /// Largest `k` with `a_k ≠ 0` or `b_k ≠ 0`, or 0.
    pub fn degree(&self) -> u32 {
        let c = self.cos.keys().next_back().copied().unwrap_or(0);
        let s = self.sin.keys().next_back().copied().unwrap_or(0);
        c.max(s)
    }

    pub fn is_zero(&self) -> bool {
        self.a0.is_zero() && self.cos.is_empty() && self.sin.is_empty()
    }

    /// Harmonic indices `k ≥ 1` carrying a nonzero coefficient.
    pub fn spectrum(&self) -> BTreeSet<u32> {
        self.cos.keys().chain(self.sin.keys()).copied().collect()
    }

    /// Applies `c_k ↦ f(k) c_k` to every coefficient, `a0` included (k = 0).
    pub fn map_coefficients(&self, f: impl Fn(u32) -> Rational) -> TrigPoly {
        TrigPoly::new(
            &self.a0 * &f(0),
            self.cos.iter().map(|(k, c)| (*k, c * &f(*k))),
            self.sin.iter().map(|(k, c)| (*k, c * &f(*k))),
        )
    }

    /// `θ ↦ p(θ + π)`.
    pub fn shift_by_pi(&self) -> TrigPoly {
        self.map_coefficients(|k| if k % 2 == 0 { Rational::one() } else { -Rational::one() })
    }

    /// `p(π)`.
    pub fn value_at_pi(&self) -> Rational {
        let mut v = self.a0.clone();
        for (k, c) in &self.cos {
            if k % 2 == 0 {
                v += c;
            } else {
                v -= c;
            }
        }
        v
    }

    /// `p′(π)`.
    pub fn derivative_at_pi(&self) -> Rational {
        let mut v = Rational::zero();
        for (k, c) in &self.sin {
            let t = c * &Rational::from(*k as i64);
            if k % 2 == 0 {
                v += &t;
            } else {
                v -= &t;
            }
        }
        v
    }

    pub fn value_f64(&self, theta: f64) -> f64 {
        self.a0.to_f64()
            + self.cos.iter().map(|(k, c)| c.to_f64() * (*k as f64 * theta).cos()).sum::<f64>()
            + self.sin.iter().map(|(k, c)| c.to_f64() * (*k as f64 * theta).sin()).sum::<f64>()
    }

    pub fn derivative_f64(&self, theta: f64) -> f64 {
        self.sin.iter().map(|(k, c)| *k as f64 * c.to_f64() * (*k as f64 * theta).cos()).sum::<f64>()
            - self.cos.iter().map(|(k, c)| *k as f64 * c.to_f64() * (*k as f64 * theta).sin()).sum::<f64>()
    }

    /// Point `(p cos θ − p′ sin θ, p sin θ + p′ cos θ)` in floating point.
    pub fn curve_point_f64(&self, theta: f64) -> (f64, f64) {
        let p = self.value_f64(theta);
        let dp = self.derivative_f64(theta);
        let (s, c) = theta.sin_cos();
        (p * c - dp * s, p * s + dp * c)
    }

    /// Reads the `a0 = 1/2`, `cos 3 = 1/16`, `sin 5 = -2/7` line format.
    pub fn parse(text: &str) -> Result<TrigPoly, SupportError> {
        parse::parse_trig(text)
    }

    /// Human-readable form such as `1/2 + 1/16 cos 3θ`.
    pub fn to_formula(&self) -> String {
        let mut parts: Vec<(bool, String)> = Vec::new();
        if !self.a0.is_zero() {
            parts.push((self.a0.is_negative(), self.a0.abs().to_string()));
        }
        let mut ks: Vec<u32> = self.spectrum().into_iter().collect();
        ks.sort_unstable();
        for k in ks {
            let name = |f: &str| if k == 1 { format!("{f} θ") } else { format!("{f} {k}θ") };
            for (coeff, f) in [(self.cos.get(&k), "cos"), (self.sin.get(&k), "sin")] {
                if let Some(c) = coeff {
                    let mag = if c.abs().is_one() { name(f) } else { format!("{} {}", c.abs(), name(f)) };
                    parts.push((c.is_negative(), mag));
                }
            }
        }
        if parts.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (neg, s)) in parts.iter().enumerate() {
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(s);
        }
        out
    }
}

impl std::ops::Add for &TrigPoly {
    type Output = TrigPoly;

    fn add(self, rhs: &TrigPoly) -> TrigPoly {
        let mut out = self.clone();
        out.a0 += &rhs.a0;
        for (k, c) in &rhs.cos {
            out.add_cos(*k, c);
        }
        for (k, c) in &rhs.sin {
            out.add_sin(*k, c);
        }
        out
    }
}

/// Writes the line format read by [`TrigPoly::parse`].
impl fmt::Display for TrigPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "a0 = {}", self.a0)?;
        for (k, c) in &self.cos {
            writeln!(f, "cos {k} = {c}")?;
        }
        for (k, c) in &self.sin {
            writeln!(f, "sin {k} = {c}")?;
        }
        Ok(())
    }
}

/// `p + p″`, coefficient-wise `c_k ↦ (1 − k²) c_k`.
pub fn curvature_radius(p: &TrigPoly) -> TrigPoly {
    p.map_coefficients(|k| Rational::from(1 - (k as i64) * (k as i64)))
}

/// One spherical-harmonic term `P_l^m(cos θ)(a cos mφ + b sin mφ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarmonicTerm {
    pub l: u32,
    pub m: u32,
    pub a: Rational,
    pub b: Rational,
}

/// `h(θ, φ) = Σ P_l^m(cos θ)(a_lm cos mφ + b_lm sin mφ)`.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(from = "Vec<HarmonicTerm>", into = "Vec<HarmonicTerm>")]
pub struct SphericalSupport {
    coeffs: BTreeMap<(u32, u32), (Rational, Rational)>,
}

impl SphericalSupport {
    pub fn new(terms: impl IntoIterator<Item = HarmonicTerm>) -> Self {
        let mut h = SphericalSupport::default();
        for t in terms {
            h.add(t.l, t.m, &t.a, &t.b);
        }
        h
    }

    pub fn constant(a00: Rational) -> Self {
        SphericalSupport::new([HarmonicTerm { l: 0, m: 0, a: a00, b: Rational::zero() }])
    }

    /// Adds `a`, `b` to the `(l, m)` coefficients. Panics on `m > l` or a
    /// nonzero `b` with `m = 0`.
    pub fn add(&mut self, l: u32, m: u32, a: &Rational, b: &Rational) {
        assert!(m <= l, "m must not exceed l");
        assert!(m > 0 || b.is_zero(), "b_(l,0) must vanish");
        let e = self.coeffs.entry((l, m)).or_default();
        e.0 += a;
        e.1 += b;
        if e.0.is_zero() && e.1.is_zero() {
            self.coeffs.remove(&(l, m));
        }
    }

    pub fn coefficient(&self, l: u32, m: u32) -> (Rational, Rational) {
        self.coeffs.get(&(l, m)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = HarmonicTerm> + '_ {
        self.coeffs.iter().map(|(&(l, m), (a, b))| HarmonicTerm { l, m, a: a.clone(), b: b.clone() })
    }

    /// Largest `l` with a nonzero coefficient.
    pub fn degree(&self) -> u32 {
        self.coeffs.keys().map(|(l, _)| *l).max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Reads lines `Y l m a = value` / `Y l m b = value`.
    pub fn parse(text: &str) -> Result<SphericalSupport, SupportError> {
        parse::parse_spherical(text)
    }

    /// Compact description such as `1 + P_3^1(cos θ)(cos φ + sin φ)`.
    pub fn to_formula(&self) -> String {
        let mut parts = Vec::new();
        for t in self.terms() {
            let angle = |f: &str| if t.m == 1 { format!("{f} φ") } else { format!("{f} {}φ", t.m) };
            let mut inner = Vec::new();
            for (c, f) in [(&t.a, "cos"), (&t.b, "sin")] {
                if c.is_zero() {
                    continue;
                }
                if t.m == 0 {
                    inner.push(c.to_string());
                } else if c.is_one() {
                    inner.push(angle(f));
                } else {
                    inner.push(format!("{c} {}", angle(f)));
                }
            }
            let body = inner.join(" + ");
            parts.push(match (t.l, t.m) {
                (0, 0) => body,
                (_, 0) if t.a.is_one() => format!("P_{}^0(cos θ)", t.l),
                (_, 0) => format!("{body} P_{}^0(cos θ)", t.l),
                _ => format!("P_{}^{}(cos θ)({body})", t.l, t.m),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl From<Vec<HarmonicTerm>> for SphericalSupport {
    fn from(v: Vec<HarmonicTerm>) -> Self {
        SphericalSupport::new(v)
    }
}

impl From<SphericalSupport> for Vec<HarmonicTerm> {
    fn from(h: SphericalSupport) -> Self {
        h.terms().collect()
    }
}

impl fmt::Display for SphericalSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in self.terms() {
            writeln!(f, "Y {} {} a = {}", t.l, t.m, t.a)?;
            if t.m > 0 {
                writeln!(f, "Y {} {} b = {}", t.l, t.m, t.b)?;
            }
        }
        Ok(())
    }
}
