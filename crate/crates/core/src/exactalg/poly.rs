use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{AlgError, GaussianRational, Rational};

/// Upper bound on the number of variables a polynomial ring may declare.
pub const MAX_VARS: usize = 8;

/// Exponent vector, packed so that monomials are `Copy`.
///
/// Ordered graded-lexicographically: total degree first, ties broken by the
/// exponent of the first declared variable, then the second, and so on.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Monomial::default();
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u16::try_from(e).expect("exponent overflow");
        }
        m
    }

    pub fn single(idx: usize, exp: u32) -> Self {
        let mut m = Monomial::default();
        m.exps[idx] = u16::try_from(exp).expect("exponent overflow");
        m
    }

    #[inline]
    pub fn exp(&self, idx: usize) -> u32 {
        self.exps[idx] as u32
    }

    pub fn exponents(&self, nvars: usize) -> &[u16] {
        &self.exps[..nvars]
    }

    #[inline]
    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (a, b) in out.exps.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        out
    }

    /// `self / other` when `other` divides `self`.
    #[inline]
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = *self;
        for (a, b) in out.exps.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_sub(*b)?;
        }
        Some(out)
    }

    #[inline]
    pub fn with_exp(&self, idx: usize, exp: u32) -> Monomial {
        let mut out = *self;
        out.exps[idx] = u16::try_from(exp).expect("exponent overflow");
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.exps)
    }
}

/// Ordered list of variable names shared by polynomials of one ring.
#[derive(Clone)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        assert!(names.len() <= MAX_VARS, "at most {MAX_VARS} variables are supported");
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            assert!(!names[..i].contains(n), "duplicate variable name {n}");
        }
        Vars(names.into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn index(&self, name: &str) -> Result<usize, AlgError> {
        self.index_of(name).ok_or_else(|| AlgError::UnknownVariable(name.to_string()))
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.0[idx]
    }
}

impl PartialEq for Vars {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Vars {}

impl fmt::Debug for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.0)
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored. Terms are kept in a `BTreeMap`
/// keyed by graded-lex monomials, so iteration order is canonical.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vars,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: &Vars) -> Self {
        MultiPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Vars, c: Rational) -> Self {
        let mut p = MultiPoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn one(vars: &Vars) -> Self {
        MultiPoly::constant(vars, Rational::one())
    }

    pub fn var(vars: &Vars, name: &str) -> Result<Self, AlgError> {
        let idx = vars.index(name)?;
        Ok(MultiPoly::var_idx(vars, idx))
    }

    pub fn var_idx(vars: &Vars, idx: usize) -> Self {
        MultiPoly::monomial(vars, Monomial::single(idx, 1), Rational::one())
    }

    pub fn monomial(vars: &Vars, m: Monomial, c: Rational) -> Self {
        let mut p = MultiPoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated monomials.
    pub fn from_terms<I>(vars: &Vars, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = MultiPoly::zero(vars);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::one())
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.is_constant() {
            return self.terms.get(&Monomial::one()).cloned();
        }
        None
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.last_key_value()
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.leading_term().map(|(_, c)| c.clone()).unwrap_or_default()
    }

    /// Total degree; the zero polynomial reports −1.
    pub fn total_degree(&self) -> i64 {
        self.terms.keys().next_back().map_or(-1, |m| m.total_degree() as i64)
    }

    /// Degree in the variable at `idx`; the zero polynomial reports −1.
    pub fn degree_idx(&self, idx: usize) -> i64 {
        self.terms.keys().map(|m| m.exp(idx) as i64).max().unwrap_or(-1)
    }

    pub fn partial_degree(&self, name: &str) -> Result<i64, AlgError> {
        Ok(self.degree_idx(self.vars.index(name)?))
    }

    pub fn involves(&self, idx: usize) -> bool {
        self.terms.keys().any(|m| m.exp(idx) > 0)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_ring(&self, other: &MultiPoly) {
        assert!(self.vars == other.vars, "polynomials live in different rings: {:?} vs {:?}", self.vars, other.vars);
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::one(&self.vars);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        self.check_ring(divisor);
        let (lm, lc) = divisor.leading_term()?;
        let (lm, lc) = (*lm, lc.clone());
        if self.is_zero() {
            return Some(MultiPoly::zero(&self.vars));
        }
        if divisor.num_terms() == 1 {
            let mut out = BTreeMap::new();
            for (m, c) in &self.terms {
                let q = m.checked_div(&lm)?;
                out.insert(q, exact_coeff_div(c, &lc));
            }
            return Some(MultiPoly { vars: self.vars.clone(), terms: out });
        }
        let rest: Vec<(Monomial, Rational)> =
            divisor.terms.iter().rev().skip(1).map(|(m, c)| (*m, c.clone())).collect();
        let mut rem = self.terms.clone();
        let mut quot: Vec<(Monomial, Rational)> = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let qm = m.checked_div(&lm)?;
            if lm.total_degree() > m.total_degree() {
                return None;
            }
            let qc = exact_coeff_div(&c, &lc);
            for (dm, dc) in &rest {
                let key = dm.mul(&qm);
                let delta = &qc * dc;
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-delta);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() -= &delta;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                }
            }
            quot.push((qm, qc));
        }
        Some(MultiPoly { vars: self.vars.clone(), terms: quot.into_iter().collect() })
    }

    /// Coefficients of `self` viewed as a univariate polynomial in the
    /// variable at `idx`, lowest power first. Each coefficient lives in the
    /// same ring with exponent 0 at `idx`.
    pub fn coefficients_in(&self, idx: usize) -> Vec<MultiPoly> {
        let deg = self.degree_idx(idx);
        if deg < 0 {
            return Vec::new();
        }
        let mut out = vec![MultiPoly::zero(&self.vars); deg as usize + 1];
        for (m, c) in &self.terms {
            let e = m.exp(idx) as usize;
            out[e].terms.insert(m.with_exp(idx, 0), c.clone());
        }
        out
    }

    /// Inverse of [`MultiPoly::coefficients_in`].
    pub fn from_coefficients(vars: &Vars, idx: usize, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut terms = BTreeMap::new();
        for (e, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                debug_assert_eq!(m.exp(idx), 0);
                terms.insert(m.with_exp(idx, e as u32), a.clone());
            }
        }
        MultiPoly { vars: vars.clone(), terms }
    }

    /// Leading coefficient with respect to the variable at `idx`.
    pub fn leading_coefficient_in(&self, idx: usize) -> MultiPoly {
        let deg = self.degree_idx(idx);
        if deg < 0 {
            return MultiPoly::zero(&self.vars);
        }
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(idx) as i64 == deg)
            .map(|(m, c)| (m.with_exp(idx, 0), c.clone()))
            .collect();
        MultiPoly { vars: self.vars.clone(), terms }
    }

    pub fn derivative(&self, idx: usize) -> MultiPoly {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exp(idx);
            if e > 0 {
                terms.insert(m.with_exp(idx, e - 1), c * &Rational::from(e as i64));
            }
        }
        MultiPoly { vars: self.vars.clone(), terms }
    }

    /// Substitutes a rational value for one variable; the result stays in
    /// the same ring.
    pub fn substitute_value(&self, idx: usize, value: &Rational) -> MultiPoly {
        let deg = self.degree_idx(idx).max(0) as u32;
        let powers: Vec<Rational> = std::iter::successors(Some(Rational::one()), |p| Some(p * value))
            .take(deg as usize + 1)
            .collect();
        let mut out = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.exp(idx) as usize;
            out.add_term(m.with_exp(idx, 0), &(c * &powers[e]));
        }
        out
    }

    /// Substitutes a polynomial (of the same ring) for one variable.
    pub fn substitute(&self, idx: usize, value: &MultiPoly) -> MultiPoly {
        self.check_ring(value);
        let coeffs = self.coefficients_in(idx);
        // Horner
        let mut acc = MultiPoly::zero(&self.vars);
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    /// Exact evaluation at a point assigning every variable.
    pub fn eval(&self, point: &BTreeMap<String, GaussianRational>) -> Result<GaussianRational, AlgError> {
        let values: Vec<GaussianRational> = self
            .vars
            .names()
            .iter()
            .map(|n| point.get(n).cloned().ok_or_else(|| AlgError::MissingAssignment(n.clone())))
            .collect::<Result<_, _>>()?;
        Ok(self.eval_slice(&values))
    }

    /// Evaluation with values given in variable order.
    pub fn eval_slice(&self, values: &[GaussianRational]) -> GaussianRational {
        assert_eq!(values.len(), self.vars.len());
        let mut power_cache: Vec<Vec<GaussianRational>> = vec![vec![GaussianRational::one()]; values.len()];
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut term = GaussianRational::real(c.clone());
            for (i, v) in values.iter().enumerate() {
                let e = m.exp(i) as usize;
                if e == 0 {
                    continue;
                }
                let cache = &mut power_cache[i];
                while cache.len() <= e {
                    let next = cache.last().unwrap() * v;
                    cache.push(next);
                }
                term = &term * &cache[e];
            }
            acc = &acc + &term;
        }
        acc
    }

    /// Evaluation at a rational point given in variable order.
    pub fn eval_rational(&self, values: &[Rational]) -> Rational {
        assert_eq!(values.len(), self.vars.len());
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, v) in values.iter().enumerate() {
                let e = m.exp(i);
                if e > 0 {
                    term *= &v.pow(e);
                }
            }
            acc += &term;
        }
        acc
    }

    /// Re-expresses the polynomial over another variable list. Every
    /// variable actually occurring must exist in `target`.
    pub fn to_ring(&self, target: &Vars) -> Result<MultiPoly, AlgError> {
        if &self.vars == target {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, name) in self.vars.names().iter().enumerate() {
            match target.index_of(name) {
                Some(j) => map.push(Some(j)),
                None if !self.involves(i) => map.push(None),
                None => return Err(AlgError::UnknownVariable(name.clone())),
            }
        }
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut nm = Monomial::one();
            for (i, slot) in map.iter().enumerate() {
                if let Some(j) = slot {
                    nm = nm.with_exp(*j, m.exp(i));
                }
            }
            out.terms.insert(nm, c.clone());
        }
        Ok(out)
    }

    /// Moves the polynomial into `target`, sending variable `i` to
    /// `target` variable `map[i]`.
    pub fn embed(&self, target: &Vars, map: &[usize]) -> MultiPoly {
        assert_eq!(map.len(), self.vars.len());
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut nm = Monomial::one();
            for (i, &j) in map.iter().enumerate() {
                nm = nm.with_exp(j, nm.exp(j) + m.exp(i));
            }
            out.add_term(nm, c);
        }
        out
    }

    /// Lowest common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Splits `self = factor · canonical` where `canonical` has coprime
    /// integer coefficients and a positive leading coefficient in graded-lex
    /// order. The zero polynomial maps to `(1, 0)`.
    pub fn normalize_with_factor(&self) -> (Rational, MultiPoly) {
        if self.is_zero() {
            return (Rational::one(), self.clone());
        }
        let lcm = self.denominator_lcm();
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            let n = c.numer() * (&lcm / c.denom());
            g = g.gcd(&n);
            if g.is_one() {
                break;
            }
        }
        if self.leading_coefficient().is_negative() {
            g = -g;
        }
        let factor = Rational::new(g, lcm).expect("nonzero lcm");
        let inv = factor.recip().expect("nonzero content");
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let v = c * &inv;
                debug_assert!(v.is_integer());
                (*m, v)
            })
            .collect();
        (factor, MultiPoly { vars: self.vars.clone(), terms })
    }

    /// Canonical representative of the class `{c · self : c ≠ 0}`.
    pub fn normalize(&self) -> MultiPoly {
        self.normalize_with_factor().1
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(Rational::is_integer)
    }

    /// Parses the canonical text form (`3*x^2*y - 1/2*y + 7`) over `vars`.
    pub fn parse(text: &str, vars: &Vars) -> Result<MultiPoly, AlgError> {
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(AlgError::Parse("empty polynomial".into()));
        }
        let mut out = MultiPoly::zero(vars);
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        for (i, ch) in cleaned.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !current.ends_with(['e', 'E', '^']) {
                pieces.push((negative, std::mem::take(&mut current)));
                negative = ch == '-';
            } else if (ch == '+' || ch == '-') && i == 0 {
                negative = ch == '-';
            } else {
                current.push(ch);
            }
        }
        pieces.push((negative, current));
        for (neg, piece) in pieces {
            if piece.is_empty() {
                return Err(AlgError::Parse(format!("dangling sign in {text:?}")));
            }
            let mut coeff = Rational::one();
            let mut mono = Monomial::one();
            for factor in piece.split('*') {
                if factor.is_empty() {
                    return Err(AlgError::Parse(format!("empty factor in {piece:?}")));
                }
                let (base, exp) = match factor.split_once('^') {
                    Some((b, e)) => {
                        let e: u32 = e.parse().map_err(|_| AlgError::Parse(format!("bad exponent in {factor:?}")))?;
                        (b, e)
                    }
                    None => (factor, 1),
                };
                if let Some(idx) = vars.index_of(base) {
                    mono = mono.mul(&Monomial::single(idx, exp));
                } else {
                    let value: Rational = base.parse()?;
                    coeff *= &value.pow(exp);
                }
            }
            if neg {
                coeff = -coeff;
            }
            out.add_term(mono, &coeff);
        }
        Ok(out)
    }
}

fn exact_coeff_div(a: &Rational, b: &Rational) -> Rational {
    if a.is_integer() && b.is_integer() {
        let (q, r) = a.numer().div_rem(b.numer());
        if r.is_zero() {
            return Rational::from_integer(q);
        }
    }
    a / b
}

fn merge_sorted(vars: &Vars, mut raw: Vec<(Monomial, Rational)>) -> MultiPoly {
    raw.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    let mut terms = BTreeMap::new();
    let mut iter = raw.into_iter();
    if let Some((mut m, mut c)) = iter.next() {
        for (m2, c2) in iter {
            if m2 == m {
                c += &c2;
            } else {
                if !c.is_zero() {
                    terms.insert(m, c);
                }
                m = m2;
                c = c2;
            }
        }
        if !c.is_zero() {
            terms.insert(m, c);
        }
    }
    MultiPoly { vars: vars.clone(), terms }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_ring(rhs);
        let (big, small) = if self.num_terms() >= rhs.num_terms() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_ring(rhs);
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero(&self.vars);
        }
        if rhs.num_terms() == 1 {
            let (m, c) = rhs.leading_term().unwrap();
            return self.mul_monomial(m, c);
        }
        if self.num_terms() == 1 {
            let (m, c) = self.leading_term().unwrap();
            return rhs.mul_monomial(m, c);
        }
        let mut raw = Vec::with_capacity(self.num_terms() * rhs.num_terms());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                raw.push((m1.mul(m2), c1 * c2));
            }
        }
        merge_sorted(&self.vars, raw)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// Canonical text form: graded-lex descending, explicit `*` and `^`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            let is_unit_monomial = *m == Monomial::one();
            if !abs.is_one() || is_unit_monomial {
                factors.push(abs.to_string());
            }
            for (idx, name) in self.vars.names().iter().enumerate() {
                match m.exp(idx) {
                    0 => {}
                    1 => factors.push(name.clone()),
                    e => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {:?}", self, self.vars)
    }
}
