use std::collections::BTreeSet;

use super::{HarmonicTerm, SphericalSupport, SupportError, TrigPoly};
use crate::exactalg::Rational;

struct Line<'a> {
    number: usize,
    raw: &'a str,
    key: &'a str,
    value: &'a str,
    value_col: usize,
}

fn error(line: usize, column: usize, message: impl Into<String>) -> SupportError {
    SupportError::Parse { line, column, message: message.into() }
}

/// Splits non-blank, non-comment lines at `=`.
fn lines(text: &str) -> Result<Vec<Line<'_>>, SupportError> {
    let mut out = Vec::new();
    for (i, full) in text.lines().enumerate() {
        let number = i + 1;
        let raw = full.split('#').next().unwrap_or("");
        if raw.trim().is_empty() {
            continue;
        }
        let Some(eq) = raw.find('=') else {
            let col = raw.len() - raw.trim_start().len() + 1;
            return Err(error(number, col, "expected `key = value`"));
        };
        let value = &raw[eq + 1..];
        let value_col = eq + 2 + (value.len() - value.trim_start().len());
        out.push(Line { number, raw, key: raw[..eq].trim(), value: value.trim(), value_col });
    }
    Ok(out)
}

fn key_col(line: &Line<'_>) -> usize {
    line.raw.len() - line.raw.trim_start().len() + 1
}

fn parse_value(line: &Line<'_>) -> Result<Rational, SupportError> {
    line.value
        .parse::<Rational>()
        .map_err(|_| error(line.number, line.value_col, format!("invalid number `{}`", line.value)))
}

pub(super) fn parse_trig(text: &str) -> Result<TrigPoly, SupportError> {
    let mut seen = BTreeSet::new();
    let mut a0 = Rational::zero();
    let mut cos = Vec::new();
    let mut sin = Vec::new();
    for line in lines(text)? {
        let key: String = line.key.chars().filter(|c| !c.is_whitespace()).collect();
        let col = key_col(&line);
        let value = parse_value(&line)?;
        let slot = if key == "a0" {
            a0 = value;
            key.clone()
        } else {
            let (kind, index) = if let Some(rest) = key.strip_prefix("cos") {
                ("cos", rest)
            } else if let Some(rest) = key.strip_prefix("sin") {
                ("sin", rest)
            } else {
                return Err(error(line.number, col, format!("unknown key `{}`", line.key)));
            };
            let k: u32 = index
                .parse()
                .map_err(|_| error(line.number, col, format!("bad harmonic index in `{}`", line.key)))?;
            if k == 0 {
                return Err(error(line.number, col, "harmonic index must be at least 1; use a0"));
            }
            if kind == "cos" {
                cos.push((k, value));
            } else {
                sin.push((k, value));
            }
            format!("{kind}{k}")
        };
        if !seen.insert(slot) {
            return Err(error(line.number, col, format!("duplicate key `{}`", line.key)));
        }
    }
    Ok(TrigPoly::new(a0, cos, sin))
}

pub(super) fn parse_spherical(text: &str) -> Result<SphericalSupport, SupportError> {
    let mut seen = BTreeSet::new();
    let mut terms = Vec::new();
    for line in lines(text)? {
        let col = key_col(&line);
        let tokens: Vec<&str> = line.key.split_whitespace().collect();
        let bad = || error(line.number, col, format!("unknown key `{}`, expected `Y l m a|b`", line.key));
        let [y, l, m, which] = tokens[..] else {
            return Err(bad());
        };
        if y != "Y" || !(which == "a" || which == "b") {
            return Err(bad());
        }
        let l: u32 = l.parse().map_err(|_| bad())?;
        let m: u32 = m.parse().map_err(|_| bad())?;
        if m > l {
            return Err(error(line.number, col, format!("m = {m} exceeds l = {l}")));
        }
        let value = parse_value(&line)?;
        if which == "b" && m == 0 && !value.is_zero() {
            return Err(error(line.number, line.value_col, "b coefficient must vanish for m = 0"));
        }
        if !seen.insert((l, m, which)) {
            return Err(error(line.number, col, format!("duplicate key `{}`", line.key)));
        }
        let (a, b) = if which == "a" { (value, Rational::zero()) } else { (Rational::zero(), value) };
        terms.push(HarmonicTerm { l, m, a, b });
    }
    Ok(SphericalSupport::new(terms))
}
