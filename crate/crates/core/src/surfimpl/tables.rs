//! Printed partial-degree tables for revolution and spherical-harmonic
//! surfaces, loaded from the bundled data files.

use serde::{Deserialize, Serialize};

use super::{harmonic_surface, revolution_surface, sendra_degrees_with, DegreeReport, SendraOptions, SurfaceError, SurfaceParam};
use crate::exactalg::Rational;
use crate::trigsupport::{SphericalSupport, TrigPoly};

const TABLE1: &str = include_str!("../../data/table1.tsv");
const TABLE2: &str = include_str!("../../data/table2.tsv");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    Default,
    Slow,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowSupport {
    Revolution(TrigPoly),
    Harmonic(SphericalSupport),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenRow {
    pub id: String,
    pub support: RowSupport,
    /// Only printed for revolution rows.
    pub symmetric: Option<bool>,
    pub map_degree: i64,
    pub ratios: [i64; 3],
    pub tier: Tier,
}

impl GoldenRow {
    pub fn label(&self) -> String {
        match &self.support {
            RowSupport::Revolution(p) => p.to_formula(),
            RowSupport::Harmonic(h) => h.to_formula(),
        }
    }

    pub fn surface(&self) -> Result<SurfaceParam, SurfaceError> {
        match &self.support {
            RowSupport::Revolution(p) => revolution_surface(p),
            RowSupport::Harmonic(h) => harmonic_surface(h),
        }
    }

    /// Whether `filter` names this row by id or label, ignoring case and whitespace.
    pub fn matches_filter(&self, filter: &str) -> bool {
        let squash = |s: &str| s.chars().filter(|c| !c.is_whitespace()).flat_map(char::to_lowercase).collect::<String>();
        let f = squash(filter);
        f == squash(&self.id) || f == squash(&self.label())
    }
}

fn parse_table(text: &str, revolution: bool) -> Vec<GoldenRow> {
    let mut rows = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let cols: Vec<&str> = line.split('\t').collect();
        let body = cols[1].replace(';', "\n");
        let (support, rest) = if revolution {
            let p = TrigPoly::parse(&body).expect("bundled row parses");
            (RowSupport::Revolution(p), &cols[2..])
        } else {
            let h = SphericalSupport::parse(&body).expect("bundled row parses");
            (RowSupport::Harmonic(h), &cols[2..])
        };
        let (symmetric, nums) = if revolution { (Some(rest[0] == "yes"), &rest[1..]) } else { (None, rest) };
        let n = |i: usize| nums[i].parse::<i64>().expect("bundled integer");
        rows.push(GoldenRow {
            id: cols[0].to_string(),
            support,
            symmetric,
            map_degree: n(0),
            ratios: [n(1), n(2), n(3)],
            tier: if nums[4] == "slow" { Tier::Slow } else { Tier::Default },
        });
    }
    rows
}

pub fn table1() -> Vec<GoldenRow> {
    parse_table(TABLE1, true)
}

pub fn table2() -> Vec<GoldenRow> {
    parse_table(TABLE2, false)
}

/// Rows selected by `filters` (all rows when empty), restricted to the
/// default tier unless `slow` is set.
pub fn select_rows(filters: &[String], slow: bool) -> Vec<GoldenRow> {
    table1()
        .into_iter()
        .chain(table2())
        .filter(|r| slow || r.tier == Tier::Default || !filters.is_empty())
        .filter(|r| filters.is_empty() || filters.iter().any(|f| r.matches_filter(f)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowOutcome {
    pub id: String,
    pub label: String,
    pub expected_map_degree: i64,
    pub expected_ratios: [i64; 3],
    /// Printed symmetry flag next to the computed one, for revolution rows.
    pub symmetric: Option<(bool, bool)>,
    pub report: Option<DegreeReport>,
    pub error: Option<String>,
    /// map degree, then the three ratios
    pub cell_match: [bool; 4],
}

impl RowOutcome {
    pub fn all_match(&self) -> bool {
        self.cell_match.iter().all(|&m| m) && self.symmetric.map_or(true, |(a, b)| a == b)
    }
}

pub fn run_row(row: &GoldenRow, opts: &SendraOptions) -> RowOutcome {
    let computed = row.surface().and_then(|s| sendra_degrees_with(&s, opts));
    let symmetric = match (&row.support, row.symmetric) {
        (RowSupport::Revolution(p), Some(printed)) => Some((printed, p.sin_terms().next().is_none())),
        _ => None,
    };
    let (report, error) = match computed {
        Ok(r) => (Some(r), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let cell_match = match &report {
        Some(r) => {
            let ratios = r.table_ratios();
            let want = |i: usize| Rational::from(row.ratios[i]);
            [r.map_degree == row.map_degree, ratios[0] == want(0), ratios[1] == want(1), ratios[2] == want(2)]
        }
        None => [false; 4],
    };
    RowOutcome {
        id: row.id.clone(),
        label: row.label(),
        expected_map_degree: row.map_degree,
        expected_ratios: row.ratios,
        symmetric,
        report,
        error,
        cell_match,
    }
}
