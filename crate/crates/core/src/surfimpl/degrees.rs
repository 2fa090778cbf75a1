use std::sync::mpsc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::assumptions::{prepare, Prepared};
use super::{SurfaceError, SurfaceParam};
use crate::exactalg::{content_in_vars, gcd, resultant_allow_constant, AlgError, MultiPoly, Rational, ResultantMethod, Vars};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SendraOptions {
    /// Admit inputs above the default cost limit.
    pub slow: bool,
    pub timeout: Option<Duration>,
}

/// Size of the largest resultant the degree engine will form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CostEstimate {
    pub max_degree: i64,
    /// `deg_t2 G_i + deg_t2 (G_j + Z G_k)`, maximized over the component pairs.
    pub matrix_size: i64,
    /// `max_degree + matrix_size`, compared against `limit`.
    pub score: i64,
    pub limit: i64,
    pub needs_slow_tier: bool,
}

pub const DEFAULT_COST_LIMIT: i64 = 32;

pub fn estimate_cost(p: &SurfaceParam) -> CostEstimate {
    let deg = |idx: usize| -> Vec<i64> {
        p.components.iter().map(|c| c.num.degree_idx(idx).max(c.den.degree_idx(idx))).collect()
    };
    let (d1, d2) = (deg(0), deg(1));
    let mut matrix_size = 0;
    for d in [&d1, &d2] {
        for i in 0..3 {
            let others = (0..3).filter(|&j| j != i).map(|j| d[j]).max().unwrap_or(0);
            matrix_size = matrix_size.max(d[i] + others);
        }
    }
    let max_degree = p.max_degree();
    let score = max_degree + matrix_size;
    CostEstimate { max_degree, matrix_size, score, limit: DEFAULT_COST_LIMIT, needs_slow_tier: score > DEFAULT_COST_LIMIT }
}

/// Degrees after removing the factors shared by every specialization.
/// Indices of the pairwise entries refer to the prepared component order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawDegrees {
    pub s: i64,
    pub t: i64,
    pub s_12: i64,
    pub s_13: i64,
    pub s_23: i64,
    pub t_12: i64,
    pub t_13: i64,
    pub t_23: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    pub permutation: [usize; 3],
    pub reparametrization: u32,
    pub map_degree: i64,
    pub raw: RawDegrees,
    pub deg_x: i64,
    pub deg_y: i64,
    pub deg_z: i64,
    pub section_ratio_x: Rational,
    pub section_ratio_y: Rational,
    pub section_ratio_z: Rational,
    pub table_ratio_x: Rational,
    pub table_ratio_y: Rational,
    pub table_ratio_z: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl DegreeReport {
    pub fn table_ratios(&self) -> [Rational; 3] {
        [self.table_ratio_x.clone(), self.table_ratio_y.clone(), self.table_ratio_z.clone()]
    }
}

/// Parameter points at which `x̄ = P(s̄)` is taken for `S` and `T`.
const SURFACE_POINTS: [(i64, i64, i64, i64); 6] =
    [(1, 1, 2, 1), (-1, 1, 3, 1), (2, 1, -3, 1), (3, 1, 1, 2), (-2, 1, -1, 1), (1, 2, -2, 1)];
/// Generic values of the two fixed coordinates for `S_ij` and `T_ij`.
const PLANE_VALUES: [(i64, i64, i64, i64); 3] = [(3, 5, -2, 7), (5, 11, 7, 13), (-4, 9, 1, 17)];
const SPECIALIZATIONS: usize = 3;

#[derive(Clone, Copy, Debug)]
enum Job {
    /// eliminate `elim`, keep the other parameter, at surface point `k`
    Section { elim: usize, point: usize },
    Pair { elim: usize, i: usize, j: usize, values: usize },
}

struct Engine {
    param: SurfaceParam,
    points: Vec<[Rational; 3]>,
}

fn pairs() -> [(usize, usize); 3] {
    [(0, 1), (0, 2), (1, 2)]
}

impl Engine {
    fn new(param: SurfaceParam) -> Result<Self, SurfaceError> {
        let points: Vec<[Rational; 3]> = SURFACE_POINTS
            .iter()
            .filter_map(|&(a, b, c, d)| param.point(&Rational::frac(a, b), &Rational::frac(c, d)))
            .take(SPECIALIZATIONS)
            .collect();
        if points.len() < SPECIALIZATIONS {
            return Err(SurfaceError::NotIndependent);
        }
        Ok(Engine { param, points })
    }

    fn fibre_equations(&self, ring: &Vars, values: &[Rational; 3]) -> Vec<MultiPoly> {
        self.param
            .components
            .iter()
            .zip(values)
            .map(|(c, v)| {
                let num = c.num.embed(ring, &[0, 1]);
                let den = c.den.embed(ring, &[0, 1]);
                &num - &den.scale(v)
            })
            .collect()
    }

    fn run(&self, job: Job) -> Result<MultiPoly, SurfaceError> {
        match job {
            Job::Section { elim, point } => {
                let ring = SurfaceParam::ring();
                let g = self.fibre_equations(&ring, &self.points[point]);
                Ok(content_in_vars(&section_resultant(&g, elim)?, &[2]))
            }
            Job::Pair { elim, i, j, values } => {
                let ring = SurfaceParam::ring();
                let (a, b, c, d) = PLANE_VALUES[values];
                let mut v = [Rational::zero(), Rational::zero(), Rational::zero()];
                v[i] = Rational::frac(a, b);
                v[j] = Rational::frac(c, d);
                let g = self.fibre_equations(&ring, &v);
                eliminate(&g[i], &g[j], elim)
            }
        }
    }
}

/// `Res_elim(G1, G2 + Z G3)` over the ring `t1, t2, Z`, interpolated from
/// values at integer `Z` where the degree of `G2 + Z G3` does not drop.
fn section_resultant(g: &[MultiPoly], elim: usize) -> Result<MultiPoly, SurfaceError> {
    let target = Vars::new(&["t1", "t2", "Z"]);
    let bound = g[0].degree_idx(elim);
    let generic = (&g[1] + &g[2].scale(&Rational::from(7i64 << 20))).degree_idx(elim);
    let mut samples = Vec::new();
    let mut z = 0i64;
    while samples.len() as i64 <= bound {
        let h = &g[1] + &g[2].scale(&Rational::from(z));
        if h.degree_idx(elim) == generic {
            let value = match resultant_allow_constant(&g[0], &h, elim, ResultantMethod::Subresultant) {
                Ok(r) => r,
                Err(AlgError::ZeroPolynomial) => MultiPoly::zero(g[0].vars()),
                Err(AlgError::NothingToEliminate(_)) => return Err(SurfaceError::NotIndependent),
                Err(e) => return Err(e.into()),
            };
            samples.push((Rational::from(z), value.embed(&target, &[0, 1])));
        }
        z += 1;
    }
    let r = lagrange(&samples, &target, 2);
    if r.is_zero() {
        return Err(SurfaceError::NotIndependent);
    }
    Ok(r)
}

/// The polynomial of degree below `samples.len()` in variable `idx` taking
/// the given values.
fn lagrange(samples: &[(Rational, MultiPoly)], ring: &Vars, idx: usize) -> MultiPoly {
    let var = MultiPoly::var_idx(ring, idx);
    let mut out = MultiPoly::zero(ring);
    for (i, (zi, vi)) in samples.iter().enumerate() {
        let mut basis = MultiPoly::one(ring);
        for (j, (zj, _)) in samples.iter().enumerate() {
            if i != j {
                let factor = &var - &MultiPoly::constant(ring, zj.clone());
                basis = (&basis * &factor).scale(&(zi - zj).recip().expect("distinct nodes"));
            }
        }
        out = &out + &(vi * &basis);
    }
    out
}

fn eliminate(p: &MultiPoly, q: &MultiPoly, idx: usize) -> Result<MultiPoly, SurfaceError> {
    match resultant_allow_constant(p, q, idx, ResultantMethod::Subresultant) {
        Ok(r) if r.is_zero() => Err(SurfaceError::NotIndependent),
        Ok(r) => Ok(r),
        Err(AlgError::NothingToEliminate(_)) | Err(AlgError::ZeroPolynomial) => Err(SurfaceError::NotIndependent),
        Err(e) => Err(e.into()),
    }
}

/// Degree in `idx` of the first polynomial once the gcd of all of them is removed.
fn moving_degree(polys: &[MultiPoly], idx: usize) -> i64 {
    let common = polys[1..].iter().fold(polys[0].clone(), |g, p| gcd(&g, p));
    polys[0].degree_idx(idx) - common.degree_idx(idx)
}

fn compute(prepared: &Prepared) -> Result<(i64, RawDegrees), SurfaceError> {
    let engine = Engine::new(prepared.param.clone())?;
    let mut jobs = Vec::new();
    for elim in [1, 0] {
        for point in 0..SPECIALIZATIONS {
            jobs.push(Job::Section { elim, point });
        }
    }
    for elim in [1, 0] {
        for (i, j) in pairs() {
            for values in 0..PLANE_VALUES.len() {
                jobs.push(Job::Pair { elim, i, j, values });
            }
        }
    }
    let results: Vec<MultiPoly> = jobs.par_iter().map(|&job| engine.run(job)).collect::<Result<_, _>>()?;
    let mut chunks = results.chunks(SPECIALIZATIONS);
    let mut next = |keep: usize| moving_degree(chunks.next().expect("job layout"), keep);
    let s = next(0);
    let t = next(1);
    let [s_12, s_13, s_23] = [next(0), next(0), next(0)];
    let [t_12, t_13, t_23] = [next(1), next(1), next(1)];
    if s != t {
        return Err(SurfaceError::InconsistentDegrees { s, t });
    }
    if s < 1 {
        return Err(SurfaceError::NotIndependent);
    }
    Ok((s, RawDegrees { s, t, s_12, s_13, s_23, t_12, t_13, t_23 }))
}

fn report(prepared: &Prepared, map_degree: i64, raw: RawDegrees) -> DegreeReport {
    // position k is governed by the pair of the other two positions
    let by_position = [raw.s_23, raw.s_13, raw.s_12];
    let mut deg = [0i64; 3];
    for (pos, &orig) in prepared.permutation.iter().enumerate() {
        deg[orig] = by_position[pos];
    }
    let ratio = |d: i64, by: i64| Rational::frac(d, by);
    DegreeReport {
        input: None,
        permutation: prepared.permutation,
        reparametrization: prepared.shift,
        map_degree,
        deg_x: deg[0],
        deg_y: deg[1],
        deg_z: deg[2],
        section_ratio_x: ratio(deg[0], raw.s),
        section_ratio_y: ratio(deg[1], raw.s),
        section_ratio_z: ratio(deg[2], raw.s),
        table_ratio_x: ratio(deg[0], map_degree),
        table_ratio_y: ratio(deg[1], map_degree),
        table_ratio_z: ratio(deg[2], map_degree),
        raw,
        wall_time_ms: None,
    }
}

fn degrees_now(p: &SurfaceParam) -> Result<DegreeReport, SurfaceError> {
    let start = Instant::now();
    let prepared = prepare(p)?;
    let (map_degree, raw) = compute(&prepared)?;
    let mut r = report(&prepared, map_degree, raw);
    r.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    Ok(r)
}

/// Map degree and partial degrees of the implicit equation, with the
/// default cost limit and no timeout.
pub fn sendra_degrees(p: &SurfaceParam) -> Result<DegreeReport, SurfaceError> {
    sendra_degrees_with(p, &SendraOptions::default())
}

pub fn sendra_degrees_with(p: &SurfaceParam, opts: &SendraOptions) -> Result<DegreeReport, SurfaceError> {
    let cost = estimate_cost(p);
    if cost.needs_slow_tier && !opts.slow {
        return Err(SurfaceError::TooExpensive(format!(
            "estimated cost {} = degree {} + resultant size {}, default limit {}",
            cost.score, cost.max_degree, cost.matrix_size, cost.limit
        )));
    }
    let Some(timeout) = opts.timeout else {
        return degrees_now(p);
    };
    let (tx, rx) = mpsc::channel();
    let owned = p.clone();
    std::thread::spawn(move || {
        let _ = tx.send(degrees_now(&owned));
    });
    rx.recv_timeout(timeout).unwrap_or(Err(SurfaceError::Timeout(timeout.as_secs())))
}
