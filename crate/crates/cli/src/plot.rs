use std::f64::consts::PI;
use std::fmt::Write;

use supportimpl::trigsupport::TrigPoly;

pub struct Sample {
    pub theta: f64,
    pub x: f64,
    pub y: f64,
}

/// `n` points at `θ_k = 2πk/n`.
pub fn sample(p: &TrigPoly, n: usize) -> Vec<Sample> {
    (0..n)
        .map(|k| {
            let theta = 2.0 * PI * k as f64 / n as f64;
            let (x, y) = p.curve_point_f64(theta);
            Sample { theta, x, y }
        })
        .collect()
}

const VIEW: f64 = 800.0;

pub fn svg(samples: &[Sample], seed: u64) -> String {
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for s in samples {
        x0 = x0.min(s.x);
        x1 = x1.max(s.x);
        y0 = y0.min(s.y);
        y1 = y1.max(s.y);
    }
    let span = (x1 - x0).max(y1 - y0).max(f64::MIN_POSITIVE);
    let margin = 0.05 * span;
    let scale = VIEW / (span + 2.0 * margin);
    let cx = (x0 + x1) / 2.0;
    let cy = (y0 + y1) / 2.0;
    let points: Vec<String> = samples
        .iter()
        .map(|s| {
            let u = VIEW / 2.0 + (s.x - cx) * scale;
            let v = VIEW / 2.0 - (s.y - cy) * scale;
            format!("{u:.3},{v:.3}")
        })
        .collect();
    let mut out = String::new();
    let _ = writeln!(out, "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\" width=\"800\" height=\"800\">");
    let _ = writeln!(out, "<!-- seed {seed} -->");
    let _ = writeln!(
        out,
        "<polygon points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>",
        points.join(" ")
    );
    out.push_str("</svg>\n");
    out
}

pub fn csv(samples: &[Sample]) -> String {
    let mut out = String::from("theta,x,y\n");
    for s in samples {
        let _ = writeln!(out, "{:?},{:?},{:?}", s.theta, s.x, s.y);
    }
    out
}
