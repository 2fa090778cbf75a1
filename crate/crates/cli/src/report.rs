use std::fmt::Write;

use serde::{Deserialize, Serialize};
use supportimpl::curveimpl::ImplicitReport;
use supportimpl::surfimpl::tables::RowOutcome;
use supportimpl::surfimpl::DegreeReport;
use supportimpl::trigsupport::{ClassKind, Classification, Convexity, Parity};

#[derive(Debug, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    pub seed: u64,
    pub report: T,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SurfaceOutput {
    #[serde(flatten)]
    pub degrees: DegreeReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub implicit: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CheckReport {
    pub support: String,
    pub parity: Parity,
    pub classification: Classification,
    pub convexity: Convexity,
}

pub fn json<T: Serialize>(env: &Envelope<T>) -> String {
    let mut s = serde_json::to_string_pretty(env).expect("serializable report");
    s.push('\n');
    s
}

fn header<T>(env: &Envelope<T>) -> String {
    let mut out = format!("seed: {}\n", env.seed);
    if let Some(input) = &env.input {
        let _ = writeln!(out, "input: {input}");
    }
    out
}

fn kind_text(c: &Classification) -> String {
    match &c.kind {
        ClassKind::Circle => "circle".into(),
        ClassKind::ConstantWidth { alpha } => format!("constant_width(α = {alpha})"),
        ClassKind::Rotor { n, rho } => format!("rotor(n = {n}, ρ = {rho})"),
        ClassKind::Generic => "generic".into(),
    }
}

pub fn curve_text(env: &Envelope<ImplicitReport>) -> String {
    let r = &env.report;
    let mut out = header(env);
    let _ = writeln!(out, "support: {}", r.support.to_formula());
    let _ = writeln!(out, "class: {}", kind_text(&r.classification));
    let _ = writeln!(out, "tracing index: {}", r.tracing_index);
    let _ = writeln!(out, "degree: {} (predicted {})", r.total_degree, r.predicted_total_degree);
    let _ = writeln!(out, "deg_x: {}  deg_y: {}", r.deg_x, r.deg_y);
    let _ = writeln!(out, "F = {}", r.f);
    out
}

pub fn surface_text(env: &Envelope<SurfaceOutput>) -> String {
    let d = &env.report.degrees;
    let mut out = header(env);
    let _ = writeln!(out, "permutation: {:?}", d.permutation);
    if d.reparametrization > 1 {
        let _ = writeln!(out, "reparametrization: {}", d.reparametrization);
    }
    let _ = writeln!(out, "map degree: {}", d.map_degree);
    let _ = writeln!(out, "deg_x: {}  deg_y: {}  deg_z: {}", d.deg_x, d.deg_y, d.deg_z);
    let _ = writeln!(
        out,
        "ratios: {}/{}/{}",
        d.table_ratio_x, d.table_ratio_y, d.table_ratio_z
    );
    let r = &d.raw;
    let _ = writeln!(out, "S: {} {} {}  T: {} {} {}", r.s_12, r.s_13, r.s_23, r.t_12, r.t_13, r.t_23);
    if let Some(f) = &env.report.implicit {
        let _ = writeln!(out, "F = {f}");
    }
    out
}

fn mark(ok: bool) -> &'static str {
    if ok {
        "MATCH"
    } else {
        "DIFF"
    }
}

pub fn table_text(env: &Envelope<Vec<RowOutcome>>) -> String {
    let mut out = header(env);
    let width = env.report.iter().map(|o| o.label.chars().count()).max().unwrap_or(0);
    for o in &env.report {
        let label = format!("{:<width$}", o.label);
        let _ = write!(out, "{:<6} {label}  ", o.id);
        match &o.report {
            Some(r) => {
                let ratios = r.table_ratios();
                let _ = write!(out, "deg {}|{} {}", o.expected_map_degree, r.map_degree, mark(o.cell_match[0]));
                for (i, axis) in ["x", "y", "z"].iter().enumerate() {
                    let _ =
                        write!(out, "  {axis} {}|{} {}", o.expected_ratios[i], ratios[i], mark(o.cell_match[i + 1]));
                }
            }
            None => {
                let _ = write!(out, "DIFF error: {}", o.error.as_deref().unwrap_or("unknown"));
            }
        }
        if let Some((printed, computed)) = o.symmetric {
            let _ = write!(out, "  symmetric {printed}|{computed} {}", mark(printed == computed));
        }
        out.push('\n');
    }
    let matched = env.report.iter().filter(|o| o.all_match()).count();
    let _ = writeln!(out, "{matched}/{} rows match", env.report.len());
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn table_csv(rows: &[RowOutcome]) -> String {
    let mut out = String::from(
        "id,label,printed_map_degree,map_degree,printed_x,ratio_x,printed_y,ratio_y,printed_z,ratio_z,match\n",
    );
    for o in rows {
        let computed: Vec<String> = match &o.report {
            Some(r) => {
                let ratios = r.table_ratios();
                vec![r.map_degree.to_string(), ratios[0].to_string(), ratios[1].to_string(), ratios[2].to_string()]
            }
            None => vec![String::new(); 4],
        };
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            o.id,
            csv_field(&o.label),
            o.expected_map_degree,
            computed[0],
            o.expected_ratios[0],
            computed[1],
            o.expected_ratios[1],
            computed[2],
            o.expected_ratios[2],
            computed[3],
            o.all_match()
        );
    }
    out
}

pub fn check_text(env: &Envelope<CheckReport>) -> String {
    let r = &env.report;
    let mut out = header(env);
    let _ = writeln!(out, "support: {}", r.support);
    let parity = match r.parity {
        Parity::OddOnly => "odd_only",
        Parity::HasEvenHarmonic => "has_even_harmonic",
    };
    let _ = writeln!(out, "parity: {parity}");
    let _ = writeln!(out, "class: {}", kind_text(&r.classification));
    let spectrum: Vec<String> = r.classification.spectrum.iter().map(|k| k.to_string()).collect();
    let _ = writeln!(out, "spectrum: {}", spectrum.join(" "));
    if !r.classification.rotor_orders.is_empty() {
        let orders: Vec<String> = r.classification.rotor_orders.iter().map(|k| k.to_string()).collect();
        let _ = writeln!(out, "rotor orders: {}", orders.join(" "));
    }
    if let Some(w) = &r.classification.width {
        let _ = writeln!(out, "width: {w}");
    }
    match &r.convexity {
        Convexity::Convex { certificate } => {
            let _ = writeln!(out, "convex: yes");
            let _ = writeln!(out, "ρ numerator: {}", certificate.numerator);
            let _ = writeln!(out, "real roots: {}", certificate.roots.len());
            for (t, sign) in &certificate.samples {
                let _ = writeln!(out, "  sign at t = {t}: {sign:+}");
            }
            let _ = writeln!(out, "  ρ(π) = {}", certificate.rho_at_pi);
        }
        Convexity::NotConvex { witness } => {
            let _ = writeln!(out, "convex: no");
            let at = match &witness.t {
                Some(t) => format!("t = {t}"),
                None => "θ = π".into(),
            };
            let _ = writeln!(out, "witness: {at} (θ ≈ {}), ρ = {}", witness.theta, witness.rho);
        }
    }
    out
}
