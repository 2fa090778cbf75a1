use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use supportimpl::curveimpl::ImplicitReport;
use supportimpl::exactalg::{MultiPoly, Vars};
use supportimpl::surfimpl::tables::RowOutcome;
use supportimpl::surfimpl::DegreeReport;
use supportimpl::trigsupport::{Classification, Convexity};

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_supportimpl")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn circle_curve() {
    let v = json(&["curve", "--input", &data("circle.txt"), "--format", "json"]);
    assert_eq!(v["report"]["polynomial"], "x^2 + y^2 - 1");
    assert_eq!(v["seed"], 0);
}

#[test]
fn rabinowitz_curve_report() {
    let v = json(&["curve", "--input", &data("rabinowitz.txt"), "--format", "json", "--seed", "17"]);
    assert_eq!(v["seed"], 17);
    let r: ImplicitReport = serde_json::from_value(v["report"].clone()).unwrap();
    assert_eq!((r.total_degree, r.predicted_total_degree, r.tracing_index), (8, 8, 1));
    assert_eq!(r.f.terms().count(), 24);
}

#[test]
fn exit_codes() {
    let empty = run(&["curve", "--input", &data("empty.txt")]);
    assert_eq!(code(&empty), 2);
    assert!(stderr(&empty).contains("empty support function"));

    let bad = run(&["curve", "--input", &data("bad_number.txt")]);
    assert_eq!(code(&bad), 1);
    assert!(stderr(&bad).contains("line 2, column 8"), "{}", stderr(&bad));

    assert_eq!(code(&run(&["curve", "--input", &data("missing.txt")])), 1);
    assert_eq!(code(&run(&["curve"])), 1);
    assert_eq!(code(&run(&["curve", "--input", &data("circle.txt"), "--format", "svg"])), 1);
    assert_eq!(code(&run(&["bogus"])), 1);
    assert_eq!(code(&run(&["--help"])), 0);

    let revolved_line = run(&["surface", "--revolve", "--input", &data("line.txt")]);
    assert_eq!(code(&revolved_line), 2, "{}", stderr(&revolved_line));
}

#[test]
fn slow_harmonic_is_refused_with_cost() {
    let out = run(&["surface", "--input", &data("y43.txt")]);
    assert_eq!(code(&out), 5);
    let msg = stderr(&out);
    assert!(msg.contains("estimated cost") && msg.contains("slow tier"), "{msg}");
}

#[test]
fn surface_examples() {
    for args in [
        vec!["surface", "--revolve", "--input", &data("cos2.txt"), "--format", "json"],
        vec!["surface", "--input", &data("y20.txt"), "--format", "json"],
    ] {
        let v = json(&args);
        let d: DegreeReport = serde_json::from_value(v["report"].clone()).unwrap();
        assert_eq!(d.map_degree, 2);
        assert_eq!(d.table_ratios().map(|r| r.to_string()), ["6", "6", "6"]);
    }
}

#[test]
fn sphere_surface_has_implicit_equation() {
    let v = json(&["surface", "--input", &data("sphere.txt"), "--format", "json"]);
    let f = MultiPoly::parse(v["report"]["implicit"].as_str().unwrap(), &Vars::new(&["x", "y", "z"])).unwrap();
    let want = MultiPoly::parse("x^2 + x + y^2 + z^2 - 15/4", &Vars::new(&["x", "y", "z"])).unwrap();
    assert_eq!(f, want.normalize());
}

#[test]
fn single_table_row() {
    let out = run(&["table", "--rows", "cos 3θ"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("deg 4|4 MATCH") && text.contains("1/1 rows match"), "{text}");

    let v = json(&["table", "--rows", "T1.2", "--format", "json"]);
    let rows: Vec<RowOutcome> = serde_json::from_value(v["report"].clone()).unwrap();
    assert_eq!(rows.len(), 1);
    let r = rows[0].report.as_ref().unwrap();
    assert_eq!(r.map_degree, 4);
    assert_eq!(r.table_ratio_x.to_string(), "4");
}

#[test]
fn unknown_row_is_an_error() {
    assert_eq!(code(&run(&["table", "--rows", "T9.9"])), 1);
}

#[test]
fn table_csv() {
    let out = run(&["table", "--rows", "T1.1,T2.1", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[1..].iter().all(|l| l.starts_with("T") && l.ends_with(",true")));
}

#[test]
fn check_examples() {
    let v = json(&["check", "--input", &data("rabinowitz.txt"), "--format", "json"]);
    let c: Classification = serde_json::from_value(v["report"]["classification"].clone()).unwrap();
    assert_eq!(v["report"]["classification"]["kind"], "constant_width");
    assert_eq!(c.width.unwrap().to_string(), "1");
    assert_eq!(v["report"]["convexity"]["verdict"], "convex");

    let v = json(&["check", "--input", &data("cos3.txt"), "--format", "json"]);
    assert_eq!(v["report"]["parity"], "odd_only");
    let cv: Convexity = serde_json::from_value(v["report"]["convexity"].clone()).unwrap();
    match cv {
        Convexity::NotConvex { witness } => {
            assert_eq!(witness.theta, 0.0);
            assert_eq!(witness.rho.to_string(), "-8");
        }
        other => panic!("expected a witness, got {other:?}"),
    }

    let text = stdout(&run(&["check", "--input", &data("rotor.txt")]));
    assert!(text.contains("rotor(n = 3, ρ = 1/2)") && text.contains("convex: yes"), "{text}");
}

#[test]
fn json_reports_round_trip() {
    for args in [
        vec!["curve", "--input", &data("rotor.txt"), "--format", "json"],
        vec!["check", "--input", &data("rabinowitz.txt"), "--format", "json"],
        vec!["surface", "--input", &data("sphere.txt"), "--format", "json"],
    ] {
        let v = json(&args);
        let again = match args[0] {
            "curve" => serde_json::to_value(serde_json::from_value::<ImplicitReport>(v["report"].clone()).unwrap()),
            "check" => serde_json::to_value(serde_json::from_value::<Convexity>(v["report"]["convexity"].clone()).unwrap()),
            _ => serde_json::to_value(serde_json::from_value::<DegreeReport>(v["report"].clone()).unwrap()),
        }
        .unwrap();
        let original = match args[0] {
            "check" => v["report"]["convexity"].clone(),
            "surface" => {
                let mut r = v["report"].clone();
                r.as_object_mut().unwrap().remove("implicit");
                r
            }
            _ => v["report"].clone(),
        };
        assert_eq!(again, original, "{args:?}");
    }
}

#[test]
fn outputs_are_byte_identical() {
    for args in [
        vec!["curve", "--input", &data("rabinowitz.txt"), "--format", "json", "--seed", "3"],
        vec!["check", "--input", &data("cos3.txt")],
        vec!["surface", "--input", &data("y20.txt")],
        vec!["plot", "--input", &data("rotor.txt"), "--samples", "500"],
        vec!["plot", "--input", &data("rotor.txt"), "--format", "csv"],
        vec!["table", "--rows", "T1.1"],
    ] {
        assert_eq!(run(&args).stdout, run(&args).stdout, "{args:?}");
    }
}

#[test]
fn circle_plot_is_round() {
    let out = run(&["plot", "--input", &data("circle.txt"), "--samples", "10000", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("theta,x,y"));
    let mut count = 0;
    let mut worst = 0.0f64;
    for line in lines {
        let v: Vec<f64> = line.split(',').map(|s| s.parse().unwrap()).collect();
        worst = worst.max((v[1].hypot(v[2]) - 1.0).abs());
        count += 1;
    }
    assert_eq!(count, 10_000);
    assert!(worst < 1e-9, "{worst}");
}

#[test]
fn plot_writes_both_files() {
    let dir = std::env::temp_dir().join(format!("supportimpl-plot-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let base = dir.join("rabinowitz");
    let out = run(&["plot", "--input", &data("rabinowitz.txt"), "--samples", "64", "--out", base.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let svg = std::fs::read_to_string(base.with_extension("svg")).unwrap();
    let csv = std::fs::read_to_string(base.with_extension("csv")).unwrap();
    assert!(svg.contains("viewBox=\"0 0 800 800\"") && svg.contains("<polygon"));
    assert!(svg.matches(' ').count() > 64);
    assert_eq!(csv.lines().count(), 65);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn svg_fits_the_viewport() {
    let svg = stdout(&run(&["plot", "--input", &data("rotor.txt"), "--samples", "200"]));
    let start = svg.find("points=\"").unwrap() + 8;
    let end = start + svg[start..].find('"').unwrap();
    let coords: Vec<(f64, f64)> = svg[start..end]
        .split(' ')
        .map(|p| {
            let (u, v) = p.split_once(',').unwrap();
            (u.parse().unwrap(), v.parse().unwrap())
        })
        .collect();
    assert_eq!(coords.len(), 200);
    let lo = coords.iter().map(|c| c.0.min(c.1)).fold(f64::INFINITY, f64::min);
    let hi = coords.iter().map(|c| c.0.max(c.1)).fold(f64::NEG_INFINITY, f64::max);
    assert!(lo >= 36.0 && hi <= 764.0, "{lo} {hi}");
}
