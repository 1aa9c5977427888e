use std::path::PathBuf;
use std::process::{Command, Output};

use syzlift::arith::forms_proportional;
use syzlift::fixtures;
use syzlift::report::AnalysisReport;
use syzlift::scroll::lift;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn syzlift(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_syzlift")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn report(args: &[&str]) -> AnalysisReport {
    let o = syzlift(args);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    serde_json::from_slice(&o.stdout).expect("valid report")
}

#[test]
fn analyze_octic() {
    let path = data("octic.curve");
    let r = report(&["analyze", "--json", path.to_str().unwrap()]);
    assert_eq!(r.degree, 8);
    assert_eq!(r.splitting, (3, 5));
    assert_eq!(r.second_level.h, 1);
    assert!(!r.second_level.ascenzi);

    let text = stdout(&syzlift(&["analyze", path.to_str().unwrap()]));
    assert!(text.contains("splitting type: (3,5)"), "{text}");
    assert!(text.contains("h=1"), "{text}");
}

#[test]
fn implicitize_conic_and_square() {
    let r = report(&["implicitize", "--json", data("conic.curve").to_str().unwrap()]);
    let imp = r.implicit.unwrap();
    assert_eq!((imp.equation.as_str(), imp.r), ("x0*x2 - x1^2", 1));

    let r = report(&["implicitize", "--json", data("sq4.curve").to_str().unwrap()]);
    assert_eq!(r.implicit.unwrap().r, 2);
}

#[test]
fn dependent_forms_exit_one() {
    let o = syzlift(&["analyze", data("dependent.curve").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("DegenerateLine"), "{}", stderr(&o));
    assert!(o.stdout.is_empty());
}

#[test]
fn malformed_input_exits_two() {
    let dir = std::env::temp_dir().join(format!("syzlift-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.curve");
    std::fs::write(&bad, "degree 2\n[1,0,0]\n[0,1]\n[0,0,1]\n").unwrap();
    for args in [
        vec!["analyze", bad.to_str().unwrap()],
        vec!["analyze", "/nonexistent/curve"],
        vec!["lift", "--chart", "21", data("octic.curve").to_str().unwrap()],
    ] {
        let o = syzlift(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn json_lift_round_trips() {
    let r = report(&["lift", "--json", data("octic.curve").to_str().unwrap()]);
    let json = r.lift.unwrap();
    let parsed = json.to_lifted().unwrap();
    let direct = lift(&fixtures::octic()).unwrap();
    assert_eq!(parsed, direct);
    assert_eq!((json.k, json.h, json.chart.as_str()), (3, 1, "01"));
    assert!(json.diagnostics.passed);
}

#[test]
fn forced_chart() {
    let conic = data("conic.curve");
    let o = syzlift(&["lift", "--chart", "01", conic.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("ChartDegenerate"), "{}", stderr(&o));

    let r = report(&["lift", "--json", "--chart", "12", conic.to_str().unwrap()]);
    let forced = r.lift.unwrap().to_lifted().unwrap();
    let default = lift(&fixtures::conic()).unwrap();
    assert!(forms_proportional(&forced.coords, &default.coords).is_some());
}

#[test]
fn verify_octic_passes() {
    let o = syzlift(&["verify", data("octic.curve").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.lines().count() >= 10);
    assert!(text.lines().all(|l| l.starts_with("PASS")), "{text}");
}
