use syzlift::curve::DEFAULT_SEED;
use syzlift::fixtures;
use syzlift::report::{AnalysisReport, LiftJson};
use syzlift::scroll::{lift, second_level};

#[test]
fn lift_json_round_trips_exactly() {
    for (name, c) in fixtures::corpus(DEFAULT_SEED).into_iter().take(12) {
        let l = lift(&c).unwrap();
        let json = LiftJson::new(&l, &second_level(&c).unwrap());
        let text = serde_json::to_string(&json).unwrap();
        let parsed: LiftJson = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, json, "{name}");
        assert_eq!(parsed.to_lifted().unwrap(), l, "{name}");
    }
}

#[test]
fn rationals_are_written_as_strings() {
    let c = fixtures::reparameterize(
        &fixtures::cusp3(),
        &[[syzlift::arith::ratio(1, 2), syzlift::arith::int(1)], [syzlift::arith::int(0), syzlift::arith::int(3)]],
    );
    let l = lift(&c).unwrap();
    let json = LiftJson::new(&l, &second_level(&c).unwrap());
    let value = serde_json::to_value(&json).unwrap();
    assert!(value["coords"][0].as_array().unwrap().iter().all(|v| v.is_string()));
    assert_eq!(value["chart"], l.chart.to_string());
    let back: LiftJson = serde_json::from_value(value).unwrap();
    assert_eq!(back.to_lifted().unwrap(), l);
}

#[test]
fn analysis_report_fields_are_consistent() {
    let c = fixtures::octic();
    let report = AnalysisReport::analyze(&c, DEFAULT_SEED).unwrap().with_implicit(&c, DEFAULT_SEED).unwrap();
    assert_eq!(report.splitting, (3, 5));
    assert_eq!(report.splitting.0 + report.splitting.1, report.degree);
    assert_eq!((report.second_level.h, report.second_level.e, report.second_level.ascenzi), (1, 1, false));
    let imp = report.implicit.as_ref().unwrap();
    assert_eq!(imp.degree * imp.r, 8);
    let text = serde_json::to_string_pretty(&report).unwrap();
    let parsed: AnalysisReport = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed, report);
}
