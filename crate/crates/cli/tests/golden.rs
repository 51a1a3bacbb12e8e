//! Suite reports against stored goldens, determinism and round-trips of stored elements.

use std::path::PathBuf;

use clap::Parser;

use suzuki_cli::parse::{parse_expression, Context};
use suzuki_cli::report::{emit_json, Report};
use suzuki_cli::request::{Args, Request, SUITES};
use suzuki_cli::suite_report;

fn golden_path(suite: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{suite}.json"))
}

fn request(suite: &str) -> Request {
    Request::from_args(&Args::try_parse_from(["suzuki", "--suite", suite]).unwrap()).unwrap()
}

fn stored(suite: &str) -> Report {
    serde_json::from_str(&std::fs::read_to_string(golden_path(suite)).unwrap()).unwrap()
}

#[test]
fn every_suite_matches_its_golden() {
    for suite in SUITES {
        let r = suite_report(suite, &request(suite)).unwrap();
        assert!(r.pass, "{suite} has failing checks");
        let diff = r.diff(&stored(suite));
        assert!(diff.is_empty(), "{suite}: {diff:?}");
        assert_eq!(emit_json(&r.untimed()) + "\n", std::fs::read_to_string(golden_path(suite)).unwrap());
    }
}

#[test]
fn reports_are_deterministic() {
    for suite in ["main-theorem", "poisson", "regular-module"] {
        let a = suite_report(suite, &request(suite)).unwrap().untimed();
        let b = suite_report(suite, &request(suite)).unwrap().untimed();
        assert_eq!(emit_json(&a), emit_json(&b));
    }
}

#[test]
fn theta_table_rows_round_trip() {
    let r = stored("main-theorem");
    let ctx = Context::Cherednik { m: 2, t: None, c: None };
    assert!(r.checks.iter().all(|c| c.name.starts_with('T')));
    for c in &r.checks {
        for s in [&c.expected, &c.got] {
            if s == "a central element" {
                continue;
            }
            let e = parse_expression(s, &ctx).unwrap_or_else(|e| panic!("{}: {s}: {e}", c.name));
            assert_eq!(&e.to_string(), s, "{}", c.name);
        }
    }
}

#[test]
fn poisson_and_regular_rows_round_trip() {
    let ctx = Context::Cherednik { m: 2, t: None, c: None };
    for suite in ["poisson", "regular-module"] {
        for c in stored(suite).checks {
            if c.name.starts_with("global") || c.name.starts_with("{id[") {
                continue;
            }
            let e = parse_expression(&c.got, &ctx).unwrap();
            assert_eq!(e.to_string(), c.got);
        }
    }
}

#[test]
fn main_theorem_n2_contains_sample_value() {
    let r = stored("main-theorem");
    let row = r.checks.iter().find(|c| c.name == "T2,-2").unwrap();
    assert_eq!(row.got, "-2*x1*y1 - 2*x2*y2 + 2 + 2*s(1,2)");
    assert_eq!(row.status, "pass");
}
