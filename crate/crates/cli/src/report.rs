//! Machine-readable and tabular reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use suzuki_core::report::Check;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub anchor: String,
    pub status: String,
    pub expected: String,
    pub got: String,
}

impl From<&Check> for CheckRecord {
    fn from(c: &Check) -> Self {
        CheckRecord {
            name: c.name.clone(),
            anchor: c.anchor.clone(),
            status: c.status.as_str().to_string(),
            expected: c.expected.clone(),
            got: c.got.clone(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub suite: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, String>,
    pub checks: Vec<CheckRecord>,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl Report {
    pub fn new(suite: Option<String>, params: BTreeMap<String, String>, checks: &[Check]) -> Self {
        let checks: Vec<CheckRecord> = checks.iter().map(CheckRecord::from).collect();
        let pass = checks.iter().all(|c| c.status != "fail");
        Report { suite, params, checks, pass, elapsed_ms: None }
    }

    /// Copy without wall-clock data, used for golden and determinism comparisons.
    pub fn untimed(&self) -> Report {
        Report { elapsed_ms: None, ..self.clone() }
    }

    pub fn exit_code(&self) -> u8 {
        if self.pass {
            0
        } else {
            1
        }
    }

    /// Names of checks whose record differs from `other`, plus missing or extra names.
    pub fn diff(&self, other: &Report) -> Vec<String> {
        let mine: BTreeMap<&str, &CheckRecord> = self.checks.iter().map(|c| (c.name.as_str(), c)).collect();
        let theirs: BTreeMap<&str, &CheckRecord> = other.checks.iter().map(|c| (c.name.as_str(), c)).collect();
        let mut out = Vec::new();
        for (k, v) in &mine {
            match theirs.get(k) {
                None => out.push(format!("+ {k}")),
                Some(w) if w != v => out.push(format!("~ {k}: {} vs {}", v.got, w.got)),
                _ => {}
            }
        }
        for k in theirs.keys() {
            if !mine.contains_key(k) {
                out.push(format!("- {k}"));
            }
        }
        if out.is_empty() && self.untimed() != other.untimed() {
            out.push("report header differs".into());
        }
        out
    }
}

pub fn emit_json(r: &Report) -> String {
    serde_json::to_string(r).expect("report serializes")
}

pub fn emit_text(r: &Report) -> String {
    let mut s = String::new();
    if let Some(suite) = &r.suite {
        let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(s, "suite {suite} {}", params.join(" "));
    }
    let w = r.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    for c in &r.checks {
        let _ = writeln!(s, "{:<7} {:<w$}  {}", c.status, c.name, c.anchor);
        if c.status != "pass" {
            let _ = writeln!(s, "        expected: {}", c.expected);
            let _ = writeln!(s, "        got:      {}", c.got);
        }
    }
    let failed = r.checks.iter().filter(|c| c.status == "fail").count();
    let skipped = r.checks.iter().filter(|c| c.status == "skipped").count();
    let _ = write!(
        s,
        "{}: {} checks, {} failed, {} skipped",
        if r.pass { "PASS" } else { "FAIL" },
        r.checks.len(),
        failed,
        skipped
    );
    if let Some(ms) = r.elapsed_ms {
        let _ = write!(s, ", {ms} ms");
    }
    s.push('\n');
    s
}

pub fn emit_report(r: &Report, fmt: Format) -> String {
    match fmt {
        Format::Json => emit_json(r) + "\n",
        Format::Text => emit_text(r),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_json() {
        let r = Report::new(None, BTreeMap::new(), &[]);
        assert_eq!(emit_json(&r), r#"{"checks":[],"pass":true}"#);
    }

    #[test]
    fn failing_check_fails_report() {
        let r = Report::new(None, BTreeMap::new(), &[Check::new("a", "b", 1, 2, false)]);
        assert!(!r.pass);
        assert_eq!(r.exit_code(), 1);
        assert!(emit_json(&r).contains(r#""pass":false"#));
        assert!(emit_text(&r).starts_with("fail"));
    }

    #[test]
    fn json_field_order() {
        let mut params = BTreeMap::new();
        params.insert("n".to_string(), "2".to_string());
        let mut r = Report::new(Some("x".into()), params, &[Check::equal("a", "b", 1, 1)]);
        r.elapsed_ms = Some(5);
        assert_eq!(
            emit_json(&r),
            r#"{"suite":"x","params":{"n":"2"},"checks":[{"name":"a","anchor":"b","status":"pass","expected":"1","got":"1"}],"pass":true,"elapsed_ms":5}"#
        );
        let back: Report = serde_json::from_str(&emit_json(&r)).unwrap();
        assert_eq!(back, r);
        assert!(back.diff(&r.untimed()).is_empty());
    }
}
