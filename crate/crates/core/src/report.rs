//! Pass/fail records shared by the verification suites.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One verification cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub anchor: String,
    pub status: Status,
    pub expected: String,
    pub got: String,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        anchor: impl Into<String>,
        expected: impl fmt::Display,
        got: impl fmt::Display,
        ok: bool,
    ) -> Self {
        Check {
            name: name.into(),
            anchor: anchor.into(),
            status: Status::from_bool(ok),
            expected: expected.to_string(),
            got: got.to_string(),
        }
    }

    /// Pass iff the canonical renderings agree.
    pub fn equal(name: impl Into<String>, anchor: impl Into<String>, expected: impl fmt::Display, got: impl fmt::Display) -> Self {
        let (e, g) = (expected.to_string(), got.to_string());
        let ok = e == g;
        Check::new(name, anchor, e, g, ok)
    }

    pub fn skipped(name: impl Into<String>, anchor: impl Into<String>, why: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            anchor: anchor.into(),
            status: Status::Skipped,
            expected: String::new(),
            got: why.into(),
        }
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

/// True iff no check failed.
pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| !c.failed())
}
