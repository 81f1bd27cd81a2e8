use std::time::{Duration, Instant};

use serde::Serialize;

/// Wall-clock cap shared by the checks of one command.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn new(secs: Option<f64>) -> Self {
        Budget { deadline: secs.map(|s| Instant::now() + Duration::from_secs_f64(s.max(0.0))) }
    }

    pub fn exhausted(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "SKIPPED")]
    Skipped,
    #[serde(rename = "not run")]
    NotRun,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    /// Fail dominates skip, skip dominates pass.
    pub fn combine(self, other: Status) -> Status {
        use Status::*;
        match (self, other) {
            (Fail, _) | (_, Fail) => Fail,
            (Skipped, _) | (_, Skipped) => Skipped,
            (NotRun, s) | (s, NotRun) => s,
            (Pass, Pass) => Pass,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "SKIPPED",
            Status::NotRun => "not run",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combine_order() {
        use Status::*;
        assert_eq!(Pass.combine(Skipped), Skipped);
        assert_eq!(Skipped.combine(Fail), Fail);
        assert_eq!(NotRun.combine(Pass), Pass);
        assert_eq!(NotRun.combine(NotRun), NotRun);
    }

    #[test]
    fn zero_budget_is_exhausted() {
        assert!(Budget::new(Some(0.0)).exhausted());
        assert!(!Budget::new(None).exhausted());
    }
}
