//! Shared report schema for the verification suites. Every suite renders to
//! the same JSON shape: a list of `{identity, params, status, counterexample?}`
//! items under a versioned header.

use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportItem {
    pub identity: String,
    pub params: serde_json::Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<serde_json::Value>,
}

impl ReportItem {
    pub fn pass(identity: impl Into<String>, params: serde_json::Value) -> Self {
        ReportItem { identity: identity.into(), params, status: Status::Pass, counterexample: None }
    }

    pub fn fail(
        identity: impl Into<String>,
        params: serde_json::Value,
        counterexample: serde_json::Value,
    ) -> Self {
        ReportItem {
            identity: identity.into(),
            params,
            status: Status::Fail,
            counterexample: Some(counterexample),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub suite: String,
    pub items: Vec<ReportItem>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { schema_version: SCHEMA_VERSION, suite: suite.into(), items: Vec::new() }
    }

    pub fn push(&mut self, item: ReportItem) {
        self.items.push(item);
    }

    pub fn check(
        &mut self,
        identity: impl Into<String>,
        params: serde_json::Value,
        ok: bool,
        counterexample: impl FnOnce() -> serde_json::Value,
    ) {
        let identity = identity.into();
        if ok {
            self.push(ReportItem::pass(identity, params));
        } else {
            self.push(ReportItem::fail(identity, params, counterexample()));
        }
    }

    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportItem> {
        self.items.iter().filter(|i| i.status == Status::Fail)
    }

    /// Merge another report's items into this one.
    pub fn extend(&mut self, other: Report) {
        self.items.extend(other.items);
    }
}
