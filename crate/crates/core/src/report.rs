//! Structured pass/fail reports with a text and a JSON rendering.
//!
//! The JSON form mirrors the text form field for field, so golden tests can
//! target either.

use serde::Serialize;
use std::fmt;

/// Version of the machine-readable report schema.
pub const REPORT_SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ItemStatus {
    Pass,
    Fail,
    Skipped,
    Note,
}

impl fmt::Display for ItemStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ItemStatus::Pass => "PASS",
            ItemStatus::Fail => "FAIL",
            ItemStatus::Skipped => "SKIPPED",
            ItemStatus::Note => "NOTE",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportItem {
    pub label: String,
    pub detail: String,
    pub status: ItemStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub title: String,
    pub items: Vec<ReportItem>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            schema: REPORT_SCHEMA,
            title: title.into(),
            items: Vec::new(),
        }
    }

    pub fn push(
        &mut self,
        label: impl Into<String>,
        detail: impl Into<String>,
        status: ItemStatus,
    ) {
        self.items.push(ReportItem {
            label: label.into(),
            detail: detail.into(),
            status,
        });
    }

    pub fn pass(&mut self, label: impl Into<String>, detail: impl Into<String>) {
        self.push(label, detail, ItemStatus::Pass);
    }

    pub fn fail(&mut self, label: impl Into<String>, detail: impl Into<String>) {
        self.push(label, detail, ItemStatus::Fail);
    }

    pub fn skip(&mut self, label: impl Into<String>, detail: impl Into<String>) {
        self.push(label, detail, ItemStatus::Skipped);
    }

    pub fn note(&mut self, label: impl Into<String>, detail: impl Into<String>) {
        self.push(label, detail, ItemStatus::Note);
    }

    /// True when no item failed (skips and notes do not fail a report).
    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.status != ItemStatus::Fail)
    }

    pub fn item(&self, label: &str) -> Option<&ReportItem> {
        self.items.iter().find(|i| i.label == label)
    }

    /// Appends another report's items under this one, keeping their order.
    pub fn extend(&mut self, other: Report) {
        self.items.extend(other.items);
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.title);
        out.push('\n');
        for item in &self.items {
            out.push_str(&format!(
                "  {}: {}: {}\n",
                item.label, item.detail, item.status
            ));
        }
        out.push_str(&format!(
            "result: {}\n",
            if self.all_pass() { "PASS" } else { "FAIL" }
        ));
        out
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Wire<'a> {
            schema: u32,
            title: &'a str,
            result: &'a str,
            items: &'a [ReportItem],
        }
        let wire = Wire {
            schema: self.schema,
            title: &self.title,
            result: if self.all_pass() { "pass" } else { "fail" },
            items: &self.items,
        };
        serde_json::to_string_pretty(&wire).expect("report serializes")
    }
}
