//! The common finding type every detector emits.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Signal family a finding belongs to.
///
/// The declaration order is the rendering order of text reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Category {
    Metadata,
    Static,
    Network,
    Behavioural,
}

impl Category {
    pub const ALL: [Category; 4] = [
        Category::Metadata,
        Category::Static,
        Category::Network,
        Category::Behavioural,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Category::Metadata => "metadata",
            Category::Static => "static",
            Category::Network => "network",
            Category::Behavioural => "behavioural",
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Info,
    Low,
    Medium,
    High,
    Critical,
}

impl Severity {
    pub fn as_str(self) -> &'static str {
        match self {
            Severity::Info => "info",
            Severity::Low => "low",
            Severity::Medium => "medium",
            Severity::High => "high",
            Severity::Critical => "critical",
        }
    }

    /// One level down, saturating at `Info`.
    pub fn downgrade(self) -> Severity {
        match self {
            Severity::Critical => Severity::High,
            Severity::High => Severity::Medium,
            Severity::Medium => Severity::Low,
            Severity::Low | Severity::Info => Severity::Info,
        }
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Where a finding was observed.
///
/// `path` is a package-relative file path (or a log/record name for
/// network and metadata findings); `field` is a manifest field path such as
/// `host_permissions[0]`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Evidence {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub offset: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
}

impl Evidence {
    pub fn at(path: impl Into<String>, offset: usize, line: usize) -> Self {
        Evidence {
            path: Some(path.into()),
            offset: Some(offset),
            line: Some(line),
            ..Default::default()
        }
    }

    pub fn field(path: impl Into<String>, field: impl Into<String>) -> Self {
        Evidence {
            path: Some(path.into()),
            field: Some(field.into()),
            ..Default::default()
        }
    }

    pub fn with_value(mut self, value: impl Into<String>) -> Self {
        self.value = Some(value.into());
        self
    }
}

/// One detector hit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignalFinding {
    pub rule_id: String,
    pub category: Category,
    pub severity: Severity,
    pub evidence: Evidence,
    pub message: String,
}

impl SignalFinding {
    pub fn new(
        rule_id: &str,
        category: Category,
        severity: Severity,
        evidence: Evidence,
        message: impl Into<String>,
    ) -> Self {
        SignalFinding {
            rule_id: rule_id.to_string(),
            category,
            severity,
            evidence,
            message: message.into(),
        }
    }

    /// Canonical total order used wherever finding lists must be stable.
    pub fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.category
            .cmp(&other.category)
            .then(other.severity.cmp(&self.severity))
            .then_with(|| self.rule_id.cmp(&other.rule_id))
            .then_with(|| self.evidence.cmp(&other.evidence))
            .then_with(|| self.message.cmp(&other.message))
    }
}

/// Sorts findings into the canonical order.
pub fn sort_canonical(findings: &mut [SignalFinding]) {
    findings.sort_by(SignalFinding::canonical_cmp);
}
