//! Finding aggregation, verdicts and triage order.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::finding::{sort_canonical, Category, Severity, SignalFinding};
use crate::rules::{self, RULE_CATALOG_VERSION};

pub const REPORT_SCHEMA_VERSION: &str = "1.0";

/// Attached to every report: the weights and thresholds are a hand-tuned
/// heuristic, not a calibrated model.
pub const SCORING_NOTE: &str =
    "heuristic scoring: severity weights, category weights and thresholds are hand-set defaults, not learned";

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ScoringError {
    #[error("finding references unknown rule {0}")]
    UnknownRuleId(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Benign,
    Suspicious,
    Malicious,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Benign => 0,
            Verdict::Suspicious => 1,
            Verdict::Malicious => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Benign => "benign",
            Verdict::Suspicious => "suspicious",
            Verdict::Malicious => "malicious",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RiskReport {
    pub schema_version: String,
    /// Extension ID when known, otherwise the package path.
    pub subject: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extension_id: Option<String>,
    pub findings: Vec<SignalFinding>,
    pub category_scores: BTreeMap<Category, f64>,
    pub composite_score: f64,
    pub corroborated: bool,
    pub verdict: Verdict,
    pub rule_catalog_version: String,
    pub config_fingerprint: String,
    pub scoring_note: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub as_of: Option<String>,
    #[serde(default)]
    pub warnings: Vec<String>,
}

/// Scores derived from a finding list; shared by [`aggregate`] and
/// [`recompute`] so both produce identical floats.
#[derive(Debug, Clone, PartialEq)]
pub struct Scores {
    pub category_scores: BTreeMap<Category, f64>,
    pub composite_score: f64,
    pub corroborated: bool,
    pub verdict: Verdict,
}

/// Scores for `findings` under `cfg`. Order of the input does not matter.
pub fn score(findings: &[SignalFinding], cfg: &Config) -> Scores {
    let mut sorted = findings.to_vec();
    sort_canonical(&mut sorted);
    let s = &cfg.scoring;
    let mut category_scores: BTreeMap<Category, f64> = Category::ALL.iter().map(|c| (*c, 0.0)).collect();
    let mut strong = BTreeSet::new();
    for f in &sorted {
        *category_scores.get_mut(&f.category).expect("all categories present") += s.severity_weights.weight(f.severity);
        if f.severity >= Severity::Medium {
            strong.insert(f.category);
        }
    }
    let mut composite: f64 = Category::ALL
        .iter()
        .map(|c| s.category_weights.weight(*c) * category_scores[c])
        .sum();
    let corroborated = strong.len() >= s.corroboration_min_categories.max(1);
    if corroborated {
        composite *= s.corroboration_factor;
    }
    let critical = sorted.iter().any(|f| f.severity == Severity::Critical);
    let verdict = if critical || composite >= s.malicious_threshold {
        Verdict::Malicious
    } else if composite >= s.suspicious_threshold {
        Verdict::Suspicious
    } else {
        Verdict::Benign
    };
    Scores {
        category_scores,
        composite_score: composite,
        corroborated,
        verdict,
    }
}

/// Builds a report from findings. Findings of disabled rules are dropped.
pub fn aggregate(findings: &[SignalFinding], cfg: &Config) -> Result<RiskReport, ScoringError> {
    if let Some(f) = findings.iter().find(|f| rules::lookup(&f.rule_id).is_none()) {
        return Err(ScoringError::UnknownRuleId(f.rule_id.clone()));
    }
    let mut kept: Vec<SignalFinding> = findings.iter().filter(|f| cfg.rule_enabled(&f.rule_id)).cloned().collect();
    sort_canonical(&mut kept);
    let sc = score(&kept, cfg);
    Ok(RiskReport {
        schema_version: REPORT_SCHEMA_VERSION.into(),
        subject: String::new(),
        extension_id: None,
        findings: kept,
        category_scores: sc.category_scores,
        composite_score: sc.composite_score,
        corroborated: sc.corroborated,
        verdict: sc.verdict,
        rule_catalog_version: RULE_CATALOG_VERSION.into(),
        config_fingerprint: cfg.fingerprint(),
        scoring_note: SCORING_NOTE.into(),
        as_of: None,
        warnings: Vec::new(),
    })
}

impl RiskReport {
    pub fn with_subject(mut self, subject: impl Into<String>, extension_id: Option<String>) -> Self {
        self.subject = subject.into();
        self.extension_id = extension_id;
        self
    }

    /// Recomputes the scores from the stored findings.
    pub fn recompute(&self, cfg: &Config) -> Scores {
        score(&self.findings, cfg)
    }

    pub fn count(&self, rule_id: &str) -> usize {
        self.findings.iter().filter(|f| f.rule_id == rule_id).count()
    }

    pub fn has_rule(&self, rule_id: &str) -> bool {
        self.count(rule_id) > 0
    }
}

/// The triage order: verdict desc, composite desc, subject asc.
pub fn triage_cmp(a: &RiskReport, b: &RiskReport) -> Ordering {
    b.verdict
        .cmp(&a.verdict)
        .then_with(|| b.composite_score.total_cmp(&a.composite_score))
        .then_with(|| a.subject.cmp(&b.subject))
}

pub fn triage_rank(mut reports: Vec<RiskReport>) -> Vec<RiskReport> {
    reports.sort_by(triage_cmp);
    reports
}
