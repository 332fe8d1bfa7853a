//! Report rendering.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::finding::Category;
use crate::scoring::RiskReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    #[default]
    Json,
    Text,
}

/// Pretty JSON, or a text summary with one section per category in the
/// fixed order metadata, static, network, behavioural.
pub fn render_report(r: &RiskReport, format: ReportFormat) -> Vec<u8> {
    match format {
        ReportFormat::Json => {
            let mut out = serde_json::to_vec_pretty(r).expect("report serializes");
            out.push(b'\n');
            out
        }
        ReportFormat::Text => render_text(r).into_bytes(),
    }
}

fn render_text(r: &RiskReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "subject: {}", r.subject);
    if let Some(id) = &r.extension_id {
        let _ = writeln!(s, "extension id: {id}");
    }
    let _ = writeln!(
        s,
        "verdict: {}  composite: {:.2}{}",
        r.verdict.as_str(),
        r.composite_score,
        if r.corroborated { "  (corroborated)" } else { "" }
    );
    if let Some(d) = &r.as_of {
        let _ = writeln!(s, "as of: {d}");
    }
    for c in Category::ALL {
        let findings: Vec<_> = r.findings.iter().filter(|f| f.category == c).collect();
        let score = r.category_scores.get(&c).copied().unwrap_or(0.0);
        let _ = writeln!(s, "\n== {c} (score {score:.2}, {} findings)", findings.len());
        for f in findings {
            let mut loc = f.evidence.path.clone().unwrap_or_default();
            if let Some(l) = f.evidence.line {
                let _ = write!(loc, ":{l}");
            }
            if let Some(field) = &f.evidence.field {
                let _ = write!(loc, " [{field}]");
            }
            let _ = writeln!(s, "  [{}] {} {}  {}", f.severity, f.rule_id, loc, f.message);
        }
    }
    if !r.warnings.is_empty() {
        let _ = writeln!(s, "\nwarnings:");
        for w in &r.warnings {
            let _ = writeln!(s, "  {w}");
        }
    }
    let _ = writeln!(s, "\nrule catalog {}  config {}", r.rule_catalog_version, r.config_fingerprint);
    let _ = writeln!(s, "note: {}", r.scoring_note);
    s
}
