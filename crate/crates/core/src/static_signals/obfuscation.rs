use std::sync::OnceLock;

use regex::Regex;
use serde::{Deserialize, Serialize};

use super::tokenizer::{TokenKind, TokenStream};
use crate::config::StaticConfig;
use crate::finding::{Category, Evidence, Severity, SignalFinding};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObfuscationMetrics {
    pub shannon_entropy_bits_per_char: f64,
    pub mean_identifier_length: f64,
    pub string_literal_char_ratio: f64,
    pub base64_blob_count: usize,
    pub hex_escape_density: f64,
    pub max_line_length: usize,
}

/// Shannon entropy of a byte sequence in bits per byte.
pub fn shannon_entropy(bytes: &[u8]) -> f64 {
    if bytes.is_empty() {
        return 0.0;
    }
    let mut counts = [0usize; 256];
    for &b in bytes {
        counts[b as usize] += 1;
    }
    let n = bytes.len() as f64;
    let h: f64 = counts
        .iter()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let p = c as f64 / n;
            -p * p.log2()
        })
        .sum();
    // A single symbol yields -1 * log2(1) = -0.0.
    h.max(0.0)
}

fn base64_run_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"[A-Za-z0-9+/]{64,}={0,2}").unwrap())
}

fn hex_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"\\x[0-9a-fA-F]{2}|\\u[0-9a-fA-F]{4}|\b_?0x[0-9a-fA-F]+").unwrap())
}

/// Number of 64-char base64 blocks: a run of length n holds n / 64 blobs.
pub fn count_base64_blobs(text: &str) -> usize {
    base64_run_re()
        .find_iter(text)
        .map(|m| m.as_str().trim_end_matches('=').len() / 64)
        .sum()
}

pub fn compute_metrics(ts: &TokenStream) -> ObfuscationMetrics {
    let text = ts.text.as_str();
    let total = text.len();

    let mut literal_bytes: Vec<u8> = Vec::new();
    let mut literal_total = 0usize;
    let (mut ident_chars, mut ident_count) = (0usize, 0usize);
    for t in &ts.tokens {
        match t.kind {
            TokenKind::StringLiteral | TokenKind::TemplateLiteral => {
                literal_total += t.text.len();
                if let Some(body) = t.literal_body() {
                    literal_bytes.extend_from_slice(body.as_bytes());
                }
            }
            TokenKind::Identifier => {
                ident_chars += t.text.chars().count();
                ident_count += 1;
            }
            _ => {}
        }
    }

    let entropy = if literal_bytes.is_empty() {
        shannon_entropy(text.as_bytes())
    } else {
        shannon_entropy(&literal_bytes)
    };
    let hex_bytes: usize = hex_re().find_iter(text).map(|m| m.len()).sum();
    let ratio = |n: usize| if total == 0 { 0.0 } else { (n as f64 / total as f64).min(1.0) };

    ObfuscationMetrics {
        shannon_entropy_bits_per_char: entropy.min(8.0),
        mean_identifier_length: if ident_count == 0 {
            0.0
        } else {
            ident_chars as f64 / ident_count as f64
        },
        string_literal_char_ratio: ratio(literal_total),
        base64_blob_count: count_base64_blobs(text),
        hex_escape_density: ratio(hex_bytes),
        max_line_length: text.split('\n').map(str::len).max().unwrap_or(0),
    }
}

/// Names of the threshold conditions that hold for `m`.
pub fn tripped_conditions(m: &ObfuscationMetrics, has_identifiers: bool, cfg: &StaticConfig) -> Vec<&'static str> {
    let t = &cfg.obfuscation;
    let mut out = Vec::new();
    if m.shannon_entropy_bits_per_char > t.entropy_bits_per_char {
        out.push("entropy");
    }
    if has_identifiers && m.mean_identifier_length < t.mean_identifier_length {
        out.push("short_identifiers");
    }
    if m.base64_blob_count >= t.base64_blob_count {
        out.push("base64_blobs");
    }
    if m.hex_escape_density > t.hex_escape_density {
        out.push("hex_escapes");
    }
    if m.max_line_length > t.max_line_length {
        out.push("long_lines");
    }
    out
}

fn has_license_banner(text: &str, markers: &[String]) -> bool {
    let head: String = text.chars().take(200).collect::<String>().to_lowercase();
    markers.iter().any(|m| head.contains(&m.to_lowercase()))
}

/// Metrics for one file plus an OBFUSCATION finding when enough
/// thresholds trip. A license banner lowers the severity one level.
pub fn measure_obfuscation(ts: &TokenStream, cfg: &StaticConfig) -> (ObfuscationMetrics, Option<SignalFinding>) {
    let m = compute_metrics(ts);
    let has_identifiers = ts.tokens.iter().any(|t| t.kind == TokenKind::Identifier);
    let tripped = tripped_conditions(&m, has_identifiers, cfg);
    if tripped.len() < cfg.obfuscation.min_conditions.max(1) {
        return (m, None);
    }
    let mut severity = Severity::Medium;
    let mut note = String::new();
    if has_license_banner(&ts.text, &cfg.license_markers) {
        severity = severity.downgrade();
        note.push_str(" (license banner present)");
    }
    let finding = SignalFinding::new(
        "OBFUSCATION",
        Category::Static,
        severity,
        Evidence::at(&ts.source_path, 0, 1).with_value(tripped.join(",")),
        format!("{} obfuscation indicators{note}", tripped.len()),
    );
    (m, Some(finding))
}
