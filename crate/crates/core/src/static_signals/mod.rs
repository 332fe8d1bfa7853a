//! Static JavaScript/HTML signals.
//!
//! Everything here runs on token windows rather than a syntax tree, so
//! malformed or obfuscated input degrades gracefully instead of failing.

mod codegen;
mod endpoints;
pub(crate) mod html;
mod messages;
mod obfuscation;
mod risky;
mod tokenizer;
pub(crate) mod walk;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use codegen::{detect_dynamic_code, detect_remote_code_fetch};
pub use endpoints::{extract_endpoints, Endpoint, EndpointContext};
pub use messages::{correlate_message_flows, CodeLocation, MessageFlow, Sink, SinkKind};
pub use obfuscation::{compute_metrics, count_base64_blobs, measure_obfuscation, shannon_entropy, ObfuscationMetrics};
pub use risky::detect_risky_api_patterns;
pub use tokenizer::{is_keyword, tokenize_js, tokenize_js_at, Diagnostic, Span, Token, TokenKind, TokenStream};

use crate::config::StaticConfig;
use crate::finding::SignalFinding;
use crate::package::ExtensionPackage;
use crate::util;

pub fn is_js_path(path: &str) -> bool {
    let p = path.to_ascii_lowercase();
    p.ends_with(".js") || p.ends_with(".mjs") || p.ends_with(".cjs")
}

pub fn is_html_path(path: &str) -> bool {
    let p = path.to_ascii_lowercase();
    p.ends_with(".html") || p.ends_with(".htm")
}

/// Token streams for every script in a package: one per JS file and one
/// per inline `<script>` block, ordered by (path, offset).
#[derive(Debug, Clone)]
pub struct PackageAnalysis {
    pub streams: Vec<TokenStream>,
}

impl PackageAnalysis {
    pub fn new(pkg: &ExtensionPackage) -> Self {
        let files: Vec<(&String, &Vec<u8>)> = pkg
            .files
            .iter()
            .filter(|(p, _)| is_js_path(p) || is_html_path(p))
            .collect();
        let streams = files
            .par_iter()
            .map(|(path, bytes)| {
                if is_js_path(path) {
                    return vec![tokenize_js(bytes, path)];
                }
                let text = String::from_utf8_lossy(bytes);
                html::inline_scripts(&text)
                    .into_iter()
                    .map(|s| {
                        tokenize_js_at(s.body.as_bytes(), path, s.offset, util::line_of(bytes, s.offset), bytes.len())
                    })
                    .collect()
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect();
        PackageAnalysis { streams }
    }

    /// Stream of a standalone JS file.
    pub fn file(&self, path: &str) -> Option<&TokenStream> {
        self.streams.iter().find(|s| s.source_path == path && is_js_path(path))
    }
}

/// Everything the static pass produces for one package.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StaticScan {
    pub findings: Vec<SignalFinding>,
    pub flows: Vec<MessageFlow>,
    pub endpoints: Vec<Endpoint>,
    pub obfuscation: BTreeMap<String, ObfuscationMetrics>,
}

/// Runs the per-file detectors concurrently, then the package-wide ones.
pub fn scan_static(pkg: &ExtensionPackage, analysis: &PackageAnalysis, cfg: &StaticConfig) -> StaticScan {
    let mv = pkg.manifest.manifest_version;
    let per_file: Vec<(Vec<SignalFinding>, Option<(String, ObfuscationMetrics)>)> = analysis
        .streams
        .par_iter()
        .map(|ts| {
            let mut f = detect_dynamic_code(ts, mv);
            f.extend(detect_remote_code_fetch(ts));
            let metrics = if is_js_path(&ts.source_path) {
                let (m, finding) = measure_obfuscation(ts, cfg);
                f.extend(finding);
                Some((ts.source_path.clone(), m))
            } else {
                None
            };
            (f, metrics)
        })
        .collect();

    let mut findings = Vec::new();
    let mut obfuscation = BTreeMap::new();
    for (f, m) in per_file {
        findings.extend(f);
        if let Some((p, m)) = m {
            obfuscation.insert(p, m);
        }
    }
    findings.extend(detect_risky_api_patterns(pkg, &analysis.streams));
    let (flows, flow_findings) = correlate_message_flows(pkg, &analysis.streams, cfg);
    findings.extend(flow_findings);
    crate::finding::sort_canonical(&mut findings);
    StaticScan {
        findings,
        flows,
        endpoints: extract_endpoints(pkg, &analysis.streams),
        obfuscation,
    }
}
