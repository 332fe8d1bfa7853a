//! Recorded network logs and the behavioural detectors that run on them.

use std::collections::{BTreeMap, BTreeSet};

use chrono::NaiveDate;
use regex::Regex;
use serde::{Deserialize, Serialize};
use url::Url;

use crate::config::NetlogConfig;
use crate::finding::{Category, Evidence, Severity, SignalFinding};
use crate::intel::{DomainFlag, DomainIntel};
use crate::static_signals::Endpoint;
use crate::util;

#[derive(Debug, thiserror::Error)]
pub enum NetlogError {
    #[error("traffic log contains no events")]
    EmptyLog,
    #[error("observation window {window_ms} ms is shorter than the required {required_ms} ms")]
    WindowTooShort { window_ms: i64, required_ms: i64 },
    #[error("HAR document: {0}")]
    Har(String),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Initiator {
    ContentScript,
    Background,
    Popup,
    Page,
    #[default]
    Unknown,
}

impl Initiator {
    pub fn is_extension(self) -> bool {
        matches!(self, Initiator::ContentScript | Initiator::Background | Initiator::Popup)
    }
}

/// One request/response pair. Field names on the wire follow the JSONL
/// log schema (`ts`, `location`, `body`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetworkEvent {
    #[serde(rename = "ts")]
    pub timestamp: i64,
    pub method: String,
    pub url: String,
    #[serde(default)]
    pub status: Option<u16>,
    #[serde(rename = "location", default)]
    pub redirect_location: Option<String>,
    #[serde(default)]
    pub initiator: Initiator,
    #[serde(rename = "body", default)]
    pub request_body_excerpt: Option<String>,
    #[serde(default)]
    pub headers: BTreeMap<String, String>,
}

impl NetworkEvent {
    pub fn host(&self) -> Option<String> {
        util::http_host(&self.url)
    }

    pub fn is_redirect(&self) -> bool {
        self.status.is_some_and(|s| (300..400).contains(&s)) && self.redirect_location.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogDiagnostic {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrafficLog {
    pub extension_id: Option<String>,
    pub events: Vec<NetworkEvent>,
    pub diagnostics: Vec<LogDiagnostic>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RedirectChain {
    pub hops: Vec<NetworkEvent>,
    pub origin_query: Option<String>,
}

/// Lowercase scheme and host, default port dropped.
pub fn normalize_url(s: &str) -> Option<String> {
    let u = Url::parse(s.trim()).ok()?;
    matches!(u.scheme(), "http" | "https").then(|| u.to_string())
}

fn truncate(s: &str, max: usize) -> String {
    if s.len() <= max {
        return s.to_string();
    }
    let cut = (0..=max).rev().find(|&i| s.is_char_boundary(i)).unwrap_or(0);
    s[..cut].to_string()
}

fn validate(mut e: NetworkEvent, cfg: &NetlogConfig) -> Result<NetworkEvent, String> {
    let url = Url::parse(&e.url).map_err(|err| format!("url {:?}: {err}", e.url))?;
    if !matches!(url.scheme(), "http" | "https") || url.host_str().is_none() {
        return Err(format!("url {:?} is not an absolute http(s) URL", e.url));
    }
    if let Some(loc) = e.redirect_location.take() {
        if !e.status.is_some_and(|s| (300..400).contains(&s)) {
            return Err(format!("location present with status {:?}", e.status));
        }
        // Relative Location headers resolve against the request URL.
        let abs = url.join(&loc).map_err(|err| format!("location {loc:?}: {err}"))?;
        e.redirect_location = Some(abs.to_string());
    }
    e.method = e.method.to_ascii_uppercase();
    e.request_body_excerpt = e.request_body_excerpt.map(|b| truncate(&b, cfg.body_excerpt_bytes));
    Ok(e)
}

fn finish(mut events: Vec<NetworkEvent>, diagnostics: Vec<LogDiagnostic>) -> Result<TrafficLog, NetlogError> {
    if events.is_empty() {
        return Err(NetlogError::EmptyLog);
    }
    events.sort_by_key(|e| e.timestamp);
    Ok(TrafficLog {
        extension_id: None,
        events,
        diagnostics,
    })
}

/// Parses newline-delimited JSON events. Bad lines become diagnostics.
pub fn parse_traffic_log(bytes: &[u8], cfg: &NetlogConfig) -> Result<TrafficLog, NetlogError> {
    let text = String::from_utf8_lossy(bytes);
    let mut events = Vec::new();
    let mut diagnostics = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let parsed = serde_json::from_str::<NetworkEvent>(line)
            .map_err(|e| e.to_string())
            .and_then(|e| validate(e, cfg));
        match parsed {
            Ok(e) => events.push(e),
            Err(message) => diagnostics.push(LogDiagnostic { line: i + 1, message }),
        }
    }
    finish(events, diagnostics)
}

#[derive(Deserialize)]
struct Har {
    log: HarLog,
}

#[derive(Deserialize)]
struct HarLog {
    entries: Vec<HarEntry>,
}

#[derive(Deserialize)]
#[serde(rename_all = "camelCase")]
struct HarEntry {
    started_date_time: String,
    request: HarRequest,
    response: Option<HarResponse>,
}

#[derive(Deserialize)]
#[serde(rename_all = "camelCase")]
struct HarRequest {
    method: String,
    url: String,
    #[serde(default)]
    headers: Vec<HarHeader>,
    post_data: Option<HarPostData>,
}

#[derive(Deserialize)]
struct HarHeader {
    name: String,
    value: String,
}

#[derive(Deserialize)]
struct HarPostData {
    text: Option<String>,
}

#[derive(Deserialize)]
#[serde(rename_all = "camelCase")]
struct HarResponse {
    status: i64,
    #[serde(default, rename = "redirectURL")]
    redirect_url: String,
}

/// Converts a HAR document. HAR carries no extension attribution, so
/// every event gets initiator `unknown`.
pub fn parse_har(bytes: &[u8], cfg: &NetlogConfig) -> Result<TrafficLog, NetlogError> {
    let har: Har = serde_json::from_slice(bytes).map_err(|e| NetlogError::Har(e.to_string()))?;
    let mut events = Vec::new();
    let mut diagnostics = Vec::new();
    for (i, entry) in har.log.entries.into_iter().enumerate() {
        let ts = match chrono::DateTime::parse_from_rfc3339(&entry.started_date_time) {
            Ok(t) => t.timestamp_millis(),
            Err(e) => {
                diagnostics.push(LogDiagnostic {
                    line: i + 1,
                    message: format!("startedDateTime: {e}"),
                });
                continue;
            }
        };
        let status = entry.response.as_ref().and_then(|r| u16::try_from(r.status).ok()).filter(|&s| s != 0);
        let location = entry
            .response
            .as_ref()
            .map(|r| r.redirect_url.clone())
            .filter(|l| !l.is_empty() && status.is_some_and(|s| (300..400).contains(&s)));
        let e = NetworkEvent {
            timestamp: ts,
            method: entry.request.method,
            url: entry.request.url,
            status,
            redirect_location: location,
            initiator: Initiator::Unknown,
            request_body_excerpt: entry.request.post_data.and_then(|p| p.text),
            headers: entry.request.headers.into_iter().map(|h| (h.name.to_ascii_lowercase(), h.value)).collect(),
        };
        match validate(e, cfg) {
            Ok(e) => events.push(e),
            Err(message) => diagnostics.push(LogDiagnostic { line: i + 1, message }),
        }
    }
    finish(events, diagnostics)
}

/// Index of the event each redirect leads to: the first later event
/// whose normalized URL equals the normalized Location, each target
/// used at most once.
pub fn link_redirects(log: &TrafficLog) -> Vec<Option<usize>> {
    let norm: Vec<Option<String>> = log.events.iter().map(|e| normalize_url(&e.url)).collect();
    let mut next = vec![None; log.events.len()];
    let mut taken = vec![false; log.events.len()];
    for (i, e) in log.events.iter().enumerate() {
        if !e.is_redirect() {
            continue;
        }
        let Some(target) = e.redirect_location.as_deref().and_then(normalize_url) else { continue };
        if let Some(j) = (i + 1..log.events.len()).find(|&j| !taken[j] && norm[j].as_deref() == Some(target.as_str())) {
            taken[j] = true;
            next[i] = Some(j);
        }
    }
    next
}

/// All maximal redirect chains (length ≥ 2) as index lists.
pub fn redirect_chains(log: &TrafficLog) -> Vec<Vec<usize>> {
    let next = link_redirects(log);
    let mut has_pred = vec![false; next.len()];
    for j in next.iter().flatten() {
        has_pred[*j] = true;
    }
    let mut out = Vec::new();
    for start in 0..next.len() {
        if has_pred[start] || next[start].is_none() {
            continue;
        }
        let mut chain = vec![start];
        let mut cur = start;
        while let Some(j) = next[cur] {
            chain.push(j);
            cur = j;
        }
        out.push(chain);
    }
    out
}

/// Value of the first configured query parameter present in `url`.
pub fn intercepted_query(url: &str, params: &[String]) -> Option<String> {
    let u = Url::parse(url).ok()?;
    let pairs: Vec<(String, String)> = u.query_pairs().map(|(k, v)| (k.into_owned(), v.into_owned())).collect();
    params
        .iter()
        .find_map(|p| pairs.iter().find(|(k, v)| k == p && !v.is_empty()).map(|(_, v)| v.clone()))
}

fn log_evidence(index: usize, value: String) -> Evidence {
    Evidence {
        path: Some("netlog".into()),
        offset: Some(index),
        value: Some(value),
        ..Default::default()
    }
}

/// Redirect chains that start off-provider with a user query and land on
/// an allowlisted search or AI provider.
pub fn detect_hijack_chains(log: &TrafficLog, cfg: &NetlogConfig) -> Vec<(RedirectChain, SignalFinding)> {
    let mut out = Vec::new();
    for idx in redirect_chains(log) {
        let first = &log.events[idx[0]];
        let last = &log.events[*idx.last().expect("chains are non-empty")];
        let (Some(h0), Some(hn)) = (first.host(), last.host()) else { continue };
        if util::host_in_list(&h0, &cfg.provider_allowlist) || !util::host_in_list(&hn, &cfg.provider_allowlist) {
            continue;
        }
        let Some(q) = intercepted_query(&first.url, &cfg.query_params) else { continue };
        let hosts: Vec<String> = idx.iter().filter_map(|&i| log.events[i].host()).collect();
        let finding = SignalFinding::new(
            "QUERY_HIJACK",
            Category::Behavioural,
            Severity::High,
            log_evidence(idx[0], q.clone()),
            format!("query {q:?} routed through {} before reaching {hn}", hosts.join(" -> ")),
        );
        let chain = RedirectChain {
            hops: idx.iter().map(|&i| log.events[i].clone()).collect(),
            origin_query: Some(q),
        };
        out.push((chain, finding));
    }
    out
}

/// Names of sensitive-content patterns matching `body`.
pub fn sensitive_matches(body: &str, cfg: &NetlogConfig) -> Vec<String> {
    cfg.sensitive_patterns
        .iter()
        .filter(|p| {
            Regex::new(&p.pattern)
                .map(|re| re.find_iter(body).count() >= p.min_matches.max(1))
                .unwrap_or(false)
        })
        .map(|p| p.name.clone())
        .collect()
}

/// Writes carrying sensitive-looking content to non-allowlisted hosts.
pub fn detect_exfiltration(
    log: &TrafficLog,
    pkg_endpoints: &[Endpoint],
    intel: Option<&DomainIntel>,
    as_of: NaiveDate,
    cfg: &NetlogConfig,
) -> Vec<SignalFinding> {
    let pkg_hosts: BTreeSet<String> = pkg_endpoints.iter().filter_map(Endpoint::host).collect();
    let mut out = Vec::new();
    for (i, e) in log.events.iter().enumerate() {
        if !matches!(e.method.as_str(), "POST" | "PUT" | "PATCH") {
            continue;
        }
        let (Some(body), Some(host)) = (e.request_body_excerpt.as_deref(), e.host()) else { continue };
        if util::host_in_list(&host, &cfg.exfil_allowlist) {
            continue;
        }
        let verdict = intel.and_then(|d| d.lookup(&host, as_of).ok());
        if verdict.as_ref().is_some_and(|v| v.has(DomainFlag::Allowlisted)) {
            continue;
        }
        let matched = sensitive_matches(body, cfg);
        if matched.is_empty() {
            continue;
        }
        let flagged = verdict
            .as_ref()
            .is_some_and(|v| v.has(DomainFlag::Nrd) || v.has(DomainFlag::Blocklisted));
        let severity = if flagged { Severity::Critical } else { Severity::High };
        let mut message = format!("{} to {host} carries {}", e.method, matched.join(", "));
        if pkg_hosts.contains(&host) {
            message.push_str("; host is referenced by the package");
        }
        if flagged {
            message.push_str("; host is flagged by domain intel");
        }
        out.push(SignalFinding::new(
            "EXFIL_POST",
            Category::Network,
            severity,
            log_evidence(i, format!("{host}: {}", matched.join(","))),
            message,
        ));
    }
    out
}

/// Initiator of the chain that led to each event.
fn effective_initiators(log: &TrafficLog) -> Vec<Initiator> {
    let next = link_redirects(log);
    let mut init: Vec<Initiator> = log.events.iter().map(|e| e.initiator).collect();
    for i in 0..next.len() {
        if let Some(j) = next[i] {
            if init[i].is_extension() || init[j] == Initiator::Unknown {
                init[j] = init[i];
            }
        }
    }
    init
}

/// Navigations carrying paid-acquisition markers.
pub fn detect_affiliate_fraud(log: &TrafficLog, cfg: &NetlogConfig) -> Vec<SignalFinding> {
    let init = effective_initiators(log);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (i, e) in log.events.iter().enumerate() {
        let Ok(u) = Url::parse(&e.url) else { continue };
        let pairs: Vec<(String, String)> = u.query_pairs().map(|(k, v)| (k.into_owned(), v.into_owned())).collect();
        let hit = cfg
            .affiliate_markers
            .iter()
            .any(|m| pairs.iter().any(|(k, v)| k == &m.param && v.eq_ignore_ascii_case(&m.value)));
        if !hit || !seen.insert(e.url.clone()) {
            continue;
        }
        let source = pairs.iter().find(|(k, _)| k == "utm_source").map(|(_, v)| v.clone()).unwrap_or_default();
        let severity = if init[i] == Initiator::Page { Severity::Info } else { Severity::Medium };
        out.push(SignalFinding::new(
            "AFFILIATE_PA",
            Category::Behavioural,
            severity,
            log_evidence(i, source.clone()),
            format!(
                "paid-acquisition link to {} (utm_source={source}) opened by {:?} initiator",
                e.host().unwrap_or_default(),
                init[i]
            ),
        ));
    }
    out
}

/// Population coefficient of variation; None for fewer than one value or
/// a zero mean.
pub fn coefficient_of_variation(xs: &[f64]) -> Option<f64> {
    if xs.is_empty() {
        return None;
    }
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if mean <= 0.0 {
        return None;
    }
    let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / n;
    Some(var.sqrt() / mean)
}

/// Span between the first and last event.
pub fn observation_window_ms(log: &TrafficLog) -> i64 {
    match (log.events.first(), log.events.last()) {
        (Some(a), Some(b)) => b.timestamp - a.timestamp,
        _ => 0,
    }
}

/// Informational check that the log covers the configured window.
pub fn check_window(log: &TrafficLog, cfg: &NetlogConfig) -> Result<(), NetlogError> {
    let window_ms = observation_window_ms(log);
    if window_ms < cfg.beacon.min_window_ms {
        return Err(NetlogError::WindowTooShort {
            window_ms,
            required_ms: cfg.beacon.min_window_ms,
        });
    }
    Ok(())
}

/// Regular requests to one (host, path).
pub fn detect_beaconing(log: &TrafficLog, cfg: &NetlogConfig) -> Vec<SignalFinding> {
    let mut groups: BTreeMap<(String, String), Vec<(usize, i64)>> = BTreeMap::new();
    for (i, e) in log.events.iter().enumerate() {
        let Ok(u) = Url::parse(&e.url) else { continue };
        let Some(host) = u.host_str() else { continue };
        groups
            .entry((host.to_ascii_lowercase(), u.path().to_string()))
            .or_default()
            .push((i, e.timestamp));
    }
    let mut out = Vec::new();
    for ((host, path), mut hits) in groups {
        if hits.len() < cfg.beacon.min_requests || util::host_in_list(&host, &cfg.beacon.telemetry_allowlist) {
            continue;
        }
        hits.sort_by_key(|h| h.1);
        let gaps: Vec<f64> = hits.windows(2).map(|w| (w[1].1 - w[0].1) as f64).collect();
        let Some(cv) = coefficient_of_variation(&gaps) else { continue };
        if cv >= cfg.beacon.max_cv {
            continue;
        }
        let mean = gaps.iter().sum::<f64>() / gaps.len() as f64;
        out.push(SignalFinding::new(
            "C2_BEACON",
            Category::Network,
            Severity::Medium,
            log_evidence(hits[0].0, format!("{host}{path}")),
            format!(
                "{} requests to {host}{path} every {:.0} ms (cv {cv:.3})",
                hits.len(),
                mean
            ),
        ));
    }
    out
}

/// Output of every netlog detector over one log.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct NetlogScan {
    pub findings: Vec<SignalFinding>,
    pub chains: Vec<RedirectChain>,
    pub warnings: Vec<String>,
}

pub fn scan_traffic(
    log: &TrafficLog,
    pkg_endpoints: &[Endpoint],
    intel: Option<&DomainIntel>,
    as_of: NaiveDate,
    cfg: &NetlogConfig,
) -> NetlogScan {
    let mut scan = NetlogScan::default();
    for (chain, f) in detect_hijack_chains(log, cfg) {
        scan.chains.push(chain);
        scan.findings.push(f);
    }
    scan.findings.extend(detect_exfiltration(log, pkg_endpoints, intel, as_of, cfg));
    scan.findings.extend(detect_affiliate_fraud(log, cfg));
    if let Err(e) = check_window(log, cfg) {
        scan.warnings.push(e.to_string());
    }
    scan.findings.extend(detect_beaconing(log, cfg));
    scan.warnings.extend(log.diagnostics.iter().map(|d| format!("netlog line {}: {}", d.line, d.message)));
    crate::finding::sort_canonical(&mut scan.findings);
    scan
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> NetlogConfig {
        NetlogConfig::default()
    }

    fn log(lines: &[&str]) -> TrafficLog {
        parse_traffic_log(lines.join("\n").as_bytes(), &cfg()).unwrap()
    }

    #[test]
    fn reorders_and_collects_diagnostics() {
        let l = log(&[
            r#"{"ts":20,"method":"GET","url":"https://b.com/","status":200,"location":null,"initiator":"page","body":null,"headers":{}}"#,
            r#"{"ts":10,"method":"GET","url":"https://a.com/","status":200,"location":null,"initiator":"page","body":null,"headers":{}}"#,
            r#"{"ts":"x"}"#,
        ]);
        assert_eq!(l.events.len(), 2);
        assert_eq!(l.events[0].url, "https://a.com/");
        assert_eq!(l.diagnostics.len(), 1);
        assert_eq!(l.diagnostics[0].line, 3);
        assert!(matches!(parse_traffic_log(b"\n", &cfg()), Err(NetlogError::EmptyLog)));
    }

    #[test]
    fn prompt_hijack_chain() {
        let l = log(&[
            r#"{"ts":1,"method":"GET","url":"https://dinershtein.com/perplexity.html?q=my+prompt","status":301,"location":"https://perplexity.ai/search/new?q=my+prompt","initiator":"background"}"#,
            r#"{"ts":2,"method":"GET","url":"https://perplexity.ai/search/new?q=my+prompt","status":200,"initiator":"background"}"#,
        ]);
        let out = detect_hijack_chains(&l, &cfg());
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].0.origin_query.as_deref(), Some("my prompt"));
        assert_eq!(out[0].1.rule_id, "QUERY_HIJACK");

        let direct = log(&[r#"{"ts":1,"method":"GET","url":"https://perplexity.ai/search?q=x","status":200}"#]);
        assert!(detect_hijack_chains(&direct, &cfg()).is_empty());
    }

    #[test]
    fn location_requires_redirect_status() {
        let l = log(&[
            r#"{"ts":1,"method":"GET","url":"https://a.com/","status":200,"location":"https://b.com/"}"#,
            r#"{"ts":2,"method":"GET","url":"https://b.com/","status":200}"#,
        ]);
        assert_eq!(l.events.len(), 1);
        assert_eq!(l.diagnostics.len(), 1);
    }

    #[test]
    fn affiliate_marker_and_initiator() {
        let url = "https://game.example/?x=1&utm_medium=pa&utm_source=PWNgames";
        let bg = log(&[&format!(r#"{{"ts":1,"method":"GET","url":"{url}","status":200,"initiator":"background"}}"#)]);
        let f = detect_affiliate_fraud(&bg, &cfg());
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].severity, Severity::Medium);
        assert_eq!(f[0].evidence.value.as_deref(), Some("PWNgames"));
        let page = log(&[&format!(r#"{{"ts":1,"method":"GET","url":"{url}","status":200,"initiator":"page"}}"#)]);
        assert_eq!(detect_affiliate_fraud(&page, &cfg())[0].severity, Severity::Info);
        let email = log(&[r#"{"ts":1,"method":"GET","url":"https://x.com/?utm_medium=email","status":200,"initiator":"background"}"#]);
        assert!(detect_affiliate_fraud(&email, &cfg()).is_empty());
    }

    fn gets(times: &[i64]) -> TrafficLog {
        let lines: Vec<String> = times
            .iter()
            .map(|t| format!(r#"{{"ts":{t},"method":"GET","url":"https://c2.example/p","status":200,"initiator":"background"}}"#))
            .collect();
        parse_traffic_log(lines.join("\n").as_bytes(), &cfg()).unwrap()
    }

    #[test]
    fn beaconing() {
        let regular: Vec<i64> = (0..6).map(|k| k * 60_000).collect();
        assert_eq!(detect_beaconing(&gets(&regular), &cfg()).len(), 1);
        let mut t = 0;
        let mut irregular = vec![0];
        for gap in [1_000, 600_000, 2_000, 300_000, 30_000] {
            t += gap;
            irregular.push(t);
        }
        assert!(detect_beaconing(&gets(&irregular), &cfg()).is_empty());
        assert!(detect_beaconing(&gets(&[0, 60_000]), &cfg()).is_empty());
    }

    #[test]
    fn cv_of_constant_intervals_is_zero() {
        assert_eq!(coefficient_of_variation(&[60_000.0; 5]), Some(0.0));
    }

    #[test]
    fn har_import_sets_unknown_initiator() {
        let har = r#"{"log":{"entries":[{"startedDateTime":"2025-01-01T00:00:00Z","request":{"method":"GET","url":"https://a.com/","headers":[]},"response":{"status":302,"redirectURL":"/b"}}]}}"#;
        let l = parse_har(har.as_bytes(), &cfg()).unwrap();
        assert_eq!(l.events[0].initiator, Initiator::Unknown);
        assert_eq!(l.events[0].redirect_location.as_deref(), Some("https://a.com/b"));
    }
}
