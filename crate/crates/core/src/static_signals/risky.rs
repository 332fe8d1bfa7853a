//! Install-time redirects, external iframes and links, broad script
//! injection and declarativeNetRequest redirects.

use std::ops::Range;

use serde_json::Value;

use super::html;
use super::tokenizer::{Token, TokenKind, TokenStream};
use super::walk::{called, fold_range, function_body_at, match_close, member_path_ending_at, split_args, Code, ConstEnv, FnIndex};
use crate::finding::{Category, Evidence, Severity, SignalFinding};
use crate::package::ExtensionPackage;
use crate::util;

/// Where an install-time navigation leads.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Target {
    /// A page shipped in the package (normalized path).
    Packaged(String),
    External(String),
    Unresolved(String),
}

fn normalize_local(pkg: &ExtensionPackage, raw: &str) -> Option<String> {
    let s = raw
        .trim()
        .trim_start_matches("chrome-extension://")
        .split(['?', '#'])
        .next()
        .unwrap_or("");
    let s = s.trim_start_matches("./").trim_start_matches('/');
    if pkg.files.contains_key(s) {
        return Some(s.to_string());
    }
    // chrome-extension://<id>/page.html
    let rest = s.split_once('/').map(|(_, r)| r)?;
    pkg.files.contains_key(rest).then(|| rest.to_string())
}

fn classify(pkg: &ExtensionPackage, code: &Code, range: Range<usize>, env: &ConstEnv) -> Target {
    let text = || code[range.clone()].iter().map(|t| t.text.as_str()).collect::<String>();
    if range.is_empty() {
        return Target::Unresolved(String::new());
    }
    // chrome.runtime.getURL("page.html")
    if code[range.start].kind == TokenKind::Identifier {
        if let Some(pos) = range.clone().find(|&k| code[k].is_ident("getURL") && called(code, k)) {
            if let Some(close) = match_close(code, pos + 1) {
                if let Some(v) = fold_range(code, pos + 2..close, env) {
                    if let Some(p) = normalize_local(pkg, &v) {
                        return Target::Packaged(p);
                    }
                }
            }
        }
    }
    match fold_range(code, range.clone(), env) {
        Some(v) if util::parse_http_url(&v).is_some() => Target::External(v),
        Some(v) => match normalize_local(pkg, &v) {
            Some(p) => Target::Packaged(p),
            None => Target::Unresolved(v),
        },
        None => Target::Unresolved(text()),
    }
}

/// Range of the value of `key:` inside an object literal argument.
fn property_value(code: &Code, obj: Range<usize>, key: &str) -> Option<Range<usize>> {
    if !code.get(obj.start)?.is_punct("{") {
        return None;
    }
    let close = match_close(code, obj.start)?;
    split_args(code, obj.start, close).into_iter().find_map(|a| {
        let k = code[a.start];
        let name = k.string_value().unwrap_or_else(|| k.text.clone());
        (name == key && code.get(a.start + 1)?.is_punct(":")).then(|| a.start + 2..a.end)
    })
}

struct Navigation<'a> {
    at: &'a Token,
    api: String,
    target: Target,
}

fn navigations_in<'a>(pkg: &ExtensionPackage, code: &Code<'a>, body: Range<usize>, env: &ConstEnv) -> Vec<Navigation<'a>> {
    let mut out = Vec::new();
    for i in body.clone() {
        let t = code[i];
        if t.kind != TokenKind::Identifier {
            continue;
        }
        let path = member_path_ending_at(code, i);
        let api = path.join(".");
        let tail: Vec<&str> = path.iter().rev().take(2).rev().copied().collect();
        let is_call = called(code, i);
        let target = match (tail.as_slice(), is_call) {
            (["tabs", "create"] | ["windows", "create"] | ["tabs", "update"], true) => {
                let close = match_close(code, i + 1).unwrap_or(body.end);
                let args = split_args(code, i + 1, close);
                let obj = args.into_iter().find(|a| code[a.start].is_punct("{"));
                match obj.and_then(|o| property_value(code, o, "url")) {
                    Some(r) => classify(pkg, code, r, env),
                    None => continue,
                }
            }
            ([_, "open"] | ["open"], true) if path.first().is_some_and(|p| matches!(*p, "window" | "open")) => {
                let close = match_close(code, i + 1).unwrap_or(body.end);
                match split_args(code, i + 1, close).into_iter().next() {
                    Some(r) => classify(pkg, code, r, env),
                    None => continue,
                }
            }
            (["location", "replace" | "assign"], true) => {
                let close = match_close(code, i + 1).unwrap_or(body.end);
                match split_args(code, i + 1, close).into_iter().next() {
                    Some(r) => classify(pkg, code, r, env),
                    None => continue,
                }
            }
            (["location", "href"] | [_, "location"] | ["location"], false)
                if code.get(i + 1).is_some_and(|e| e.is_punct("=")) =>
            {
                let end = super::walk::expr_end(code, i + 2).min(body.end);
                classify(pkg, code, i + 2..end, env)
            }
            _ => continue,
        };
        out.push(Navigation { at: t, api, target });
    }
    out
}

/// Body range of the callback passed to `X.onInstalled.addListener(...)`.
fn listener_bodies(code: &Code, event: &str, fns: &FnIndex, stream: usize) -> Vec<(usize, Range<usize>)> {
    let mut out = Vec::new();
    for i in 0..code.len() {
        if !(code[i].is_ident("addListener") && called(code, i)) {
            continue;
        }
        let path = member_path_ending_at(code, i);
        if path.len() < 2 || path[path.len() - 2] != event {
            continue;
        }
        let Some(close) = match_close(code, i + 1) else { continue };
        let Some(arg) = split_args(code, i + 1, close).into_iter().next() else { continue };
        if let Some(b) = function_body_at(code, arg.start, stream) {
            out.push((i, b.open + 1..b.close));
        } else if code[arg.start].kind == TokenKind::Identifier && arg.len() == 1 {
            if let Some(b) = fns.defs.get(&code[arg.start].text).filter(|b| b.stream == stream) {
                out.push((i, b.open + 1..b.close));
            }
        }
    }
    out
}

fn ev(ts: &TokenStream, t: &Token) -> Evidence {
    Evidence::at(&ts.source_path, t.offset, t.line)
}

fn is_html(path: &str) -> bool {
    let p = path.to_ascii_lowercase();
    p.ends_with(".html") || p.ends_with(".htm")
}

fn dnr_redirect_urls(v: &Value) -> Vec<String> {
    let rules = match v {
        Value::Array(a) => a.clone(),
        Value::Object(o) => o.get("addRules").and_then(Value::as_array).cloned().unwrap_or_default(),
        _ => Vec::new(),
    };
    rules
        .iter()
        .filter_map(|r| r.pointer("/action"))
        .filter(|a| a.get("type").and_then(Value::as_str) == Some("redirect"))
        .filter_map(|a| {
            let red = a.get("redirect")?;
            red.get("url")
                .or_else(|| red.get("regexSubstitution"))
                .and_then(Value::as_str)
                .map(str::to_string)
        })
        .filter(|u| util::parse_http_url(u).is_some())
        .collect()
}

/// Risky API patterns across the whole package. `streams` must hold the
/// token streams of every JS file and inline script.
pub fn detect_risky_api_patterns(pkg: &ExtensionPackage, streams: &[TokenStream]) -> Vec<SignalFinding> {
    let codes: Vec<Vec<&Token>> = streams.iter().map(|s| s.code()).collect();
    let mut env = ConstEnv::default();
    let mut fns = FnIndex::default();
    for (k, code) in codes.iter().enumerate() {
        env.collect(code);
        fns.add_stream(code, k);
    }
    let mut out = Vec::new();

    // Packaged pages that embed an external iframe.
    let mut iframe_pages: Vec<(String, String)> = Vec::new();
    for (path, bytes) in &pkg.files {
        if !is_html(path) {
            continue;
        }
        let text = String::from_utf8_lossy(bytes);
        for tag in html::scan_tags(&text) {
            let (attr, rule, severity) = match tag.name.as_str() {
                "iframe" | "frame" => ("src", "IFRAME_EXTERNAL", Severity::Medium),
                "a" => ("href", "EXTERNAL_LINK_FUNNEL", Severity::Low),
                _ => continue,
            };
            let Some(a) = tag.attr(attr) else { continue };
            let url = a.value.trim();
            if util::parse_http_url(url).is_none() {
                continue;
            }
            let line = util::line_of(bytes, a.offset);
            let message = if rule == "IFRAME_EXTERNAL" {
                iframe_pages.push((path.clone(), url.to_string()));
                format!("{path} frames external content from {url}")
            } else {
                format!("{path} links out to {url}")
            };
            out.push(SignalFinding::new(
                rule,
                Category::Static,
                severity,
                Evidence::at(path, a.offset, line).with_value(url),
                message,
            ));
        }
    }

    for (k, ts) in streams.iter().enumerate() {
        let code = &codes[k];
        for (_, body) in listener_bodies(code, "onInstalled", &fns, k) {
            for nav in navigations_in(pkg, code, body, &env) {
                let (severity, value) = match &nav.target {
                    Target::Packaged(p) => (Severity::Low, p.clone()),
                    Target::External(u) => (Severity::Medium, u.clone()),
                    Target::Unresolved(s) => (Severity::Medium, s.clone()),
                };
                out.push(SignalFinding::new(
                    "ONINSTALLED_REDIRECT",
                    Category::Static,
                    severity,
                    ev(ts, nav.at).with_value(value.clone()),
                    format!("{} opens {value} right after installation", nav.api),
                ));
                if let Target::Packaged(page) = &nav.target {
                    for (_, url) in iframe_pages.iter().filter(|(p, _)| p == page) {
                        out.push(SignalFinding::new(
                            "ONINSTALL_IFRAME_REDIRECT",
                            Category::Static,
                            Severity::High,
                            ev(ts, nav.at).with_value(format!("{page} -> {url}")),
                            format!("install-time tab loads {page}, which frames {url}"),
                        ));
                    }
                }
            }
        }

        for i in 0..code.len() {
            let t = code[i];
            if t.kind != TokenKind::Identifier || !called(code, i) {
                continue;
            }
            let path = member_path_ending_at(code, i);
            match path.as_slice() {
                [.., "scripting" | "tabs", "executeScript"] if pkg.manifest.has_broad_hosts() => {
                    let host = pkg.manifest.first_broad_host().map(|h| h.pattern.clone()).unwrap_or_default();
                    out.push(SignalFinding::new(
                        "EXEC_SCRIPT_BROAD",
                        Category::Static,
                        Severity::Medium,
                        ev(ts, t).with_value(host.clone()),
                        format!("{} can inject code into any page matched by {host}", path.join(".")),
                    ));
                }
                [.., "updateDynamicRules" | "updateSessionRules"] => {
                    let Some(close) = match_close(code, i + 1) else { continue };
                    for j in i + 2..close {
                        let key = code[j];
                        let is_key = (key.is_ident("url") || key.is_ident("regexSubstitution"))
                            && code.get(j + 1).is_some_and(|c| c.is_punct(":"));
                        if !is_key {
                            continue;
                        }
                        let end = super::walk::expr_end(code, j + 2).min(close);
                        let end = (j + 2..end)
                            .find(|&e| code[e].is_punct(",") || code[e].is_punct("}"))
                            .unwrap_or(end);
                        let Some(url) = fold_range(code, j + 2..end, &env) else { continue };
                        if util::parse_http_url(&url).is_some() {
                            out.push(SignalFinding::new(
                                "DNR_DYNAMIC_RULES",
                                Category::Static,
                                Severity::High,
                                ev(ts, key).with_value(url.clone()),
                                format!("{} installs a redirect to {url}", path.join(".")),
                            ));
                        }
                    }
                }
                _ => {}
            }
        }
    }

    for rules_path in &pkg.manifest.dnr_rule_paths {
        let Some(bytes) = pkg.files.get(rules_path) else { continue };
        let Ok(v) = serde_json::from_slice::<Value>(bytes) else { continue };
        let text = String::from_utf8_lossy(bytes);
        for url in dnr_redirect_urls(&v) {
            let offset = text.find(&url).unwrap_or(0);
            out.push(SignalFinding::new(
                "DNR_DYNAMIC_RULES",
                Category::Static,
                Severity::High,
                Evidence::at(rules_path, offset, util::line_of(bytes, offset)).with_value(url.clone()),
                format!("static ruleset redirects traffic to {url}"),
            ));
        }
    }

    out
}
