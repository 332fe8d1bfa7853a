use std::collections::BTreeSet;
use std::sync::OnceLock;

use regex::Regex;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::html;
use super::tokenizer::{Token, TokenKind, TokenStream};
use super::walk::{fold_string, member_path_ending_at, Code, ConstEnv};
use crate::manifest::MANIFEST_PATH;
use crate::package::ExtensionPackage;
use crate::util;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EndpointContext {
    FetchArg,
    ConfigLiteral,
    HtmlAttr,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Endpoint {
    pub url_or_host: String,
    pub path: String,
    pub offset: usize,
    pub context: EndpointContext,
}

impl Endpoint {
    /// Lowercased host, for URLs and bare domains alike.
    pub fn host(&self) -> Option<String> {
        util::http_host(&self.url_or_host).or_else(|| {
            is_bare_domain(&self.url_or_host).then(|| self.url_or_host.to_ascii_lowercase())
        })
    }
}

const TLDS: &[&str] = &[
    "ai", "app", "biz", "cc", "cloud", "club", "cn", "co", "com", "de", "dev", "email", "eu", "fr", "fun", "icu",
    "info", "io", "live", "me", "net", "online", "org", "pro", "pw", "ru", "shop", "site", "space", "store",
    "tech", "top", "tv", "uk", "uno", "us", "website", "xyz",
];

fn url_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r#"(?i)https?://[^\s"'<>`\\)]+"#).unwrap())
}

fn domain_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"^(?i)(?:[a-z0-9](?:[a-z0-9-]{0,61}[a-z0-9])?\.)+([a-z]{2,12})$").unwrap())
}

pub(crate) fn is_bare_domain(s: &str) -> bool {
    domain_re()
        .captures(s)
        .is_some_and(|c| TLDS.contains(&c[1].to_ascii_lowercase().as_str()))
}

/// Endpoint strings contained in one literal value.
fn candidates(value: &str) -> Vec<String> {
    let v = value.trim();
    if util::parse_http_url(v).is_some() && !v.contains(char::is_whitespace) {
        return vec![v.to_string()];
    }
    if is_bare_domain(v) {
        return vec![v.to_ascii_lowercase()];
    }
    url_re()
        .find_iter(v)
        .map(|m| m.as_str().to_string())
        .filter(|u| util::parse_http_url(u).is_some())
        .collect()
}

/// Literal prefix of an unresolved template when it already names a host.
fn template_prefix(t: &Token) -> Option<String> {
    let first = t.template_exprs.first()?;
    let prefix = t.text.get(1..first.offset.checked_sub(2)? - t.offset)?;
    let host_end = prefix.find("://").map(|i| i + 3)?;
    prefix[host_end..].contains('/').then(|| prefix.trim_end_matches('/').to_string())
}

fn is_sink_call(code: &Code, open: usize) -> bool {
    if open == 0 || !code[open].is_punct("(") {
        return false;
    }
    let path = member_path_ending_at(code, open - 1);
    matches!(
        path.last().copied(),
        Some("fetch" | "sendBeacon" | "importScripts" | "ajax" | "get" | "post")
    ) || path == ["axios"]
}

fn context_for(code: &Code, start: usize) -> EndpointContext {
    let Some(prev) = start.checked_sub(1).map(|p| code[p]) else {
        return EndpointContext::Other;
    };
    if prev.is_punct("(") && is_sink_call(code, start - 1) {
        return EndpointContext::FetchArg;
    }
    // xhr.open("POST", url)
    if prev.is_punct(",") && start >= 3 && code[start - 3].is_punct("(") && start >= 4 && code[start - 4].is_ident("open") {
        return EndpointContext::FetchArg;
    }
    if prev.is_punct(":") || (prev.is_punct("=") && start >= 3 && code[start - 3].kind == TokenKind::Keyword) {
        return EndpointContext::ConfigLiteral;
    }
    EndpointContext::Other
}

fn from_stream(ts: &TokenStream, env: &ConstEnv, out: &mut Vec<Endpoint>) {
    let code = ts.code();
    let mut i = 0;
    while i < code.len() {
        let t = code[i];
        let mut push = |value: &str, ctx| {
            for c in candidates(value) {
                out.push(Endpoint {
                    url_or_host: c,
                    path: ts.source_path.clone(),
                    offset: t.offset,
                    context: ctx,
                });
            }
        };
        match t.kind {
            TokenKind::StringLiteral | TokenKind::TemplateLiteral => {
                let ctx = context_for(&code, i);
                if let Some((value, next)) = fold_string(&code, i, env) {
                    push(&value, ctx);
                    i = next.max(i + 1);
                    continue;
                }
                if let Some(prefix) = template_prefix(t) {
                    push(&prefix, ctx);
                }
            }
            TokenKind::Identifier if i > 0 && context_for(&code, i) != EndpointContext::Other => {
                // fetch(CONFIG.ENDPOINTS.X), { api: BASE + "/x" }
                if let Some((value, next)) = fold_string(&code, i, env) {
                    push(&value, context_for(&code, i));
                    i = next.max(i + 1);
                    continue;
                }
            }
            _ => {}
        }
        i += 1;
    }
}

const URL_ATTRS: &[&str] = &["src", "href", "action", "formaction", "data", "poster"];

fn from_html(path: &str, text: &str, out: &mut Vec<Endpoint>) {
    for tag in html::scan_tags(text) {
        for a in &tag.attrs {
            if URL_ATTRS.contains(&a.name.as_str()) && util::parse_http_url(a.value.trim()).is_some() {
                out.push(Endpoint {
                    url_or_host: a.value.trim().to_string(),
                    path: path.to_string(),
                    offset: a.offset,
                    context: EndpointContext::HtmlAttr,
                });
            }
        }
    }
}

fn from_manifest(raw: &Value, bytes: &[u8], out: &mut Vec<Endpoint>) {
    fn walk(v: &Value, acc: &mut Vec<String>) {
        match v {
            Value::String(s) => acc.push(s.clone()),
            Value::Array(a) => a.iter().for_each(|x| walk(x, acc)),
            Value::Object(o) => o.values().for_each(|x| walk(x, acc)),
            _ => {}
        }
    }
    let mut strings = Vec::new();
    walk(raw, &mut strings);
    let text = String::from_utf8_lossy(bytes);
    for s in strings {
        if s.contains('*') {
            continue;
        }
        for c in candidates(&s) {
            if util::parse_http_url(&c).is_none() {
                continue;
            }
            let offset = text.find(&c).unwrap_or(0);
            out.push(Endpoint {
                url_or_host: c,
                path: MANIFEST_PATH.to_string(),
                offset,
                context: EndpointContext::Other,
            });
        }
    }
}

/// Collects URLs and domain-looking literals from JS (including inline
/// scripts), HTML attributes and the manifest. One entry per
/// (url, context), keeping the first location in path order.
pub fn extract_endpoints(pkg: &ExtensionPackage, streams: &[TokenStream]) -> Vec<Endpoint> {
    let mut env = ConstEnv::default();
    let codes: Vec<Vec<&Token>> = streams.iter().map(|s| s.code()).collect();
    for code in &codes {
        env.collect(code);
    }
    let mut all = Vec::new();
    for ts in streams {
        from_stream(ts, &env, &mut all);
    }
    for (path, bytes) in &pkg.files {
        let lower = path.to_ascii_lowercase();
        if lower.ends_with(".html") || lower.ends_with(".htm") {
            from_html(path, &String::from_utf8_lossy(bytes), &mut all);
        }
    }
    if let Some(bytes) = pkg.files.get(MANIFEST_PATH) {
        from_manifest(&pkg.manifest.raw, bytes, &mut all);
    }
    all.sort_by(|a, b| (&a.path, a.offset, &a.url_or_host, a.context).cmp(&(&b.path, b.offset, &b.url_or_host, b.context)));
    let mut seen = BTreeSet::new();
    all.retain(|e| seen.insert((e.url_or_host.clone(), e.context)));
    all
}
