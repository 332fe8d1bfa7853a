//! Content script to background message flows that end in a network sink.

use std::collections::{BTreeSet, HashSet};
use std::ops::Range;

use serde::{Deserialize, Serialize};

use super::tokenizer::{Token, TokenKind, TokenStream};
use super::walk::{
    called, fold_range, fold_string, function_body_at, global_call, is_member, match_close, member_path_ending_at,
    split_args, Code, ConstEnv, FnIndex,
};
use crate::config::StaticConfig;
use crate::manifest::Background;
use crate::finding::{Category, Evidence, Severity, SignalFinding};
use crate::package::ExtensionPackage;
use crate::util;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CodeLocation {
    pub path: String,
    pub offset: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum SinkKind {
    Fetch,
    Xhr,
    SendBeacon,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Sink {
    pub kind: SinkKind,
    pub url_literal: Option<String>,
    pub path: String,
    pub offset: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MessageFlow {
    pub action_key: String,
    pub sender: CodeLocation,
    pub receiver: CodeLocation,
    pub sink: Option<Sink>,
}

impl MessageFlow {
    /// True when the sink posts to an absolute http(s) URL.
    pub fn is_external(&self) -> bool {
        self.sink
            .as_ref()
            .and_then(|s| s.url_literal.as_deref())
            .is_some_and(|u| util::parse_http_url(u).is_some())
    }
}

struct Sent {
    action: String,
    at: CodeLocation,
}

/// One branch of a handler: the discriminator it tests (None for the
/// handler as a whole) and the token range it guards.
struct Branch {
    action: Option<String>,
    body: Range<usize>,
}

struct Handler {
    stream: usize,
    at: CodeLocation,
    branches: Vec<Branch>,
}

fn loc(ts: &TokenStream, t: &Token) -> CodeLocation {
    CodeLocation {
        path: ts.source_path.clone(),
        offset: t.offset,
    }
}

fn discriminators_in(code: &Code, arg: Range<usize>, env: &ConstEnv, keys: &[String]) -> Vec<String> {
    let first = code[arg.start];
    if first.is_punct("{") {
        let Some(close) = match_close(code, arg.start) else { return Vec::new() };
        return split_args(code, arg.start, close)
            .into_iter()
            .filter_map(|p| {
                let k = code[p.start];
                let name = k.string_value().unwrap_or_else(|| k.text.clone());
                if !keys.contains(&name) || !code.get(p.start + 1)?.is_punct(":") {
                    return None;
                }
                fold_range(code, p.start + 2..p.end, env)
            })
            .collect();
    }
    fold_range(code, arg, env).into_iter().collect()
}

fn senders(ts: &TokenStream, code: &Code, env: &ConstEnv, keys: &[String]) -> Vec<Sent> {
    let mut out = Vec::new();
    for i in 0..code.len() {
        if !(code[i].is_ident("sendMessage") && called(code, i)) {
            continue;
        }
        let path = member_path_ending_at(code, i);
        if !path.ends_with(&["runtime", "sendMessage"]) {
            continue;
        }
        let Some(close) = match_close(code, i + 1) else { continue };
        let args = split_args(code, i + 1, close);
        // runtime.sendMessage(extensionId?, message, ...)
        for arg in args.into_iter().take(2) {
            let found = discriminators_in(code, arg, env, keys);
            if !found.is_empty() {
                for action in found {
                    out.push(Sent {
                        action,
                        at: loc(ts, code[i]),
                    });
                }
                break;
            }
        }
    }
    out
}

/// Statement or block following `if (...)` / `case X:` starting at `i`.
fn guarded_range(code: &Code, i: usize, limit: usize) -> Range<usize> {
    if code.get(i).is_some_and(|t| t.is_punct("{")) {
        let close = match_close(code, i).unwrap_or(limit).min(limit);
        return i + 1..close;
    }
    let end = (i..limit).find(|&k| code[k].is_punct(";")).map(|k| k + 1).unwrap_or(limit);
    i..end
}

fn discriminator_compare(code: &Code, i: usize, env: &ConstEnv, keys: &[String], param: Option<&str>) -> Option<String> {
    // param.KEY === "v" or "v" === param.KEY
    let op = code.get(i + 1)?;
    if !(op.is_punct("===") || op.is_punct("==")) {
        return None;
    }
    let lhs_is_key = code[i].kind == TokenKind::Identifier
        && keys.contains(&code[i].text)
        && is_member(code, i)
        && param.map_or(true, |p| member_path_ending_at(code, i).first() == Some(&p));
    if lhs_is_key {
        return fold_string(code, i + 2, env).map(|(v, _)| v);
    }
    None
}

fn handler_branches(code: &Code, body: Range<usize>, env: &ConstEnv, keys: &[String], param: Option<&str>) -> Vec<Branch> {
    let mut out = Vec::new();
    let mut switch_on_key = Vec::new();
    for i in body.clone() {
        let t = code[i];
        if let Some(action) = discriminator_compare(code, i, env, keys, param) {
            // Find the guarded statement after the enclosing `if (...)`.
            let mut k = i;
            while k > body.start && !code[k].is_punct("(") {
                k -= 1;
            }
            if k > body.start && code[k - 1].is_ident("if") {
                if let Some(close) = match_close(code, k) {
                    out.push(Branch {
                        action: Some(action),
                        body: guarded_range(code, close + 1, body.end),
                    });
                    continue;
                }
            }
            // `key === "v" && doSomething()` and similar expressions.
            out.push(Branch {
                action: Some(action),
                body: i..super::walk::expr_end(code, i).min(body.end),
            });
            continue;
        }
        if t.is_ident("switch") {
            if let Some(close) = code.get(i + 1).filter(|p| p.is_punct("(")).and_then(|_| match_close(code, i + 1)) {
                let tests_key = code[i + 2..close].last().is_some_and(|k| keys.contains(&k.text));
                if tests_key && code.get(close + 1).is_some_and(|b| b.is_punct("{")) {
                    if let Some(end) = match_close(code, close + 1) {
                        switch_on_key.push((close + 2, end));
                    }
                }
            }
        }
    }
    for (start, end) in switch_on_key {
        let mut depth = 0i32;
        let mut labels: Vec<(usize, Option<String>)> = Vec::new();
        for k in start..end {
            let t = code[k];
            if t.is_punct("{") || t.is_punct("(") || t.is_punct("[") {
                depth += 1;
            } else if t.is_punct("}") || t.is_punct(")") || t.is_punct("]") {
                depth -= 1;
            } else if depth == 0 && (t.is_ident("case") || t.is_ident("default")) {
                let label = if t.is_ident("case") { fold_string(code, k + 1, env).map(|(v, _)| v) } else { None };
                labels.push((k, label));
            }
        }
        for (n, (k, label)) in labels.iter().enumerate() {
            let stop = labels.get(n + 1).map(|(s, _)| *s).unwrap_or(end);
            if let Some(action) = label {
                out.push(Branch {
                    action: Some(action.clone()),
                    body: k + 1..stop,
                });
            }
        }
    }
    if out.is_empty() {
        out.push(Branch { action: None, body });
    }
    out
}

fn first_param(code: &Code, start: usize) -> Option<String> {
    let mut i = start;
    if code.get(i)?.is_ident("async") {
        i += 1;
    }
    let t = code.get(i)?;
    if t.kind == TokenKind::Identifier && !t.is_ident("function") {
        return Some(t.text.clone());
    }
    let open = if t.is_ident("function") {
        (i + 1..i + 3).find(|&k| code.get(k).is_some_and(|p| p.is_punct("(")))?
    } else {
        i
    };
    let p = code.get(open + 1)?;
    (p.kind == TokenKind::Identifier).then(|| p.text.clone())
}

fn handlers(streams: &[TokenStream], codes: &[Vec<&Token>], bg: &HashSet<usize>, fns: &FnIndex, env: &ConstEnv, keys: &[String]) -> Vec<Handler> {
    let mut out = Vec::new();
    for &s in bg.iter().collect::<BTreeSet<_>>() {
        let code = &codes[s];
        for i in 0..code.len() {
            if !(code[i].is_ident("addListener") && called(code, i)) {
                continue;
            }
            let path = member_path_ending_at(code, i);
            if !path.ends_with(&["onMessage", "addListener"]) && !path.ends_with(&["onMessageExternal", "addListener"]) {
                continue;
            }
            let Some(close) = match_close(code, i + 1) else { continue };
            let Some(arg) = split_args(code, i + 1, close).into_iter().next() else { continue };
            let (stream, body, param) = if let Some(b) = function_body_at(code, arg.start, s) {
                (s, b.open + 1..b.close, first_param(code, arg.start))
            } else if let Some(b) = (arg.len() == 1).then(|| fns.defs.get(&code[arg.start].text)).flatten() {
                (b.stream, b.open + 1..b.close, None)
            } else {
                continue;
            };
            let branches = handler_branches(&codes[stream], body, env, keys, param.as_deref());
            out.push(Handler {
                stream,
                at: loc(&streams[s], code[i]),
                branches,
            });
        }
    }
    out
}

struct SinkSearch<'a> {
    streams: &'a [TokenStream],
    codes: &'a [Vec<&'a Token>],
    fns: &'a FnIndex,
    env: &'a ConstEnv,
    max_depth: usize,
}

impl SinkSearch<'_> {
    fn url_of(&self, code: &Code, arg: Range<usize>) -> Option<String> {
        if arg.is_empty() {
            return None;
        }
        fold_range(code, arg.clone(), self.env).or_else(|| fold_string(code, arg.start, self.env).map(|(v, _)| v))
    }

    /// Sinks reachable from `range` in `stream`, following named calls.
    fn find(&self, stream: usize, range: Range<usize>, depth: usize, seen: &mut HashSet<(usize, usize)>, out: &mut Vec<Sink>) {
        let code = &self.codes[stream];
        let path = &self.streams[stream].source_path;
        for i in range.start..range.end.min(code.len()) {
            let t = code[i];
            if t.kind != TokenKind::Identifier || !called(code, i) {
                continue;
            }
            let Some(close) = match_close(code, i + 1) else { continue };
            let args = split_args(code, i + 1, close);
            let sink = |kind, url_arg: Option<&Range<usize>>| Sink {
                kind,
                url_literal: url_arg.and_then(|a| self.url_of(code, a.clone())),
                path: path.clone(),
                offset: t.offset,
            };
            if t.is_ident("fetch") && global_call(code, i) {
                out.push(sink(SinkKind::Fetch, args.first()));
            } else if t.is_ident("sendBeacon") && is_member(code, i) {
                out.push(sink(SinkKind::SendBeacon, args.first()));
            } else if t.is_ident("open") && is_member(code, i) && args.len() >= 2 {
                let method_literal = code[args[0].start].string_value().is_some();
                if method_literal {
                    out.push(sink(SinkKind::Xhr, args.get(1)));
                }
            } else if depth < self.max_depth && !is_member(code, i) {
                if let Some(def) = self.fns.defs.get(&t.text) {
                    if seen.insert((def.stream, def.open)) {
                        self.find(def.stream, def.open + 1..def.close, depth + 1, seen, out);
                    }
                }
            }
        }
    }
}

/// Background script paths plus scripts they import statically.
fn background_set(pkg: &ExtensionPackage, streams: &[TokenStream]) -> HashSet<usize> {
    let mut paths: BTreeSet<String> = pkg.manifest.background_scripts().into_iter().collect();
    if let Some(Background::Page { path }) = &pkg.manifest.background {
        paths.insert(path.clone());
        let dir = path.rsplit_once('/').map(|(d, _)| format!("{d}/")).unwrap_or_default();
        let text = pkg.file_text(path).unwrap_or_default();
        for src in super::html::script_srcs(&text) {
            let rel = src.trim_start_matches("./");
            let p = if src.starts_with('/') { rel.trim_start_matches('/').to_string() } else { format!("{dir}{rel}") };
            paths.insert(p);
        }
    }
    loop {
        let before = paths.len();
        let current: Vec<&TokenStream> = streams.iter().filter(|s| paths.contains(&s.source_path)).collect();
        for ts in current {
            let code = ts.code();
            let dir = ts.source_path.rsplit_once('/').map(|(d, _)| format!("{d}/")).unwrap_or_default();
            for i in 0..code.len() {
                let is_import = (code[i].is_ident("importScripts") && called(&code, i))
                    || (code[i].is_ident("from") && i > 0)
                    || (code[i].is_ident("import") && code.get(i + 1).is_some_and(|t| t.kind == TokenKind::StringLiteral));
                if !is_import {
                    continue;
                }
                let start = if code[i].is_ident("importScripts") { i + 2 } else { i + 1 };
                let mut k = start;
                while let Some(v) = code.get(k).and_then(|t| t.string_value()) {
                    let rel = v.trim_start_matches("./");
                    let p = if v.starts_with('/') { rel.trim_start_matches('/').to_string() } else { format!("{dir}{rel}") };
                    if pkg.files.contains_key(&p) {
                        paths.insert(p);
                    }
                    if !code.get(k + 1).is_some_and(|c| c.is_punct(",")) {
                        break;
                    }
                    k += 2;
                }
            }
        }
        if paths.len() == before {
            break;
        }
    }
    streams
        .iter()
        .enumerate()
        .filter(|(_, s)| paths.contains(&s.source_path))
        .map(|(k, _)| k)
        .collect()
}

/// Pairs content-script `runtime.sendMessage` discriminators with
/// background `onMessage` handlers and the network sinks they reach.
pub fn correlate_message_flows(
    pkg: &ExtensionPackage,
    streams: &[TokenStream],
    cfg: &StaticConfig,
) -> (Vec<MessageFlow>, Vec<SignalFinding>) {
    let codes: Vec<Vec<&Token>> = streams.iter().map(|s| s.code()).collect();
    let mut env = ConstEnv::default();
    for code in &codes {
        env.collect(code);
    }
    let content: BTreeSet<String> = pkg.manifest.content_script_paths().into_iter().collect();
    let bg = background_set(pkg, streams);
    let mut fns = FnIndex::default();
    for &k in &bg {
        fns.add_stream(&codes[k], k);
    }
    let keys = &cfg.discriminator_keys;

    let sent: Vec<Sent> = streams
        .iter()
        .enumerate()
        .filter(|(_, s)| content.contains(&s.source_path))
        .flat_map(|(k, s)| senders(s, &codes[k], &env, keys))
        .collect();
    let hs = handlers(streams, &codes, &bg, &fns, &env, keys);
    let search = SinkSearch {
        streams,
        codes: &codes,
        fns: &fns,
        env: &env,
        max_depth: cfg.max_call_depth,
    };

    let mut flows = BTreeSet::new();
    for s in &sent {
        for h in &hs {
            let mut matched = h.branches.iter().filter(|b| b.action.as_deref() == Some(s.action.as_str())).peekable();
            let branches: Vec<&Branch> = if matched.peek().is_some() {
                matched.collect()
            } else {
                h.branches.iter().filter(|b| b.action.is_none()).collect()
            };
            if branches.is_empty() {
                flows.insert(MessageFlow {
                    action_key: s.action.clone(),
                    sender: s.at.clone(),
                    receiver: h.at.clone(),
                    sink: None,
                });
                continue;
            }
            for b in branches {
                let mut sinks = Vec::new();
                search.find(h.stream, b.body.clone(), 0, &mut HashSet::new(), &mut sinks);
                let sink = sinks
                    .iter()
                    .find(|k| k.url_literal.as_deref().is_some_and(|u| util::parse_http_url(u).is_some()))
                    .or(sinks.first())
                    .cloned();
                flows.insert(MessageFlow {
                    action_key: s.action.clone(),
                    sender: s.at.clone(),
                    receiver: h.at.clone(),
                    sink,
                });
            }
        }
    }
    let flows: Vec<MessageFlow> = flows.into_iter().collect();

    let mut reported = BTreeSet::new();
    let mut findings = Vec::new();
    for f in flows.iter().filter(|f| f.is_external()) {
        let sink = f.sink.as_ref().expect("external flows have a sink");
        let url = sink.url_literal.clone().unwrap_or_default();
        if !reported.insert((f.action_key.clone(), url.clone())) {
            continue;
        }
        let line = pkg.files.get(&sink.path).map(|b| util::line_of(b, sink.offset)).unwrap_or(1);
        findings.push(SignalFinding::new(
            "MSG_EXFIL_FLOW",
            Category::Static,
            Severity::High,
            Evidence::at(&sink.path, sink.offset, line).with_value(format!("{} -> {url}", f.action_key)),
            format!(
                "message '{}' from {} reaches a network request to {url}",
                f.action_key, f.sender.path
            ),
        ));
    }
    (flows, findings)
}
