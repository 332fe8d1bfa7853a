// Token-window helpers shared by the static detectors: bracket matching,
// argument splitting, a one-pass constant folder and a function index.

use std::collections::HashMap;
use std::ops::Range;

use super::tokenizer::{Token, TokenKind};

pub(crate) type Code<'a> = [&'a Token];

fn is_open(t: &Token) -> bool {
    t.kind == TokenKind::Punctuation && matches!(t.text.as_str(), "(" | "[" | "{")
}

fn is_close(t: &Token) -> bool {
    t.kind == TokenKind::Punctuation && matches!(t.text.as_str(), ")" | "]" | "}")
}

/// Index of the bracket closing the one at `open`.
pub(crate) fn match_close(code: &Code, open: usize) -> Option<usize> {
    if !code.get(open).is_some_and(|t| is_open(t)) {
        return None;
    }
    let mut depth = 0usize;
    for (i, t) in code.iter().enumerate().skip(open) {
        if is_open(t) {
            depth += 1;
        } else if is_close(t) {
            depth -= 1;
            if depth == 0 {
                return Some(i);
            }
        }
    }
    None
}

/// Index of the bracket opening the one at `close`.
pub(crate) fn match_open(code: &Code, close: usize) -> Option<usize> {
    if !code.get(close).is_some_and(|t| is_close(t)) {
        return None;
    }
    let mut depth = 0usize;
    for i in (0..=close).rev() {
        let t = code[i];
        if is_close(t) {
            depth += 1;
        } else if is_open(t) {
            depth -= 1;
            if depth == 0 {
                return Some(i);
            }
        }
    }
    None
}

/// Comma-separated argument ranges between `open` and its `close`.
pub(crate) fn split_args(code: &Code, open: usize, close: usize) -> Vec<Range<usize>> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = open + 1;
    for i in open + 1..close {
        let t = code[i];
        if is_open(t) {
            depth += 1;
        } else if is_close(t) {
            depth = depth.saturating_sub(1);
        } else if depth == 0 && t.is_punct(",") {
            out.push(start..i);
            start = i + 1;
        }
    }
    if start < close {
        out.push(start..close);
    }
    out
}

/// Identifier path `a.b.c` ending at `end` (inclusive), read backwards.
pub(crate) fn member_path_ending_at<'a>(code: &Code<'a>, end: usize) -> Vec<&'a str> {
    let mut parts = Vec::new();
    let mut i = end as isize;
    loop {
        let Some(t) = code.get(i as usize) else { break };
        if !matches!(t.kind, TokenKind::Identifier | TokenKind::Keyword) {
            break;
        }
        parts.push(t.text.as_str());
        if i >= 2 && (code[i as usize - 1].is_punct(".") || code[i as usize - 1].is_punct("?.")) {
            i -= 2;
        } else {
            break;
        }
    }
    parts.reverse();
    parts
}

/// Identifier path `a.b.c` starting at `start`; returns (path, next index).
pub(crate) fn member_path_at(code: &Code, start: usize) -> Option<(String, usize)> {
    let first = code.get(start)?;
    if !matches!(first.kind, TokenKind::Identifier | TokenKind::Keyword) {
        return None;
    }
    let mut path = first.text.clone();
    let mut i = start + 1;
    while i + 1 < code.len()
        && (code[i].is_punct(".") || code[i].is_punct("?."))
        && matches!(code[i + 1].kind, TokenKind::Identifier | TokenKind::Keyword)
    {
        path.push('.');
        path.push_str(&code[i + 1].text);
        i += 2;
    }
    Some((path, i))
}

/// True when `code[i]` is followed by `(`.
pub(crate) fn called(code: &Code, i: usize) -> bool {
    code.get(i + 1).is_some_and(|t| t.is_punct("("))
}

/// True when `code[i]` is a property access (`x.name` / `x?.name`).
pub(crate) fn is_member(code: &Code, i: usize) -> bool {
    i > 0 && (code[i - 1].is_punct(".") || code[i - 1].is_punct("?."))
}

const GLOBAL_OBJECTS: &[&str] = &["window", "globalThis", "self", "top", "parent", "frames"];

/// A bare call, or a call through a global object (`window.eval`).
pub(crate) fn global_call(code: &Code, i: usize) -> bool {
    if !called(code, i) {
        return false;
    }
    if !is_member(code, i) {
        return i == 0 || !code[i - 1].is_ident("function");
    }
    i >= 2 && GLOBAL_OBJECTS.contains(&code[i - 2].text.as_str()) && !is_member(code, i - 2)
}

const CONTINUATION: &[&str] = &[
    ".", "?.", "=", "+", "-", "*", "/", "%", "(", "[", ",", "?", ":", "&&", "||", "??", "=>", "==", "===",
    "!=", "!==", "<", ">", "<=", ">=", "+=", "-=", "|", "&", "^", "!",
];

/// End (exclusive) of the expression starting at `start`: the first `;`
/// or `,` at depth zero, an unmatched closer, or an ASI line break.
pub(crate) fn expr_end(code: &Code, start: usize) -> usize {
    let mut depth = 0isize;
    let mut i = start;
    while i < code.len() {
        let t = code[i];
        if is_open(t) {
            depth += 1;
        } else if is_close(t) {
            depth -= 1;
            if depth < 0 {
                return i;
            }
        } else if depth == 0 && (t.is_punct(";") || t.is_punct(",")) {
            return i;
        } else if depth == 0 && i > start && t.line > code[i - 1].line {
            let prev = code[i - 1];
            let cont_prev = prev.kind == TokenKind::Punctuation && CONTINUATION.contains(&prev.text.as_str());
            let cont_next = t.kind == TokenKind::Punctuation
                && CONTINUATION.contains(&t.text.as_str())
                && !t.is_punct("(")
                && !t.is_punct("[");
            if !cont_prev && !cont_next {
                return i;
            }
        }
        i += 1;
    }
    code.len()
}

/// Constant strings known by name: `NAME` and `OBJ.key.sub` paths.
#[derive(Debug, Default, Clone)]
pub(crate) struct ConstEnv {
    values: HashMap<String, String>,
}

impl ConstEnv {
    pub(crate) fn get(&self, name: &str) -> Option<&str> {
        self.values.get(name).map(String::as_str)
    }

    /// Collects simple `const X = "..."` bindings and nested object
    /// literal string properties from a stream.
    pub(crate) fn collect(&mut self, code: &Code) {
        // Two passes so bindings may reference later ones.
        for _ in 0..2 {
            let mut i = 0;
            while i + 2 < code.len() {
                let t = code[i];
                if t.kind == TokenKind::Identifier && code[i + 1].is_punct("=") && !is_member(code, i) {
                    let name = t.text.clone();
                    if code[i + 2].is_punct("{") {
                        if let Some(close) = match_close(code, i + 2) {
                            self.collect_object(code, i + 2, close, &name);
                            i = close + 1;
                            continue;
                        }
                    } else if let Some((value, next)) = fold_string(code, i + 2, self) {
                        if expr_end(code, i + 2) == next {
                            self.values.insert(name, value);
                        }
                    }
                }
                i += 1;
            }
        }
    }

    fn collect_object(&mut self, code: &Code, open: usize, close: usize, prefix: &str) {
        for arg in split_args(code, open, close) {
            let (start, end) = (arg.start, arg.end);
            if end < start + 3 || !code[start + 1].is_punct(":") {
                continue;
            }
            let key = match code[start].kind {
                TokenKind::Identifier | TokenKind::Keyword | TokenKind::Number => code[start].text.clone(),
                TokenKind::StringLiteral => match code[start].string_value() {
                    Some(v) => v,
                    None => continue,
                },
                _ => continue,
            };
            let path = format!("{prefix}.{key}");
            if code[start + 2].is_punct("{") {
                if let Some(inner_close) = match_close(code, start + 2) {
                    if inner_close < end {
                        self.collect_object(code, start + 2, inner_close, &path);
                    }
                }
            } else if let Some((value, next)) = fold_string(code, start + 2, self) {
                if next == end {
                    self.values.insert(path, value);
                }
            }
        }
    }
}

fn resolve_operand(code: &Code, i: usize, env: &ConstEnv) -> Option<(String, usize)> {
    let t = code.get(i)?;
    match t.kind {
        TokenKind::StringLiteral => Some((t.string_value()?, i + 1)),
        TokenKind::TemplateLiteral => {
            if t.template_exprs.is_empty() {
                return Some((t.string_value()?, i + 1));
            }
            Some((resolve_template(t, env)?, i + 1))
        }
        TokenKind::Identifier => {
            let (path, next) = member_path_at(code, i)?;
            env.get(&path).map(|v| (v.to_string(), next))
        }
        _ => None,
    }
}

/// Substitutes template expressions that are known constant paths.
pub(crate) fn resolve_template(t: &Token, env: &ConstEnv) -> Option<String> {
    let mut out = String::new();
    let mut cursor = t.offset + 1;
    let end = t.offset + t.text.len() - 1;
    for span in &t.template_exprs {
        let lit = t.text.get(cursor - t.offset..span.offset.checked_sub(2)? - t.offset)?;
        out.push_str(&super::tokenizer::unescape(lit));
        let expr = t.text.get(span.offset - t.offset..span.offset + span.len - t.offset)?.trim();
        out.push_str(env.get(expr)?);
        cursor = span.offset + span.len + 1;
    }
    out.push_str(&super::tokenizer::unescape(t.text.get(cursor - t.offset..end - t.offset)?));
    Some(out)
}

/// Folds `operand (+ operand)*` starting at `start` where every operand is
/// a string literal, an expression-free template, or a known constant.
/// Returns the value and the index after the last folded operand.
pub(crate) fn fold_string(code: &Code, start: usize, env: &ConstEnv) -> Option<(String, usize)> {
    let (mut value, mut i) = resolve_operand(code, start, env)?;
    while i + 1 < code.len() && code[i].is_punct("+") {
        match resolve_operand(code, i + 1, env) {
            Some((v, next)) => {
                value.push_str(&v);
                i = next;
            }
            None => break,
        }
    }
    Some((value, i))
}

/// Folds an argument range completely, or fails.
pub(crate) fn fold_range(code: &Code, range: Range<usize>, env: &ConstEnv) -> Option<String> {
    let (v, next) = fold_string(code, range.start, env)?;
    (next == range.end).then_some(v)
}

/// A function body located in some stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct FnBody {
    pub stream: usize,
    /// Indices of `{` and `}` (or an expression range for concise arrows).
    pub open: usize,
    pub close: usize,
}

/// Locates the body of a function expression starting at `i`
/// (`function (...) {}`, `async (...) => {}`, `x => expr`).
pub(crate) fn function_body_at(code: &Code, mut i: usize, stream: usize) -> Option<FnBody> {
    if code.get(i)?.is_ident("async") {
        i += 1;
    }
    let t = code.get(i)?;
    if t.is_ident("function") {
        let mut j = i + 1;
        if code.get(j)?.is_punct("*") {
            j += 1;
        }
        if code.get(j)?.kind == TokenKind::Identifier {
            j += 1;
        }
        let close_params = match_close(code, j)?;
        let open = close_params + 1;
        return code.get(open)?.is_punct("{").then(|| FnBody {
            stream,
            open,
            close: match_close(code, open).unwrap_or(code.len() - 1),
        });
    }
    let arrow = if t.is_punct("(") {
        match_close(code, i)? + 1
    } else if t.kind == TokenKind::Identifier {
        i + 1
    } else {
        return None;
    };
    if !code.get(arrow)?.is_punct("=>") {
        return None;
    }
    let open = arrow + 1;
    if code.get(open)?.is_punct("{") {
        Some(FnBody {
            stream,
            open,
            close: match_close(code, open).unwrap_or(code.len() - 1),
        })
    } else {
        // Concise body: treat the expression as the body, exclusive bounds
        // shifted so (open, close) still bracket it.
        let end = expr_end(code, open);
        Some(FnBody {
            stream,
            open: open - 1,
            close: end,
        })
    }
}

/// Named function definitions across a set of streams.
#[derive(Debug, Default)]
pub(crate) struct FnIndex {
    pub defs: HashMap<String, FnBody>,
}

impl FnIndex {
    pub(crate) fn add_stream(&mut self, code: &Code, stream: usize) {
        for i in 0..code.len() {
            let t = code[i];
            // function NAME(
            if t.is_ident("function") {
                let mut j = i + 1;
                if code.get(j).is_some_and(|t| t.is_punct("*")) {
                    j += 1;
                }
                if let Some(name) = code.get(j).filter(|n| n.kind == TokenKind::Identifier) {
                    if let Some(body) = function_body_at(code, i, stream) {
                        self.defs.entry(name.text.clone()).or_insert(body);
                    }
                }
                continue;
            }
            if t.kind != TokenKind::Identifier {
                continue;
            }
            // NAME = function / NAME = (...) => / NAME: function
            if let Some(op) = code.get(i + 1) {
                if op.is_punct("=") || op.is_punct(":") {
                    if let Some(body) = function_body_at(code, i + 2, stream) {
                        self.defs.entry(t.text.clone()).or_insert(body);
                        continue;
                    }
                }
            }
            // Method shorthand: NAME(...) { ... }
            if called(code, i) && i > 0 {
                let prev = code[i - 1];
                let ok_prev = prev.is_punct("{")
                    || prev.is_punct("}")
                    || prev.is_punct(";")
                    || prev.is_punct(",")
                    || prev.is_ident("async")
                    || prev.is_ident("static");
                if ok_prev {
                    if let Some(close) = match_close(code, i + 1) {
                        if code.get(close + 1).is_some_and(|b| b.is_punct("{")) {
                            let open = close + 1;
                            if let Some(end) = match_close(code, open) {
                                self.defs.entry(t.text.clone()).or_insert(FnBody {
                                    stream,
                                    open,
                                    close: end,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
}
