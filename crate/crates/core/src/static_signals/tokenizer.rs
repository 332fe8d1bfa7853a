//! ECMAScript-compatible lexer.
//!
//! Never fails: unterminated constructs are reported as diagnostics and
//! lexing continues with a best-effort token.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TokenKind {
    Identifier,
    Keyword,
    StringLiteral,
    TemplateLiteral,
    Punctuation,
    Number,
    Comment,
    Regex,
}

/// Byte range of a `${...}` expression inside a template literal, in file
/// coordinates. Covers the expression text only, not the `${` `}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Span {
    pub offset: usize,
    pub len: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
    /// Byte offset of the first byte in the original file.
    pub offset: usize,
    /// 1-based line.
    pub line: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub template_exprs: Vec<Span>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub offset: usize,
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct TokenStream {
    pub source_path: String,
    pub tokens: Vec<Token>,
    pub diagnostics: Vec<Diagnostic>,
    /// Length of the original file in bytes.
    pub source_len: usize,
    /// Decoded text the tokens were cut from.
    #[serde(skip)]
    pub text: String,
}

const KEYWORDS: &[&str] = &[
    "await", "break", "case", "catch", "class", "const", "continue", "debugger", "default", "delete", "do",
    "else", "export", "extends", "false", "finally", "for", "function", "if", "import", "in", "instanceof",
    "let", "new", "null", "return", "super", "switch", "this", "throw", "true", "try", "typeof", "var",
    "void", "while", "with", "yield",
];

// After these keywords a `/` starts a regular expression.
const REGEX_AFTER_KEYWORDS: &[&str] = &[
    "await", "case", "delete", "do", "else", "in", "instanceof", "new", "return", "throw", "typeof", "void",
    "yield",
];

const PUNCTUATORS: &[&str] = &[
    ">>>=", "...", "===", "!==", "**=", "<<=", ">>=", ">>>", "&&=", "||=", "??=", "=>", "==", "!=", "<=", ">=",
    "&&", "||", "??", "?.", "++", "--", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "**", "<<", ">>",
];

pub fn is_keyword(s: &str) -> bool {
    KEYWORDS.contains(&s)
}

impl Token {
    pub fn is_punct(&self, p: &str) -> bool {
        self.kind == TokenKind::Punctuation && self.text == p
    }

    pub fn is_ident(&self, name: &str) -> bool {
        matches!(self.kind, TokenKind::Identifier | TokenKind::Keyword) && self.text == name
    }

    pub fn is_string_like(&self) -> bool {
        matches!(self.kind, TokenKind::StringLiteral | TokenKind::TemplateLiteral)
    }

    pub fn end(&self) -> usize {
        self.offset + self.text.len()
    }

    /// Cooked value of a string literal or an expression-free template.
    pub fn string_value(&self) -> Option<String> {
        match self.kind {
            TokenKind::StringLiteral if self.text.len() >= 2 => {
                let inner = &self.text[1..self.text.len() - 1];
                Some(unescape(inner))
            }
            TokenKind::StringLiteral => Some(String::new()),
            TokenKind::TemplateLiteral if self.template_exprs.is_empty() && self.text.len() >= 2 => {
                Some(unescape(&self.text[1..self.text.len() - 1]))
            }
            _ => None,
        }
    }

    /// Raw content of string-like tokens, without delimiters.
    pub fn literal_body(&self) -> Option<&str> {
        if !self.is_string_like() || self.text.len() < 2 {
            return None;
        }
        let last = self.text.chars().last()?;
        let end = if last == self.text.chars().next()? { self.text.len() - 1 } else { self.text.len() };
        self.text.get(1..end)
    }
}

fn hex_val(s: &str) -> Option<u32> {
    u32::from_str_radix(s, 16).ok()
}

pub(crate) fn unescape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    let mut chars = s.char_indices().peekable();
    while let Some((i, c)) = chars.next() {
        if c != '\\' {
            out.push(c);
            continue;
        }
        let Some((j, e)) = chars.next() else {
            out.push('\\');
            break;
        };
        match e {
            'n' => out.push('\n'),
            't' => out.push('\t'),
            'r' => out.push('\r'),
            'b' => out.push('\u{8}'),
            'f' => out.push('\u{c}'),
            'v' => out.push('\u{b}'),
            '0' if !matches!(chars.peek(), Some((_, d)) if d.is_ascii_digit()) => out.push('\0'),
            '\n' | '\u{2028}' | '\u{2029}' => {}
            '\r' => {
                if matches!(chars.peek(), Some((_, '\n'))) {
                    chars.next();
                }
            }
            'x' => match s.get(j + 1..j + 3).and_then(hex_val).and_then(char::from_u32) {
                Some(ch) => {
                    out.push(ch);
                    chars.next();
                    chars.next();
                }
                None => out.push('x'),
            },
            'u' => {
                let rest = &s[j + 1..];
                if let Some(body) = rest.strip_prefix('{') {
                    if let Some(close) = body.find('}') {
                        if let Some(ch) = hex_val(&body[..close]).and_then(char::from_u32) {
                            out.push(ch);
                            for _ in 0..close + 2 {
                                chars.next();
                            }
                            continue;
                        }
                    }
                    out.push('u');
                } else {
                    match rest.get(..4).and_then(hex_val) {
                        Some(cp) => {
                            for _ in 0..4 {
                                chars.next();
                            }
                            // Surrogate pair.
                            if (0xD800..0xDC00).contains(&cp) && rest.get(4..6) == Some("\\u") {
                                if let Some(lo) = rest.get(6..10).and_then(hex_val) {
                                    if (0xDC00..0xE000).contains(&lo) {
                                        let full = 0x10000 + ((cp - 0xD800) << 10) + (lo - 0xDC00);
                                        if let Some(ch) = char::from_u32(full) {
                                            out.push(ch);
                                            for _ in 0..6 {
                                                chars.next();
                                            }
                                            continue;
                                        }
                                    }
                                }
                            }
                            out.push(char::from_u32(cp).unwrap_or('\u{FFFD}'));
                        }
                        None => out.push('u'),
                    }
                }
            }
            other => {
                let _ = i;
                out.push(other);
            }
        }
    }
    out
}

/// Decodes bytes as UTF-8, replacing each invalid byte with U+FFFD.
/// Returns the text and the decoded offsets of every replacement.
fn decode_lossy(bytes: &[u8]) -> (String, Vec<usize>) {
    let mut out = String::with_capacity(bytes.len());
    let mut replaced = Vec::new();
    let mut rest = bytes;
    loop {
        match std::str::from_utf8(rest) {
            Ok(s) => {
                out.push_str(s);
                break;
            }
            Err(e) => {
                let valid = e.valid_up_to();
                out.push_str(std::str::from_utf8(&rest[..valid]).expect("validated prefix"));
                let bad = e.error_len().unwrap_or(rest.len() - valid);
                for _ in 0..bad {
                    replaced.push(out.len());
                    out.push('\u{FFFD}');
                }
                rest = &rest[valid + bad..];
            }
        }
    }
    (out, replaced)
}

struct Lexer<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    line: usize,
    tokens: Vec<Token>,
    diagnostics: Vec<Diagnostic>,
    /// Decoded offsets where one invalid byte became a 3-byte U+FFFD.
    replacements: &'a [usize],
    base_offset: usize,
    base_line: usize,
}

impl<'a> Lexer<'a> {
    fn raw_offset(&self, decoded: usize) -> usize {
        let before = self.replacements.partition_point(|&r| r < decoded);
        self.base_offset + decoded - 2 * before
    }

    fn diag(&mut self, at: usize, line: usize, message: impl Into<String>) {
        self.diagnostics.push(Diagnostic {
            offset: self.raw_offset(at),
            line: line + self.base_line - 1,
            message: message.into(),
        });
    }

    fn push(&mut self, kind: TokenKind, start: usize, line: usize, exprs: Vec<Span>) {
        let text = &self.src[start..self.pos];
        self.line += text.bytes().filter(|&b| b == b'\n').count();
        let exprs = exprs
            .into_iter()
            .map(|s| Span {
                offset: self.raw_offset(s.offset),
                len: self.raw_offset(s.offset + s.len) - self.raw_offset(s.offset),
            })
            .collect();
        self.tokens.push(Token {
            kind,
            text: text.to_string(),
            offset: self.raw_offset(start),
            line: line + self.base_line - 1,
            template_exprs: exprs,
        });
    }

    fn peek(&self, ahead: usize) -> Option<u8> {
        self.bytes.get(self.pos + ahead).copied()
    }

    fn cur_char(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn prev_significant(&self) -> Option<&Token> {
        self.tokens.iter().rev().find(|t| t.kind != TokenKind::Comment)
    }

    fn slash_starts_regex(&self) -> bool {
        match self.prev_significant() {
            None => true,
            Some(t) => match t.kind {
                TokenKind::Number
                | TokenKind::StringLiteral
                | TokenKind::TemplateLiteral
                | TokenKind::Regex
                | TokenKind::Identifier => false,
                TokenKind::Keyword => REGEX_AFTER_KEYWORDS.contains(&t.text.as_str()),
                TokenKind::Punctuation => !matches!(t.text.as_str(), ")" | "]" | "}" | "++" | "--"),
                TokenKind::Comment => true,
            },
        }
    }

    fn run(&mut self) {
        if self.src.starts_with("#!") {
            let start = self.pos;
            self.skip_to_line_end();
            self.push(TokenKind::Comment, start, self.line, Vec::new());
        }
        while self.pos < self.bytes.len() {
            let b = self.bytes[self.pos];
            if b == b'\n' {
                self.line += 1;
                self.pos += 1;
                continue;
            }
            if b.is_ascii_whitespace() {
                self.pos += 1;
                continue;
            }
            if b >= 0x80 {
                let c = self.cur_char().expect("in bounds");
                if c.is_whitespace() || c == '\u{FEFF}' {
                    self.pos += c.len_utf8();
                    continue;
                }
            }
            let start = self.pos;
            let line = self.line;
            match b {
                b'/' if self.peek(1) == Some(b'/') => {
                    self.skip_to_line_end();
                    self.push(TokenKind::Comment, start, line, Vec::new());
                }
                b'/' if self.peek(1) == Some(b'*') => {
                    match self.src[self.pos + 2..].find("*/") {
                        Some(i) => self.pos += 2 + i + 2,
                        None => {
                            self.diag(start, line, "unterminated block comment");
                            self.pos = self.bytes.len();
                        }
                    }
                    self.push(TokenKind::Comment, start, line, Vec::new());
                }
                b'<' if self.src[self.pos..].starts_with("<!--") => {
                    self.skip_to_line_end();
                    self.push(TokenKind::Comment, start, line, Vec::new());
                }
                b'/' if self.slash_starts_regex() => {
                    if self.lex_regex() {
                        self.push(TokenKind::Regex, start, line, Vec::new());
                    } else {
                        self.pos = start;
                        self.lex_punct();
                        self.push(TokenKind::Punctuation, start, line, Vec::new());
                    }
                }
                b'"' | b'\'' => {
                    self.lex_string(b);
                    self.push(TokenKind::StringLiteral, start, line, Vec::new());
                }
                b'`' => {
                    let exprs = self.lex_template();
                    self.push(TokenKind::TemplateLiteral, start, line, exprs);
                }
                b'0'..=b'9' => {
                    self.lex_number();
                    self.push(TokenKind::Number, start, line, Vec::new());
                }
                b'.' if self.peek(1).is_some_and(|c| c.is_ascii_digit()) => {
                    self.lex_number();
                    self.push(TokenKind::Number, start, line, Vec::new());
                }
                _ if self.at_ident_start() => {
                    self.lex_ident();
                    let kind = if is_keyword(&self.src[start..self.pos]) {
                        TokenKind::Keyword
                    } else {
                        TokenKind::Identifier
                    };
                    self.push(kind, start, line, Vec::new());
                }
                _ => {
                    self.lex_punct();
                    self.push(TokenKind::Punctuation, start, line, Vec::new());
                }
            }
        }
    }

    fn skip_to_line_end(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos] != b'\n' {
            self.pos += 1;
        }
        // Keep a trailing \r inside the comment; it is not whitespace-relevant.
    }

    fn at_ident_start(&self) -> bool {
        match self.bytes[self.pos] {
            b'a'..=b'z' | b'A'..=b'Z' | b'_' | b'$' => true,
            b'\\' => self.peek(1) == Some(b'u'),
            b if b >= 0x80 => self.cur_char().is_some_and(|c| c.is_alphabetic()),
            _ => false,
        }
    }

    fn lex_ident(&mut self) {
        while self.pos < self.bytes.len() {
            let b = self.bytes[self.pos];
            match b {
                b'a'..=b'z' | b'A'..=b'Z' | b'0'..=b'9' | b'_' | b'$' => self.pos += 1,
                b'\\' if self.peek(1) == Some(b'u') => {
                    self.pos += 2;
                    if self.peek(0) == Some(b'{') {
                        while self.pos < self.bytes.len() && self.bytes[self.pos] != b'}' {
                            self.pos += 1;
                        }
                        self.pos = (self.pos + 1).min(self.bytes.len());
                    } else {
                        let mut n = 0;
                        while n < 4 && self.peek(0).is_some_and(|c| c.is_ascii_hexdigit()) {
                            self.pos += 1;
                            n += 1;
                        }
                    }
                }
                _ if b >= 0x80 => {
                    let c = self.cur_char().expect("in bounds");
                    if c.is_alphanumeric() || c == '\u{200C}' || c == '\u{200D}' {
                        self.pos += c.len_utf8();
                    } else {
                        break;
                    }
                }
                _ => break,
            }
        }
    }

    fn lex_number(&mut self) {
        let b = self.bytes[self.pos];
        if b == b'0' && matches!(self.peek(1), Some(b'x' | b'X' | b'o' | b'O' | b'b' | b'B')) {
            self.pos += 2;
            while self.peek(0).is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_') {
                self.pos += 1;
            }
            return;
        }
        let digits = |lx: &mut Self| {
            while lx.peek(0).is_some_and(|c| c.is_ascii_digit() || c == b'_') {
                lx.pos += 1;
            }
        };
        digits(self);
        if self.peek(0) == Some(b'.') {
            self.pos += 1;
            digits(self);
        }
        if matches!(self.peek(0), Some(b'e' | b'E')) {
            let save = self.pos;
            self.pos += 1;
            if matches!(self.peek(0), Some(b'+' | b'-')) {
                self.pos += 1;
            }
            if self.peek(0).is_some_and(|c| c.is_ascii_digit()) {
                digits(self);
            } else {
                self.pos = save;
            }
        }
        // BigInt suffix and malformed trailing letters stay in the token.
        while self.peek(0).is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_' || c == b'$') {
            self.pos += 1;
        }
    }

    fn lex_string(&mut self, quote: u8) {
        let start = self.pos;
        let line = self.line;
        self.pos += 1;
        while self.pos < self.bytes.len() {
            match self.bytes[self.pos] {
                b'\\' => {
                    self.pos += 1;
                    if self.pos < self.bytes.len() {
                        let c = self.cur_char().expect("in bounds");
                        self.pos += c.len_utf8();
                    }
                }
                b'\n' => {
                    self.diag(start, line, "unterminated string literal");
                    return;
                }
                b if b == quote => {
                    self.pos += 1;
                    return;
                }
                _ => self.pos += 1,
            }
        }
        self.diag(start, line, "unterminated string literal");
    }

    /// Lexes a template literal starting at a backtick; returns the
    /// (decoded-coordinate) spans of its embedded expressions.
    fn lex_template(&mut self) -> Vec<Span> {
        let start = self.pos;
        let line = self.line;
        let mut exprs = Vec::new();
        self.pos += 1;
        while self.pos < self.bytes.len() {
            match self.bytes[self.pos] {
                b'\\' => self.pos = (self.pos + 2).min(self.bytes.len()),
                b'`' => {
                    self.pos += 1;
                    return exprs;
                }
                b'$' if self.peek(1) == Some(b'{') => {
                    self.pos += 2;
                    let expr_start = self.pos;
                    if !self.skip_balanced_expr() {
                        self.diag(start, line, "unterminated template expression");
                        return exprs;
                    }
                    exprs.push(Span {
                        offset: expr_start,
                        len: self.pos - expr_start,
                    });
                    self.pos += 1; // closing brace
                }
                _ => self.pos += 1,
            }
        }
        self.diag(start, line, "unterminated template literal");
        exprs
    }

    /// Advances to the `}` closing a template expression. Returns false at EOF.
    fn skip_balanced_expr(&mut self) -> bool {
        let mut depth = 0usize;
        while self.pos < self.bytes.len() {
            match self.bytes[self.pos] {
                b'{' => depth += 1,
                b'}' if depth == 0 => return true,
                b'}' => depth -= 1,
                q @ (b'"' | b'\'') => {
                    self.pos += 1;
                    while self.pos < self.bytes.len() && self.bytes[self.pos] != q && self.bytes[self.pos] != b'\n' {
                        if self.bytes[self.pos] == b'\\' {
                            self.pos += 1;
                        }
                        self.pos += 1;
                    }
                }
                b'`' => {
                    let _ = self.lex_template();
                    continue;
                }
                b'/' if self.peek(1) == Some(b'/') => {
                    self.skip_to_line_end();
                    continue;
                }
                b'/' if self.peek(1) == Some(b'*') => match self.src[self.pos + 2..].find("*/") {
                    Some(i) => self.pos += 2 + i + 1,
                    None => self.pos = self.bytes.len(),
                },
                _ => {}
            }
            self.pos += 1;
        }
        false
    }

    /// Lexes a regex literal body and flags. Returns false (without
    /// consuming) if the line ends first.
    fn lex_regex(&mut self) -> bool {
        let start = self.pos;
        let mut i = self.pos + 1;
        let mut in_class = false;
        while i < self.bytes.len() {
            match self.bytes[i] {
                b'\\' => i += 2,
                b'\n' => break,
                b'[' => {
                    in_class = true;
                    i += 1;
                }
                b']' => {
                    in_class = false;
                    i += 1;
                }
                b'/' if !in_class => {
                    i += 1;
                    while i < self.bytes.len() && (self.bytes[i].is_ascii_alphanumeric() || self.bytes[i] == b'_') {
                        i += 1;
                    }
                    self.pos = i;
                    return true;
                }
                _ => i += 1,
            }
        }
        let line = self.line;
        self.diag(start, line, "unterminated regular expression; treated as division");
        false
    }

    fn lex_punct(&mut self) {
        let rest = &self.src[self.pos..];
        for p in PUNCTUATORS {
            if rest.starts_with(p) {
                // `?.5` is a conditional followed by a number.
                if *p == "?." && rest.as_bytes().get(2).is_some_and(|c| c.is_ascii_digit()) {
                    continue;
                }
                self.pos += p.len();
                return;
            }
        }
        let c = self.cur_char().expect("in bounds");
        self.pos += c.len_utf8();
    }
}

/// Tokenizes JavaScript source bytes.
pub fn tokenize_js(source: &[u8], path: &str) -> TokenStream {
    tokenize_js_at(source, path, 0, 1, source.len())
}

/// Tokenizes a fragment embedded in a larger file (e.g. an inline
/// `<script>` body), reporting offsets and lines in file coordinates.
pub fn tokenize_js_at(source: &[u8], path: &str, base_offset: usize, base_line: usize, file_len: usize) -> TokenStream {
    let (text, replacements) = decode_lossy(source);
    let mut lx = Lexer {
        src: &text,
        bytes: text.as_bytes(),
        pos: 0,
        line: 1,
        tokens: Vec::new(),
        diagnostics: Vec::new(),
        replacements: &replacements,
        base_offset,
        base_line,
    };
    if !replacements.is_empty() {
        lx.diag(
            replacements[0],
            1,
            format!("{} invalid UTF-8 byte(s) replaced with U+FFFD", replacements.len()),
        );
    }
    lx.run();
    let Lexer { tokens, diagnostics, .. } = lx;
    TokenStream {
        source_path: path.to_string(),
        tokens,
        diagnostics,
        source_len: file_len,
        text,
    }
}

impl TokenStream {
    /// Tokens other than comments.
    pub fn code(&self) -> Vec<&Token> {
        self.tokens.iter().filter(|t| t.kind != TokenKind::Comment).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use TokenKind::*;

    fn kinds_texts(src: &str) -> Vec<(TokenKind, String)> {
        tokenize_js(src.as_bytes(), "t.js")
            .tokens
            .into_iter()
            .map(|t| (t.kind, t.text))
            .collect()
    }

    #[test]
    fn eval_call() {
        assert_eq!(
            kinds_texts(r#"eval("x")"#),
            vec![
                (Identifier, "eval".into()),
                (Punctuation, "(".into()),
                (StringLiteral, "\"x\"".into()),
                (Punctuation, ")".into()),
            ]
        );
        let ts = tokenize_js(br#"eval("x")"#, "t.js");
        assert_eq!(ts.tokens[2].string_value().as_deref(), Some("x"));
    }

    #[test]
    fn template_literal_is_one_token_with_expression() {
        let src = "const u=`https://${h}/api`";
        let ts = tokenize_js(src.as_bytes(), "t.js");
        let tpl: Vec<_> = ts.tokens.iter().filter(|t| t.kind == TemplateLiteral).collect();
        assert_eq!(tpl.len(), 1);
        assert_eq!(tpl[0].text, "`https://${h}/api`");
        assert_eq!(tpl[0].template_exprs.len(), 1);
        let e = tpl[0].template_exprs[0];
        assert_eq!(&src[e.offset..e.offset + e.len], "h");
    }

    #[test]
    fn nested_template() {
        let src = "x = `a${ `b${c}` + '}' }d`; y";
        let k = kinds_texts(src);
        assert_eq!(k[2], (TemplateLiteral, "`a${ `b${c}` + '}' }d`".into()));
        assert_eq!(k.last().unwrap(), &(Identifier, "y".into()));
    }

    #[test]
    fn sendmessage_chain_is_contiguous() {
        let src = "const response = await new Promise((resolve, reject) => {\n  chrome.runtime.sendMessage({\n    action: 'generateReply',\n  });\n});";
        let texts: Vec<String> = kinds_texts(src).into_iter().map(|(_, t)| t).collect();
        let pos = texts.iter().position(|t| t == "chrome").unwrap();
        assert_eq!(&texts[pos..pos + 5], &["chrome", ".", "runtime", ".", "sendMessage"]);
    }

    #[test]
    fn regex_vs_division() {
        assert_eq!(kinds_texts("a = b / c / d")[3].0, Punctuation);
        let k = kinds_texts("x = /ab+c/gi.test(s)");
        assert_eq!(k[2], (Regex, "/ab+c/gi".into()));
        let k = kinds_texts("return /[/]/.source");
        assert_eq!(k[1], (Regex, "/[/]/".into()));
        let k = kinds_texts("f(x) / 2");
        assert_eq!(k[4], (Punctuation, "/".into()));
    }

    #[test]
    fn comments_and_keywords() {
        let k = kinds_texts("// eval(x)\n/* block */ return new Function");
        assert_eq!(k[0].0, Comment);
        assert_eq!(k[1].0, Comment);
        assert_eq!(k[2], (Keyword, "return".into()));
        assert_eq!(k[3], (Keyword, "new".into()));
        assert_eq!(k[4], (Identifier, "Function".into()));
    }

    #[test]
    fn numbers_and_punctuators() {
        let k = kinds_texts("a>>>=0x1F; b?.c ?? 1.5e-3; c=>.5 ... 10n");
        let texts: Vec<&str> = k.iter().map(|(_, t)| t.as_str()).collect();
        assert_eq!(
            texts,
            vec!["a", ">>>=", "0x1F", ";", "b", "?.", "c", "??", "1.5e-3", ";", "c", "=>", ".5", "...", "10n"]
        );
    }

    #[test]
    fn unterminated_constructs_produce_diagnostics() {
        let ts = tokenize_js(b"var s = 'abc\nvar t = `x${y", "t.js");
        assert_eq!(ts.diagnostics.len(), 2);
        assert!(ts.tokens.iter().any(|t| t.is_ident("t")));
        let ts = tokenize_js(b"/* never closed", "t.js");
        assert_eq!(ts.tokens.len(), 1);
        assert_eq!(ts.diagnostics.len(), 1);
    }

    #[test]
    fn invalid_utf8_is_replaced_and_offsets_stay_raw() {
        let src = b"a\xff\xfeb = 1";
        let ts = tokenize_js(src, "t.js");
        assert!(ts.diagnostics[0].message.contains("invalid UTF-8"));
        let one = ts.tokens.iter().find(|t| t.text == "1").unwrap();
        assert_eq!(one.offset, 7);
        assert_eq!(src[one.offset], b'1');
        for t in &ts.tokens {
            assert!(t.offset < src.len());
        }
    }

    #[test]
    fn lines_are_counted() {
        let ts = tokenize_js(b"a\n`x\ny`\nb", "t.js");
        let lines: Vec<usize> = ts.tokens.iter().map(|t| t.line).collect();
        assert_eq!(lines, vec![1, 2, 4]);
    }

    #[test]
    fn string_value_unescapes() {
        let ts = tokenize_js(br#"'\x68i\u{21}\n' "a\"b""#, "t.js");
        assert_eq!(ts.tokens[0].string_value().unwrap(), "hi!\n");
        assert_eq!(ts.tokens[1].string_value().unwrap(), "a\"b");
    }

    #[test]
    fn embedded_fragment_offsets() {
        let ts = tokenize_js_at(b"\nfoo()", "p.html", 100, 7, 200);
        assert_eq!(ts.tokens[0].offset, 101);
        assert_eq!(ts.tokens[0].line, 8);
    }
}
