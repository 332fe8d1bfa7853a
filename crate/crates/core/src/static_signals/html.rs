// Minimal tag/attribute scanner for packaged HTML.

use std::sync::OnceLock;

use regex::Regex;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Attr {
    pub name: String,
    pub value: String,
    pub offset: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Tag {
    pub name: String,
    pub offset: usize,
    pub attrs: Vec<Attr>,
}

impl Tag {
    pub fn attr(&self, name: &str) -> Option<&Attr> {
        self.attrs.iter().find(|a| a.name == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct InlineScript {
    pub offset: usize,
    pub body: String,
}

fn tag_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"(?s)<([a-zA-Z][a-zA-Z0-9-]*)\b((?:[^>'\x22]|'[^']*'|\x22[^\x22]*\x22)*)>").unwrap())
}

fn attr_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| {
        Regex::new(r#"([^\s=/>"']+)(?:\s*=\s*(?:"([^"]*)"|'([^']*)'|([^\s"'>]+)))?"#).unwrap()
    })
}

fn script_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"(?is)<script\b([^>]*)>(.*?)</script\s*>").unwrap())
}

/// Blanks out `<!-- ... -->` so commented markup is ignored while byte
/// offsets stay valid.
fn strip_comments(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut rest = text;
    while let Some(start) = rest.find("<!--") {
        out.push_str(&rest[..start]);
        let after = &rest[start..];
        let end = after.find("-->").map(|e| e + 3).unwrap_or(after.len());
        for c in after[..end].chars() {
            if c == '\n' {
                out.push('\n');
            } else {
                out.extend(std::iter::repeat(' ').take(c.len_utf8()));
            }
        }
        rest = &after[end..];
    }
    out.push_str(rest);
    out
}

pub(crate) fn scan_tags(text: &str) -> Vec<Tag> {
    let clean = strip_comments(text);
    tag_re()
        .captures_iter(&clean)
        .map(|c| {
            let whole = c.get(0).unwrap();
            let attrs_m = c.get(2).unwrap();
            let attrs = attr_re()
                .captures_iter(attrs_m.as_str())
                .map(|a| {
                    let v = a.get(2).or_else(|| a.get(3)).or_else(|| a.get(4));
                    Attr {
                        name: a[1].to_ascii_lowercase(),
                        value: v.map(|m| m.as_str().to_string()).unwrap_or_default(),
                        offset: attrs_m.start() + v.map(|m| m.start()).unwrap_or_else(|| a.get(1).unwrap().start()),
                    }
                })
                .collect();
            Tag {
                name: c[1].to_ascii_lowercase(),
                offset: whole.start(),
                attrs,
            }
        })
        .collect()
}

/// Bodies of `<script>` elements without a `src` attribute.
pub(crate) fn inline_scripts(text: &str) -> Vec<InlineScript> {
    let clean = strip_comments(text);
    script_re()
        .captures_iter(&clean)
        .filter(|c| !c[1].to_ascii_lowercase().contains("src"))
        .filter_map(|c| {
            let body = c.get(2).unwrap();
            let raw = &text[body.start()..body.end()];
            (!raw.trim().is_empty()).then(|| InlineScript {
                offset: body.start(),
                body: raw.to_string(),
            })
        })
        .collect()
}

/// `src` values of `<script src=...>` elements.
pub(crate) fn script_srcs(text: &str) -> Vec<String> {
    scan_tags(text)
        .into_iter()
        .filter(|t| t.name == "script")
        .filter_map(|t| t.attr("src").map(|a| a.value.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iframe_and_anchor_attributes() {
        let html = "<body>\n  <iframe src='http://photor-extens.uno/' allowfullscreen></iframe>\n<a href=\"https://owhit.com/\" class=\"action-btn pink\" target=\"_blank\">Get</a></body>";
        let tags = scan_tags(html);
        let iframe = tags.iter().find(|t| t.name == "iframe").unwrap();
        let src = iframe.attr("src").unwrap();
        assert_eq!(src.value, "http://photor-extens.uno/");
        assert_eq!(&html[src.offset..src.offset + src.value.len()], src.value);
        assert!(iframe.attr("allowfullscreen").is_some());
        let a = tags.iter().find(|t| t.name == "a").unwrap();
        assert_eq!(a.attr("target").unwrap().value, "_blank");
    }

    #[test]
    fn comments_are_ignored() {
        let html = "<!-- <iframe src='https://x.test/'> -->é<iframe src=\"https://y.test/\">";
        let tags = scan_tags(html);
        assert_eq!(tags.len(), 1);
        let src = tags[0].attr("src").unwrap();
        assert_eq!(&html[src.offset..src.offset + src.value.len()], "https://y.test/");
    }

    #[test]
    fn inline_script_bodies() {
        let html = "<script src=\"a.js\"></script><script>\nfoo()\n</script>";
        let s = inline_scripts(html);
        assert_eq!(s.len(), 1);
        assert_eq!(&html[s[0].offset..s[0].offset + s[0].body.len()], "\nfoo()\n");
        assert_eq!(script_srcs(html), vec!["a.js"]);
    }
}
