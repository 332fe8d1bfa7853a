// Small shared helpers.

use url::Url;

pub(crate) fn hex(bytes: &[u8]) -> String {
    use std::fmt::Write;
    let mut out = String::with_capacity(bytes.len() * 2);
    for b in bytes {
        let _ = write!(out, "{b:02x}");
    }
    out
}

/// True when `host` equals `domain` or is a subdomain of it.
pub(crate) fn host_matches_domain(host: &str, domain: &str) -> bool {
    let host = host.trim_end_matches('.');
    let domain = domain.trim_start_matches("*.").trim_end_matches('.');
    if host.eq_ignore_ascii_case(domain) {
        return true;
    }
    host.len() > domain.len()
        && host[host.len() - domain.len()..].eq_ignore_ascii_case(domain)
        && host.as_bytes()[host.len() - domain.len() - 1] == b'.'
}

pub(crate) fn host_in_list<S: AsRef<str>>(host: &str, list: &[S]) -> bool {
    list.iter().any(|d| host_matches_domain(host, d.as_ref()))
}

/// Parses an absolute http(s) URL; anything else yields `None`.
pub(crate) fn parse_http_url(s: &str) -> Option<Url> {
    let trimmed = s.trim();
    let lower = trimmed.get(..8).unwrap_or(trimmed).to_ascii_lowercase();
    if !(lower.starts_with("http://") || lower.starts_with("https://")) {
        return None;
    }
    let url = Url::parse(trimmed).ok()?;
    match url.host_str() {
        Some(h) if !h.is_empty() && !h.contains('*') => Some(url),
        _ => None,
    }
}

pub(crate) fn http_host(s: &str) -> Option<String> {
    parse_http_url(s).and_then(|u| u.host_str().map(|h| h.to_ascii_lowercase()))
}

/// Byte offset -> 1-based line number.
pub(crate) fn line_of(text: &[u8], offset: usize) -> usize {
    let end = offset.min(text.len());
    text[..end].iter().filter(|&&b| b == b'\n').count() + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suffix_matching_respects_label_boundaries() {
        assert!(host_matches_domain("evil.com", "evil.com"));
        assert!(host_matches_domain("a.evil.com", "evil.com"));
        assert!(host_matches_domain("a.b.evil.com", "*.evil.com"));
        assert!(!host_matches_domain("notevil.com", "evil.com"));
        assert!(!host_matches_domain("evil.com.au", "evil.com"));
    }

    #[test]
    fn http_url_parsing() {
        assert_eq!(http_host("https://API.Example.com/x").as_deref(), Some("api.example.com"));
        assert!(http_host("chrome-extension://abc/x.html").is_none());
        assert!(http_host("https://*/*").is_none());
        assert!(http_host("popup.html").is_none());
    }
}
