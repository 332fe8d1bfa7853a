//! `manifest.json` model and policy lint.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{Map, Value};
use thiserror::Error;

use crate::config::ManifestConfig;
use crate::finding::{Category, Evidence, Severity, SignalFinding};
use crate::util;

pub const MANIFEST_PATH: &str = "manifest.json";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ManifestError {
    #[error("manifest is not valid JSON: {0}")]
    InvalidJson(String),
    #[error("unsupported manifest_version {0}")]
    UnsupportedManifestVersion(i64),
    #[error("manifest is missing required field `{0}`")]
    MissingRequiredField(&'static str),
    #[error("manifest field `{field}` is invalid: {reason}")]
    InvalidField { field: String, reason: String },
}

/// A host match pattern together with the manifest field it came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HostPattern {
    pub pattern: String,
    pub field: String,
}

impl HostPattern {
    /// `<all_urls>` or any pattern whose host part is a bare `*`.
    pub fn is_broad(&self) -> bool {
        is_broad_pattern(&self.pattern)
    }
}

pub fn is_broad_pattern(pattern: &str) -> bool {
    if pattern == "<all_urls>" {
        return true;
    }
    let Some((scheme, rest)) = pattern.split_once("://") else {
        return false;
    };
    let host = rest.split('/').next().unwrap_or("");
    matches!(scheme, "*" | "http" | "https") && host == "*"
}

fn is_host_pattern(p: &str) -> bool {
    p == "<all_urls>" || p.contains("://")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Background {
    ServiceWorker { path: String, module: bool },
    Scripts { paths: Vec<String> },
    Page { path: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RunAt {
    DocumentStart,
    DocumentEnd,
    DocumentIdle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContentScript {
    pub matches: Vec<String>,
    pub js: Vec<String>,
    pub run_at: RunAt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ContentSecurityPolicy {
    Text(String),
    Map(BTreeMap<String, String>),
}

impl ContentSecurityPolicy {
    /// (field path, policy text) pairs.
    pub fn entries(&self) -> Vec<(String, &str)> {
        match self {
            ContentSecurityPolicy::Text(t) => vec![("content_security_policy".to_string(), t.as_str())],
            ContentSecurityPolicy::Map(m) => m
                .iter()
                .map(|(k, v)| (format!("content_security_policy.{k}"), v.as_str()))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchProvider {
    pub search_url: String,
    pub name: Option<String>,
    pub keyword: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SettingsOverrides {
    pub search_provider: Option<SearchProvider>,
    pub homepage: Option<String>,
    pub startup_pages: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Manifest {
    pub manifest_version: u8,
    pub name: String,
    pub version: String,
    pub description: Option<String>,
    /// API permissions (host patterns removed).
    pub permissions: Vec<String>,
    pub host_permissions: Vec<HostPattern>,
    /// Permissions not in the known Chrome API list; recorded, never flagged.
    pub unknown_permissions: Vec<String>,
    pub background: Option<Background>,
    pub content_scripts: Vec<ContentScript>,
    pub action_popup: Option<String>,
    pub content_security_policy: Option<ContentSecurityPolicy>,
    pub settings_overrides: Option<SettingsOverrides>,
    /// Base64 public key for unpacked installs.
    pub key: Option<String>,
    /// Static declarativeNetRequest ruleset files.
    pub dnr_rule_paths: Vec<String>,
    /// Top-level keys this model does not interpret.
    pub extra: Map<String, Value>,
    #[serde(skip)]
    pub raw: Value,
}

const KNOWN_KEYS: &[&str] = &[
    "manifest_version",
    "name",
    "version",
    "description",
    "permissions",
    "host_permissions",
    "background",
    "content_scripts",
    "action",
    "browser_action",
    "page_action",
    "content_security_policy",
    "chrome_settings_overrides",
    "key",
    "declarative_net_request",
];

const KNOWN_PERMISSIONS: &[&str] = &[
    "activeTab", "alarms", "background", "bookmarks", "browsingData", "certificateProvider",
    "clipboardRead", "clipboardWrite", "contentSettings", "contextMenus", "cookies", "debugger",
    "declarativeContent", "declarativeNetRequest", "declarativeNetRequestFeedback",
    "declarativeNetRequestWithHostAccess", "desktopCapture", "documentScan", "downloads",
    "downloads.open", "downloads.ui", "enterprise.deviceAttributes", "enterprise.hardwarePlatform",
    "enterprise.networkingAttributes", "enterprise.platformKeys", "favicon", "fileBrowserHandler",
    "fileSystemProvider", "fontSettings", "gcm", "geolocation", "history", "identity",
    "identity.email", "idle", "loginState", "management", "nativeMessaging", "notifications",
    "offscreen", "pageCapture", "platformKeys", "power", "printerProvider", "printing",
    "printingMetrics", "privacy", "processes", "proxy", "readingList", "runtime", "scripting",
    "search", "sessions", "sidePanel", "storage", "system.cpu", "system.display", "system.memory",
    "system.storage", "tabCapture", "tabGroups", "tabs", "topSites", "tts", "ttsEngine",
    "unlimitedStorage", "userScripts", "vpnProvider", "wallpaper", "webAuthenticationProxy",
    "webNavigation", "webRequest", "webRequestBlocking",
];

fn field_str(obj: &Map<String, Value>, key: &'static str) -> Result<String, ManifestError> {
    match obj.get(key) {
        None | Some(Value::Null) => Err(ManifestError::MissingRequiredField(key)),
        Some(Value::String(s)) => Ok(s.clone()),
        Some(_) => Err(ManifestError::InvalidField {
            field: key.to_string(),
            reason: "expected a string".into(),
        }),
    }
}

fn opt_str(v: Option<&Value>) -> Option<String> {
    v.and_then(Value::as_str).map(str::to_string)
}

fn string_list(v: Option<&Value>, field: &str) -> Result<Vec<String>, ManifestError> {
    match v {
        None | Some(Value::Null) => Ok(Vec::new()),
        Some(Value::Array(items)) => items
            .iter()
            .enumerate()
            .map(|(i, item)| {
                item.as_str().map(str::to_string).ok_or_else(|| ManifestError::InvalidField {
                    field: format!("{field}[{i}]"),
                    reason: "expected a string".into(),
                })
            })
            .collect(),
        Some(_) => Err(ManifestError::InvalidField {
            field: field.to_string(),
            reason: "expected an array of strings".into(),
        }),
    }
}

/// Parses `manifest.json` bytes.
pub fn parse_manifest(json_bytes: &[u8]) -> Result<Manifest, ManifestError> {
    // Chrome tolerates a UTF-8 BOM.
    let bytes = json_bytes.strip_prefix(b"\xEF\xBB\xBF").unwrap_or(json_bytes);
    let raw: Value = serde_json::from_slice(bytes).map_err(|e| ManifestError::InvalidJson(e.to_string()))?;
    let obj = raw
        .as_object()
        .ok_or_else(|| ManifestError::InvalidJson("top level is not an object".into()))?;

    let manifest_version = match obj.get("manifest_version") {
        None | Some(Value::Null) => return Err(ManifestError::MissingRequiredField("manifest_version")),
        Some(v) => match v.as_i64() {
            Some(n @ (2 | 3)) => n as u8,
            Some(n) => return Err(ManifestError::UnsupportedManifestVersion(n)),
            None => {
                return Err(ManifestError::InvalidField {
                    field: "manifest_version".into(),
                    reason: "expected an integer".into(),
                })
            }
        },
    };
    let name = field_str(obj, "name")?;
    let version = field_str(obj, "version")?;

    let mut permissions = Vec::new();
    let mut host_permissions = Vec::new();
    for (i, p) in string_list(obj.get("permissions"), "permissions")?.into_iter().enumerate() {
        if is_host_pattern(&p) {
            host_permissions.push(HostPattern {
                pattern: p,
                field: format!("permissions[{i}]"),
            });
        } else {
            permissions.push(p);
        }
    }
    for (i, p) in string_list(obj.get("host_permissions"), "host_permissions")?
        .into_iter()
        .enumerate()
    {
        host_permissions.push(HostPattern {
            pattern: p,
            field: format!("host_permissions[{i}]"),
        });
    }
    let unknown_permissions = permissions
        .iter()
        .filter(|p| !KNOWN_PERMISSIONS.contains(&p.as_str()))
        .cloned()
        .collect();

    let background = parse_background(obj.get("background"))?;
    let content_scripts = parse_content_scripts(obj.get("content_scripts"))?;
    let action_popup = ["action", "browser_action", "page_action"]
        .iter()
        .find_map(|k| opt_str(obj.get(*k).and_then(|a| a.get("default_popup"))));

    let content_security_policy = match obj.get("content_security_policy") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(ContentSecurityPolicy::Text(s.clone())),
        Some(Value::Object(m)) => Some(ContentSecurityPolicy::Map(
            m.iter()
                .filter_map(|(k, v)| v.as_str().map(|s| (k.clone(), s.to_string())))
                .collect(),
        )),
        Some(_) => {
            return Err(ManifestError::InvalidField {
                field: "content_security_policy".into(),
                reason: "expected a string or an object".into(),
            })
        }
    };

    let settings_overrides = parse_settings_overrides(obj.get("chrome_settings_overrides"))?;

    let dnr_rule_paths = obj
        .get("declarative_net_request")
        .and_then(|d| d.get("rule_resources"))
        .and_then(Value::as_array)
        .map(|rs| rs.iter().filter_map(|r| opt_str(r.get("path"))).collect())
        .unwrap_or_default();

    let extra = obj
        .iter()
        .filter(|(k, _)| !KNOWN_KEYS.contains(&k.as_str()))
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect();

    Ok(Manifest {
        manifest_version,
        name,
        version,
        description: opt_str(obj.get("description")),
        permissions,
        host_permissions,
        unknown_permissions,
        background,
        content_scripts,
        action_popup,
        content_security_policy,
        settings_overrides,
        key: opt_str(obj.get("key")),
        dnr_rule_paths,
        extra,
        raw,
    })
}

fn parse_background(v: Option<&Value>) -> Result<Option<Background>, ManifestError> {
    let Some(Value::Object(bg)) = v else {
        return Ok(None);
    };
    if let Some(sw) = opt_str(bg.get("service_worker")) {
        let module = bg.get("type").and_then(Value::as_str) == Some("module");
        return Ok(Some(Background::ServiceWorker { path: sw, module }));
    }
    if bg.contains_key("scripts") {
        return Ok(Some(Background::Scripts {
            paths: string_list(bg.get("scripts"), "background.scripts")?,
        }));
    }
    Ok(opt_str(bg.get("page")).map(|path| Background::Page { path }))
}

fn parse_content_scripts(v: Option<&Value>) -> Result<Vec<ContentScript>, ManifestError> {
    let Some(v) = v else { return Ok(Vec::new()) };
    let Some(items) = v.as_array() else {
        return Err(ManifestError::InvalidField {
            field: "content_scripts".into(),
            reason: "expected an array".into(),
        });
    };
    items
        .iter()
        .enumerate()
        .map(|(i, cs)| {
            let matches = string_list(cs.get("matches"), &format!("content_scripts[{i}].matches"))?;
            if matches.is_empty() {
                return Err(ManifestError::InvalidField {
                    field: format!("content_scripts[{i}].matches"),
                    reason: "must be a non-empty list".into(),
                });
            }
            let js = string_list(cs.get("js"), &format!("content_scripts[{i}].js"))?;
            let run_at = match cs.get("run_at").and_then(Value::as_str) {
                Some("document_start") => RunAt::DocumentStart,
                Some("document_end") => RunAt::DocumentEnd,
                _ => RunAt::DocumentIdle,
            };
            Ok(ContentScript { matches, js, run_at })
        })
        .collect()
}

fn parse_settings_overrides(v: Option<&Value>) -> Result<Option<SettingsOverrides>, ManifestError> {
    let Some(Value::Object(so)) = v else {
        return Ok(None);
    };
    let search_provider = match so.get("search_provider") {
        Some(Value::Object(sp)) => {
            let search_url = opt_str(sp.get("search_url")).ok_or_else(|| ManifestError::InvalidField {
                field: "chrome_settings_overrides.search_provider.search_url".into(),
                reason: "missing".into(),
            })?;
            let placeholders = search_url.matches("{searchTerms}").count();
            if placeholders != 1 {
                return Err(ManifestError::InvalidField {
                    field: "chrome_settings_overrides.search_provider.search_url".into(),
                    reason: format!("expected exactly one {{searchTerms}} placeholder, found {placeholders}"),
                });
            }
            Some(SearchProvider {
                search_url,
                name: opt_str(sp.get("name")),
                keyword: opt_str(sp.get("keyword")),
            })
        }
        _ => None,
    };
    Ok(Some(SettingsOverrides {
        search_provider,
        homepage: opt_str(so.get("homepage")),
        startup_pages: string_list(so.get("startup_pages"), "chrome_settings_overrides.startup_pages")?,
    }))
}

impl Manifest {
    pub fn has_broad_hosts(&self) -> bool {
        self.host_permissions.iter().any(HostPattern::is_broad)
    }

    pub fn first_broad_host(&self) -> Option<&HostPattern> {
        self.host_permissions.iter().find(|h| h.is_broad())
    }

    pub fn permission_field(&self, permission: &str) -> Option<String> {
        let perms = self.raw.get("permissions")?.as_array()?;
        perms
            .iter()
            .position(|p| p.as_str() == Some(permission))
            .map(|i| format!("permissions[{i}]"))
    }

    /// Background script paths (service worker, scripts list).
    pub fn background_scripts(&self) -> Vec<String> {
        match &self.background {
            Some(Background::ServiceWorker { path, .. }) => vec![path.clone()],
            Some(Background::Scripts { paths }) => paths.clone(),
            _ => Vec::new(),
        }
    }

    pub fn content_script_paths(&self) -> Vec<String> {
        let mut out: Vec<String> = self.content_scripts.iter().flat_map(|c| c.js.iter().cloned()).collect();
        out.dedup();
        out
    }
}

/// Resolves a field path such as `content_scripts[0].matches[1]` against
/// the raw manifest document.
pub fn resolve_field<'a>(raw: &'a Value, path: &str) -> Option<&'a Value> {
    let mut cur = raw;
    for seg in path.split('.') {
        let (key, indices) = match seg.find('[') {
            Some(i) => (&seg[..i], &seg[i..]),
            None => (seg, ""),
        };
        if !key.is_empty() {
            cur = cur.get(key)?;
        }
        for idx in indices.split('[').filter(|s| !s.is_empty()) {
            let n: usize = idx.trim_end_matches(']').parse().ok()?;
            cur = cur.get(n)?;
        }
    }
    Some(cur)
}

fn manifest_finding(rule: &str, severity: Severity, field: &str, value: &str, message: String) -> SignalFinding {
    SignalFinding::new(
        rule,
        Category::Static,
        severity,
        Evidence::field(MANIFEST_PATH, field).with_value(value),
        message,
    )
}

/// Lints a manifest against the policy and capability rules.
pub fn lint_manifest(m: &Manifest, cfg: &ManifestConfig) -> Vec<SignalFinding> {
    let mut out = Vec::new();
    let broad = m.first_broad_host();

    if let Some(h) = broad {
        out.push(manifest_finding(
            "BROAD_HOSTS",
            Severity::Medium,
            &h.field,
            &h.pattern,
            format!("host access to every site via {}", h.pattern),
        ));
    }

    if let Some(sp) = m.settings_overrides.as_ref().and_then(|s| s.search_provider.as_ref()) {
        let probe = sp.search_url.replace("{searchTerms}", "x");
        let host = util::http_host(&probe);
        let allowed = host
            .as_deref()
            .is_some_and(|h| util::host_in_list(h, &cfg.search_allowlist));
        if !allowed {
            out.push(manifest_finding(
                "QUERY_HIJACK_SURFACE",
                Severity::High,
                "chrome_settings_overrides.search_provider.search_url",
                &sp.search_url,
                format!(
                    "default search provider overridden to non-allowlisted host {}",
                    host.as_deref().unwrap_or("<unparseable>")
                ),
            ));
        }
    }

    if let Some(h) = broad {
        for perm in ["declarativeNetRequest", "declarativeNetRequestWithHostAccess"] {
            if m.permissions.iter().any(|p| p == perm) {
                let field = m.permission_field(perm).unwrap_or_else(|| "permissions".into());
                out.push(manifest_finding(
                    "DNR_BROAD",
                    Severity::Medium,
                    &field,
                    perm,
                    format!("{perm} combined with broad host access ({})", h.pattern),
                ));
                break;
            }
        }
        if m.permissions.iter().any(|p| p == "scripting") {
            let field = m.permission_field("scripting").unwrap_or_else(|| "permissions".into());
            out.push(manifest_finding(
                "SCRIPTING_BROAD",
                Severity::Medium,
                &field,
                "scripting",
                format!("scripting combined with broad host access ({})", h.pattern),
            ));
        }
    }

    if m.manifest_version == 2 {
        out.push(manifest_finding(
            "MV2_DEPRECATED",
            Severity::Info,
            "manifest_version",
            "2",
            "Manifest V2 is deprecated".into(),
        ));
    }

    if let Some(csp) = &m.content_security_policy {
        for (field, text) in csp.entries() {
            if text.to_ascii_lowercase().contains("'unsafe-eval'") || text.contains("unsafe-eval") {
                let severity = if m.manifest_version == 3 { Severity::High } else { Severity::Medium };
                out.push(manifest_finding(
                    "CSP_UNSAFE_EVAL",
                    severity,
                    &field,
                    text,
                    "content security policy allows unsafe-eval".into(),
                ));
            }
        }
    }

    out.sort_by(|a, b| {
        b.severity
            .cmp(&a.severity)
            .then_with(|| a.rule_id.cmp(&b.rule_id))
            .then_with(|| a.evidence.cmp(&b.evidence))
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lint(json: &str) -> Vec<SignalFinding> {
        lint_manifest(&parse_manifest(json.as_bytes()).unwrap(), &ManifestConfig::default())
    }

    fn ids(f: &[SignalFinding]) -> Vec<&str> {
        f.iter().map(|f| f.rule_id.as_str()).collect()
    }

    #[test]
    fn minimal_manifest() {
        let m = parse_manifest(br#"{"manifest_version":3,"name":"a","version":"1"}"#).unwrap();
        assert!(m.permissions.is_empty());
        assert!(m.host_permissions.is_empty());
        assert_eq!(m.version, "1");
        assert!(lint_manifest(&m, &ManifestConfig::default()).is_empty());
    }

    #[test]
    fn mv2_host_patterns_are_normalized() {
        let m = parse_manifest(
            br#"{"manifest_version":2,"name":"a","version":"1","permissions":["tabs","https://*/*"]}"#,
        )
        .unwrap();
        assert_eq!(m.permissions, vec!["tabs"]);
        assert_eq!(m.host_permissions.len(), 1);
        assert_eq!(m.host_permissions[0].pattern, "https://*/*");
        assert_eq!(m.host_permissions[0].field, "permissions[1]");
        assert!(m.has_broad_hosts());
    }

    #[test]
    fn version_4_is_unsupported() {
        let err = parse_manifest(br#"{"manifest_version":4,"name":"a","version":"1"}"#).unwrap_err();
        assert_eq!(err, ManifestError::UnsupportedManifestVersion(4));
    }

    #[test]
    fn required_fields() {
        assert_eq!(
            parse_manifest(br#"{"name":"a","version":"1"}"#).unwrap_err(),
            ManifestError::MissingRequiredField("manifest_version")
        );
        assert_eq!(
            parse_manifest(br#"{"manifest_version":3,"version":"1"}"#).unwrap_err(),
            ManifestError::MissingRequiredField("name")
        );
        assert_eq!(
            parse_manifest(br#"{"manifest_version":3,"name":"a"}"#).unwrap_err(),
            ManifestError::MissingRequiredField("version")
        );
        assert!(matches!(parse_manifest(b"{nope"), Err(ManifestError::InvalidJson(_))));
    }

    #[test]
    fn content_scripts_need_matches() {
        let err = parse_manifest(
            br#"{"manifest_version":3,"name":"a","version":"1","content_scripts":[{"matches":[],"js":["c.js"]}]}"#,
        )
        .unwrap_err();
        assert!(matches!(err, ManifestError::InvalidField { .. }));
    }

    #[test]
    fn search_url_needs_exactly_one_placeholder() {
        let err = parse_manifest(
            br#"{"manifest_version":3,"name":"a","version":"1","chrome_settings_overrides":{"search_provider":{"search_url":"https://x.com/?q=1"}}}"#,
        )
        .unwrap_err();
        assert!(matches!(err, ManifestError::InvalidField { .. }));
    }

    #[test]
    fn unknown_keys_and_permissions_are_kept() {
        let m = parse_manifest(
            br#"{"manifest_version":3,"name":"a","version":"1","permissions":["fancyNewApi"],"icons":{"16":"i.png"}}"#,
        )
        .unwrap();
        assert_eq!(m.unknown_permissions, vec!["fancyNewApi"]);
        assert!(m.extra.contains_key("icons"));
        assert!(lint_manifest(&m, &ManifestConfig::default()).is_empty());
    }

    #[test]
    fn hijack_surface_on_non_allowlisted_search_host() {
        let f = lint(
            r#"{"manifest_version":3,"name":"Chat AI","version":"1",
            "chrome_settings_overrides":{"search_provider":{"name":"x","keyword":"x",
            "search_url":"https://chatgptforchrome.com/?q={searchTerms}"}}}"#,
        );
        assert_eq!(ids(&f), vec!["QUERY_HIJACK_SURFACE"]);
        assert_eq!(f[0].severity, Severity::High);
    }

    #[test]
    fn allowlisted_search_host_is_quiet() {
        let f = lint(
            r#"{"manifest_version":3,"name":"p","version":"1",
            "chrome_settings_overrides":{"search_provider":{"search_url":"https://www.perplexity.ai/search?q={searchTerms}"}}}"#,
        );
        assert!(f.is_empty());
    }

    #[test]
    fn broad_hosts_plus_scripting() {
        // Rule table enumerated by hand: (a) fires on <all_urls>, (d) fires
        // on scripting + broad, nothing else applies.
        let f = lint(
            r#"{"manifest_version":3,"name":"a","version":"1",
            "host_permissions":["<all_urls>"],"permissions":["scripting"]}"#,
        );
        assert_eq!(ids(&f), vec!["BROAD_HOSTS", "SCRIPTING_BROAD"]);
    }

    #[test]
    fn dnr_with_broad_hosts() {
        let f = lint(
            r#"{"manifest_version":3,"name":"a","version":"1",
            "host_permissions":["*://*/*"],"permissions":["declarativeNetRequest"]}"#,
        );
        assert_eq!(ids(&f), vec!["BROAD_HOSTS", "DNR_BROAD"]);
    }

    #[test]
    fn csp_unsafe_eval_severity_depends_on_version() {
        let v3 = lint(
            r#"{"manifest_version":3,"name":"a","version":"1",
            "content_security_policy":{"extension_pages":"script-src 'self' 'unsafe-eval'"}}"#,
        );
        assert_eq!(ids(&v3), vec!["CSP_UNSAFE_EVAL"]);
        assert_eq!(v3[0].severity, Severity::High);
        let v2 = lint(
            r#"{"manifest_version":2,"name":"a","version":"1",
            "content_security_policy":"script-src 'self' 'unsafe-eval'; object-src 'self'"}"#,
        );
        assert_eq!(ids(&v2), vec!["CSP_UNSAFE_EVAL", "MV2_DEPRECATED"]);
        assert_eq!(v2[0].severity, Severity::Medium);
        assert_eq!(v2[1].severity, Severity::Info);
    }

    #[test]
    fn evidence_fields_resolve_to_manifest_locations() {
        let json = r#"{"manifest_version":2,"name":"a","version":"1",
            "permissions":["tabs","<all_urls>","scripting","declarativeNetRequest"],
            "content_security_policy":"script-src 'unsafe-eval'",
            "chrome_settings_overrides":{"search_provider":{"search_url":"https://evil.example/?q={searchTerms}"}}}"#;
        let m = parse_manifest(json.as_bytes()).unwrap();
        let findings = lint_manifest(&m, &ManifestConfig::default());
        assert_eq!(findings.len(), 6);
        for f in &findings {
            let field = f.evidence.field.as_deref().unwrap();
            let v = resolve_field(&m.raw, field).unwrap_or_else(|| panic!("{field} does not resolve"));
            let rendered = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            assert_eq!(Some(rendered.as_str()), f.evidence.value.as_deref(), "{}", f.rule_id);
        }
    }

    #[test]
    fn lint_order_is_severity_then_rule() {
        let json = r#"{"manifest_version":2,"name":"a","version":"1",
            "permissions":["<all_urls>","scripting"],
            "chrome_settings_overrides":{"search_provider":{"search_url":"https://evil.example/?q={searchTerms}"}}}"#;
        let f = lint(json);
        assert_eq!(ids(&f), vec!["QUERY_HIJACK_SURFACE", "BROAD_HOSTS", "SCRIPTING_BROAD", "MV2_DEPRECATED"]);
        assert_eq!(f, lint(json));
    }

    #[test]
    fn allowlist_only_suppresses_hijack_rule() {
        let json = r#"{"manifest_version":2,"name":"a","version":"1",
            "permissions":["<all_urls>","scripting","declarativeNetRequest"],
            "content_security_policy":"script-src 'unsafe-eval'",
            "chrome_settings_overrides":{"search_provider":{"search_url":"https://evil.example/?q={searchTerms}"}}}"#;
        let m = parse_manifest(json.as_bytes()).unwrap();
        let strict = lint_manifest(&m, &ManifestConfig { search_allowlist: vec![] });
        let lenient = lint_manifest(
            &m,
            &ManifestConfig {
                search_allowlist: vec!["evil.example".into()],
            },
        );
        let strict_ids: Vec<_> = ids(&strict).into_iter().filter(|r| *r != "QUERY_HIJACK_SURFACE").collect();
        assert_eq!(strict_ids, ids(&lenient));
        assert!(ids(&strict).contains(&"QUERY_HIJACK_SURFACE"));
    }
}
