//! Embedded rule catalog.

use serde::Serialize;

use crate::finding::{Category, Severity};

pub const RULE_CATALOG_VERSION: &str = "1.0";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RuleInfo {
    pub rule_id: &'static str,
    pub category: Category,
    pub severity: Severity,
    pub description: &'static str,
    /// Attacker technique the rule is aimed at.
    pub ttp: &'static str,
}

macro_rules! rule {
    ($id:literal, $cat:ident, $sev:ident, $desc:literal, $ttp:literal) => {
        RuleInfo {
            rule_id: $id,
            category: Category::$cat,
            severity: Severity::$sev,
            description: $desc,
            ttp: $ttp,
        }
    };
}

/// Every rule the detectors can emit, sorted by rule_id.
pub static CATALOG: &[RuleInfo] = &[
    rule!("AFFILIATE_PA", Behavioural, Medium,
        "Extension-driven navigation to a paid-acquisition affiliate URL (utm_medium=pa or configured marker)",
        "Affiliate fraud via malicious redirection"),
    rule!("AUTHOR_HISTORY", Metadata, High,
        "Author previously published an extension removed as malware",
        "Author reputation"),
    rule!("BAIT_AND_SWITCH_ENDPOINT", Static, High,
        "Update introduces a new remote host together with re-obfuscation or new network capability",
        "Bait-and-switch update"),
    rule!("BROAD_HOSTS", Static, Medium,
        "Host access to every site (<all_urls> or *://*/*)",
        "Risky API usage"),
    rule!("C2_BEACON", Network, Medium,
        "Regular, low-variance request cadence to a single endpoint",
        "C2 communication"),
    rule!("CSP_UNSAFE_EVAL", Static, High,
        "Content security policy allows 'unsafe-eval' (policy violation under MV3)",
        "Remote code execution enablement"),
    rule!("DNR_BROAD", Static, Medium,
        "declarativeNetRequest permission combined with broad host access",
        "Traffic interception"),
    rule!("DNR_DYNAMIC_RULES", Static, High,
        "declarativeNetRequest rules redirecting traffic to hosts outside the package",
        "Traffic interception"),
    rule!("DYNAMIC_CODE", Static, High,
        "Code generation from strings (eval, Function, string timers, document.write of scripts)",
        "Remote code execution enablement"),
    rule!("EXEC_SCRIPT_BROAD", Static, Medium,
        "scripting.executeScript used by a package with broad host access",
        "Risky API usage"),
    rule!("EXFIL_POST", Network, High,
        "POST/PUT carrying sensitive content to a non-allowlisted host",
        "Data exfiltration"),
    rule!("EXTERNAL_LINK_FUNNEL", Static, Low,
        "Packaged HTML links out to an off-package domain",
        "PUP delivery via malicious redirection"),
    rule!("IFRAME_EXTERNAL", Static, Medium,
        "Packaged HTML frames an absolute external URL",
        "Affiliate fraud via malicious redirection"),
    rule!("LOW_INSTALLS_HIGH_RATING", Metadata, Medium,
        "Near-perfect rating on a tiny install base",
        "Artificial reviews"),
    rule!("MSG_EXFIL_FLOW", Static, High,
        "Content-script message reaches a background network sink with an external URL",
        "Adversary-in-the-browser"),
    rule!("MV2_DEPRECATED", Static, Info,
        "Manifest V2 extension",
        "Platform deprecation"),
    rule!("NEW_EXTENSION", Metadata, Info,
        "Recently published extension",
        "Extension age"),
    rule!("OBFUSCATION", Static, Medium,
        "Script metrics consistent with packing, string encoding or mangling",
        "Obfuscated code"),
    rule!("ONINSTALLED_REDIRECT", Static, Medium,
        "Navigation created inside a runtime.onInstalled listener",
        "Affiliate fraud via malicious redirection"),
    rule!("ONINSTALL_IFRAME_REDIRECT", Static, High,
        "Install-time tab opens a packaged page that frames an external domain",
        "Affiliate fraud via malicious redirection"),
    rule!("PERMISSION_ESCALATION", Static, Medium,
        "Update adds broad hosts or powerful permissions",
        "Bait-and-switch update"),
    rule!("PUP_FUNNEL", Behavioural, High,
        "External link funnel corroborated by domain intel or an observed redirect chain",
        "PUP delivery via malicious redirection"),
    rule!("QUERY_HIJACK", Behavioural, High,
        "Search or prompt query routed through a third-party host before reaching the provider",
        "Query / prompt hijacking"),
    rule!("QUERY_HIJACK_SURFACE", Static, High,
        "Search provider override pointing at a non-allowlisted host",
        "Query / prompt hijacking"),
    rule!("RECENT_UPDATE", Metadata, Info,
        "Extension updated very recently",
        "Extension age"),
    rule!("REMOTE_CODE_EXEC", Static, High,
        "Remotely fetched content reaches a code sink or script element",
        "Remote code fetching"),
    rule!("REOBFUSCATION", Static, Medium,
        "Update rewrote a file beyond recognition and the result looks obfuscated",
        "Bait-and-switch update"),
    rule!("SCRIPTING_BROAD", Static, Medium,
        "scripting permission combined with broad host access",
        "Risky API usage"),
    rule!("SUSPICIOUS_DOMAIN", Network, Medium,
        "Contacted or embedded host is newly registered, blocklisted or low reputation",
        "Suspicious domains"),
];

pub fn lookup(rule_id: &str) -> Option<&'static RuleInfo> {
    CATALOG
        .binary_search_by(|r| r.rule_id.cmp(rule_id))
        .ok()
        .map(|i| &CATALOG[i])
}
