//! The single configuration document.
//!
//! Every threshold, weight, allowlist and rule toggle lives here. A config
//! file only needs to name the values it overrides; everything else falls
//! back to [`Config::default`].

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::finding::{Category, Severity};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid config: {0}")]
    Parse(#[from] toml::de::Error),
    #[error("invalid config value: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub package: PackageConfig,
    pub manifest: ManifestConfig,
    pub static_signals: StaticConfig,
    pub delta: DeltaConfig,
    pub netlog: NetlogConfig,
    pub intel: IntelConfig,
    pub metadata: MetadataConfig,
    pub scoring: ScoringConfig,
    pub rules: RuleToggles,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PackageConfig {
    pub max_entry_bytes: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ManifestConfig {
    /// Registrable domains a search_provider override may point at.
    pub search_allowlist: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ObfuscationThresholds {
    pub entropy_bits_per_char: f64,
    pub mean_identifier_length: f64,
    pub base64_blob_count: usize,
    pub hex_escape_density: f64,
    pub max_line_length: usize,
    /// How many of the five conditions must hold.
    pub min_conditions: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct StaticConfig {
    pub obfuscation: ObfuscationThresholds,
    /// Substrings that mark a vendor license banner in the first 200 chars.
    pub license_markers: Vec<String>,
    /// Object keys treated as message discriminators.
    pub discriminator_keys: Vec<String>,
    /// Call depth followed from a message handler into helper functions.
    pub max_call_depth: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DeltaConfig {
    pub reobfuscation_threshold: f64,
    /// Files above this many tokens fall back to line-set Jaccard.
    pub max_exact_tokens: usize,
    /// Permissions that give an update new network reach.
    pub network_permissions: Vec<String>,
    /// Permissions whose addition counts as escalation.
    pub risky_permissions: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SensitivePattern {
    pub name: String,
    pub pattern: String,
    #[serde(default = "one")]
    pub min_matches: usize,
}

fn one() -> usize {
    1
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AffiliateMarker {
    pub param: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct BeaconConfig {
    pub min_requests: usize,
    pub max_cv: f64,
    pub min_window_ms: i64,
    pub telemetry_allowlist: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct NetlogConfig {
    /// Search / AI providers a hijack chain terminates at.
    pub provider_allowlist: Vec<String>,
    /// Query parameters that carry user input.
    pub query_params: Vec<String>,
    pub body_excerpt_bytes: usize,
    /// Hosts a POST may legitimately send sensitive content to.
    pub exfil_allowlist: Vec<String>,
    pub sensitive_patterns: Vec<SensitivePattern>,
    pub affiliate_markers: Vec<AffiliateMarker>,
    pub beacon: BeaconConfig,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct IntelConfig {
    pub nrd_cutoff_days: i64,
    pub low_reputation_min_positives: u32,
    pub cache_ttl_days: i64,
    pub remote_lookups_enabled: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct MetadataConfig {
    pub new_extension_days: i64,
    pub low_install_max: u64,
    pub high_rating_min: f64,
    pub min_reviews: u64,
    pub recent_update_days: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SeverityWeights {
    pub info: f64,
    pub low: f64,
    pub medium: f64,
    pub high: f64,
    pub critical: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CategoryWeights {
    pub metadata: f64,
    pub r#static: f64,
    pub network: f64,
    pub behavioural: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ScoringConfig {
    pub severity_weights: SeverityWeights,
    pub category_weights: CategoryWeights,
    pub suspicious_threshold: f64,
    pub malicious_threshold: f64,
    pub corroboration_factor: f64,
    /// Distinct categories holding a medium-or-worse finding needed for the bonus.
    pub corroboration_min_categories: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RuleToggles {
    pub disabled: BTreeSet<String>,
}

fn strings(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

impl Default for PackageConfig {
    fn default() -> Self {
        PackageConfig {
            max_entry_bytes: 32 * 1024 * 1024,
        }
    }
}

impl Default for ManifestConfig {
    fn default() -> Self {
        ManifestConfig {
            search_allowlist: strings(&[
                "google.com",
                "bing.com",
                "duckduckgo.com",
                "yahoo.com",
                "perplexity.ai",
                "openai.com",
            ]),
        }
    }
}

impl Default for ObfuscationThresholds {
    fn default() -> Self {
        ObfuscationThresholds {
            entropy_bits_per_char: 5.2,
            mean_identifier_length: 2.2,
            base64_blob_count: 3,
            hex_escape_density: 0.05,
            max_line_length: 5000,
            min_conditions: 2,
        }
    }
}

impl Default for StaticConfig {
    fn default() -> Self {
        StaticConfig {
            obfuscation: ObfuscationThresholds::default(),
            license_markers: strings(&["@license", "/*!", "copyright", "(c)", "mit license", "licensed under"]),
            discriminator_keys: strings(&["action", "type", "cmd", "command", "method", "msg", "name"]),
            max_call_depth: 4,
        }
    }
}

impl Default for DeltaConfig {
    fn default() -> Self {
        DeltaConfig {
            reobfuscation_threshold: 0.35,
            max_exact_tokens: 200_000,
            network_permissions: strings(&[
                "webRequest",
                "webRequestBlocking",
                "declarativeNetRequest",
                "declarativeNetRequestWithHostAccess",
                "proxy",
            ]),
            risky_permissions: strings(&[
                "scripting",
                "declarativeNetRequest",
                "declarativeNetRequestWithHostAccess",
                "webRequest",
                "webRequestBlocking",
                "cookies",
                "history",
                "debugger",
                "proxy",
                "management",
                "nativeMessaging",
                "clipboardRead",
                "privacy",
                "contentSettings",
            ]),
        }
    }
}

impl Default for BeaconConfig {
    fn default() -> Self {
        BeaconConfig {
            min_requests: 5,
            max_cv: 0.25,
            min_window_ms: 10 * 60 * 1000,
            telemetry_allowlist: strings(&[
                "google-analytics.com",
                "googletagmanager.com",
                "sentry.io",
                "clients2.google.com",
                "update.googleapis.com",
            ]),
        }
    }
}

impl Default for NetlogConfig {
    fn default() -> Self {
        NetlogConfig {
            provider_allowlist: strings(&[
                "google.com",
                "bing.com",
                "duckduckgo.com",
                "yahoo.com",
                "perplexity.ai",
                "openai.com",
                "chatgpt.com",
            ]),
            query_params: strings(&["q", "query", "prompt", "s"]),
            body_excerpt_bytes: 4096,
            exfil_allowlist: Vec::new(),
            sensitive_patterns: vec![
                SensitivePattern {
                    name: "otp_near_verification_vocabulary".into(),
                    pattern: r"(?i)\b(?:code|verify|verification|otp|pin|passcode|one[- ]time|2fa|security)\b[^0-9]{0,40}\b\d{6,8}\b".into(),
                    min_matches: 1,
                },
                SensitivePattern {
                    name: "otp_before_verification_vocabulary".into(),
                    pattern: r"(?i)\b\d{6,8}\b[^0-9]{0,20}\b(?:is your|verification|code|otp|passcode)\b".into(),
                    min_matches: 1,
                },
                SensitivePattern {
                    name: "email_address_density".into(),
                    pattern: r"[A-Za-z0-9._%+-]+@[A-Za-z0-9.-]+\.[A-Za-z]{2,}".into(),
                    min_matches: 3,
                },
                SensitivePattern {
                    name: "long_quoted_message_body".into(),
                    pattern: r#"(?i)"(?:content|message|body|text|email_content|prompt|mail)"\s*:\s*"[^"]{200,}"#.into(),
                    min_matches: 1,
                },
                SensitivePattern {
                    name: "credential_field".into(),
                    pattern: r#"(?i)"(?:password|passwd|session|cookie|authorization)"\s*:\s*"[^"]{4,}"#.into(),
                    min_matches: 1,
                },
            ],
            affiliate_markers: vec![AffiliateMarker {
                param: "utm_medium".into(),
                value: "pa".into(),
            }],
            beacon: BeaconConfig::default(),
        }
    }
}

impl Default for IntelConfig {
    fn default() -> Self {
        IntelConfig {
            nrd_cutoff_days: 90,
            low_reputation_min_positives: 3,
            cache_ttl_days: 7,
            remote_lookups_enabled: false,
        }
    }
}

impl Default for MetadataConfig {
    fn default() -> Self {
        MetadataConfig {
            new_extension_days: 90,
            low_install_max: 100,
            high_rating_min: 4.8,
            min_reviews: 3,
            recent_update_days: 14,
        }
    }
}

impl Default for SeverityWeights {
    fn default() -> Self {
        SeverityWeights {
            info: 0.0,
            low: 1.0,
            medium: 3.0,
            high: 7.0,
            critical: 15.0,
        }
    }
}

impl SeverityWeights {
    pub fn weight(&self, s: Severity) -> f64 {
        match s {
            Severity::Info => self.info,
            Severity::Low => self.low,
            Severity::Medium => self.medium,
            Severity::High => self.high,
            Severity::Critical => self.critical,
        }
    }
}

impl Default for CategoryWeights {
    fn default() -> Self {
        CategoryWeights {
            metadata: 1.0,
            r#static: 1.0,
            network: 1.0,
            behavioural: 1.0,
        }
    }
}

impl CategoryWeights {
    pub fn weight(&self, c: Category) -> f64 {
        match c {
            Category::Metadata => self.metadata,
            Category::Static => self.r#static,
            Category::Network => self.network,
            Category::Behavioural => self.behavioural,
        }
    }
}

impl Default for ScoringConfig {
    fn default() -> Self {
        ScoringConfig {
            severity_weights: SeverityWeights::default(),
            category_weights: CategoryWeights::default(),
            suspicious_threshold: 5.0,
            malicious_threshold: 12.0,
            corroboration_factor: 1.5,
            corroboration_min_categories: 2,
        }
    }
}

impl Default for Config {
    fn default() -> Self {
        Config {
            package: PackageConfig::default(),
            manifest: ManifestConfig::default(),
            static_signals: StaticConfig::default(),
            delta: DeltaConfig::default(),
            netlog: NetlogConfig::default(),
            intel: IntelConfig::default(),
            metadata: MetadataConfig::default(),
            scoring: ScoringConfig::default(),
            rules: RuleToggles::default(),
        }
    }
}

impl Config {
    pub fn from_toml_str(text: &str) -> Result<Config, ConfigError> {
        let cfg: Config = toml::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Config, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Config::from_toml_str(&text)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        for pat in &self.netlog.sensitive_patterns {
            regex::Regex::new(&pat.pattern)
                .map_err(|e| ConfigError::Invalid(format!("sensitive pattern {}: {e}", pat.name)))?;
        }
        let s = &self.scoring;
        if s.suspicious_threshold > s.malicious_threshold {
            return Err(ConfigError::Invalid(
                "suspicious_threshold must not exceed malicious_threshold".into(),
            ));
        }
        if s.corroboration_factor < 1.0 {
            return Err(ConfigError::Invalid("corroboration_factor must be >= 1".into()));
        }
        for id in &self.rules.disabled {
            if crate::rules::lookup(id).is_none() {
                return Err(ConfigError::Invalid(format!("unknown rule in rules.disabled: {id}")));
            }
        }
        Ok(())
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string_pretty(self).expect("config serializes")
    }

    pub fn rule_enabled(&self, rule_id: &str) -> bool {
        !self.rules.disabled.contains(rule_id)
    }

    /// Hex SHA-256 over the canonical serialization; changes with any value.
    pub fn fingerprint(&self) -> String {
        let json = serde_json::to_vec(self).expect("config serializes");
        let digest = Sha256::digest(&json);
        crate::util::hex(&digest[..16])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_round_trips_through_toml() {
        let cfg = Config::default();
        let text = cfg.to_toml_string();
        assert_eq!(Config::from_toml_str(&text).unwrap(), cfg);
    }

    #[test]
    fn partial_document_overrides_only_named_values() {
        let cfg = Config::from_toml_str("[scoring]\nmalicious_threshold = 20.0\n").unwrap();
        assert_eq!(cfg.scoring.malicious_threshold, 20.0);
        assert_eq!(cfg.scoring.suspicious_threshold, 5.0);
        assert_eq!(cfg.delta.reobfuscation_threshold, 0.35);
    }

    #[test]
    fn fingerprint_tracks_every_change() {
        let base = Config::default();
        let mut a = base.clone();
        a.scoring.malicious_threshold = 12.5;
        let mut b = base.clone();
        b.rules.disabled.insert("C2_BEACON".into());
        let mut c = base.clone();
        c.scoring.severity_weights.low = 2.0;
        let mut d = base.clone();
        d.static_signals.obfuscation.entropy_bits_per_char = 5.3;
        let fps: BTreeSet<String> = [&base, &a, &b, &c, &d].iter().map(|c| c.fingerprint()).collect();
        assert_eq!(fps.len(), 5);
        assert_eq!(base.fingerprint(), Config::default().fingerprint());
    }

    #[test]
    fn rejects_unknown_disabled_rule() {
        let err = Config::from_toml_str("[rules]\ndisabled = [\"NOT_A_RULE\"]\n").unwrap_err();
        assert!(err.to_string().contains("NOT_A_RULE"));
    }

    #[test]
    fn rejects_unknown_keys() {
        assert!(Config::from_toml_str("[scoring]\nbogus = 1\n").is_err());
    }
}
