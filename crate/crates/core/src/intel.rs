//! Offline domain reputation and store metadata anomalies.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::sync::Mutex;

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

use crate::config::{IntelConfig, MetadataConfig};
use crate::finding::{Category, Evidence, Severity, SignalFinding};
use crate::util;

#[derive(Debug, thiserror::Error)]
pub enum IntelError {
    #[error("{file}:{line}: {reason}")]
    FeedParse { file: String, line: usize, reason: String },
    #[error("host {0} is on both the allowlist and the blocklist")]
    AllowBlockConflict(String),
    #[error("invalid host name {0:?}")]
    InvalidHost(String),
    #[error("metadata record {line}: {reason}")]
    MetadataParse { line: usize, reason: String },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DomainFlag {
    Nrd,
    Blocklisted,
    Allowlisted,
    LowReputation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DomainVerdict {
    pub host: String,
    pub flags: BTreeSet<DomainFlag>,
    pub nrd_age_days: Option<i64>,
    /// (positives, engines) from a remote lookup.
    pub detection_ratio: Option<(u32, u32)>,
}

impl DomainVerdict {
    pub fn has(&self, flag: DomainFlag) -> bool {
        self.flags.contains(&flag)
    }

    /// Flagged by any negative signal.
    pub fn is_suspicious(&self) -> bool {
        self.has(DomainFlag::Nrd) || self.has(DomainFlag::Blocklisted) || self.has(DomainFlag::LowReputation)
    }
}

/// Result of a remote reputation query.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemoteVerdict {
    pub positives: u32,
    pub engines: u32,
}

/// A reputation service: host in, detection counts out.
pub trait RemoteLookup: Send + Sync {
    fn query(&self, host: &str) -> Result<RemoteVerdict, String>;
}

/// Replays recorded responses; counts calls so tests can observe caching.
#[derive(Debug, Default)]
pub struct RecordedLookup {
    pub responses: BTreeMap<String, RemoteVerdict>,
    calls: std::sync::atomic::AtomicUsize,
}

impl RecordedLookup {
    pub fn new(responses: impl IntoIterator<Item = (String, RemoteVerdict)>) -> Self {
        RecordedLookup {
            responses: responses.into_iter().collect(),
            calls: Default::default(),
        }
    }

    /// Loads `{"host": {"positives": 1, "engines": 97}, ...}`.
    pub fn from_json(bytes: &[u8]) -> Result<Self, serde_json::Error> {
        Ok(Self::new(serde_json::from_slice::<BTreeMap<String, RemoteVerdict>>(bytes)?))
    }

    pub fn calls(&self) -> usize {
        self.calls.load(std::sync::atomic::Ordering::SeqCst)
    }
}

impl RemoteLookup for RecordedLookup {
    fn query(&self, host: &str) -> Result<RemoteVerdict, String> {
        self.calls.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
        Ok(self.responses.get(host).copied().unwrap_or(RemoteVerdict { positives: 0, engines: 0 }))
    }
}

#[derive(Debug, Clone, Copy)]
struct CacheEntry {
    verdict: RemoteVerdict,
    fetched: NaiveDate,
}

/// Loaded feeds plus the remote lookup cache.
pub struct DomainIntel {
    pub nrd_feed: BTreeMap<String, NaiveDate>,
    pub blocklist: BTreeSet<String>,
    pub allowlist: BTreeSet<String>,
    pub remote_lookups_enabled: bool,
    cfg: IntelConfig,
    remote: Option<Box<dyn RemoteLookup>>,
    cache: Mutex<BTreeMap<String, CacheEntry>>,
}

impl std::fmt::Debug for DomainIntel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("DomainIntel")
            .field("nrd_feed", &self.nrd_feed.len())
            .field("blocklist", &self.blocklist.len())
            .field("allowlist", &self.allowlist.len())
            .field("remote_lookups_enabled", &self.remote_lookups_enabled)
            .finish()
    }
}

fn feed_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn normalize_entry(s: &str) -> String {
    s.trim().trim_end_matches('.').to_ascii_lowercase()
}

fn valid_host(host: &str) -> bool {
    !host.is_empty()
        && host.len() <= 253
        && host.split('.').all(|l| {
            !l.is_empty()
                && l.len() <= 63
                && !l.starts_with('-')
                && !l.ends_with('-')
                && l.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'-' || b == b'_')
        })
}

fn parse_list(name: &str, text: &str) -> Result<BTreeSet<String>, IntelError> {
    let mut out = BTreeSet::new();
    for (line, l) in feed_lines(text) {
        let entry = normalize_entry(l);
        if !valid_host(entry.trim_start_matches("*.")) {
            return Err(IntelError::FeedParse {
                file: name.into(),
                line,
                reason: format!("not a host name: {l:?}"),
            });
        }
        out.insert(entry);
    }
    Ok(out)
}

fn parse_nrd(name: &str, text: &str) -> Result<BTreeMap<String, NaiveDate>, IntelError> {
    let mut out: BTreeMap<String, NaiveDate> = BTreeMap::new();
    for (n, (line, l)) in feed_lines(text).enumerate() {
        let err = |reason: String| IntelError::FeedParse {
            file: name.into(),
            line,
            reason,
        };
        let (host, date) = l.split_once(',').ok_or_else(|| err("expected host,date".into()))?;
        let host = normalize_entry(host);
        let date = match NaiveDate::parse_from_str(date.trim(), "%Y-%m-%d") {
            Ok(d) => d,
            // Optional header row.
            Err(_) if n == 0 => continue,
            Err(e) => return Err(err(format!("bad date {:?}: {e}", date.trim()))),
        };
        if !valid_host(&host) {
            return Err(err(format!("not a host name: {host:?}")));
        }
        let slot = out.entry(host).or_insert(date);
        if date > *slot {
            *slot = date;
        }
    }
    Ok(out)
}

impl DomainIntel {
    /// Intel with no feeds: no flag ever fires.
    pub fn empty(cfg: &IntelConfig) -> Self {
        DomainIntel {
            nrd_feed: BTreeMap::new(),
            blocklist: BTreeSet::new(),
            allowlist: BTreeSet::new(),
            remote_lookups_enabled: cfg.remote_lookups_enabled,
            cfg: cfg.clone(),
            remote: None,
            cache: Mutex::new(BTreeMap::new()),
        }
    }

    /// Builds intel from feed contents (NRD CSV, blocklist, allowlist).
    pub fn from_feeds(nrd: &str, blocklist: &str, allowlist: &str, cfg: &IntelConfig) -> Result<Self, IntelError> {
        let mut intel = Self::empty(cfg);
        intel.nrd_feed = parse_nrd("nrd", nrd)?;
        intel.blocklist = parse_list("blocklist", blocklist)?;
        intel.allowlist = parse_list("allowlist", allowlist)?;
        let strip = |s: &String| s.trim_start_matches("*.").to_string();
        let blocked: BTreeSet<String> = intel.blocklist.iter().map(strip).collect();
        if let Some(h) = intel.allowlist.iter().map(strip).find(|h| blocked.contains(h)) {
            return Err(IntelError::AllowBlockConflict(h));
        }
        Ok(intel)
    }

    /// Attaches a remote lookup implementation (used only when enabled).
    pub fn with_remote(mut self, remote: Box<dyn RemoteLookup>) -> Self {
        self.remote = Some(remote);
        self
    }

    pub fn config(&self) -> &IntelConfig {
        &self.cfg
    }

    /// Reputation of `host` as of a given date.
    pub fn lookup(&self, host: &str, as_of: NaiveDate) -> Result<DomainVerdict, IntelError> {
        let host = normalize_entry(host);
        if !valid_host(&host) {
            return Err(IntelError::InvalidHost(host));
        }
        let mut v = DomainVerdict {
            host: host.clone(),
            flags: BTreeSet::new(),
            nrd_age_days: None,
            detection_ratio: None,
        };
        let allow: Vec<&String> = self.allowlist.iter().collect();
        if util::host_in_list(&host, &allow) {
            v.flags.insert(DomainFlag::Allowlisted);
            return Ok(v);
        }

        // The registration date of the host or its nearest listed parent.
        let mut cand = host.as_str();
        loop {
            if let Some(reg) = self.nrd_feed.get(cand) {
                let age = (as_of - *reg).num_days();
                v.nrd_age_days = Some(age);
                if (0..self.cfg.nrd_cutoff_days).contains(&age) {
                    v.flags.insert(DomainFlag::Nrd);
                }
                break;
            }
            match cand.split_once('.') {
                Some((_, parent)) if parent.contains('.') => cand = parent,
                _ => break,
            }
        }

        let block: Vec<&String> = self.blocklist.iter().collect();
        if util::host_in_list(&host, &block) {
            v.flags.insert(DomainFlag::Blocklisted);
        }

        if self.remote_lookups_enabled {
            if let Some(remote) = &self.remote {
                if let Some(r) = self.remote_verdict(remote.as_ref(), &host, as_of) {
                    v.detection_ratio = Some((r.positives, r.engines));
                    if r.positives >= self.cfg.low_reputation_min_positives {
                        v.flags.insert(DomainFlag::LowReputation);
                    }
                }
            }
        }
        Ok(v)
    }

    fn remote_verdict(&self, remote: &dyn RemoteLookup, host: &str, as_of: NaiveDate) -> Option<RemoteVerdict> {
        let mut cache = self.cache.lock().expect("intel cache lock");
        if let Some(e) = cache.get(host) {
            let age = (as_of - e.fetched).num_days();
            if (0..self.cfg.cache_ttl_days).contains(&age) {
                return Some(e.verdict);
            }
        }
        let verdict = remote.query(host).ok()?;
        cache.insert(host.to_string(), CacheEntry { verdict, fetched: as_of });
        Some(verdict)
    }
}

fn read(path: &Path) -> Result<String, IntelError> {
    std::fs::read_to_string(path).map_err(|source| IntelError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Loads the three feed files. Missing paths count as empty feeds.
pub fn load_feeds(
    nrd_path: Option<&Path>,
    blocklist_path: Option<&Path>,
    allowlist_path: Option<&Path>,
    cfg: &IntelConfig,
) -> Result<DomainIntel, IntelError> {
    let get = |p: Option<&Path>| p.map(read).transpose().map(Option::unwrap_or_default);
    DomainIntel::from_feeds(&get(nrd_path)?, &get(blocklist_path)?, &get(allowlist_path)?, cfg)
}

/// Loads `nrd.csv`, `blocklist.txt` and `allowlist.txt` from a directory,
/// plus `remote.json` recorded responses when present.
pub fn load_feeds_dir(dir: &Path, cfg: &IntelConfig) -> Result<DomainIntel, IntelError> {
    let opt = |name: &str| {
        let p = dir.join(name);
        p.exists().then_some(p)
    };
    let intel = load_feeds(
        opt("nrd.csv").as_deref(),
        opt("blocklist.txt").as_deref(),
        opt("allowlist.txt").as_deref(),
        cfg,
    )?;
    match opt("remote.json") {
        Some(p) => {
            let bytes = std::fs::read(&p).map_err(|source| IntelError::Io {
                path: p.display().to_string(),
                source,
            })?;
            let rec = RecordedLookup::from_json(&bytes).map_err(|e| IntelError::FeedParse {
                file: "remote.json".into(),
                line: e.line(),
                reason: e.to_string(),
            })?;
            Ok(intel.with_remote(Box::new(rec)))
        }
        None => Ok(intel),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AuthorStatus {
    Live,
    RemovedPolicy,
    RemovedMalware,
    Unmaintained,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuthorHistoryEntry {
    pub extension_id: String,
    pub status: AuthorStatus,
}

/// Store listing data for one extension.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetadataRecord {
    pub extension_id: String,
    pub publish_date: NaiveDate,
    pub last_update_date: NaiveDate,
    pub install_count: u64,
    pub rating: f64,
    pub review_count: u64,
    pub author_id: String,
    #[serde(default)]
    pub author_history: Vec<AuthorHistoryEntry>,
}

/// Parses JSONL metadata records.
pub fn parse_metadata_jsonl(bytes: &[u8]) -> Result<Vec<MetadataRecord>, IntelError> {
    let text = String::from_utf8_lossy(bytes);
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let err = |reason: String| IntelError::MetadataParse { line: i + 1, reason };
        let rec: MetadataRecord = serde_json::from_str(line).map_err(|e| err(e.to_string()))?;
        if !(0.0..=5.0).contains(&rec.rating) {
            return Err(err(format!("rating {} outside [0, 5]", rec.rating)));
        }
        out.push(rec);
    }
    Ok(out)
}

fn meta_evidence(rec: &MetadataRecord, field: &str, value: String) -> Evidence {
    Evidence::field(format!("metadata:{}", rec.extension_id), field).with_value(value)
}

/// Store-listing anomalies.
pub fn judge_metadata(rec: &MetadataRecord, as_of: NaiveDate, cfg: &MetadataConfig) -> Vec<SignalFinding> {
    let mut out = Vec::new();
    let age = (as_of - rec.publish_date).num_days();
    if (0..cfg.new_extension_days).contains(&age) {
        out.push(SignalFinding::new(
            "NEW_EXTENSION",
            Category::Metadata,
            Severity::Info,
            meta_evidence(rec, "publish_date", rec.publish_date.to_string()),
            format!("published {age} days before {as_of}"),
        ));
    }
    if rec.install_count < cfg.low_install_max && rec.rating >= cfg.high_rating_min && rec.review_count >= cfg.min_reviews {
        out.push(SignalFinding::new(
            "LOW_INSTALLS_HIGH_RATING",
            Category::Metadata,
            Severity::Medium,
            meta_evidence(rec, "install_count", rec.install_count.to_string()),
            format!(
                "{} installs with a {:.1} rating over {} reviews",
                rec.install_count, rec.rating, rec.review_count
            ),
        ));
    }
    for h in rec.author_history.iter().filter(|h| h.status == AuthorStatus::RemovedMalware) {
        out.push(SignalFinding::new(
            "AUTHOR_HISTORY",
            Category::Metadata,
            Severity::High,
            meta_evidence(rec, "author_history", h.extension_id.clone()),
            format!("author {} previously published {}, removed as malware", rec.author_id, h.extension_id),
        ));
    }
    let since_update = (as_of - rec.last_update_date).num_days();
    if (0..cfg.recent_update_days).contains(&since_update) {
        out.push(SignalFinding::new(
            "RECENT_UPDATE",
            Category::Metadata,
            Severity::Info,
            meta_evidence(rec, "last_update_date", rec.last_update_date.to_string()),
            format!("updated {since_update} days before {as_of}"),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> NaiveDate {
        NaiveDate::parse_from_str(s, "%Y-%m-%d").unwrap()
    }

    #[test]
    fn empty_feeds_never_flag() {
        let intel = DomainIntel::from_feeds("", "", "", &IntelConfig::default()).unwrap();
        let v = intel.lookup("api.glimmerbloop.top", d("2025-01-01")).unwrap();
        assert!(v.flags.is_empty());
    }

    #[test]
    fn blocklist_suffix_match() {
        let intel = DomainIntel::from_feeds("", "glimmerbloop.top\n*.evil.com\n", "", &IntelConfig::default()).unwrap();
        let as_of = d("2025-01-01");
        assert!(intel.lookup("api.glimmerbloop.top", as_of).unwrap().has(DomainFlag::Blocklisted));
        assert!(intel.lookup("a.b.evil.com", as_of).unwrap().has(DomainFlag::Blocklisted));
        assert!(!intel.lookup("notevil.com", as_of).unwrap().has(DomainFlag::Blocklisted));
    }

    #[test]
    fn allow_block_conflict() {
        let r = DomainIntel::from_feeds("", "x.com", "# c\nx.com", &IntelConfig::default());
        assert!(matches!(r, Err(IntelError::AllowBlockConflict(h)) if h == "x.com"));
    }

    #[test]
    fn nrd_age_and_header_and_duplicates() {
        let nrd = "host,registered\nnew.top,2024-12-01\nnew.top,2024-12-22\n";
        let intel = DomainIntel::from_feeds(nrd, "", "", &IntelConfig::default()).unwrap();
        let v = intel.lookup("api.new.top", d("2025-01-01")).unwrap();
        assert_eq!(v.nrd_age_days, Some(10));
        assert!(v.has(DomainFlag::Nrd));
        let old = intel.lookup("new.top", d("2026-01-01")).unwrap();
        assert!(!old.has(DomainFlag::Nrd));
    }

    #[test]
    fn feed_errors_carry_line_numbers() {
        match DomainIntel::from_feeds("a.com,2024-01-01\nb.com,notadate", "", "", &IntelConfig::default()) {
            Err(IntelError::FeedParse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn allowlist_suppresses_other_flags() {
        let intel = DomainIntel::from_feeds("good.com,2024-12-30", "", "good.com", &IntelConfig::default()).unwrap();
        let v = intel.lookup("good.com", d("2025-01-01")).unwrap();
        assert_eq!(v.flags, BTreeSet::from([DomainFlag::Allowlisted]));
    }

    #[test]
    fn remote_single_engine_hit_is_not_low_reputation() {
        let cfg = IntelConfig {
            remote_lookups_enabled: true,
            ..IntelConfig::default()
        };
        let rec = RecordedLookup::new([(
            "api.gosupersonic.email".to_string(),
            RemoteVerdict { positives: 1, engines: 97 },
        )]);
        let intel = DomainIntel::from_feeds("", "", "", &cfg).unwrap().with_remote(Box::new(rec));
        let v = intel.lookup("api.gosupersonic.email", d("2025-01-01")).unwrap();
        assert_eq!(v.detection_ratio, Some((1, 97)));
        assert!(!v.has(DomainFlag::LowReputation));
    }

    #[test]
    fn offline_mode_never_queries() {
        let intel = DomainIntel::from_feeds("", "", "", &IntelConfig::default())
            .unwrap()
            .with_remote(Box::new(RecordedLookup::default()));
        let v = intel.lookup("x.com", d("2025-01-01")).unwrap();
        assert_eq!(v.detection_ratio, None);
    }

    #[test]
    fn invalid_host() {
        let intel = DomainIntel::empty(&IntelConfig::default());
        assert!(matches!(intel.lookup("bad host", d("2025-01-01")), Err(IntelError::InvalidHost(_))));
    }

    fn record() -> MetadataRecord {
        MetadataRecord {
            extension_id: "a".repeat(32),
            publish_date: d("2024-01-01"),
            last_update_date: d("2024-06-01"),
            install_count: 1_000_000,
            rating: 4.4,
            review_count: 1000,
            author_id: "dev".into(),
            author_history: vec![],
        }
    }

    fn ids(f: &[SignalFinding]) -> Vec<&str> {
        f.iter().map(|x| x.rule_id.as_str()).collect()
    }

    #[test]
    fn metadata_rules() {
        let cfg = MetadataConfig::default();
        let as_of = d("2025-01-01");
        assert!(judge_metadata(&record(), as_of, &cfg).is_empty());

        let supersonic = MetadataRecord {
            install_count: 26,
            rating: 5.0,
            review_count: 4,
            ..record()
        };
        assert_eq!(ids(&judge_metadata(&supersonic, as_of, &cfg)), ["LOW_INSTALLS_HIGH_RATING"]);

        let author = MetadataRecord {
            author_history: vec![AuthorHistoryEntry {
                extension_id: "b".repeat(32),
                status: AuthorStatus::RemovedMalware,
            }],
            ..record()
        };
        let f = judge_metadata(&author, as_of, &cfg);
        assert_eq!(ids(&f), ["AUTHOR_HISTORY"]);
        assert_eq!(f[0].severity, Severity::High);

        let fresh = MetadataRecord {
            publish_date: d("2024-12-01"),
            last_update_date: d("2024-12-25"),
            ..record()
        };
        assert_eq!(ids(&judge_metadata(&fresh, as_of, &cfg)), ["NEW_EXTENSION", "RECENT_UPDATE"]);
    }
}
