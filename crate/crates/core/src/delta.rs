//! Version-to-version comparison for bait-and-switch updates.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::{Config, DeltaConfig};
use crate::finding::{Category, Evidence, Severity, SignalFinding};
use crate::manifest::{is_broad_pattern, MANIFEST_PATH};
use crate::package::ExtensionPackage;
use crate::static_signals::{self, Endpoint, PackageAnalysis, TokenKind};

/// Memory budget for the bit-parallel LCS match table.
const LCS_TABLE_BUDGET_BYTES: usize = 256 << 20;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VersionDelta {
    pub old_version: String,
    pub new_version: String,
    pub files_added: Vec<String>,
    pub files_removed: Vec<String>,
    pub files_modified: Vec<String>,
    /// Every path present in both versions.
    pub per_file_similarity: BTreeMap<String, f64>,
    /// Paths whose similarity is the line-set approximation.
    pub approximate: Vec<String>,
    pub endpoints_added: Vec<Endpoint>,
    pub endpoints_removed: Vec<Endpoint>,
    /// Hosts referenced anywhere in the old version.
    pub old_endpoint_hosts: Vec<String>,
    pub permissions_added: Vec<String>,
    pub permissions_removed: Vec<String>,
    pub hosts_added: Vec<String>,
    pub hosts_removed: Vec<String>,
    pub reobfuscation_suspects: Vec<String>,
    pub warnings: Vec<String>,
}

impl VersionDelta {
    pub fn endpoint_urls_added(&self) -> BTreeSet<&str> {
        self.endpoints_added.iter().map(|e| e.url_or_host.as_str()).collect()
    }
}

/// Numeric component-wise version comparison; missing components are 0.
pub fn compare_versions(a: &str, b: &str) -> Ordering {
    let parse = |s: &str| -> Vec<u64> {
        s.split('.')
            .map(|c| c.trim().parse::<u64>().unwrap_or(0))
            .collect()
    };
    let (x, y) = (parse(a), parse(b));
    for k in 0..x.len().max(y.len()) {
        let o = x.get(k).copied().unwrap_or(0).cmp(&y.get(k).copied().unwrap_or(0));
        if o != Ordering::Equal {
            return o;
        }
    }
    Ordering::Equal
}

/// Length of the longest common subsequence, bit-parallel over `a`.
///
/// Returns None when the match table would exceed the memory budget.
pub fn lcs_len<T: Eq + std::hash::Hash>(a: &[T], b: &[T]) -> Option<usize> {
    let (a, b) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if a.is_empty() {
        return Some(0);
    }
    let words = a.len().div_ceil(64);
    let in_b: HashSet<&T> = b.iter().collect();
    let mut symbols: HashMap<&T, usize> = HashMap::new();
    for x in a.iter().filter(|x| in_b.contains(x)) {
        let n = symbols.len();
        symbols.entry(x).or_insert(n);
    }
    if symbols.len().saturating_mul(words).saturating_mul(8) > LCS_TABLE_BUDGET_BYTES {
        return None;
    }
    let mut table = vec![0u64; symbols.len() * words];
    for (i, x) in a.iter().enumerate() {
        if let Some(&s) = symbols.get(x) {
            table[s * words + i / 64] |= 1 << (i % 64);
        }
    }
    let mut v = vec![u64::MAX; words];
    for y in b {
        let Some(&s) = symbols.get(y) else { continue };
        let m = &table[s * words..(s + 1) * words];
        let mut carry = false;
        for w in 0..words {
            let old = v[w];
            let u = old & m[w];
            let (s1, c1) = old.overflowing_add(u);
            let (s2, c2) = s1.overflowing_add(carry as u64);
            carry = c1 || c2;
            v[w] = s2 | (old & !m[w]);
        }
    }
    let tail = a.len() % 64;
    let zeros: usize = v
        .iter()
        .enumerate()
        .map(|(w, &x)| {
            let mask = if w == words - 1 && tail != 0 { (1u64 << tail) - 1 } else { u64::MAX };
            (!x & mask).count_ones() as usize
        })
        .sum();
    Some(zeros)
}

/// 2·LCS / (|a| + |b|); 1.0 for two empty sequences.
pub fn lcs_similarity<T: Eq + std::hash::Hash>(a: &[T], b: &[T]) -> Option<f64> {
    if a.is_empty() && b.is_empty() {
        return Some(1.0);
    }
    lcs_len(a, b).map(|l| 2.0 * l as f64 / (a.len() + b.len()) as f64)
}

/// Jaccard index over the sets of trimmed non-empty lines.
pub fn line_jaccard(a: &str, b: &str) -> f64 {
    let set = |s: &str| -> BTreeSet<String> {
        s.lines().map(str::trim).filter(|l| !l.is_empty()).map(String::from).collect()
    };
    let (x, y) = (set(a), set(b));
    let union = x.union(&y).count();
    if union == 0 {
        return 1.0;
    }
    x.intersection(&y).count() as f64 / union as f64
}

fn tokens_of(path: &str, bytes: &[u8]) -> Option<Vec<(TokenKind, String)>> {
    if static_signals::is_js_path(path) {
        let ts = static_signals::tokenize_js(bytes, path);
        return Some(ts.tokens.into_iter().map(|t| (t.kind, t.text)).collect());
    }
    let text = std::str::from_utf8(bytes).ok()?;
    Some(
        text.split_whitespace()
            .map(|w| (TokenKind::Identifier, w.to_string()))
            .collect(),
    )
}

/// Similarity of two versions of one file and whether it is approximate.
pub fn file_similarity(path: &str, old: &[u8], new: &[u8], max_exact_tokens: usize) -> (f64, bool) {
    if old == new {
        return (1.0, false);
    }
    let (Some(a), Some(b)) = (tokens_of(path, old), tokens_of(path, new)) else {
        // Binary content that changed.
        return (0.0, false);
    };
    let exact = if a.len().max(b.len()) > max_exact_tokens { None } else { lcs_similarity(&a, &b) };
    let (sim, approx) = match exact {
        Some(s) => (s, false),
        None => (
            line_jaccard(&String::from_utf8_lossy(old), &String::from_utf8_lossy(new)),
            true,
        ),
    };
    // Bytes differ, so the file is modified even if no token changed.
    (sim.min(1.0 - f64::EPSILON), approx)
}

fn host_patterns(pkg: &ExtensionPackage) -> BTreeSet<String> {
    let mut out: BTreeSet<String> = pkg.manifest.host_permissions.iter().map(|h| h.pattern.clone()).collect();
    for cs in &pkg.manifest.content_scripts {
        out.extend(cs.matches.iter().cloned());
    }
    out
}

fn unique_by_url(list: Vec<Endpoint>) -> BTreeMap<String, Endpoint> {
    let mut out = BTreeMap::new();
    for e in list {
        out.entry(e.url_or_host.clone()).or_insert(e);
    }
    out
}

/// Structural diff between two versions of one extension.
pub fn diff_versions(old: &ExtensionPackage, new: &ExtensionPackage, cfg: &Config) -> VersionDelta {
    let mut warnings = Vec::new();
    if compare_versions(&old.version, &new.version) != Ordering::Less {
        warnings.push(format!(
            "VersionOrder: old version {} is not lower than new version {}",
            old.version, new.version
        ));
    }
    if let (Some(a), Some(b)) = (&old.extension_id, &new.extension_id) {
        if a != b {
            warnings.push(format!("extension IDs differ: {a} vs {b}"));
        }
    }

    let old_paths: BTreeSet<&String> = old.files.keys().collect();
    let new_paths: BTreeSet<&String> = new.files.keys().collect();
    let files_added: Vec<String> = new_paths.difference(&old_paths).map(|s| s.to_string()).collect();
    let files_removed: Vec<String> = old_paths.difference(&new_paths).map(|s| s.to_string()).collect();
    let common: Vec<&String> = old_paths.intersection(&new_paths).copied().collect();

    let max_tokens = cfg.delta.max_exact_tokens;
    let sims: Vec<(String, f64, bool)> = common
        .par_iter()
        .map(|p| {
            let (s, approx) = file_similarity(p, &old.files[*p], &new.files[*p], max_tokens);
            (p.to_string(), s, approx)
        })
        .collect();
    let files_modified: Vec<String> = common
        .iter()
        .filter(|p| old.files[**p] != new.files[**p])
        .map(|p| p.to_string())
        .collect();
    let approximate = sims.iter().filter(|s| s.2).map(|s| s.0.clone()).collect();
    let per_file_similarity: BTreeMap<String, f64> = sims.iter().map(|s| (s.0.clone(), s.1)).collect();

    let old_analysis = PackageAnalysis::new(old);
    let new_analysis = PackageAnalysis::new(new);
    let mut reobfuscation_suspects = Vec::new();
    for p in &files_modified {
        if per_file_similarity[p] >= cfg.delta.reobfuscation_threshold {
            continue;
        }
        if let Some(ts) = new_analysis.file(p) {
            if static_signals::measure_obfuscation(ts, &cfg.static_signals).1.is_some() {
                reobfuscation_suspects.push(p.clone());
            }
        }
    }

    let old_eps = unique_by_url(static_signals::extract_endpoints(old, &old_analysis.streams));
    let new_eps = unique_by_url(static_signals::extract_endpoints(new, &new_analysis.streams));
    let endpoints_added = new_eps.iter().filter(|(u, _)| !old_eps.contains_key(*u)).map(|(_, e)| e.clone()).collect();
    let endpoints_removed = old_eps.iter().filter(|(u, _)| !new_eps.contains_key(*u)).map(|(_, e)| e.clone()).collect();
    let old_endpoint_hosts: BTreeSet<String> = old_eps.values().filter_map(Endpoint::host).collect();

    let set_diff = |a: &BTreeSet<String>, b: &BTreeSet<String>| a.difference(b).cloned().collect::<Vec<_>>();
    let old_perms: BTreeSet<String> = old.manifest.permissions.iter().cloned().collect();
    let new_perms: BTreeSet<String> = new.manifest.permissions.iter().cloned().collect();
    let (old_hosts, new_hosts) = (host_patterns(old), host_patterns(new));

    VersionDelta {
        old_version: old.version.clone(),
        new_version: new.version.clone(),
        files_added,
        files_removed,
        files_modified,
        per_file_similarity,
        approximate,
        endpoints_added,
        endpoints_removed,
        old_endpoint_hosts: old_endpoint_hosts.into_iter().collect(),
        permissions_added: set_diff(&new_perms, &old_perms),
        permissions_removed: set_diff(&old_perms, &new_perms),
        hosts_added: set_diff(&new_hosts, &old_hosts),
        hosts_removed: set_diff(&old_hosts, &new_hosts),
        reobfuscation_suspects,
        warnings,
    }
}

/// Findings implied by a delta.
pub fn judge_delta(d: &VersionDelta, cfg: &DeltaConfig) -> Vec<SignalFinding> {
    let mut out = Vec::new();
    let adds_network = d.permissions_added.iter().any(|p| cfg.network_permissions.contains(p))
        || d.hosts_added.iter().any(|h| is_broad_pattern(h));

    let mut reported = BTreeSet::new();
    for e in &d.endpoints_added {
        let Some(host) = e.host() else { continue };
        if d.old_endpoint_hosts.contains(&host) {
            continue;
        }
        let in_suspect = d.reobfuscation_suspects.contains(&e.path);
        if !(in_suspect || adds_network) || !reported.insert(host.clone()) {
            continue;
        }
        let why = if in_suspect { "in a re-obfuscated file" } else { "alongside new network permissions" };
        out.push(SignalFinding::new(
            "BAIT_AND_SWITCH_ENDPOINT",
            Category::Static,
            Severity::High,
            Evidence {
                path: Some(e.path.clone()),
                offset: Some(e.offset),
                value: Some(e.url_or_host.clone()),
                ..Default::default()
            },
            format!(
                "version {} adds endpoint host {host} {why} (absent from {})",
                d.new_version, d.old_version
            ),
        ));
    }

    for p in d.permissions_added.iter().filter(|p| cfg.risky_permissions.contains(p)) {
        out.push(SignalFinding::new(
            "PERMISSION_ESCALATION",
            Category::Static,
            Severity::Medium,
            Evidence::field(MANIFEST_PATH, "permissions").with_value(p.clone()),
            format!("version {} adds permission {p}", d.new_version),
        ));
    }
    for h in d.hosts_added.iter().filter(|h| is_broad_pattern(h)) {
        out.push(SignalFinding::new(
            "PERMISSION_ESCALATION",
            Category::Static,
            Severity::Medium,
            Evidence::field(MANIFEST_PATH, "host_permissions").with_value(h.clone()),
            format!("version {} adds broad host access {h}", d.new_version),
        ));
    }
    for p in &d.reobfuscation_suspects {
        let sim = d.per_file_similarity.get(p).copied().unwrap_or(0.0);
        out.push(SignalFinding::new(
            "REOBFUSCATION",
            Category::Static,
            Severity::Medium,
            Evidence {
                path: Some(p.clone()),
                value: Some(format!("{sim:.3}")),
                ..Default::default()
            },
            format!("{p} was rewritten (similarity {sim:.3}) and now reads as obfuscated"),
        ));
    }
    crate::finding::sort_canonical(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_lcs(a: &[u32], b: &[u32]) -> usize {
        let mut dp = vec![vec![0usize; b.len() + 1]; a.len() + 1];
        for i in 1..=a.len() {
            for j in 1..=b.len() {
                dp[i][j] = if a[i - 1] == b[j - 1] { dp[i - 1][j - 1] + 1 } else { dp[i - 1][j].max(dp[i][j - 1]) };
            }
        }
        dp[a.len()][b.len()]
    }

    #[test]
    fn bit_parallel_lcs_matches_dynamic_programming() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let la = rng.gen_range(0..150);
            let lb = rng.gen_range(0..150);
            let k = rng.gen_range(1..6);
            let a: Vec<u32> = (0..la).map(|_| rng.gen_range(0..k)).collect();
            let b: Vec<u32> = (0..lb).map(|_| rng.gen_range(0..k)).collect();
            assert_eq!(lcs_len(&a, &b), Some(naive_lcs(&a, &b)), "{a:?} {b:?}");
        }
    }

    #[test]
    fn versions_compare_numerically() {
        assert_eq!(compare_versions("0.0.2", "3.0.1"), Ordering::Less);
        assert_eq!(compare_versions("1.10", "1.9"), Ordering::Greater);
        assert_eq!(compare_versions("1.0", "1"), Ordering::Equal);
    }

    #[test]
    fn whitespace_change_is_modified_but_close() {
        let (s, approx) = file_similarity("a.js", b"let a = 1;", b"let  a = 1;\n", 1000);
        assert!(s < 1.0 && s > 0.999);
        assert!(!approx);
        assert_eq!(file_similarity("a.js", b"x", b"x", 1000), (1.0, false));
    }

    #[test]
    fn large_files_fall_back_to_line_jaccard() {
        let (s, approx) = file_similarity("a.js", b"a\nb\nc", b"a\nb\nd", 2);
        assert!(approx);
        assert!((s - 0.5).abs() < 1e-12);
    }
}
