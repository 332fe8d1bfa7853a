mod common;

use std::collections::BTreeMap;

use extscan::config::{NetlogConfig, StaticConfig};
use extscan::delta::{lcs_len, lcs_similarity};
use extscan::netlog::parse_traffic_log;
use extscan::package::{is_valid_extension_id, parse_package, write_crx3, write_zip};
use extscan::scoring::{aggregate, score, triage_cmp, triage_rank};
use extscan::static_signals::{compute_metrics, tokenize_js};
use extscan::{Category, Config, Evidence, Severity, SignalFinding};
use proptest::prelude::*;

const RULES: &[(&str, Category)] = &[
    ("DYNAMIC_CODE", Category::Static),
    ("EXFIL_POST", Category::Network),
    ("C2_BEACON", Category::Network),
    ("NEW_EXTENSION", Category::Metadata),
    ("QUERY_HIJACK", Category::Behavioural),
    ("OBFUSCATION", Category::Static),
];

const SEVERITIES: [Severity; 5] = [Severity::Info, Severity::Low, Severity::Medium, Severity::High, Severity::Critical];

fn finding() -> impl Strategy<Value = SignalFinding> {
    (0..RULES.len(), 0..5usize, 0..50usize).prop_map(|(r, s, off)| {
        SignalFinding::new(RULES[r].0, RULES[r].1, SEVERITIES[s], Evidence::at("f.js", off, 1), format!("m{off}"))
    })
}

fn js_piece() -> impl Strategy<Value = String> {
    prop_oneof![
        "[a-zA-Z_$][a-zA-Z0-9_]{0,8}",
        "[0-9]{1,5}",
        "\"[a-z ]{0,6}\"",
        "'[a-z]{0,4}'",
        Just("`a${x}b`".to_string()),
        Just("// c\n".to_string()),
        Just("/* k */".to_string()),
        "[-+*/%=<>!&|(){}\\[\\];,.?:]",
        Just(" ".to_string()),
        Just("\n".to_string()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn tokens_are_ordered_source_slices(pieces in prop::collection::vec(js_piece(), 0..60)) {
        let src = pieces.concat();
        let ts = tokenize_js(src.as_bytes(), "p.js");
        let mut last: Option<usize> = None;
        for t in &ts.tokens {
            if let Some(l) = last { prop_assert!(t.offset > l); }
            last = Some(t.offset);
            prop_assert_eq!(&src[t.offset..t.offset + t.text.len()], t.text.as_str());
        }
    }

    #[test]
    fn metrics_stay_in_bounds(pieces in prop::collection::vec(js_piece(), 0..60)) {
        let src = pieces.concat();
        let m = compute_metrics(&tokenize_js(src.as_bytes(), "p.js"));
        prop_assert!((0.0..=8.0).contains(&m.shannon_entropy_bits_per_char));
        prop_assert!((0.0..=1.0).contains(&m.string_literal_char_ratio));
        prop_assert!(m.hex_escape_density >= 0.0);
        prop_assert!(m.mean_identifier_length >= 0.0);
        prop_assert!(m.max_line_length <= src.len());
        let _ = StaticConfig::default();
    }

    #[test]
    fn aggregate_ignores_finding_order(mut fs in prop::collection::vec(finding(), 0..12), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let cfg = Config::default();
        let a = aggregate(&fs, &cfg).unwrap();
        fs.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        prop_assert_eq!(aggregate(&fs, &cfg).unwrap(), a);
    }

    #[test]
    fn raising_severity_never_lowers_score(fs in prop::collection::vec(finding(), 1..12), idx in any::<prop::sample::Index>()) {
        let cfg = Config::default();
        let before = score(&fs, &cfg);
        let mut up = fs.clone();
        let i = idx.index(up.len());
        let s = up[i].severity as usize;
        up[i].severity = SEVERITIES[(s + 1).min(4)];
        let after = score(&up, &cfg);
        prop_assert!(after.composite_score >= before.composite_score);
        prop_assert!(after.verdict >= before.verdict);
    }

    #[test]
    fn triage_is_a_sorted_permutation(sets in prop::collection::vec(prop::collection::vec(finding(), 0..5), 0..100)) {
        let cfg = Config::default();
        let reports: Vec<_> = sets
            .iter()
            .enumerate()
            .map(|(i, fs)| aggregate(fs, &cfg).unwrap().with_subject(format!("s{:03}", i % 37), None))
            .collect();
        let ranked = triage_rank(reports.clone());
        prop_assert_eq!(ranked.len(), reports.len());
        let mut a: Vec<_> = reports.iter().map(|r| serde_json::to_string(r).unwrap()).collect();
        let mut b: Vec<_> = ranked.iter().map(|r| serde_json::to_string(r).unwrap()).collect();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
        for w in ranked.windows(2) {
            let (x, y) = (&w[0], &w[1]);
            let naive_ok = x.verdict > y.verdict
                || (x.verdict == y.verdict && x.composite_score > y.composite_score)
                || (x.verdict == y.verdict && x.composite_score == y.composite_score && x.subject <= y.subject);
            prop_assert!(naive_ok);
            prop_assert_ne!(triage_cmp(x, y), std::cmp::Ordering::Greater);
        }
    }

    #[test]
    fn crx_round_trip(key in prop::collection::vec(any::<u8>(), 1..300), body in "[a-z ]{0,200}") {
        let files: BTreeMap<String, Vec<u8>> = [
            ("manifest.json".to_string(), br#"{"manifest_version":3,"name":"p","version":"1.2.3"}"#.to_vec()),
            ("a.js".to_string(), body.clone().into_bytes()),
        ].into();
        let pkg = parse_package(&write_crx3(&write_zip(&files), &key), None).unwrap();
        let id = pkg.extension_id.clone().unwrap();
        prop_assert!(is_valid_extension_id(&id));
        prop_assert_eq!(id, common::sha256::oracle_extension_id(&key));
        prop_assert_eq!(&pkg.files["a.js"], &body.into_bytes());
        prop_assert_eq!(pkg.version.as_str(), "1.2.3");
    }

    #[test]
    fn lcs_is_symmetric_and_bounded(a in prop::collection::vec(0u8..6, 0..80), b in prop::collection::vec(0u8..6, 0..80)) {
        let l = lcs_len(&a, &b).unwrap();
        prop_assert_eq!(Some(l), lcs_len(&b, &a));
        prop_assert!(l <= a.len().min(b.len()));
        let s = lcs_similarity(&a, &b).unwrap();
        prop_assert!((0.0..=1.0).contains(&s));
        prop_assert_eq!(lcs_similarity(&a, &a).unwrap(), 1.0);
        prop_assert_eq!(Some(s), lcs_similarity(&b, &a));
    }

    #[test]
    fn library_chains_match_brute_force(events in prop::collection::vec((0..5usize, 0..6usize, any::<bool>(), any::<bool>()), 1..12)) {
        // Distinct request URLs and distinct redirect targets.
        let hosts = ["a.bad", "b.bad", "www.google.com", "www.bing.com", "c.other"];
        let mut lines = Vec::new();
        let mut used = std::collections::BTreeSet::new();
        for (i, (h, target, redirect, query)) in events.iter().enumerate() {
            let q = if *query { "?q=term" } else { "" };
            let url = format!("https://{}/p{i}{q}", hosts[*h]);
            let t = (*target + i + 1).min(events.len() + 3);
            let line = if *redirect && used.insert(t) {
                let th = hosts[events.get(t).map(|e| e.0).unwrap_or(0)];
                let tq = events.get(t).map(|e| if e.3 { "?q=term" } else { "" }).unwrap_or("");
                serde_json::json!({"ts": i, "method": "GET", "url": url, "status": 302, "location": format!("https://{th}/p{t}{tq}")})
            } else {
                serde_json::json!({"ts": i, "method": "GET", "url": url, "status": 200})
            };
            lines.push(line.to_string());
        }
        let cfg = NetlogConfig::default();
        let log = parse_traffic_log(lines.join("\n").as_bytes(), &cfg).unwrap();
        let lib = common::chain_oracle::library_chains(&log, &cfg);
        prop_assert_eq!(&lib, &common::chain_oracle::enumerate_pruned(&log, &cfg));
        prop_assert_eq!(lib, common::chain_oracle::enumerate_all_subsets(&log, &cfg));
    }

    #[test]
    fn fingerprint_tracks_config(t in 1.0f64..30.0) {
        let base = Config::default();
        let mut c = base.clone();
        c.scoring.suspicious_threshold = t;
        prop_assert_eq!(c.fingerprint() == base.fingerprint(), t == base.scoring.suspicious_threshold);
    }
}
