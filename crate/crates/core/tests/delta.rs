mod common;

use common::{pkg, rule_ids};
use extscan::delta::{diff_versions, judge_delta};
use extscan::Config;

const BASE: &str = r#"{"manifest_version":3,"name":"x","version":"1.0","permissions":["storage"],"background":{"service_worker":"bg.js"}}"#;
const BG: &str = r#"const API = "https://api.example.com/v1"; fetch(API + "/ping");"#;

#[test]
fn identical_packages() {
    let a = pkg(&[("manifest.json", BASE), ("bg.js", BG)]);
    let d = diff_versions(&a, &a, &Config::default());
    assert!(d.endpoints_added.is_empty() && d.endpoints_removed.is_empty());
    assert!(d.files_added.is_empty() && d.files_modified.is_empty());
    assert!(d.per_file_similarity.values().all(|s| *s == 1.0));
    assert!(judge_delta(&d, &Config::default().delta).is_empty());
}

#[test]
fn tabs_only_addition() {
    let a = pkg(&[("manifest.json", BASE), ("bg.js", BG)]);
    let b = pkg(&[("manifest.json", &BASE.replace(r#"["storage"]"#, r#"["storage","tabs"]"#).replace("1.0", "1.1")), ("bg.js", BG)]);
    let d = diff_versions(&a, &b, &Config::default());
    assert_eq!(d.permissions_added, ["tabs"]);
    assert!(d.endpoints_added.is_empty() && d.endpoints_removed.is_empty());
}

#[test]
fn css_only_addition_is_quiet() {
    let a = pkg(&[("manifest.json", BASE), ("bg.js", BG)]);
    let b = pkg(&[("manifest.json", &BASE.replace("1.0", "1.1")), ("bg.js", BG), ("style.css", "body{color:red}")]);
    let d = diff_versions(&a, &b, &Config::default());
    assert_eq!(d.files_added, ["style.css"]);
    assert!(judge_delta(&d, &Config::default().delta).is_empty());
}

#[test]
fn adding_all_urls_escalates() {
    let a = pkg(&[("manifest.json", BASE), ("bg.js", BG)]);
    let b = pkg(&[
        ("manifest.json", &BASE.replace("1.0", "1.1").replace(r#""background""#, r#""host_permissions":["<all_urls>"],"background""#)),
        ("bg.js", BG),
    ]);
    let d = diff_versions(&a, &b, &Config::default());
    assert_eq!(rule_ids(&judge_delta(&d, &Config::default().delta)), ["PERMISSION_ESCALATION"]);
}

#[test]
fn bait_and_switch_pair() {
    let cfg = Config::default();
    let old = extscan::cli::load_package(&common::corpus().join("deepseek-assistant.prev"), &cfg).unwrap();
    let new = extscan::cli::load_package(&common::corpus().join("deepseek-assistant"), &cfg).unwrap();
    let d = diff_versions(&old, &new, &cfg);
    assert!(d.endpoint_urls_added().contains("https://api.glimmerbloop.top/api"));
    assert_eq!(d.reobfuscation_suspects, ["background.js"]);
    let ids = rule_ids(&judge_delta(&d, &cfg.delta)).into_iter().map(String::from).collect::<Vec<_>>();
    assert!(ids.contains(&"BAIT_AND_SWITCH_ENDPOINT".into()));
    assert!(ids.contains(&"REOBFUSCATION".into()));
    let added: std::collections::BTreeSet<_> = d.endpoint_urls_added();
    let removed: std::collections::BTreeSet<_> = d.endpoints_removed.iter().map(|e| e.url_or_host.as_str()).collect();
    assert!(added.is_disjoint(&removed));
    for p in &d.files_modified {
        assert!(d.per_file_similarity[p] < 1.0, "{p}");
    }
}
