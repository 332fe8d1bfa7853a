mod common;

use chrono::NaiveDate;
use extscan::config::{IntelConfig, MetadataConfig};
use extscan::intel::{judge_metadata, load_feeds_dir, parse_metadata_jsonl, DomainFlag, DomainIntel};

fn d(s: &str) -> NaiveDate {
    s.parse().unwrap()
}

#[test]
fn nrd_age_in_days() {
    let intel =
        DomainIntel::from_feeds("domain,registration_date\nnew.example,2025-10-05\n", "", "", &IntelConfig::default()).unwrap();
    let v = intel.lookup("api.new.example", d("2025-10-15")).unwrap();
    assert_eq!(v.nrd_age_days, Some(10));
    assert!(v.has(DomainFlag::Nrd));
    let old = intel.lookup("new.example", d("2026-10-15")).unwrap();
    assert!(!old.has(DomainFlag::Nrd));
}

#[test]
fn unknown_host_has_no_flags() {
    let intel = DomainIntel::empty(&IntelConfig::default());
    let v = intel.lookup("example.org", d("2025-10-15")).unwrap();
    assert!(v.flags.is_empty());
    assert!(!v.is_suspicious());
}

#[test]
fn allowlist_wins_and_conflicts_are_rejected() {
    let intel = load_feeds_dir(&common::fixtures().join("feeds"), &IntelConfig::default()).unwrap();
    assert!(intel.lookup("www.google.com", common::as_of()).unwrap().has(DomainFlag::Allowlisted));
    assert!(intel.lookup("api.glimmerbloop.top", common::as_of()).unwrap().has(DomainFlag::Blocklisted));
    assert!(DomainIntel::from_feeds("", "bad.example\n", "bad.example\n", &IntelConfig::default()).is_err());
}

#[test]
fn author_with_removed_malware() {
    let rec = r#"{"extension_id":"aaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaa","publish_date":"2024-01-01","last_update_date":"2025-01-01","install_count":50000,"rating":4.1,"review_count":300,"author_id":"dev1","author_history":[{"extension_id":"bbbbbbbbbbbbbbbbbbbbbbbbbbbbbbbb","status":"removed_malware"}]}"#;
    let recs = parse_metadata_jsonl(rec.as_bytes()).unwrap();
    let f = judge_metadata(&recs[0], common::as_of(), &MetadataConfig::default());
    assert_eq!(common::rule_ids(&f), ["AUTHOR_HISTORY"]);
}

#[test]
fn tiny_install_base_with_perfect_rating() {
    let rec = r#"{"extension_id":"aaaaaaaaaaaaaaaaaaaaaaaaaaaaaaaa","publish_date":"2025-10-01","last_update_date":"2025-10-01","install_count":12,"rating":5.0,"review_count":40,"author_id":"dev1"}"#;
    let recs = parse_metadata_jsonl(rec.as_bytes()).unwrap();
    let ids = common::rule_ids(&judge_metadata(&recs[0], common::as_of(), &MetadataConfig::default()))
        .into_iter()
        .map(String::from)
        .collect::<Vec<_>>();
    assert!(ids.contains(&"NEW_EXTENSION".to_string()));
    assert!(ids.contains(&"LOW_INSTALLS_HIGH_RATING".to_string()));
}

#[test]
fn rating_out_of_range() {
    let rec = r#"{"extension_id":"a","publish_date":"2025-10-01","last_update_date":"2025-10-01","install_count":1,"rating":7.5,"review_count":1,"author_id":"x"}"#;
    assert!(parse_metadata_jsonl(rec.as_bytes()).is_err());
}
