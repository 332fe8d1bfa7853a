mod common;

use common::rule_ids;
use extscan::config::{IntelConfig, NetlogConfig};
use extscan::intel::DomainIntel;
use extscan::netlog::{detect_exfiltration, detect_hijack_chains, parse_traffic_log, scan_traffic};
use extscan::Severity;

fn log(lines: &[&str]) -> extscan::netlog::TrafficLog {
    parse_traffic_log(lines.join("\n").as_bytes(), &NetlogConfig::default()).unwrap()
}

fn nrd_intel(host: &str) -> DomainIntel {
    DomainIntel::from_feeds(&format!("domain,registration_date\n{host},2025-10-01\n"), "", "", &IntelConfig::default()).unwrap()
}

#[test]
fn three_hop_chain_through_two_attacker_hosts() {
    let l = log(&[
        r#"{"ts":1,"method":"GET","url":"https://attacker.example/s?q=shoes","status":302,"location":"https://attacker2.example/r?q=shoes","initiator":"background"}"#,
        r#"{"ts":2,"method":"GET","url":"https://attacker2.example/r?q=shoes","status":302,"location":"https://www.bing.com/search?q=shoes"}"#,
        r#"{"ts":3,"method":"GET","url":"https://www.bing.com/search?q=shoes","status":200}"#,
    ]);
    let chains = detect_hijack_chains(&l, &NetlogConfig::default());
    assert_eq!(chains.len(), 1);
    assert_eq!(chains[0].0.hops.len(), 3);
    assert_eq!(chains[0].0.origin_query.as_deref(), Some("shoes"));
    assert_eq!(chains[0].1.rule_id, "QUERY_HIJACK");
}

#[test]
fn direct_provider_query_is_not_a_chain() {
    let l = log(&[r#"{"ts":1,"method":"GET","url":"https://www.google.com/search?q=x","status":200,"initiator":"page"}"#]);
    assert!(detect_hijack_chains(&l, &NetlogConfig::default()).is_empty());
}

#[test]
fn fixture_chains_match_expected_indices() {
    let bytes = std::fs::read(common::fixtures().join("netlog/three_hop.jsonl")).unwrap();
    let cfg = NetlogConfig::default();
    let l = parse_traffic_log(&bytes, &cfg).unwrap();
    assert_eq!(common::chain_oracle::library_chains(&l, &cfg), vec![vec![1, 3, 4], vec![10, 11]]);
    assert_eq!(common::chain_oracle::enumerate_all_subsets(&l, &cfg), vec![vec![1, 3, 4], vec![10, 11]]);
}

#[test]
fn harmless_post_body() {
    let l = log(&[r#"{"ts":1,"method":"POST","url":"https://settings.example.com/save","status":200,"initiator":"background","body":"theme=dark"}"#]);
    assert!(detect_exfiltration(&l, &[], None, common::as_of(), &NetlogConfig::default()).is_empty());
}

#[test]
fn otp_to_newly_registered_host_is_critical() {
    let l = log(&[
        r#"{"ts":1,"method":"POST","url":"https://api.fresh-domain.top/x","status":200,"initiator":"background","body":"your code is 123456"}"#,
    ]);
    let intel = nrd_intel("fresh-domain.top");
    let f = detect_exfiltration(&l, &[], Some(&intel), common::as_of(), &NetlogConfig::default());
    assert_eq!(rule_ids(&f), ["EXFIL_POST"]);
    assert_eq!(f[0].severity, Severity::Critical);
    let no_intel = detect_exfiltration(&l, &[], None, common::as_of(), &NetlogConfig::default());
    assert_eq!(no_intel[0].severity, Severity::High);
}

#[test]
fn summarizer_upload_of_verification_code() {
    let bytes = std::fs::read(common::corpus().join("supersonic-ai.netlog.jsonl")).unwrap();
    let cfg = NetlogConfig::default();
    let l = parse_traffic_log(&bytes, &cfg).unwrap();
    let intel = nrd_intel("gosupersonic.email");
    let scan = scan_traffic(&l, &[], Some(&intel), common::as_of(), &cfg);
    let exfil: Vec<_> = scan.findings.iter().filter(|f| f.rule_id == "EXFIL_POST").collect();
    assert!(!exfil.is_empty());
    assert!(exfil.iter().all(|f| f.severity == Severity::Critical));
    let ev = &l.events[exfil[0].evidence.offset.unwrap() as usize];
    assert_eq!(ev.host().as_deref(), Some("api.gosupersonic.email"));
    assert!(ev.request_body_excerpt.as_deref().unwrap().contains("758643"));
}

#[test]
fn malformed_lines_become_diagnostics() {
    let l = log(&[
        r#"{"ts":2,"method":"GET","url":"https://a.example.com/","status":200}"#,
        "not json",
        r#"{"ts":1,"method":"get","url":"https://b.example.com/","status":200}"#,
    ]);
    assert_eq!(l.events.len(), 2);
    assert_eq!(l.events[0].method, "GET");
    assert_eq!(l.events[0].host().as_deref(), Some("b.example.com"));
    assert_eq!(l.diagnostics.len(), 1);
    assert_eq!(l.diagnostics[0].line, 2);
}

#[test]
fn empty_log_is_an_error() {
    assert!(parse_traffic_log(b"", &NetlogConfig::default()).is_err());
}
