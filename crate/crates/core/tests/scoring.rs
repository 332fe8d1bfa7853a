mod common;

use extscan::scoring::{aggregate, score, triage_rank, RiskReport, Verdict};
use extscan::{render_report, Category, Config, Evidence, ReportFormat, Severity, SignalFinding};

fn f(rule: &str, cat: Category, sev: Severity) -> SignalFinding {
    SignalFinding::new(rule, cat, sev, Evidence::at("x.js", 0, 1), "m")
}

#[test]
fn single_medium_static_finding() {
    let s = score(&[f("DYNAMIC_CODE", Category::Static, Severity::Medium)], &Config::default());
    assert_eq!(s.composite_score, 3.0);
    assert!(!s.corroborated);
    assert_eq!(s.verdict, Verdict::Benign);
    let h = score(&[f("REMOTE_CODE_EXEC", Category::Static, Severity::High)], &Config::default());
    assert_eq!(h.composite_score, 7.0);
    assert_eq!(h.verdict, Verdict::Suspicious);
}

#[test]
fn corroboration_multiplies() {
    let s = score(
        &[f("DYNAMIC_CODE", Category::Static, Severity::Medium), f("C2_BEACON", Category::Network, Severity::Medium)],
        &Config::default(),
    );
    assert!(s.corroborated);
    assert_eq!(s.composite_score, 9.0);
    assert_eq!(s.verdict, Verdict::Suspicious);
}

#[test]
fn thresholds_are_inclusive_boundaries() {
    let cfg = Config::default();
    let low = |n: usize| vec![f("EXTERNAL_LINK_FUNNEL", Category::Static, Severity::Low); n];
    assert_eq!(score(&low(4), &cfg).verdict, Verdict::Benign);
    assert_eq!(score(&low(5), &cfg).verdict, Verdict::Suspicious);
    assert_eq!(score(&low(11), &cfg).verdict, Verdict::Suspicious);
    assert_eq!(score(&low(12), &cfg).verdict, Verdict::Malicious);
}

#[test]
fn verdict_exit_codes() {
    assert_eq!(Verdict::Benign.exit_code(), 0);
    assert_eq!(Verdict::Suspicious.exit_code(), 1);
    assert_eq!(Verdict::Malicious.exit_code(), 2);
}

#[test]
fn report_json_round_trip_and_recompute() {
    let cfg = Config::default();
    let r = aggregate(
        &[f("EXFIL_POST", Category::Network, Severity::Critical), f("NEW_EXTENSION", Category::Metadata, Severity::Info)],
        &cfg,
    )
    .unwrap()
    .with_subject("a", None);
    let json = render_report(&r, ReportFormat::Json);
    let back: RiskReport = serde_json::from_slice(&json).unwrap();
    assert_eq!(back, r);
    let s = back.recompute(&cfg);
    assert_eq!(s.composite_score, r.composite_score);
    assert_eq!(s.verdict, Verdict::Malicious);
}

#[test]
fn supersonic_text_report_section_order() {
    let run = common::cli(&[
        "scan",
        common::corpus().join("supersonic-ai").to_str().unwrap(),
        "--feeds-dir",
        common::fixtures().join("feeds").to_str().unwrap(),
        "--as-of",
        common::AS_OF,
        "--format",
        "text",
    ]);
    let text = String::from_utf8(run.stdout).unwrap();
    let pos = |s: &str| text.find(s).unwrap_or_else(|| panic!("{s} missing:\n{text}"));
    assert!(pos("== metadata") < pos("== static"));
    assert!(pos("== static") < pos("== network"));
    assert!(pos("== network") < pos("== behavioural"));
    assert!(text.contains("EXFIL_POST"));
}

#[test]
fn triage_puts_malicious_first() {
    let cfg = Config::default();
    let mk = |subject: &str, fs: &[SignalFinding]| aggregate(fs, &cfg).unwrap().with_subject(subject, None);
    let ranked = triage_rank(vec![
        mk("c", &[]),
        mk("b", &[f("DYNAMIC_CODE", Category::Static, Severity::Medium)]),
        mk("a", &[f("EXFIL_POST", Category::Network, Severity::Critical)]),
        mk("d", &[f("EXFIL_POST", Category::Network, Severity::Critical), f("BAIT_AND_SWITCH_ENDPOINT", Category::Static, Severity::High)]),
    ]);
    let order: Vec<&str> = ranked.iter().map(|r| r.subject.as_str()).collect();
    assert_eq!(order, ["d", "a", "b", "c"]);
}
