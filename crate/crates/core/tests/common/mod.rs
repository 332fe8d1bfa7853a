#![allow(dead_code)]

pub mod chain_oracle;
pub mod sha256;

use std::path::PathBuf;

use chrono::NaiveDate;
use extscan::scoring::RiskReport;

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn corpus() -> PathBuf {
    fixtures().join("corpus")
}

pub fn as_of() -> NaiveDate {
    NaiveDate::from_ymd_opt(2025, 10, 15).unwrap()
}

pub const AS_OF: &str = "2025-10-15";

/// (fixture, rules that must fire) for each attack technique fixture.
pub const TTP_FIXTURES: &[(&str, &[&str])] = &[
    ("supersonic-ai", &["MSG_EXFIL_FLOW", "EXFIL_POST"]),
    ("deepseek-assistant", &["BAIT_AND_SWITCH_ENDPOINT"]),
    ("chatgpt-search", &["QUERY_HIJACK_SURFACE"]),
    ("perplexity-search", &["QUERY_HIJACK"]),
    ("photoroom-editor", &["ONINSTALL_IFRAME_REDIRECT", "AFFILIATE_PA"]),
    ("pokemon-cursor", &["PUP_FUNNEL"]),
    ("formula-helper", &["DYNAMIC_CODE", "CSP_UNSAFE_EVAL"]),
    ("page-translator", &["REMOTE_CODE_EXEC"]),
    ("grammar-fixer", &["OBFUSCATION"]),
    ("tab-sync", &["C2_BEACON"]),
];

pub const BENIGN_FIXTURES: &[&str] = &[
    "benign-minimal",
    "benign-perplexity-official",
    "benign-vendor-bundle",
    "benign-telemetry",
    "benign-direct-provider",
];

pub struct CliRun {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: String,
}

pub fn cli(args: &[&str]) -> CliRun {
    let mut argv = vec!["extscan".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = extscan::cli::run(argv, &mut out, &mut err);
    CliRun {
        code,
        stdout: out,
        stderr: String::from_utf8_lossy(&err).into_owned(),
    }
}

/// Scans the whole corpus with feeds and sidecars.
pub fn scan_corpus(jobs: usize) -> CliRun {
    let corpus = corpus();
    let feeds = fixtures().join("feeds");
    let jobs = jobs.to_string();
    cli(&[
        "scan",
        corpus.to_str().unwrap(),
        "--feeds-dir",
        feeds.to_str().unwrap(),
        "--as-of",
        AS_OF,
        "--jobs",
        &jobs,
    ])
}

pub fn reports(run: &CliRun) -> Vec<RiskReport> {
    let v: serde_json::Value = serde_json::from_slice(&run.stdout).expect("scan output is JSON");
    serde_json::from_value(v["reports"].clone()).expect("reports parse")
}

pub fn fixture_name(r: &RiskReport) -> String {
    PathBuf::from(&r.subject).file_name().unwrap().to_string_lossy().into_owned()
}

/// In-memory unpacked package from (path, content) pairs.
pub fn pkg(files: &[(&str, &str)]) -> extscan::ExtensionPackage {
    let map = files.iter().map(|(p, c)| (p.to_string(), c.as_bytes().to_vec())).collect();
    extscan::ExtensionPackage::from_files(map, extscan::SourceKind::UnpackedDir, None, Vec::new()).expect("valid package")
}

pub fn rule_ids(findings: &[extscan::SignalFinding]) -> Vec<&str> {
    findings.iter().map(|f| f.rule_id.as_str()).collect()
}
