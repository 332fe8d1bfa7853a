//! The `extscan` command line. [`run`] takes its arguments and output
//! streams explicitly so tests can drive it in-process.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use chrono::NaiveDate;
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use crate::config::Config;
use crate::delta::{diff_versions, judge_delta, VersionDelta};
use crate::finding::SignalFinding;
use crate::intel::{load_feeds_dir, parse_metadata_jsonl, DomainIntel, MetadataRecord};
use crate::netlog::{parse_har, parse_traffic_log, scan_traffic, NetlogScan, TrafficLog};
use crate::package::{parse_package_with, read_unpacked_dir, ExtensionPackage, PackageOptions};
use crate::pipeline::{scan_target, ScanInputs};
use crate::report::{render_report, ReportFormat};
use crate::rules::{self, RULE_CATALOG_VERSION};
use crate::scoring::{triage_cmp, RiskReport, Verdict, REPORT_SCHEMA_VERSION};
use crate::static_signals::{extract_endpoints, PackageAnalysis};

pub const EXIT_OPERATIONAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "extscan", version, about = "Malicious browser extension scanner")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Scan packages (.crx, .zip, unpacked directories, or directories of them).
    Scan(ScanArgs),
    /// Compare two versions of one extension.
    Diff(DiffArgs),
    /// Run the network-log detectors over a JSONL or HAR log.
    Netlog(NetlogArgs),
    /// Print the rule catalog.
    Rules(RulesArgs),
    /// Rank saved reports into a review queue.
    Triage(TriageArgs),
}

#[derive(Debug, Args)]
struct Common {
    /// TOML config overriding defaults.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
    /// Reference date for age-based signals (YYYY-MM-DD). Defaults to today.
    #[arg(long)]
    as_of: Option<NaiveDate>,
}

#[derive(Debug, Args)]
struct ScanArgs {
    #[arg(required_unless_present = "show_config")]
    targets: Vec<PathBuf>,
    #[command(flatten)]
    common: Common,
    /// Directory holding nrd.csv, blocklist.txt, allowlist.txt, remote.json.
    #[arg(long)]
    feeds_dir: Option<PathBuf>,
    /// Store metadata JSONL; records are matched by extension ID.
    #[arg(long)]
    metadata: Option<PathBuf>,
    /// Traffic log applied to every target.
    #[arg(long)]
    netlog: Option<PathBuf>,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: u16,
    /// Any per-target error makes the exit code 3.
    #[arg(long)]
    strict: bool,
    /// Print the effective config and exit.
    #[arg(long)]
    show_config: bool,
    /// Write the report document here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct DiffArgs {
    old: PathBuf,
    new: PathBuf,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct NetlogArgs {
    log: PathBuf,
    /// Package whose endpoints annotate exfiltration findings.
    #[arg(long)]
    pkg: Option<PathBuf>,
    #[arg(long)]
    feeds_dir: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct RulesArgs {
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Debug, Args)]
struct TriageArgs {
    /// Report files: single reports or scan documents.
    #[arg(required = true)]
    reports: Vec<PathBuf>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

/// Entry point. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_OPERATIONAL } else { 0 };
            let _ = if e.use_stderr() {
                write!(stderr, "{}", e.render())
            } else {
                write!(stdout, "{}", e.render())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Scan(a) => cmd_scan(a, stdout, stderr),
        Command::Diff(a) => cmd_diff(a, stdout),
        Command::Netlog(a) => cmd_netlog(a, stdout),
        Command::Rules(a) => cmd_rules(a, stdout),
        Command::Triage(a) => cmd_triage(a, stdout),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(stderr, "extscan: {msg}");
            EXIT_OPERATIONAL
        }
    }
}

fn load_config(path: Option<&Path>) -> Result<Config, String> {
    match path {
        Some(p) => Config::load(p).map_err(|e| e.to_string()),
        None => Ok(Config::default()),
    }
}

/// The reference date, plus a warning when it was defaulted.
fn resolve_as_of(as_of: Option<NaiveDate>) -> (NaiveDate, Option<String>) {
    match as_of {
        Some(d) => (d, None),
        None => {
            let today = chrono::Local::now().date_naive();
            (today, Some(format!("--as-of not given; using current date {today}; results are not reproducible")))
        }
    }
}

fn with_suffix(p: &Path, suffix: &str) -> PathBuf {
    let mut s = p.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn read(p: &Path) -> Result<Vec<u8>, String> {
    std::fs::read(p).map_err(|e| format!("{}: {e}", p.display()))
}

/// Loads a package from a file (.crx, .zip or directory listing) or an
/// unpacked directory.
pub fn load_package(p: &Path, cfg: &Config) -> Result<ExtensionPackage, String> {
    let opts = PackageOptions {
        max_entry_bytes: cfg.package.max_entry_bytes,
        ..Default::default()
    };
    let pkg = if p.is_dir() {
        read_unpacked_dir(p, &opts)
    } else {
        parse_package_with(&read(p)?, None, &opts)
    };
    pkg.map_err(|e| format!("{}: {e}", p.display()))
}

/// Loads a traffic log: HAR when the document looks like one, else JSONL.
pub fn load_traffic_log(p: &Path, cfg: &Config) -> Result<TrafficLog, String> {
    let bytes = read(p)?;
    let is_har = p.extension().is_some_and(|e| e.eq_ignore_ascii_case("har"))
        || bytes.iter().find(|b| !b.is_ascii_whitespace()) == Some(&b'{') && bytes.windows(6).any(|w| w == b"\"log\":");
    let log = if is_har {
        parse_har(&bytes, &cfg.netlog)
    } else {
        parse_traffic_log(&bytes, &cfg.netlog)
    };
    log.map_err(|e| format!("{}: {e}", p.display()))
}

fn is_package_dir(p: &Path) -> bool {
    p.join("manifest.json").is_file()
}

/// Expands directories that are not themselves packages into the
/// packages they contain. `.prev` siblings are previous versions, not
/// targets.
pub fn expand_targets(targets: &[PathBuf]) -> (Vec<PathBuf>, Vec<(String, String)>) {
    let mut out = Vec::new();
    let mut errors = Vec::new();
    for t in targets {
        if !t.is_dir() || is_package_dir(t) {
            out.push(t.clone());
            continue;
        }
        let entries = match std::fs::read_dir(t) {
            Ok(e) => e,
            Err(e) => {
                errors.push((t.display().to_string(), e.to_string()));
                continue;
            }
        };
        let mut found: Vec<PathBuf> = entries
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| {
                let name = p.file_name().map(|n| n.to_string_lossy().to_ascii_lowercase()).unwrap_or_default();
                if name.ends_with(".prev") {
                    return false;
                }
                if p.is_dir() {
                    is_package_dir(p)
                } else {
                    name.ends_with(".crx") || name.ends_with(".zip")
                }
            })
            .collect();
        found.sort();
        out.extend(found);
    }
    (out, errors)
}

#[derive(Debug, Serialize)]
struct ScanDocument {
    schema_version: &'static str,
    as_of: String,
    config_fingerprint: String,
    warnings: Vec<String>,
    reports: Vec<RiskReport>,
    errors: Vec<TargetError>,
    summary: BTreeMap<&'static str, usize>,
}

#[derive(Debug, Serialize)]
struct TargetError {
    target: String,
    error: String,
}

fn scan_one(
    path: &Path,
    cfg: &Config,
    intel: Option<&DomainIntel>,
    metadata: &[MetadataRecord],
    shared_log: Option<&TrafficLog>,
    as_of: NaiveDate,
) -> Result<RiskReport, String> {
    let pkg = load_package(path, cfg)?;
    let prev_path = with_suffix(path, ".prev");
    let previous = if prev_path.exists() { Some(load_package(&prev_path, cfg)?) } else { None };
    let log_path = with_suffix(path, ".netlog.jsonl");
    let own_log = if log_path.is_file() { Some(load_traffic_log(&log_path, cfg)?) } else { None };
    let meta_path = with_suffix(path, ".metadata.jsonl");
    let own_meta = if meta_path.is_file() {
        parse_metadata_jsonl(&read(&meta_path)?).map_err(|e| format!("{}: {e}", meta_path.display()))?
    } else {
        Vec::new()
    };
    let record = own_meta.first().or_else(|| {
        pkg.extension_id
            .as_deref()
            .and_then(|id| metadata.iter().find(|m| m.extension_id == id))
    });
    let inputs = ScanInputs {
        subject: path.display().to_string(),
        pkg: &pkg,
        previous: previous.as_ref(),
        netlog: own_log.as_ref().or(shared_log),
        metadata: record,
        intel,
        as_of,
    };
    let scan = scan_target(&inputs, cfg).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut report = scan.report;
    if report.extension_id.is_some() {
        report.subject = path.display().to_string();
    }
    Ok(report)
}

fn cmd_scan(a: ScanArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, String> {
    let cfg = load_config(a.common.config.as_deref())?;
    if a.show_config {
        write!(stdout, "{}", cfg.to_toml_string()).map_err(|e| e.to_string())?;
        return Ok(0);
    }
    let (as_of, as_of_warning) = resolve_as_of(a.common.as_of);
    let intel = match &a.feeds_dir {
        Some(d) => Some(load_feeds_dir(d, &cfg.intel).map_err(|e| e.to_string())?),
        None => None,
    };
    let metadata = match &a.metadata {
        Some(p) => parse_metadata_jsonl(&read(p)?).map_err(|e| format!("{}: {e}", p.display()))?,
        None => Vec::new(),
    };
    let shared_log = match &a.netlog {
        Some(p) => Some(load_traffic_log(p, &cfg)?),
        None => None,
    };

    let (targets, expand_errors) = expand_targets(&a.targets);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.jobs as usize)
        .build()
        .map_err(|e| e.to_string())?;
    let results: Vec<Result<RiskReport, String>> = pool.install(|| {
        targets
            .par_iter()
            .map(|t| scan_one(t, &cfg, intel.as_ref(), &metadata, shared_log.as_ref(), as_of))
            .collect()
    });

    let mut reports = Vec::new();
    let mut errors: Vec<TargetError> = expand_errors
        .into_iter()
        .map(|(target, error)| TargetError { target, error })
        .collect();
    for (t, r) in targets.iter().zip(results) {
        match r {
            Ok(r) => reports.push(r),
            Err(error) => errors.push(TargetError {
                target: t.display().to_string(),
                error,
            }),
        }
    }

    let mut summary: BTreeMap<&'static str, usize> =
        [("benign", 0), ("suspicious", 0), ("malicious", 0), ("errors", errors.len())].into_iter().collect();
    for r in &reports {
        *summary.get_mut(r.verdict.as_str()).expect("verdict key") += 1;
    }
    let doc = ScanDocument {
        schema_version: REPORT_SCHEMA_VERSION,
        as_of: as_of.to_string(),
        config_fingerprint: cfg.fingerprint(),
        warnings: as_of_warning.into_iter().collect(),
        reports,
        errors,
        summary,
    };

    let body = match a.common.format {
        ReportFormat::Json => {
            let mut v = serde_json::to_vec_pretty(&doc).expect("document serializes");
            v.push(b'\n');
            v
        }
        ReportFormat::Text => {
            let mut v = Vec::new();
            for w in &doc.warnings {
                v.extend_from_slice(format!("warning: {w}\n").as_bytes());
            }
            for r in &doc.reports {
                v.extend(render_report(r, ReportFormat::Text));
                v.push(b'\n');
            }
            for e in &doc.errors {
                v.extend_from_slice(format!("error: {}: {}\n", e.target, e.error).as_bytes());
            }
            v
        }
    };
    match &a.out {
        Some(p) => std::fs::write(p, &body).map_err(|e| format!("{}: {e}", p.display()))?,
        None => stdout.write_all(&body).map_err(|e| e.to_string())?,
    }
    for e in &doc.errors {
        let _ = writeln!(stderr, "error: {}: {}", e.target, e.error);
    }
    let _ = writeln!(
        stderr,
        "scanned {}: {} malicious, {} suspicious, {} benign, {} errors",
        doc.reports.len() + doc.errors.len(),
        doc.summary["malicious"],
        doc.summary["suspicious"],
        doc.summary["benign"],
        doc.summary["errors"]
    );

    let worst = doc.reports.iter().map(|r| r.verdict.exit_code()).max();
    Ok(match worst {
        _ if !doc.errors.is_empty() && (a.strict || doc.reports.is_empty()) => EXIT_OPERATIONAL,
        Some(c) => c,
        None => 0,
    })
}

#[derive(Debug, Serialize)]
struct DiffDocument<'a> {
    delta: &'a VersionDelta,
    findings: &'a [SignalFinding],
}

fn cmd_diff(a: DiffArgs, stdout: &mut dyn Write) -> Result<i32, String> {
    let cfg = load_config(a.common.config.as_deref())?;
    let old = load_package(&a.old, &cfg)?;
    let new = load_package(&a.new, &cfg)?;
    let delta = diff_versions(&old, &new, &cfg);
    let findings: Vec<SignalFinding> =
        judge_delta(&delta, &cfg.delta).into_iter().filter(|f| cfg.rule_enabled(&f.rule_id)).collect();
    match a.common.format {
        ReportFormat::Json => {
            let doc = DiffDocument {
                delta: &delta,
                findings: &findings,
            };
            serde_json::to_writer_pretty(&mut *stdout, &doc).map_err(|e| e.to_string())?;
            writeln!(stdout).map_err(|e| e.to_string())?;
        }
        ReportFormat::Text => {
            let mut s = format!("{} -> {}\n", delta.old_version, delta.new_version);
            s += &format!(
                "files: +{} -{} ~{}\n",
                delta.files_added.len(),
                delta.files_removed.len(),
                delta.files_modified.len()
            );
            for p in &delta.files_modified {
                s += &format!("  {p}: similarity {:.3}\n", delta.per_file_similarity[p]);
            }
            for e in &delta.endpoints_added {
                s += &format!("  new endpoint {} ({})\n", e.url_or_host, e.path);
            }
            for w in &delta.warnings {
                s += &format!("warning: {w}\n");
            }
            for f in &findings {
                s += &format!("[{}] {} {}\n", f.severity, f.rule_id, f.message);
            }
            stdout.write_all(s.as_bytes()).map_err(|e| e.to_string())?;
        }
    }
    Ok(if findings.iter().any(|f| f.rule_id == "BAIT_AND_SWITCH_ENDPOINT") {
        2
    } else if findings.is_empty() {
        0
    } else {
        1
    })
}

fn cmd_netlog(a: NetlogArgs, stdout: &mut dyn Write) -> Result<i32, String> {
    let cfg = load_config(a.common.config.as_deref())?;
    let (as_of, _) = resolve_as_of(a.common.as_of);
    let log = load_traffic_log(&a.log, &cfg)?;
    let endpoints = match &a.pkg {
        Some(p) => {
            let pkg = load_package(p, &cfg)?;
            extract_endpoints(&pkg, &PackageAnalysis::new(&pkg).streams)
        }
        None => Vec::new(),
    };
    let intel = match &a.feeds_dir {
        Some(d) => Some(load_feeds_dir(d, &cfg.intel).map_err(|e| e.to_string())?),
        None => None,
    };
    let mut scan: NetlogScan = scan_traffic(&log, &endpoints, intel.as_ref(), as_of, &cfg.netlog);
    scan.findings.retain(|f| cfg.rule_enabled(&f.rule_id));
    match a.common.format {
        ReportFormat::Json => {
            serde_json::to_writer_pretty(&mut *stdout, &scan).map_err(|e| e.to_string())?;
            writeln!(stdout).map_err(|e| e.to_string())?;
        }
        ReportFormat::Text => {
            for f in &scan.findings {
                writeln!(stdout, "[{}] {} {}", f.severity, f.rule_id, f.message).map_err(|e| e.to_string())?;
            }
            for w in &scan.warnings {
                writeln!(stdout, "warning: {w}").map_err(|e| e.to_string())?;
            }
        }
    }
    Ok(if scan.findings.is_empty() { 0 } else { 1 })
}

#[derive(Debug, Serialize)]
struct RuleRow {
    rule_id: &'static str,
    category: crate::finding::Category,
    severity: crate::finding::Severity,
    enabled: bool,
    description: &'static str,
    ttp: &'static str,
}

fn cmd_rules(a: RulesArgs, stdout: &mut dyn Write) -> Result<i32, String> {
    let cfg = load_config(a.config.as_deref())?;
    let rows: Vec<RuleRow> = rules::CATALOG
        .iter()
        .map(|r| RuleRow {
            rule_id: r.rule_id,
            category: r.category,
            severity: r.severity,
            enabled: cfg.rule_enabled(r.rule_id),
            description: r.description,
            ttp: r.ttp,
        })
        .collect();
    let out = match a.format {
        ReportFormat::Json => serde_json::to_string_pretty(&rows).expect("rules serialize") + "\n",
        ReportFormat::Text => {
            let mut s = format!("rule catalog {RULE_CATALOG_VERSION}\n");
            s += &format!("{:<26} {:<12} {:<9} {:<8} {}\n", "RULE", "CATEGORY", "SEVERITY", "ENABLED", "TECHNIQUE");
            for r in &rows {
                s += &format!(
                    "{:<26} {:<12} {:<9} {:<8} {}\n    {}\n",
                    r.rule_id,
                    r.category.as_str(),
                    r.severity.as_str(),
                    r.enabled,
                    r.ttp,
                    r.description
                );
            }
            s
        }
    };
    stdout.write_all(out.as_bytes()).map_err(|e| e.to_string())?;
    Ok(0)
}

/// Reads either one report or a scan document's `reports` array.
fn read_reports(p: &Path) -> Result<Vec<RiskReport>, String> {
    let v: serde_json::Value = serde_json::from_slice(&read(p)?).map_err(|e| format!("{}: {e}", p.display()))?;
    let parsed = match v.get("reports") {
        Some(list) => serde_json::from_value::<Vec<RiskReport>>(list.clone()),
        None if v.is_array() => serde_json::from_value::<Vec<RiskReport>>(v),
        None => serde_json::from_value::<RiskReport>(v).map(|r| vec![r]),
    };
    parsed.map_err(|e| format!("{}: {e}", p.display()))
}

fn cmd_triage(a: TriageArgs, stdout: &mut dyn Write) -> Result<i32, String> {
    let mut all = Vec::new();
    for p in &a.reports {
        all.extend(read_reports(p)?);
    }
    all.sort_by(triage_cmp);
    let out = match a.format {
        ReportFormat::Json => {
            #[derive(Serialize)]
            struct Row<'a> {
                rank: usize,
                subject: &'a str,
                extension_id: Option<&'a str>,
                verdict: Verdict,
                composite_score: f64,
                findings: usize,
            }
            let rows: Vec<Row> = all
                .iter()
                .enumerate()
                .map(|(i, r)| Row {
                    rank: i + 1,
                    subject: &r.subject,
                    extension_id: r.extension_id.as_deref(),
                    verdict: r.verdict,
                    composite_score: r.composite_score,
                    findings: r.findings.len(),
                })
                .collect();
            serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n"
        }
        ReportFormat::Text => all
            .iter()
            .enumerate()
            .map(|(i, r)| format!("{:>3}. {:<10} {:>7.2}  {}\n", i + 1, r.verdict.as_str(), r.composite_score, r.subject))
            .collect(),
    };
    stdout.write_all(out.as_bytes()).map_err(|e| e.to_string())?;
    Ok(all.iter().map(|r| r.verdict.exit_code()).max().unwrap_or(0))
}
