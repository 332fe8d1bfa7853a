//! One target end to end: every applicable detector, cross-signal
//! correlation, then aggregation.

use std::collections::BTreeSet;

use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::delta::{diff_versions, judge_delta, VersionDelta};
use crate::finding::{sort_canonical, Category, Evidence, Severity, SignalFinding};
use crate::intel::{judge_metadata, DomainFlag, DomainIntel, MetadataRecord};
use crate::manifest::lint_manifest;
use crate::netlog::{scan_traffic, NetlogScan, TrafficLog};
use crate::package::ExtensionPackage;
use crate::scoring::{aggregate, RiskReport, ScoringError};
use crate::static_signals::{scan_static, PackageAnalysis, StaticScan};
use crate::util;

/// Everything known about one target. Only `pkg` is required.
pub struct ScanInputs<'a> {
    pub subject: String,
    pub pkg: &'a ExtensionPackage,
    pub previous: Option<&'a ExtensionPackage>,
    pub netlog: Option<&'a TrafficLog>,
    pub metadata: Option<&'a MetadataRecord>,
    pub intel: Option<&'a DomainIntel>,
    pub as_of: NaiveDate,
}

impl<'a> ScanInputs<'a> {
    pub fn new(subject: impl Into<String>, pkg: &'a ExtensionPackage, as_of: NaiveDate) -> Self {
        ScanInputs {
            subject: subject.into(),
            pkg,
            previous: None,
            netlog: None,
            metadata: None,
            intel: None,
            as_of,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TargetScan {
    pub report: RiskReport,
    pub static_scan: StaticScan,
    pub delta: Option<VersionDelta>,
    pub netlog: Option<NetlogScan>,
}

pub fn scan_target(inp: &ScanInputs<'_>, cfg: &Config) -> Result<TargetScan, ScoringError> {
    let pkg = inp.pkg;
    let mut warnings: Vec<String> = pkg.warnings.clone();
    let mut findings = lint_manifest(&pkg.manifest, &cfg.manifest);

    let analysis = PackageAnalysis::new(pkg);
    let static_scan = scan_static(pkg, &analysis, &cfg.static_signals);
    findings.extend(static_scan.findings.iter().cloned());

    let delta = inp.previous.map(|old| {
        let d = diff_versions(old, pkg, cfg);
        findings.extend(judge_delta(&d, &cfg.delta));
        warnings.extend(d.warnings.iter().cloned());
        d
    });

    let netlog = inp.netlog.map(|log| {
        let s = scan_traffic(log, &static_scan.endpoints, inp.intel, inp.as_of, &cfg.netlog);
        findings.extend(s.findings.iter().cloned());
        warnings.extend(s.warnings.iter().cloned());
        s
    });

    if let Some(rec) = inp.metadata {
        findings.extend(judge_metadata(rec, inp.as_of, &cfg.metadata));
    }

    findings.extend(correlate(&static_scan, inp.netlog, inp.intel, inp.as_of, &mut warnings));

    let extension_id = pkg
        .extension_id
        .clone()
        .or_else(|| inp.metadata.map(|m| m.extension_id.clone()));
    let mut report = aggregate(&findings, cfg)?.with_subject(inp.subject.clone(), extension_id);
    report.as_of = Some(inp.as_of.to_string());
    report.warnings = warnings;
    Ok(TargetScan {
        report,
        static_scan,
        delta,
        netlog,
    })
}

/// Findings that need more than one signal family: suspicious hosts the
/// package embeds or contacts, and link funnels confirmed by intel or by
/// an observed redirect.
fn correlate(
    st: &StaticScan,
    log: Option<&TrafficLog>,
    intel: Option<&DomainIntel>,
    as_of: NaiveDate,
    warnings: &mut Vec<String>,
) -> Vec<SignalFinding> {
    let mut out = Vec::new();
    let mut redirect_hosts = BTreeSet::new();
    if let Some(log) = log {
        for e in log.events.iter().filter(|e| e.is_redirect()) {
            redirect_hosts.extend(e.host());
            redirect_hosts.extend(e.redirect_location.as_deref().and_then(util::http_host));
        }
    }

    if let Some(intel) = intel {
        // host -> first evidence location
        let mut hosts: Vec<(String, Evidence)> = Vec::new();
        let mut seen = BTreeSet::new();
        for e in &st.endpoints {
            if let Some(h) = e.host() {
                if seen.insert(h.clone()) {
                    hosts.push((h, Evidence::at(e.path.clone(), e.offset, 0)));
                }
            }
        }
        if let Some(log) = log {
            for (i, e) in log.events.iter().enumerate() {
                if e.initiator == crate::netlog::Initiator::Page {
                    continue;
                }
                if let Some(h) = e.host() {
                    if seen.insert(h.clone()) {
                        hosts.push((
                            h,
                            Evidence {
                                path: Some("netlog".into()),
                                offset: Some(i),
                                ..Default::default()
                            },
                        ));
                    }
                }
            }
        }
        for (host, mut ev) in hosts {
            ev.line = None;
            let v = match intel.lookup(&host, as_of) {
                Ok(v) => v,
                Err(e) => {
                    warnings.push(format!("intel lookup {host}: {e}"));
                    continue;
                }
            };
            if !v.is_suspicious() || v.has(DomainFlag::Allowlisted) {
                continue;
            }
            let severity = if v.has(DomainFlag::Blocklisted) { Severity::High } else { Severity::Medium };
            let flags: Vec<String> = v
                .flags
                .iter()
                .map(|f| serde_json::to_value(f).ok().and_then(|x| x.as_str().map(String::from)).unwrap_or_default())
                .collect();
            let mut msg = format!("{host} is flagged: {}", flags.join(", "));
            if let Some(age) = v.nrd_age_days {
                msg.push_str(&format!(" (registered {age} days before {as_of})"));
            }
            out.push(SignalFinding::new(
                "SUSPICIOUS_DOMAIN",
                Category::Network,
                severity,
                ev.with_value(host.clone()),
                msg,
            ));
        }
    }

    let mut funnel_hosts = BTreeSet::new();
    for f in st.findings.iter().filter(|f| f.rule_id == "EXTERNAL_LINK_FUNNEL") {
        let Some(host) = f.evidence.value.as_deref().and_then(util::http_host) else { continue };
        if !funnel_hosts.insert(host.clone()) {
            continue;
        }
        let flagged = intel
            .and_then(|i| i.lookup(&host, as_of).ok())
            .is_some_and(|v| v.is_suspicious() && !v.has(DomainFlag::Allowlisted));
        let redirected = redirect_hosts.iter().any(|h| util::host_matches_domain(h, &host));
        if !(flagged || redirected) {
            continue;
        }
        let why = match (flagged, redirected) {
            (true, true) => "flagged by domain intel and seen in a redirect chain",
            (true, false) => "flagged by domain intel",
            _ => "seen in a redirect chain",
        };
        out.push(SignalFinding::new(
            "PUP_FUNNEL",
            Category::Behavioural,
            Severity::High,
            f.evidence.clone(),
            format!("link target {host} is {why}"),
        ));
    }
    sort_canonical(&mut out);
    out
}
