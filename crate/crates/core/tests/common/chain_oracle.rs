//! Brute-force reference for redirect hijack chains.
//!
//! A subsequence i0 < i1 < ... < ik (k >= 1) of a log is a hijack chain when
//! - every hop before the last is a 3xx with a Location, and the next hop is
//!   the earliest later request for that exact (normalized) URL;
//! - nothing links into i0 and nothing links out of ik (maximal);
//! - i0's host is off the provider list, ik's host is on it, and i0's URL
//!   carries a non-empty query parameter from the configured set.
//!
//! Logs fed to the oracle never request the same URL twice, so "earliest
//! later request" is unambiguous.

use extscan::config::NetlogConfig;
use extscan::netlog::TrafficLog;
use url::Url;

fn norm(s: &str) -> Option<String> {
    Url::parse(s).ok().map(|u| u.to_string())
}

fn host(s: &str) -> Option<String> {
    Url::parse(s).ok()?.host_str().map(|h| h.to_ascii_lowercase())
}

fn on_list(h: &str, list: &[String]) -> bool {
    list.iter().any(|d| h == d || h.ends_with(&format!(".{d}")))
}

/// Target of a redirect at `i`, if any.
pub fn link(log: &TrafficLog, i: usize) -> Option<usize> {
    let e = &log.events[i];
    let status = e.status?;
    if !(300..400).contains(&status) {
        return None;
    }
    let target = norm(e.redirect_location.as_deref()?)?;
    (i + 1..log.events.len()).find(|&j| norm(&log.events[j].url).as_deref() == Some(target.as_str()))
}

pub fn is_hijack_chain(log: &TrafficLog, seq: &[usize], cfg: &NetlogConfig) -> bool {
    if seq.len() < 2 {
        return false;
    }
    if seq.windows(2).any(|w| link(log, w[0]) != Some(w[1])) {
        return false;
    }
    let first = seq[0];
    let last = *seq.last().unwrap();
    if (0..log.events.len()).any(|i| link(log, i) == Some(first)) || link(log, last).is_some() {
        return false;
    }
    let (Some(h0), Some(hn)) = (host(&log.events[first].url), host(&log.events[last].url)) else {
        return false;
    };
    if on_list(&h0, &cfg.provider_allowlist) || !on_list(&hn, &cfg.provider_allowlist) {
        return false;
    }
    let u = Url::parse(&log.events[first].url).unwrap();
    let has_query = u
        .query_pairs()
        .any(|(k, v)| cfg.query_params.iter().any(|p| *p == k) && !v.is_empty());
    has_query
}

/// Every subset of the log, filtered by the predicate. Exponential, so
/// only for small logs.
pub fn enumerate_all_subsets(log: &TrafficLog, cfg: &NetlogConfig) -> Vec<Vec<usize>> {
    let n = log.events.len();
    assert!(n <= 20, "exhaustive oracle limited to 20 events");
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() < 2 {
            continue;
        }
        let seq: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        if is_hijack_chain(log, &seq, cfg) {
            out.push(seq);
        }
    }
    out.sort();
    out
}

/// Same set as [`enumerate_all_subsets`], pruned: extends increasing
/// sequences only while every prefix still satisfies the link rule.
pub fn enumerate_pruned(log: &TrafficLog, cfg: &NetlogConfig) -> Vec<Vec<usize>> {
    let n = log.events.len();
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    while let Some(seq) = stack.pop() {
        if is_hijack_chain(log, &seq, cfg) {
            out.push(seq.clone());
        }
        let last = *seq.last().unwrap();
        for j in last + 1..n {
            if link(log, last) == Some(j) {
                let mut next = seq.clone();
                next.push(j);
                stack.push(next);
            }
        }
    }
    out.sort();
    out
}

/// Index sequences of the library's chains, mapped back through URLs.
pub fn library_chains(log: &TrafficLog, cfg: &NetlogConfig) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = extscan::netlog::detect_hijack_chains(log, cfg)
        .into_iter()
        .map(|(c, _)| {
            c.hops
                .iter()
                .map(|h| log.events.iter().position(|e| e == h).expect("hop comes from the log"))
                .collect()
        })
        .collect();
    out.sort();
    out
}
