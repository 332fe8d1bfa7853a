//! Scan every corpus target and print the review queue.
//!
//!     cargo run --example triage_queue

use extscan::intel::load_feeds_dir;
use extscan::pipeline::{scan_target, ScanInputs};
use extscan::{cli, render_report, triage_rank, Config, ReportFormat};

fn main() {
    let root = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures");
    let cfg = Config::default();
    let intel = load_feeds_dir(format!("{root}/feeds").as_ref(), &cfg.intel).expect("feeds");
    let as_of = chrono::NaiveDate::from_ymd_opt(2025, 10, 15).unwrap();
    let (targets, _) = cli::expand_targets(&[format!("{root}/corpus").into()]);

    let mut reports = Vec::new();
    for t in &targets {
        let pkg = cli::load_package(t, &cfg).expect("fixture loads");
        let mut inp = ScanInputs::new(t.file_name().unwrap().to_string_lossy(), &pkg, as_of);
        inp.intel = Some(&intel);
        reports.push(scan_target(&inp, &cfg).expect("known rules").report);
    }
    let ranked = triage_rank(reports);
    for (i, r) in ranked.iter().enumerate() {
        println!("{:>2}. {:<10} {:>6.2}  {}", i + 1, r.verdict.as_str(), r.composite_score, r.subject);
    }
    println!("\ntop of queue:\n");
    print!("{}", String::from_utf8_lossy(&render_report(&ranked[0], ReportFormat::Text)));
}
