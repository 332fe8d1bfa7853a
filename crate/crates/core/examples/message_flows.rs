//! Content-script to background message flows and where they end up.
//!
//!     cargo run --example message_flows -- fixtures/corpus/supersonic-ai

use extscan::static_signals::{correlate_message_flows, PackageAnalysis};
use extscan::{cli, Config};

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/corpus/supersonic-ai").into());
    let cfg = Config::default();
    let pkg = cli::load_package(path.as_ref(), &cfg).expect("package loads");
    let analysis = PackageAnalysis::new(&pkg);
    let (flows, findings) = correlate_message_flows(&pkg, &analysis.streams, &cfg.static_signals);
    for fl in &flows {
        let sink = match &fl.sink {
            Some(s) => format!("{:?} {} @ {}:{}", s.kind, s.url_literal.as_deref().unwrap_or("?"), s.path, s.offset),
            None => "no network sink".into(),
        };
        println!(
            "{:<20} {}:{} -> {}:{} -> {sink}",
            fl.action_key, fl.sender.path, fl.sender.offset, fl.receiver.path, fl.receiver.offset
        );
    }
    for f in findings {
        println!("[{}] {} {}", f.severity, f.rule_id, f.message);
    }
}
