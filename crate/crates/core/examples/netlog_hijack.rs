//! Behavioural detectors over a recorded traffic log.
//!
//!     cargo run --example netlog_hijack -- log.jsonl

use extscan::netlog::{parse_traffic_log, scan_traffic};
use extscan::Config;

const DEMO: &str = r#"{"ts":1,"method":"GET","url":"https://dinershtein.com/perplexity.html?q=my+prompt","status":301,"location":"https://www.perplexity.ai/search/new?q=my+prompt","initiator":"background"}
{"ts":2,"method":"GET","url":"https://www.perplexity.ai/search/new?q=my+prompt","status":200,"initiator":"background"}
{"ts":3,"method":"GET","url":"https://www.perplexity.ai/search?q=direct","status":200,"initiator":"page"}
"#;

fn main() {
    let bytes = match std::env::args().nth(1) {
        Some(p) => std::fs::read(p).expect("readable log"),
        None => DEMO.as_bytes().to_vec(),
    };
    let cfg = Config::default();
    let log = parse_traffic_log(&bytes, &cfg.netlog).expect("non-empty log");
    let as_of = chrono::NaiveDate::from_ymd_opt(2025, 10, 15).unwrap();
    let scan = scan_traffic(&log, &[], None, as_of, &cfg.netlog);
    for c in &scan.chains {
        let hops: Vec<&str> = c.hops.iter().map(|h| h.url.as_str()).collect();
        println!("chain (query {:?}):\n  {}", c.origin_query, hops.join("\n  -> "));
    }
    for f in &scan.findings {
        println!("[{}] {} {}", f.severity, f.rule_id, f.message);
    }
    for w in &scan.warnings {
        println!("note: {w}");
    }
}
