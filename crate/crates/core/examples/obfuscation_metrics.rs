//! Obfuscation metrics for any JavaScript file.
//!
//!     cargo run --example obfuscation_metrics -- file.js

use extscan::static_signals::{measure_obfuscation, tokenize_js};
use extscan::Config;

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/corpus/grammar-fixer/content.js").into());
    let bytes = std::fs::read(&path).expect("readable file");
    let ts = tokenize_js(&bytes, &path);
    let (m, finding) = measure_obfuscation(&ts, &Config::default().static_signals);
    println!("{m:#?}");
    match finding {
        Some(f) => println!("[{}] {}: {}", f.severity, f.rule_id, f.message),
        None => println!("not flagged"),
    }
}
