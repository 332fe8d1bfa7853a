//! Manifest policy lint on its own.
//!
//!     cargo run --example lint_manifest -- path/to/manifest.json

use extscan::manifest::{lint_manifest, parse_manifest};
use extscan::Config;

fn main() {
    let bytes = match std::env::args().nth(1) {
        Some(p) => std::fs::read(p).expect("readable manifest"),
        None => br#"{
            "manifest_version": 3, "name": "demo", "version": "1.0",
            "permissions": ["scripting", "declarativeNetRequest"],
            "host_permissions": ["<all_urls>"],
            "content_security_policy": {"extension_pages": "script-src 'self' 'unsafe-eval'"},
            "chrome_settings_overrides": {"search_provider": {
                "name": "x", "search_url": "https://chatgptforchrome.com/?q={searchTerms}"}}
        }"#
        .to_vec(),
    };
    let m = match parse_manifest(&bytes) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    };
    for f in lint_manifest(&m, &Config::default().manifest) {
        println!(
            "{:<8} {:<22} {:<28} {}",
            f.severity.as_str(),
            f.rule_id,
            f.evidence.field.as_deref().unwrap_or("-"),
            f.message
        );
    }
}
