//! Static detectors over one package: findings, endpoints and per-file
//! obfuscation metrics.
//!
//!     cargo run --example static_scan -- fixtures/corpus/grammar-fixer

use extscan::static_signals::{scan_static, PackageAnalysis};
use extscan::{cli, Config};

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/corpus/page-translator").into());
    let cfg = Config::default();
    let pkg = cli::load_package(path.as_ref(), &cfg).expect("package loads");
    let analysis = PackageAnalysis::new(&pkg);
    let scan = scan_static(&pkg, &analysis, &cfg.static_signals);

    println!("findings:");
    for f in &scan.findings {
        let at = f.evidence.path.as_deref().unwrap_or("");
        println!("  [{}] {} {}:{}  {}", f.severity, f.rule_id, at, f.evidence.line.unwrap_or(0), f.message);
    }
    println!("endpoints:");
    for e in &scan.endpoints {
        println!("  {:<48} {:?} {}", e.url_or_host, e.context, e.path);
    }
    println!("obfuscation metrics:");
    for (p, m) in &scan.obfuscation {
        println!(
            "  {p}: entropy {:.2} ident {:.2} b64 {} hex {:.3} maxline {}",
            m.shannon_entropy_bits_per_char, m.mean_identifier_length, m.base64_blob_count, m.hex_escape_density, m.max_line_length
        );
    }
}
