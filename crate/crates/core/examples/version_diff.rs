//! Compare two versions and judge the update.
//!
//!     cargo run --example version_diff -- OLD NEW

use extscan::delta::{diff_versions, judge_delta};
use extscan::{cli, Config};

fn main() {
    let corpus = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/corpus");
    let mut args = std::env::args().skip(1);
    let old = args.next().unwrap_or_else(|| format!("{corpus}/deepseek-assistant.prev"));
    let new = args.next().unwrap_or_else(|| format!("{corpus}/deepseek-assistant"));
    let cfg = Config::default();
    let a = cli::load_package(old.as_ref(), &cfg).expect("old loads");
    let b = cli::load_package(new.as_ref(), &cfg).expect("new loads");
    let d = diff_versions(&a, &b, &cfg);
    println!("{} -> {}", d.old_version, d.new_version);
    for (p, s) in &d.per_file_similarity {
        println!("  {s:>6.3}  {p}");
    }
    for e in &d.endpoints_added {
        println!("  + {} ({:?} in {})", e.url_or_host, e.context, e.path);
    }
    for e in &d.endpoints_removed {
        println!("  - {}", e.url_or_host);
    }
    println!("re-obfuscated: {:?}", d.reobfuscation_suspects);
    for f in judge_delta(&d, &cfg.delta) {
        println!("[{}] {} {}", f.severity, f.rule_id, f.message);
    }
}
