//! Parse a package and print its identity and file listing.
//!
//!     cargo run --example inspect_package -- path/to/ext.crx
//!
//! Without an argument, packs a corpus fixture into a CRX3 with a fresh
//! key and reads it back, which shows the ID derivation end to end.

use extscan::package::{derive_extension_id, parse_package, write_crx3, write_zip};
use extscan::{cli, Config};

fn main() {
    let pkg = match std::env::args().nth(1) {
        Some(p) => cli::load_package(p.as_ref(), &Config::default()).unwrap_or_else(|e| {
            eprintln!("{e}");
            std::process::exit(1)
        }),
        None => {
            let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/corpus/supersonic-ai");
            let src = cli::load_package(dir.as_ref(), &Config::default()).expect("fixture loads");
            // Any byte string works as a key for ID purposes.
            let key: Vec<u8> = (0u8..=161).collect();
            let crx = write_crx3(&write_zip(&src.files), &key);
            println!("packed {} bytes of CRX3, expected id {}", crx.len(), derive_extension_id(&key).unwrap());
            parse_package(&crx, None).expect("round trip")
        }
    };
    println!("container:    {:?}", pkg.source_kind);
    println!("extension id: {}", pkg.extension_id.as_deref().unwrap_or("(unknown)"));
    println!("name:         {}", pkg.manifest.name);
    println!("version:      {} (MV{})", pkg.version, pkg.manifest.manifest_version);
    for (path, bytes) in &pkg.files {
        println!("  {:>8}  {path}", bytes.len());
    }
    for w in &pkg.warnings {
        println!("warning: {w}");
    }
}
