//! Everything at once through the command-line front end, in-process.
//!
//!     cargo run --example full_scan -- [extra extscan scan flags]

fn main() {
    let root = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures");
    let mut args: Vec<String> = vec![
        "extscan".into(),
        "scan".into(),
        format!("{root}/corpus"),
        "--feeds-dir".into(),
        format!("{root}/feeds"),
        "--as-of".into(),
        "2025-10-15".into(),
        "--format".into(),
        "text".into(),
        "--jobs".into(),
        "4".into(),
    ];
    args.extend(std::env::args().skip(1));
    let code = extscan::cli::run(args, &mut std::io::stdout(), &mut std::io::stderr());
    println!("exit code {code}");
}
