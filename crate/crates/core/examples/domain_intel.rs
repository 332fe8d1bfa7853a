//! Offline domain reputation lookups, with an optional recorded remote
//! service behind a TTL cache.
//!
//!     cargo run --example domain_intel -- host1 host2 ...

use extscan::intel::{load_feeds_dir, RecordedLookup, RemoteVerdict};
use extscan::Config;

fn main() {
    let mut cfg = Config::default().intel;
    cfg.remote_lookups_enabled = true;
    let feeds = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/feeds");
    let remote = RecordedLookup::new([(
        "api.gosupersonic.email".to_string(),
        RemoteVerdict { positives: 1, engines: 97 },
    )]);
    let intel = load_feeds_dir(feeds.as_ref(), &cfg).expect("feeds load").with_remote(Box::new(remote));
    let as_of = chrono::NaiveDate::from_ymd_opt(2025, 10, 15).unwrap();

    let mut hosts: Vec<String> = std::env::args().skip(1).collect();
    if hosts.is_empty() {
        hosts = ["api.glimmerbloop.top", "api.gosupersonic.email", "www.perplexity.ai", "example.org"]
            .map(String::from)
            .to_vec();
    }
    for h in hosts {
        match intel.lookup(&h, as_of) {
            Ok(v) => println!(
                "{h:<28} flags {:?} nrd_age {:?} ratio {:?}",
                v.flags, v.nrd_age_days, v.detection_ratio
            ),
            Err(e) => println!("{h:<28} error: {e}"),
        }
    }
}
