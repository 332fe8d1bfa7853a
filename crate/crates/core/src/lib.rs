//! Detection toolkit for malicious Chrome extensions.
//!
//! The crate combines several independent signal families into a single
//! risk verdict:
//!
//! - [`package`]: CRX3 / ZIP / unpacked-directory parsing and extension ID derivation.
//! - [`manifest`]: `manifest.json` model and policy lint.
//! - [`static_signals`]: JavaScript tokenizer and static code detectors.
//! - [`delta`]: version-to-version diffing for bait-and-switch updates.
//! - [`netlog`]: recorded network log ingestion and behavioural detectors.
//! - [`intel`]: offline domain reputation feeds and store metadata anomalies.
//! - [`scoring`] / [`report`]: aggregation, verdicts, triage order, rendering.
//! - [`pipeline`]: runs every applicable detector over one target.
//! - [`cli`]: the `extscan` command-line front end.
//!
//! See the `examples/` directory of this crate for one runnable program per
//! capability.

pub mod cli;
pub mod config;
pub mod delta;
pub mod finding;
pub mod intel;
pub mod manifest;
pub mod netlog;
pub mod package;
pub mod pipeline;
pub mod report;
pub mod rules;
pub mod scoring;
pub mod static_signals;
mod util;

pub use config::Config;
pub use finding::{Category, Evidence, Severity, SignalFinding};
pub use package::{derive_extension_id, parse_package, ExtensionPackage, SourceKind};
pub use report::{render_report, ReportFormat};
pub use scoring::{aggregate, triage_rank, RiskReport, Verdict};
