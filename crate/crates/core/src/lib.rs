//! Link-persistence auditing toolkit.
//!
//! Given corpora of converted documents (markup plus plain text) and their
//! repository metadata, this crate extracts the web URLs each document cites,
//! normalizes them, checks whether each resource is still live, looks up
//! archived copies through Memento TimeGate/TimeMap endpoints, selects the
//! copy closest in time to the citing document's publication date, and
//! aggregates the results into availability reports and crawler seed lists.
//!
//! Modules follow the pipeline order:
//!
//! - [`ingest`]: corpus loading, link extraction, citation records
//! - [`normalize`]: URL canonicalization and filtering
//! - [`memento`]: TimeMap/TimeGate client and link-format parsing
//! - [`probe`]: liveness probing with per-host politeness
//! - [`analyze`]: joining probe and archive evidence into outcomes
//! - [`report`]: quadrant, per-group, and delay statistics
//! - [`seeds`]: crawler seed list and syndication feed export

pub mod analyze;
pub mod client;
pub mod ingest;
pub mod jsonl;
pub mod memento;
pub mod normalize;
pub mod probe;
pub mod report;
pub mod seeds;
