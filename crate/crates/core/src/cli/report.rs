//! The JSON envelope written by every subcommand.

use std::io::Write;
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportDocument {
    pub tool_version: String,
    pub command: Value,
    pub timestamp: u64,
    pub results: Value,
    pub overall_pass: bool,
}

impl ReportDocument {
    pub fn new(command: Value, results: Value, overall_pass: bool) -> Self {
        ReportDocument {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command,
            timestamp: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map_or(0, |d| d.as_secs()),
            results,
            overall_pass,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report values serialize")
    }
}

/// Writes the document to `path`, or to standard output when absent.
pub fn emit_report(doc: &ReportDocument, path: Option<&Path>) -> std::io::Result<()> {
    let mut text = doc.to_json();
    text.push('\n');
    match path {
        Some(p) => std::fs::write(p, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn envelope_fields() {
        let doc = ReportDocument::new(json!({"name": "torsion"}), json!({"degrees": []}), true);
        let v: Value = serde_json::from_str(&doc.to_json()).unwrap();
        for key in [
            "toolVersion",
            "command",
            "timestamp",
            "results",
            "overallPass",
        ] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["results"]["degrees"], json!([]));
    }

    #[test]
    fn writes_to_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("r.json");
        let doc = ReportDocument::new(json!({}), json!(1), false);
        emit_report(&doc, Some(&path)).unwrap();
        let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(v["overallPass"], json!(false));
    }
}
