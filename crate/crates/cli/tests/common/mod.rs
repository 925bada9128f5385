//! Helpers shared by the CLI test targets.
#![allow(dead_code)]

use std::process::{Command, Output};

use serde_json::Value;
use wbcast_cli::REPORT_SCHEMA;

pub fn wbcast(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wbcast"))
        .args(args)
        .output()
        .expect("failed to launch wbcast")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is not UTF-8")
}

/// Validates a JSON report against the published schema, listing every violation.
pub fn validate_report(report: &str) -> Result<(), String> {
    let schema: Value = serde_json::from_str(REPORT_SCHEMA).map_err(|e| e.to_string())?;
    let instance: Value = serde_json::from_str(report).map_err(|e| e.to_string())?;
    let validator = jsonschema::validator_for(&schema).map_err(|e| format!("bad schema: {e}"))?;
    let errors: Vec<String> = validator
        .iter_errors(&instance)
        .map(|e| format!("{} at {}", e, e.instance_path))
        .collect();
    if errors.is_empty() {
        Ok(())
    } else {
        Err(errors.join("; "))
    }
}
