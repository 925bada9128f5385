//! Report generation for the `wbcast` command-line tool.
//!
//! A [`RunRequest`] is turned into a [`Report`] by [`build_report`], then
//! rendered as JSON, CSV or text by [`render`].

pub mod error;
pub mod numfmt;
pub mod render;
pub mod report;
pub mod request;

pub use error::CliError;
pub use render::render;
pub use report::{build_report, Report};
pub use request::{Format, Mode, RunRequest};

/// JSON Schema for the JSON report format.
pub const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");

/// Builds and renders a report in one step.
pub fn run_to_string(request: &RunRequest) -> Result<String, CliError> {
    let report = build_report(request)?;
    render(&report, request.format)
}
