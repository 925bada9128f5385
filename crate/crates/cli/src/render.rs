use std::fmt::Write as _;

use serde::Serialize;
use wbcast_core::protocol::Locality;

use crate::error::CliError;
use crate::report::Report;
use crate::request::Format;

pub const RUN_CSV_HEADER: &str = "run,alpha,beta,gamma,branch1,branch2,p1,p2,pair,locality,\
min_pt_eigenvalue,w3,w4,negativity,classification,paper_claim,agrees_with_paper";

pub const BACKGROUND_CSV_HEADER: &str = "kind,alpha_sq,nonlocal_min_pt_eigenvalue,\
nonlocal_classification,local_min_pt_eigenvalue,local_classification";

pub fn render(report: &Report, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => to_json(report),
        Format::Csv => Ok(to_csv(report)),
        Format::Text => Ok(to_text(report)),
    }
}

pub fn to_json(report: &Report) -> Result<String, CliError> {
    let mut buf = Vec::new();
    let formatter = serde_json::ser::PrettyFormatter::with_indent(b"  ");
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, formatter);
    report
        .serialize(&mut ser)
        .map_err(|e| CliError::Invariant(format!("report serialization failed: {e}")))?;
    buf.push(b'\n');
    String::from_utf8(buf).map_err(|e| CliError::Invariant(e.to_string()))
}

fn locality_str(l: Locality) -> &'static str {
    match l {
        Locality::NonLocal => "non-local",
        Locality::Local => "local",
    }
}

pub fn to_csv(report: &Report) -> String {
    let mut out = String::new();
    if let Some(bg) = &report.background {
        out.push_str(BACKGROUND_CSV_HEADER);
        out.push('\n');
        for row in &bg.grid {
            let _ = writeln!(
                out,
                "grid,{},{},{},{},{}",
                row.alpha_sq,
                row.nonlocal_min_pt_eigenvalue,
                row.nonlocal_classification.as_str(),
                row.local_min_pt_eigenvalue,
                row.local_classification.as_str()
            );
        }
        for b in &bg.boundaries {
            let _ = writeln!(out, "boundary,{b},,,,");
        }
        return out;
    }
    out.push_str(RUN_CSV_HEADER);
    out.push('\n');
    for run in &report.runs {
        for p in &run.pairs {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
                run.index,
                run.params.alpha,
                run.params.beta,
                run.params.gamma,
                run.branches.round1,
                run.branches.round2,
                run.p1,
                run.p2,
                p.pair,
                locality_str(p.locality),
                p.min_pt_eigenvalue,
                p.w3,
                p.w4,
                p.negativity,
                p.classification.as_str(),
                p.paper_claim.as_str(),
                p.agrees_with_paper
            );
        }
    }
    out
}

pub fn to_text(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "wbcast {} ({}), mode {}",
        report.version, report.schema, report.request.mode
    );
    if let Some(bg) = &report.background {
        let _ = writeln!(
            out,
            "\nTwo-qubit broadcasting scan over alpha^2 ({} points)",
            bg.grid.len()
        );
        let _ = writeln!(
            out,
            "{:>22}  {:>22}  {:<10}  {:>22}  {:<10}",
            "alpha^2", "min PT (non-local)", "", "min PT (local)", ""
        );
        for row in &bg.grid {
            let _ = writeln!(
                out,
                "{:>22}  {:>22}  {:<10}  {:>22}  {:<10}",
                row.alpha_sq,
                row.nonlocal_min_pt_eigenvalue,
                row.nonlocal_classification.as_str(),
                row.local_min_pt_eigenvalue,
                row.local_classification.as_str()
            );
        }
        let bounds: Vec<String> = bg.boundaries.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "\nnon-local boundaries: {}", bounds.join(", "));
        let _ = writeln!(
            out,
            "reference:            {}, {}",
            bg.reference[0], bg.reference[1]
        );
        let _ = writeln!(out, "max boundary error:   {}", bg.max_boundary_error);
        let _ = writeln!(out, "symmetry defect:      {}", bg.symmetry_defect);
        return out;
    }
    for run in &report.runs {
        let _ = writeln!(
            out,
            "\nrun {}: alpha={} beta={} gamma={} branches {}/{}{}",
            run.index,
            run.params.alpha,
            run.params.beta,
            run.params.gamma,
            run.branches.round1,
            run.branches.round2,
            if run.apply_unitaries {
                ""
            } else {
                " (no local unitaries)"
            }
        );
        let frac = |f: &Option<String>| f.as_ref().map(|s| format!(" = {s}")).unwrap_or_default();
        let _ = writeln!(out, "  p1 = {}{}", run.p1, frac(&run.fractions.p1));
        let _ = writeln!(out, "  p2 = {}{}", run.p2, frac(&run.fractions.p2));
        let _ = writeln!(
            out,
            "  five-qubit trace {} purity {}",
            run.five_qubit.trace, run.five_qubit.purity
        );
        let _ = writeln!(
            out,
            "  {:<5} {:<10} {:>22} {:>22} {:>22} {:>22}  {:<10}",
            "pair", "locality", "min PT eigenvalue", "W3", "W4", "negativity", "verdict"
        );
        for p in &run.pairs {
            let _ = writeln!(
                out,
                "  {:<5} {:<10} {:>22} {:>22} {:>22} {:>22}  {:<10}",
                p.pair.to_string(),
                locality_str(p.locality),
                p.min_pt_eigenvalue,
                p.w3,
                p.w4,
                p.negativity,
                p.classification.as_str()
            );
        }
        let _ = writeln!(out, "  broadcast ok: {}", run.broadcast_ok);
        for note in &run.annotations {
            let _ = writeln!(out, "  note: {note}");
        }
    }
    if !report.summary.pairs.is_empty() {
        let _ = writeln!(out, "\nPublished claims ({} runs)", report.summary.runs);
        let _ = writeln!(
            out,
            "  {:<5} {:<10} {:<10} {:>9} {:>9}  status",
            "pair", "locality", "claimed", "entangled", "separable"
        );
        for s in &report.summary.pairs {
            let status = if s.disagree == 0 {
                "agrees".to_string()
            } else {
                format!("DISAGREES ({} of {})", s.disagree, report.summary.runs)
            };
            let _ = writeln!(
                out,
                "  {:<5} {:<10} {:<10} {:>9} {:>9}  {}",
                s.pair.to_string(),
                locality_str(s.locality),
                s.paper_claim.as_str(),
                s.entangled,
                s.separable,
                status
            );
        }
        let _ = writeln!(
            out,
            "  broadcast ok in {} of {} runs",
            report.summary.broadcast_ok, report.summary.runs
        );
        if let Some(total) = report.summary.total_probability {
            let _ = writeln!(out, "  total branch probability {total}");
        }
    }
    out
}
