//! Report assembly for the four run modes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;
use wbcast_core::protocol::{reference_interval, scan_background, Locality, BISECTION_TOL};
use wbcast_core::{
    run_protocol, Classification, MachineBranch, PairVerdict, ProtocolConfig, QubitPair,
    Transcript, WParams, PAIRS,
};

use crate::error::CliError;
use crate::numfmt::{fraction, Sci};
use crate::request::{Mode, RunRequest};

pub const SCHEMA_ID: &str = "wbcast-report/v1";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Smallest amplitude accepted by the sweep sampler.
pub const SWEEP_MIN_COMPONENT: f64 = 0.05;

/// Tolerance on the total probability of the 64 branch pairs.
pub const COMPLETENESS_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub version: &'static str,
    pub request: RequestEcho,
    pub runs: Vec<RunRecord>,
    pub background: Option<BackgroundRecord>,
    pub summary: Summary,
}

#[derive(Debug, Clone, Serialize)]
pub struct RequestEcho {
    pub mode: Mode,
    pub params: Option<ParamsRecord>,
    pub branch1: Option<MachineBranch>,
    pub branch2: Option<MachineBranch>,
    pub apply_unitaries: bool,
    pub sweep: Option<usize>,
    pub seed: Option<u64>,
    pub grid: Option<usize>,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ParamsRecord {
    pub alpha: Sci,
    pub beta: Sci,
    pub gamma: Sci,
}

impl From<WParams> for ParamsRecord {
    fn from(p: WParams) -> Self {
        Self {
            alpha: Sci(p.alpha),
            beta: Sci(p.beta),
            gamma: Sci(p.gamma),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BranchesRecord {
    pub round1: MachineBranch,
    pub round2: MachineBranch,
}

#[derive(Debug, Clone, Serialize)]
pub struct Fractions {
    pub p1: Option<String>,
    pub p2: Option<String>,
    pub joint: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FiveQubitRecord {
    pub labels: Vec<String>,
    pub trace: Sci,
    pub purity: Sci,
    pub eigenvalues: Vec<Sci>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairRecord {
    pub pair: QubitPair,
    pub locality: Locality,
    pub min_pt_eigenvalue: Sci,
    pub w3: Sci,
    pub w4: Sci,
    pub negativity: Sci,
    pub classification: Classification,
    pub paper_claim: Classification,
    pub agrees_with_paper: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct AgreementRecord {
    pub nonlocal_agree: usize,
    pub local_agree: usize,
    pub disagreements: Vec<QubitPair>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunRecord {
    pub index: usize,
    pub params: ParamsRecord,
    pub branches: BranchesRecord,
    pub apply_unitaries: bool,
    pub p1: Sci,
    pub p2: Sci,
    pub joint_probability: Sci,
    pub fractions: Fractions,
    pub five_qubit: FiveQubitRecord,
    pub pairs: Vec<PairRecord>,
    pub broadcast_ok: bool,
    pub paper_agreement: AgreementRecord,
    pub annotations: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BackgroundRow {
    pub alpha_sq: Sci,
    pub nonlocal_min_pt_eigenvalue: Sci,
    pub nonlocal_classification: Classification,
    pub local_min_pt_eigenvalue: Sci,
    pub local_classification: Classification,
}

#[derive(Debug, Clone, Serialize)]
pub struct BackgroundRecord {
    pub grid: Vec<BackgroundRow>,
    pub boundaries: Vec<Sci>,
    pub reference: [Sci; 2],
    pub max_boundary_error: Sci,
    pub symmetry_defect: Sci,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairSummary {
    pub pair: QubitPair,
    pub locality: Locality,
    pub paper_claim: Classification,
    pub entangled: usize,
    pub separable: usize,
    pub agree: usize,
    pub disagree: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub runs: usize,
    pub broadcast_ok: usize,
    pub total_probability: Option<Sci>,
    pub pairs: Vec<PairSummary>,
}

/// Runs the request and assembles the full report. Nothing is rendered unless
/// every run succeeds and passes its density-matrix checks.
pub fn build_report(request: &RunRequest) -> Result<Report, CliError> {
    request.validate()?;
    let (runs, background, total_probability) = match request.mode {
        Mode::Single => (vec![run_record(0, &single_config(request))?], None, None),
        Mode::Branches => {
            let runs = run_branches(request)?;
            let total = runs.iter().map(|r| r.joint_probability.0).sum::<f64>();
            (runs, None, Some(Sci(total)))
        }
        Mode::Sweep => (run_sweep(request)?, None, None),
        Mode::Background => (Vec::new(), Some(run_background(request)?), None),
    };
    let summary = summarize(&runs, total_probability);
    Ok(Report {
        schema: SCHEMA_ID,
        version: VERSION,
        request: echo(request),
        runs,
        background,
        summary,
    })
}

fn echo(request: &RunRequest) -> RequestEcho {
    let mode = request.mode;
    let uses_params = matches!(mode, Mode::Single | Mode::Branches);
    let uses_branch = matches!(mode, Mode::Single | Mode::Sweep);
    RequestEcho {
        mode,
        params: uses_params.then(|| request.params.into()),
        branch1: uses_branch.then_some(request.branch1),
        branch2: uses_branch.then_some(request.branch2),
        apply_unitaries: request.apply_unitaries,
        sweep: (mode == Mode::Sweep).then_some(request.sweep),
        seed: (mode == Mode::Sweep).then_some(request.seed),
        grid: (mode == Mode::Background).then_some(request.grid),
    }
}

fn config(
    request: &RunRequest,
    params: WParams,
    b1: MachineBranch,
    b2: MachineBranch,
) -> ProtocolConfig {
    let cfg = ProtocolConfig::new(params, b1, b2);
    if request.apply_unitaries {
        cfg
    } else {
        cfg.without_unitaries()
    }
}

fn single_config(request: &RunRequest) -> ProtocolConfig {
    config(request, request.params, request.branch1, request.branch2)
}

/// All 64 (round one, round two) readouts in table order.
pub fn run_branches(request: &RunRequest) -> Result<Vec<RunRecord>, CliError> {
    let configs: Vec<ProtocolConfig> = MachineBranch::ALL
        .iter()
        .flat_map(|&b1| MachineBranch::ALL.iter().map(move |&b2| (b1, b2)))
        .map(|(b1, b2)| config(request, request.params, b1, b2))
        .collect();
    let runs = run_all(&configs)?;
    let total: f64 = runs.iter().map(|r| r.joint_probability.0).sum();
    if (total - 1.0).abs() > COMPLETENESS_TOL {
        return Err(CliError::Invariant(format!(
            "branch probabilities sum to {total}"
        )));
    }
    Ok(runs)
}

/// Draws `count` parameter triples uniformly from the positive octant of the
/// unit sphere, rejecting any with a component below [`SWEEP_MIN_COMPONENT`].
pub fn sweep_params(count: usize, seed: u64) -> Vec<WParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let v: [f64; 3] = std::array::from_fn(|_| rng.sample::<f64, _>(StandardNormal).abs());
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let [a, b, c] = v.map(|x| x / norm);
        if a.min(b).min(c) < SWEEP_MIN_COMPONENT {
            continue;
        }
        if let Ok(p) = WParams::new(a, b, c) {
            out.push(p);
        }
    }
    out
}

pub fn run_sweep(request: &RunRequest) -> Result<Vec<RunRecord>, CliError> {
    let configs: Vec<ProtocolConfig> = sweep_params(request.sweep, request.seed)
        .into_iter()
        .map(|p| config(request, p, request.branch1, request.branch2))
        .collect();
    run_all(&configs)
}

fn run_all(configs: &[ProtocolConfig]) -> Result<Vec<RunRecord>, CliError> {
    configs
        .par_iter()
        .enumerate()
        .map(|(i, cfg)| run_record(i, cfg))
        .collect()
}

pub fn run_background(request: &RunRequest) -> Result<BackgroundRecord, CliError> {
    let scan = scan_background(request.grid, BISECTION_TOL)?;
    let (lo, hi) = reference_interval();
    let grid = scan
        .points
        .iter()
        .map(|p| BackgroundRow {
            alpha_sq: Sci(p.alpha_sq),
            nonlocal_min_pt_eigenvalue: Sci(p.nonlocal.min_pt_eigenvalue),
            nonlocal_classification: p.nonlocal.classification,
            local_min_pt_eigenvalue: Sci(p.local.min_pt_eigenvalue),
            local_classification: p.local.classification,
        })
        .collect();
    let [b_lo, b_hi] = match scan.boundaries[..] {
        [a, b] => [a, b],
        _ => {
            return Err(CliError::Invariant(format!(
                "expected two sign changes, found {}",
                scan.boundaries.len()
            )))
        }
    };
    Ok(BackgroundRecord {
        grid,
        boundaries: vec![Sci(b_lo), Sci(b_hi)],
        reference: [Sci(lo), Sci(hi)],
        max_boundary_error: Sci((b_lo - lo).abs().max((b_hi - hi).abs())),
        symmetry_defect: Sci((b_lo + b_hi - 1.0).abs()),
    })
}

/// Runs one configuration and converts the transcript into a record.
pub fn run_record(index: usize, config: &ProtocolConfig) -> Result<RunRecord, CliError> {
    let transcript = run_protocol(config)?;
    record_from_transcript(index, &transcript)
}

pub fn record_from_transcript(index: usize, t: &Transcript) -> Result<RunRecord, CliError> {
    t.five_qubit.validate()?;
    let joint = t.p1 * t.p2;
    let pairs = t
        .pairs
        .iter()
        .map(pair_record)
        .collect::<Result<Vec<_>, _>>()?;
    if pairs.iter().map(|r| r.pair).ne(PAIRS) {
        return Err(CliError::Invariant(
            "pair verdicts out of presentation order".into(),
        ));
    }
    let trace = t.five_qubit.trace();
    Ok(RunRecord {
        index,
        params: t.config.params.into(),
        branches: BranchesRecord {
            round1: t.config.branch1,
            round2: t.config.branch2,
        },
        apply_unitaries: t.config.apply_unitaries,
        p1: Sci(t.p1),
        p2: Sci(t.p2),
        joint_probability: Sci(joint),
        fractions: Fractions {
            p1: fraction(t.p1),
            p2: fraction(t.p2),
            joint: fraction(joint),
        },
        five_qubit: FiveQubitRecord {
            labels: t
                .five_qubit
                .labels()
                .iter()
                .map(ToString::to_string)
                .collect(),
            trace: Sci(trace.re),
            purity: Sci(t.five_qubit.purity()),
            eigenvalues: t.five_qubit.eigenvalues()?.into_iter().map(Sci).collect(),
        },
        paper_agreement: agreement(&pairs),
        pairs,
        broadcast_ok: t.broadcast_ok,
        annotations: annotations(t.config.params),
    })
}

fn pair_record(v: &PairVerdict) -> Result<PairRecord, CliError> {
    let pair = match v.pair {
        (wbcast_core::QubitLabel::Data(a), wbcast_core::QubitLabel::Data(b)) => QubitPair(a, b),
        other => {
            return Err(CliError::Invariant(format!(
                "verdict on non-data pair {other:?}"
            )))
        }
    };
    let claim = v.paper_claim.unwrap_or_else(|| pair.paper_claim());
    Ok(PairRecord {
        pair,
        locality: pair.locality(),
        min_pt_eigenvalue: Sci(v.min_pt_eigenvalue),
        w3: Sci(v.w3),
        w4: Sci(v.w4),
        negativity: Sci(v.negativity),
        classification: v.classification,
        paper_claim: claim,
        agrees_with_paper: v.classification == claim,
    })
}

fn agreement(pairs: &[PairRecord]) -> AgreementRecord {
    let count = |loc| {
        pairs
            .iter()
            .filter(|p| p.locality == loc && p.agrees_with_paper)
            .count()
    };
    AgreementRecord {
        nonlocal_agree: count(Locality::NonLocal),
        local_agree: count(Locality::Local),
        disagreements: pairs
            .iter()
            .filter(|p| !p.agrees_with_paper)
            .map(|p| p.pair)
            .collect(),
    }
}

fn annotations(params: WParams) -> Vec<String> {
    let vanishing = params.vanishing();
    if vanishing.is_empty() {
        return Vec::new();
    }
    vec![format!(
        "degenerate input: {} = 0; the inseparability conditions for the non-local pairs \
         hold only when alpha, beta, gamma are all nonzero",
        vanishing.join(", ")
    )]
}

fn summarize(runs: &[RunRecord], total_probability: Option<Sci>) -> Summary {
    let pairs = if runs.is_empty() {
        Vec::new()
    } else {
        PAIRS
            .iter()
            .enumerate()
            .map(|(k, &pair)| {
                let rows = runs.iter().map(|r| &r.pairs[k]);
                let entangled = rows
                    .clone()
                    .filter(|p| p.classification == Classification::Entangled)
                    .count();
                let agree = rows.filter(|p| p.agrees_with_paper).count();
                PairSummary {
                    pair,
                    locality: pair.locality(),
                    paper_claim: pair.paper_claim(),
                    entangled,
                    separable: runs.len() - entangled,
                    agree,
                    disagree: runs.len() - agree,
                }
            })
            .collect()
    };
    Summary {
        runs: runs.len(),
        broadcast_ok: runs.iter().filter(|r| r.broadcast_ok).count(),
        total_probability,
        pairs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_draws_are_reproducible_and_interior() {
        let a = sweep_params(40, 9);
        assert_eq!(a, sweep_params(40, 9));
        assert_ne!(a, sweep_params(40, 10));
        for p in &a {
            assert!(p.alpha.min(p.beta).min(p.gamma) >= SWEEP_MIN_COMPONENT);
            assert!((p.alpha.powi(2) + p.beta.powi(2) + p.gamma.powi(2) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn single_uniform_record() {
        let report = build_report(&RunRequest::new(Mode::Single)).unwrap();
        let run = &report.runs[0];
        assert_eq!(run.fractions.p1.as_deref(), Some("4/27"));
        assert_eq!(run.fractions.p2.as_deref(), Some("2/9"));
        assert_eq!(run.fractions.joint.as_deref(), Some("8/243"));
        assert!((run.five_qubit.trace.0 - 1.0).abs() < 1e-12);
        let order: Vec<String> = run.pairs.iter().map(|p| p.pair.to_string()).collect();
        assert_eq!(
            order,
            ["15", "58", "16", "69", "86", "17", "14", "25", "28", "36", "39"]
        );
        for p in &run.pairs[..5] {
            assert_eq!(p.classification, Classification::Entangled);
            assert!(p.agrees_with_paper);
        }
        assert!(run.annotations.is_empty());
        assert_eq!(report.summary.pairs.len(), 11);
    }

    #[test]
    fn degenerate_input_is_annotated() {
        let request = RunRequest::new(Mode::Single)
            .with_params(1.0, 0.0, 0.0)
            .unwrap();
        let report = build_report(&request).unwrap();
        let run = &report.runs[0];
        assert_eq!(run.annotations.len(), 1);
        assert!(run.annotations[0].contains("beta, gamma"));
        let separable: Vec<String> = run.pairs[..5]
            .iter()
            .filter(|p| p.classification == Classification::Separable)
            .map(|p| p.pair.to_string())
            .collect();
        assert_eq!(separable, ["15", "58", "16", "86"]);
    }

    #[test]
    fn branches_sum_to_one() {
        let report = build_report(&RunRequest::new(Mode::Branches)).unwrap();
        assert_eq!(report.runs.len(), 64);
        assert!((report.summary.total_probability.unwrap().0 - 1.0).abs() < COMPLETENESS_TOL);
        assert_eq!(report.runs[0].fractions.joint.as_deref(), Some("8/243"));
        assert!((report.runs[0].joint_probability.0 - 8.0 / 243.0).abs() < 1e-12);
    }
}
