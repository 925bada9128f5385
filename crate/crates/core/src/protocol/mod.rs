//! The three-party broadcasting pipeline.
//!
//! prepare_w → round_one → branch_select → round_two → branch_select →
//! apply_local_unitaries (optional) → five-qubit and pairwise reductions →
//! separability verdicts.

mod background;
mod exchange;

pub use background::{
    nonlocal_min_pt_eigenvalue, reference_interval, scan_background, two_qubit_broadcast,
    BackgroundPoint, BackgroundScan, BISECTION_TOL,
};
pub use exchange::{classical_exchange, Message, PartyView};

use std::fmt;

use serde::{Serialize, Serializer};

use crate::cloner::{
    clone_qubit, machine_labels, measure_machines, CloneAssignment, MachineBranch,
};
use crate::error::{Error, Result};
use crate::label::QubitLabel;
use crate::separability::{ppt_verdict, Classification, PairVerdict};
use crate::tensor::{
    apply_to_targets, partial_trace, Complex64, DensityMatrix, Operator, StateVector,
};

/// Squared-norm deviation below which W parameters are silently renormalized.
pub const RENORMALIZE_TOL: f64 = 1e-6;

/// Real amplitudes of α|001⟩ + β|010⟩ + γ|100⟩.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl WParams {
    /// Accepts parameters whose squared norm is within 1e-6 of one and renormalizes them.
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        Self::with_tolerance(alpha, beta, gamma, RENORMALIZE_TOL)
    }

    /// Like [`Self::new`] with a caller-chosen tolerance on |α²+β²+γ² − 1|.
    pub fn with_tolerance(alpha: f64, beta: f64, gamma: f64, tol: f64) -> Result<Self> {
        if ![alpha, beta, gamma].iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "amplitudes must be finite, got ({alpha}, {beta}, {gamma})"
            )));
        }
        let norm_sq = alpha * alpha + beta * beta + gamma * gamma;
        if (norm_sq - 1.0).abs() > tol {
            return Err(Error::InvalidParams(format!(
                "alpha^2 + beta^2 + gamma^2 = {norm_sq}, expected 1"
            )));
        }
        let norm = norm_sq.sqrt();
        Ok(Self {
            alpha: alpha / norm,
            beta: beta / norm,
            gamma: gamma / norm,
        })
    }

    pub fn uniform() -> Self {
        let v = 1.0 / 3.0f64.sqrt();
        Self {
            alpha: v,
            beta: v,
            gamma: v,
        }
    }

    /// Names of the amplitudes that vanish.
    pub fn vanishing(&self) -> Vec<&'static str> {
        [
            ("alpha", self.alpha),
            ("beta", self.beta),
            ("gamma", self.gamma),
        ]
        .into_iter()
        .filter(|(_, v)| v.abs() < 1e-12)
        .map(|(name, _)| name)
        .collect()
    }

    pub fn is_degenerate(&self) -> bool {
        !self.vanishing().is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProtocolConfig {
    pub params: WParams,
    pub branch1: MachineBranch,
    pub branch2: MachineBranch,
    pub apply_unitaries: bool,
}

impl ProtocolConfig {
    pub fn new(params: WParams, branch1: MachineBranch, branch2: MachineBranch) -> Self {
        Self {
            params,
            branch1,
            branch2,
            apply_unitaries: true,
        }
    }

    pub fn without_unitaries(mut self) -> Self {
        self.apply_unitaries = false;
        self
    }
}

/// Whether a pair spans two parties or sits with one party.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Locality {
    NonLocal,
    Local,
}

/// A pair of data qubits, kept in presentation order (e.g. 8 then 6).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QubitPair(pub u8, pub u8);

impl QubitPair {
    pub fn labels(self) -> (QubitLabel, QubitLabel) {
        (QubitLabel::Data(self.0), QubitLabel::Data(self.1))
    }

    /// Grouping used by the published analysis. Note that (5, 8) and (6, 9)
    /// are held by a single party yet are grouped with the non-local pairs;
    /// any pair outside [`PAIRS`] counts as local iff one party holds both.
    pub fn locality(self) -> Locality {
        match PAIRS.iter().position(|&p| p == self) {
            Some(idx) if idx < 5 => Locality::NonLocal,
            Some(_) => Locality::Local,
            None if self.0 % 3 == self.1 % 3 => Locality::Local,
            None => Locality::NonLocal,
        }
    }

    /// The published claim: non-local pairs inseparable, local pairs separable.
    pub fn paper_claim(self) -> Classification {
        match self.locality() {
            Locality::NonLocal => Classification::Entangled,
            Locality::Local => Classification::Separable,
        }
    }
}

impl fmt::Display for QubitPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0, self.1)
    }
}

impl Serialize for QubitPair {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The five non-local pairs followed by the six local pairs, in report order.
pub const PAIRS: [QubitPair; 11] = [
    QubitPair(1, 5),
    QubitPair(5, 8),
    QubitPair(1, 6),
    QubitPair(6, 9),
    QubitPair(8, 6),
    QubitPair(1, 7),
    QubitPair(1, 4),
    QubitPair(2, 5),
    QubitPair(2, 8),
    QubitPair(3, 6),
    QubitPair(3, 9),
];

/// Qubits of the broadcast five-qubit state, in display order.
pub const FIVE_QUBITS: [u8; 5] = [1, 5, 8, 6, 9];

fn data_labels(ids: impl IntoIterator<Item = u8>) -> Vec<QubitLabel> {
    ids.into_iter().map(QubitLabel::Data).collect()
}

fn expect_register(state: &StateVector, expected: Vec<QubitLabel>) -> Result<()> {
    let mut found = state.labels().to_vec();
    found.sort();
    let mut sorted = expected.clone();
    sorted.sort();
    if found != sorted {
        return Err(Error::WrongRegister { expected, found });
    }
    Ok(())
}

/// α|001⟩ + β|010⟩ + γ|100⟩ on qubits 1, 2, 3.
pub fn prepare_w(params: WParams) -> StateVector {
    let c = |v: f64| Complex64::new(v, 0.0);
    StateVector::from_kets(
        data_labels(1..=3),
        &[
            ("001", c(params.alpha)),
            ("010", c(params.beta)),
            ("100", c(params.gamma)),
        ],
    )
    .expect("three-qubit register")
}

fn clone_all(state: &StateVector, assignments: [CloneAssignment; 3]) -> Result<StateVector> {
    assignments
        .iter()
        .try_fold(state.clone(), |s, a| clone_qubit(&s, a))
}

/// Each party clones its original: 1→4, 2→5, 3→6, with round-one machines.
pub fn round_one(state: &StateVector) -> Result<StateVector> {
    expect_register(state, data_labels(1..=3))?;
    clone_all(state, CloneAssignment::round_one())
}

/// Each party clones its round-one copy: 4→7, 5→8, 6→9, with round-two machines.
pub fn round_two(state: &StateVector) -> Result<StateVector> {
    expect_register(state, data_labels(1..=6))?;
    clone_all(state, CloneAssignment::round_two())
}

/// Measures whichever round's machine qubits are present.
pub fn branch_select(state: &StateVector, branch: MachineBranch) -> Result<(StateVector, f64)> {
    let round = [1, 2]
        .into_iter()
        .find(|&r| machine_labels(r).iter().all(|m| state.labels().contains(m)))
        .ok_or(Error::UnknownLabel(machine_labels(1)[0]))?;
    measure_machines(state, branch, machine_labels(round))
}

/// σ_x on Alice's clones 4 and 7, σ_y on Bob's and Charlie's originals 2 and 3.
pub fn apply_local_unitaries(state: &StateVector) -> Result<StateVector> {
    expect_register(state, data_labels(1..=9))?;
    let x = Operator::pauli_x();
    let y = Operator::pauli_y();
    let mut out = state.clone();
    for (op, qubit) in [(&x, 4), (&x, 7), (&y, 2), (&y, 3)] {
        out = apply_to_targets(&out, op, &[QubitLabel::Data(qubit)])?;
    }
    Ok(out)
}

/// Reduced state of qubits 1, 5, 8, 6, 9 (stored in canonical order 1, 5, 6, 8, 9).
pub fn five_qubit_state(state: &StateVector) -> Result<DensityMatrix> {
    expect_register(state, data_labels(1..=9))?;
    partial_trace(state, &data_labels(FIVE_QUBITS))
}

/// Two-qubit reductions for all eleven pairs, in [`PAIRS`] order.
pub fn pair_states(state: &StateVector) -> Result<Vec<(QubitPair, DensityMatrix)>> {
    expect_register(state, data_labels(1..=9))?;
    PAIRS
        .iter()
        .map(|&pair| {
            let (a, b) = pair.labels();
            Ok((pair, partial_trace(state, &[a, b])?))
        })
        .collect()
}

/// PPT verdicts for each pair, annotated with the published claim.
pub fn pair_verdicts(pairs: &[(QubitPair, DensityMatrix)]) -> Result<Vec<PairVerdict>> {
    pairs
        .iter()
        .map(|(pair, rho)| {
            let mut verdict = ppt_verdict(rho)?.with_claim(pair.paper_claim());
            verdict.pair = pair.labels();
            Ok(verdict)
        })
        .collect()
}

/// True iff every non-local pair is entangled and every local pair separable.
pub fn broadcast_verdict(verdicts: &[PairVerdict]) -> Result<bool> {
    let mut ok = true;
    for pair in PAIRS {
        let (a, b) = pair.labels();
        let verdict = verdicts
            .iter()
            .find(|v| v.pair == (a, b) || v.pair == (b, a))
            .ok_or(Error::MissingPair(pair))?;
        let wanted = match pair.locality() {
            Locality::NonLocal => Classification::Entangled,
            Locality::Local => Classification::Separable,
        };
        ok &= verdict.classification == wanted;
    }
    Ok(ok)
}

/// States after each stage of a run.
#[derive(Debug, Clone)]
pub struct Stages {
    pub w_state: StateVector,
    pub cloned_once: StateVector,
    pub selected_once: StateVector,
    pub cloned_twice: StateVector,
    pub selected_twice: StateVector,
    pub after_unitaries: Option<StateVector>,
}

impl Stages {
    /// The nine-qubit state that the reductions are taken from.
    pub fn final_state(&self) -> &StateVector {
        self.after_unitaries
            .as_ref()
            .unwrap_or(&self.selected_twice)
    }
}

#[derive(Debug, Clone)]
pub struct Transcript {
    pub config: ProtocolConfig,
    pub stages: Stages,
    pub p1: f64,
    pub p2: f64,
    pub messages: Vec<Message>,
    pub views: Vec<PartyView>,
    pub five_qubit: DensityMatrix,
    pub pairs: Vec<PairVerdict>,
    pub broadcast_ok: bool,
}

pub fn run_protocol(config: &ProtocolConfig) -> Result<Transcript> {
    let w_state = prepare_w(config.params);
    let cloned_once = round_one(&w_state)?;
    let (selected_once, p1) = branch_select(&cloned_once, config.branch1)?;
    let cloned_twice = round_two(&selected_once)?;
    let (selected_twice, p2) = branch_select(&cloned_twice, config.branch2)?;
    let after_unitaries = if config.apply_unitaries {
        Some(apply_local_unitaries(&selected_twice)?)
    } else {
        None
    };
    let stages = Stages {
        w_state,
        cloned_once,
        selected_once,
        cloned_twice,
        selected_twice,
        after_unitaries,
    };

    let (views, messages) = classical_exchange(&[config.branch1, config.branch2]);
    let final_state = stages.final_state();
    let five_qubit = five_qubit_state(final_state)?;
    let pairs = pair_verdicts(&pair_states(final_state)?)?;
    let broadcast_ok = broadcast_verdict(&pairs)?;

    Ok(Transcript {
        config: *config,
        stages,
        p1,
        p2,
        messages,
        views,
        five_qubit,
        pairs,
        broadcast_ok,
    })
}
