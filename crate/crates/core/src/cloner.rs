//! The Buzek-Hillery 1→2 universal cloner and the projective readout of its
//! machine qubits.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::label::{Party, QubitLabel};
use crate::tensor::{CMatrix, Complex64, Operator, StateVector};

/// Branches with probability below this are treated as impossible.
pub const IMPOSSIBLE_BRANCH_PROBABILITY: f64 = 1e-14;

/// Readout of one machine qubit. `Up` is the machine basis state |0⟩.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MachineOutcome {
    Up,
    Down,
}

impl MachineOutcome {
    pub fn bit(self) -> u8 {
        match self {
            MachineOutcome::Up => 0,
            MachineOutcome::Down => 1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            MachineOutcome::Up => 'U',
            MachineOutcome::Down => 'D',
        }
    }

    fn from_symbol(c: char) -> Option<Self> {
        match c {
            'U' => Some(MachineOutcome::Up),
            'D' => Some(MachineOutcome::Down),
            _ => None,
        }
    }
}

impl fmt::Display for MachineOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl Serialize for MachineOutcome {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Machine readouts of Alice, Bob and Charlie for one cloning round.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MachineBranch {
    pub alice: MachineOutcome,
    pub bob: MachineOutcome,
    pub charlie: MachineOutcome,
}

impl MachineBranch {
    /// All eight branches, indexed by serial number minus one.
    pub const ALL: [MachineBranch; 8] = {
        use MachineOutcome::{Down as D, Up as U};
        [
            Self::new(U, U, U),
            Self::new(U, U, D),
            Self::new(U, D, D),
            Self::new(U, D, U),
            Self::new(D, U, U),
            Self::new(D, U, D),
            Self::new(D, D, U),
            Self::new(D, D, D),
        ]
    };

    pub const fn new(alice: MachineOutcome, bob: MachineOutcome, charlie: MachineOutcome) -> Self {
        Self {
            alice,
            bob,
            charlie,
        }
    }

    pub const fn all_up() -> Self {
        Self::ALL[0]
    }

    /// Serial number 1–8 in the enumeration order of [`Self::ALL`].
    pub fn serial(self) -> usize {
        Self::ALL
            .iter()
            .position(|&b| b == self)
            .expect("every branch is enumerated")
            + 1
    }

    pub fn outcome(self, party: Party) -> MachineOutcome {
        match party {
            Party::Alice => self.alice,
            Party::Bob => self.bob,
            Party::Charlie => self.charlie,
        }
    }

    pub fn outcomes(self) -> [MachineOutcome; 3] {
        [self.alice, self.bob, self.charlie]
    }
}

impl fmt::Display for MachineBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.alice, self.bob, self.charlie)
    }
}

impl Serialize for MachineBranch {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("branch must be three characters over {{U, D}}, got {0:?}")]
pub struct ParseBranchError(pub String);

impl FromStr for MachineBranch {
    type Err = ParseBranchError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let outcomes: Option<Vec<MachineOutcome>> =
            s.chars().map(MachineOutcome::from_symbol).collect();
        match outcomes.as_deref() {
            Some(&[alice, bob, charlie]) => Ok(Self::new(alice, bob, charlie)),
            _ => Err(ParseBranchError(s.to_owned())),
        }
    }
}

/// Where one cloning step writes its copy and its machine qubit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CloneAssignment {
    pub source: QubitLabel,
    pub clone: QubitLabel,
    pub machine: QubitLabel,
}

impl CloneAssignment {
    /// Clones of the originals: 1→4, 2→5, 3→6.
    pub fn round_one() -> [Self; 3] {
        Self::for_round(1)
    }

    /// Clones of the round-one copies: 4→7, 5→8, 6→9.
    pub fn round_two() -> [Self; 3] {
        Self::for_round(2)
    }

    fn for_round(round: u8) -> [Self; 3] {
        Party::ALL.map(|party| {
            let qubits = party.data_qubits();
            let idx = usize::from(round);
            Self {
                source: qubits[idx - 1],
                clone: qubits[idx],
                machine: QubitLabel::machine(party, round),
            }
        })
    }
}

/// Machine labels of a round, ordered Alice, Bob, Charlie.
pub fn machine_labels(round: u8) -> [QubitLabel; 3] {
    Party::ALL.map(|party| QubitLabel::machine(party, round))
}

/// The cloning map as a 2→8 isometry with outputs ordered (source, clone, machine).
///
/// |0⟩ → √(2/3)|00⟩|↑⟩ + (|01⟩+|10⟩)|↓⟩/√6
/// |1⟩ → √(2/3)|11⟩|↓⟩ + (|01⟩+|10⟩)|↑⟩/√6
pub fn bh_isometry() -> Operator {
    let major = Complex64::new((2.0f64 / 3.0).sqrt(), 0.0);
    let minor = Complex64::new(1.0 / 6.0f64.sqrt(), 0.0);
    // row bits: source, clone, machine (↑ = 0, ↓ = 1)
    let mut m = CMatrix::zeros(8, 2);
    m[(0b000, 0)] = major;
    m[(0b011, 0)] = minor;
    m[(0b101, 0)] = minor;
    m[(0b111, 1)] = major;
    m[(0b010, 1)] = minor;
    m[(0b100, 1)] = minor;
    Operator::new(m, 1, 3).expect("8x2 matches a 1->3 qubit map")
}

/// Applies the cloner to `assignment.source`, adding the clone and machine qubits.
pub fn clone_qubit(state: &StateVector, assignment: &CloneAssignment) -> Result<StateVector> {
    state.apply_isometry(
        &bh_isometry(),
        &[assignment.source],
        &[assignment.source, assignment.clone, assignment.machine],
    )
}

/// Projects the three machine qubits onto `branch`, drops them and renormalizes.
///
/// Returns the post-measurement state and the branch probability.
pub fn measure_machines(
    state: &StateVector,
    branch: MachineBranch,
    machines: [QubitLabel; 3],
) -> Result<(StateVector, f64)> {
    let mut projected = state.clone();
    for (label, outcome) in machines.iter().zip(branch.outcomes()) {
        projected = projected.select(*label, outcome.bit())?;
    }
    let probability = projected.norm_sqr();
    if probability < IMPOSSIBLE_BRANCH_PROBABILITY {
        return Err(Error::ImpossibleBranch {
            branch,
            probability,
        });
    }
    Ok((projected.normalize()?, probability))
}
