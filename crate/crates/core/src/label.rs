use std::fmt;

use serde::{Serialize, Serializer};

/// One of the three parties sharing the W-type state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Party {
    Alice,
    Bob,
    Charlie,
}

impl Party {
    pub const ALL: [Party; 3] = [Party::Alice, Party::Bob, Party::Charlie];

    pub fn letter(self) -> char {
        match self {
            Party::Alice => 'A',
            Party::Bob => 'B',
            Party::Charlie => 'C',
        }
    }

    /// Data qubits held by the party: original, round-one clone, round-two clone.
    pub fn data_qubits(self) -> [QubitLabel; 3] {
        let first = match self {
            Party::Alice => 1,
            Party::Bob => 2,
            Party::Charlie => 3,
        };
        [
            QubitLabel::Data(first),
            QubitLabel::Data(first + 3),
            QubitLabel::Data(first + 6),
        ]
    }
}

impl fmt::Display for Party {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Party::Alice => "Alice",
            Party::Bob => "Bob",
            Party::Charlie => "Charlie",
        };
        f.write_str(name)
    }
}

/// Name of a wire in a register.
///
/// Data qubits carry the integer subscripts 1–9: 1–3 are the originals held by
/// Alice, Bob and Charlie, 4–6 the round-one clones, 7–9 the round-two clones.
/// Machine qubits are the cloner ancillas, one per party and round.
///
/// The derived ordering is the canonical storage order: data labels ascending,
/// then machines by round and party.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QubitLabel {
    Data(u8),
    Machine { round: u8, party: Party },
}

impl QubitLabel {
    pub const fn machine(party: Party, round: u8) -> Self {
        QubitLabel::Machine { round, party }
    }

    pub fn is_machine(self) -> bool {
        matches!(self, QubitLabel::Machine { .. })
    }

    /// Parses compact digit strings used for display orders, e.g. "147258369".
    pub fn data_sequence(digits: &str) -> Vec<QubitLabel> {
        digits
            .chars()
            .filter_map(|c| c.to_digit(10))
            .map(|d| QubitLabel::Data(d as u8))
            .collect()
    }
}

impl From<u8> for QubitLabel {
    fn from(id: u8) -> Self {
        QubitLabel::Data(id)
    }
}

impl fmt::Display for QubitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QubitLabel::Data(id) => write!(f, "{id}"),
            QubitLabel::Machine { round, party } => write!(f, "M{}{}", party.letter(), round),
        }
    }
}

impl Serialize for QubitLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
