//! Simulated announcement of machine readouts between the parties.
//!
//! Only the bookkeeping is modeled: who tells whom which outcome. The channel
//! is assumed authenticated and private.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::cloner::{MachineBranch, MachineOutcome};
use crate::label::{Party, QubitLabel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Message {
    pub sender: Party,
    pub receiver: Party,
    pub round: u8,
    pub outcome: MachineOutcome,
}

/// What one party holds and knows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartyView {
    pub party: Party,
    pub qubits: [QubitLabel; 3],
    /// Known outcomes keyed by (round, party).
    pub known: BTreeMap<(u8, Party), MachineOutcome>,
}

impl PartyView {
    fn new(party: Party) -> Self {
        Self {
            party,
            qubits: party.data_qubits(),
            known: BTreeMap::new(),
        }
    }

    /// The full branch of a round, if every party's outcome is known.
    pub fn branch(&self, round: u8) -> Option<MachineBranch> {
        let get = |p| self.known.get(&(round, p)).copied();
        Some(MachineBranch::new(
            get(Party::Alice)?,
            get(Party::Bob)?,
            get(Party::Charlie)?,
        ))
    }
}

/// Every party sends its outcome to the other two, round by round, in sender
/// order A, B, C and receiver order A, B, C.
///
/// `branches[k]` holds the outcomes of round k + 1.
pub fn classical_exchange(branches: &[MachineBranch]) -> (Vec<PartyView>, Vec<Message>) {
    let mut views: Vec<PartyView> = Party::ALL.iter().map(|&p| PartyView::new(p)).collect();
    let mut messages = Vec::with_capacity(6 * branches.len());
    for (idx, branch) in branches.iter().enumerate() {
        let round = idx as u8 + 1;
        for view in views.iter_mut() {
            view.known
                .insert((round, view.party), branch.outcome(view.party));
        }
        for sender in Party::ALL {
            for receiver in Party::ALL.into_iter().filter(|&r| r != sender) {
                messages.push(Message {
                    sender,
                    receiver,
                    round,
                    outcome: branch.outcome(sender),
                });
            }
        }
    }
    for message in &messages {
        let view = views
            .iter_mut()
            .find(|v| v.party == message.receiver)
            .expect("receiver is a party");
        view.known
            .insert((message.round, message.sender), message.outcome);
    }
    (views, messages)
}
