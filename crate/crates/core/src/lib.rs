//! Simulation of secret entanglement broadcasting from W-type states.
//!
//! Three parties share α|001⟩ + β|010⟩ + γ|100⟩, clone their qubits twice with
//! the Buzek-Hillery universal cloner, read out the cloning machines and keep
//! a five-qubit state. The crate computes every stage exactly on dense state
//! vectors and classifies each relevant qubit pair with the partial-transpose
//! criterion.

pub mod cloner;
pub mod error;
pub mod label;
pub mod protocol;
pub mod separability;
pub mod tensor;

pub use cloner::{
    bh_isometry, clone_qubit, measure_machines, CloneAssignment, MachineBranch, MachineOutcome,
};
pub use error::{Error, Result};
pub use label::{Party, QubitLabel};
pub use protocol::{run_protocol, ProtocolConfig, QubitPair, Transcript, WParams, PAIRS};
pub use separability::{negativity, ppt_verdict, w_determinants, Classification, PairVerdict};
pub use tensor::{partial_trace, partial_transpose, DensityMatrix, Operator, StateVector};
