use crate::cloner::MachineBranch;
use crate::label::QubitLabel;
use crate::protocol::QubitPair;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("qubit label {0} appears more than once in the register")]
    DuplicateLabel(QubitLabel),

    #[error("qubit label {0} is not in the register")]
    UnknownLabel(QubitLabel),

    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: String, found: String },

    #[error("partial trace needs at least one qubit to keep")]
    EmptyKeep,

    #[error("expected a register of {expected} qubits, found {found}")]
    WrongRegisterSize { expected: usize, found: usize },

    #[error("register {found:?} does not match the expected labels {expected:?}")]
    WrongRegister {
        expected: Vec<QubitLabel>,
        found: Vec<QubitLabel>,
    },

    #[error("matrix is not Hermitian (max |m - m†| = {residual:e})")]
    NotHermitian { residual: f64 },

    #[error("branch {branch} is impossible (probability {probability:e})")]
    ImpossibleBranch {
        branch: MachineBranch,
        probability: f64,
    },

    #[error("cannot normalize a zero state")]
    ZeroNorm,

    #[error("invalid W parameters: {0}")]
    InvalidParams(String),

    #[error("value {value} is outside {range}")]
    OutOfRange { value: f64, range: &'static str },

    #[error("pair {0} is missing from the verdict list")]
    MissingPair(QubitPair),

    #[error("invariant violated: {0}")]
    Invariant(String),
}
