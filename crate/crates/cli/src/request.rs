use std::fmt;
use std::path::PathBuf;

use serde::Serialize;
use wbcast_core::{MachineBranch, WParams};

use crate::error::CliError;

/// Tolerance on |α²+β²+γ² − 1| for command-line amplitudes, loose enough for
/// four-decimal inputs such as 0.5774.
pub const CLI_NORM_TOL: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// One configuration.
    Single,
    /// All 64 pairs of round-one and round-two readouts.
    Branches,
    /// Seeded random W parameters.
    Sweep,
    /// Two-qubit broadcasting scan over α².
    Background,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Mode::Single => "single",
            Mode::Branches => "branches",
            Mode::Sweep => "sweep",
            Mode::Background => "background",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunRequest {
    pub mode: Mode,
    pub params: WParams,
    pub branch1: MachineBranch,
    pub branch2: MachineBranch,
    pub apply_unitaries: bool,
    pub sweep: usize,
    pub seed: u64,
    pub grid: usize,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl RunRequest {
    pub fn new(mode: Mode) -> Self {
        Self {
            mode,
            params: WParams::uniform(),
            branch1: MachineBranch::all_up(),
            branch2: MachineBranch::all_up(),
            apply_unitaries: true,
            sweep: 50,
            seed: 0,
            grid: 100,
            format: Format::Json,
            out: None,
        }
    }

    pub fn with_params(mut self, alpha: f64, beta: f64, gamma: f64) -> Result<Self, CliError> {
        self.params = WParams::with_tolerance(alpha, beta, gamma, CLI_NORM_TOL)
            .map_err(|e| CliError::InvalidInput(e.to_string()))?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.mode == Mode::Sweep && self.sweep < 1 {
            return Err(CliError::InvalidInput("--sweep must be at least 1".into()));
        }
        if self.mode == Mode::Background && self.grid < 100 {
            return Err(CliError::InvalidInput("--grid must be at least 100".into()));
        }
        Ok(())
    }
}
