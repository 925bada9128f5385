//! Peres-Horodecki tests for two-qubit states.
//!
//! The minimum eigenvalue of the partial transpose decides the classification.
//! The determinants W₃ and W₄ of the partially transposed matrix are carried
//! along for comparison with the determinant form of the criterion.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::label::QubitLabel;
use crate::tensor::{
    hermitian_spectrum, partial_transpose, CMatrix, Complex64, DensityMatrix, PSD_TOL, ZERO,
};

/// PT eigenvalues below this classify the pair as entangled.
pub const ENTANGLEMENT_THRESHOLD: f64 = -PSD_TOL;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Classification {
    Separable,
    Entangled,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Separable => "SEPARABLE",
            Classification::Entangled => "ENTANGLED",
        }
    }
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairVerdict {
    pub pair: (QubitLabel, QubitLabel),
    /// Ascending spectrum of ρ^{T_B}.
    pub pt_eigenvalues: Vec<f64>,
    pub min_pt_eigenvalue: f64,
    pub w3: f64,
    pub w4: f64,
    pub negativity: f64,
    pub classification: Classification,
    pub paper_claim: Option<Classification>,
    pub agrees_with_paper: Option<bool>,
}

impl PairVerdict {
    /// Attaches a claimed classification and records whether the computed one matches.
    pub fn with_claim(mut self, claim: Classification) -> Self {
        self.paper_claim = Some(claim);
        self.agrees_with_paper = Some(claim == self.classification);
        self
    }

    pub fn is_entangled(&self) -> bool {
        self.classification == Classification::Entangled
    }
}

fn check_two_qubits(rho: &DensityMatrix) -> Result<()> {
    if rho.num_qubits() != 2 {
        return Err(Error::WrongRegisterSize {
            expected: 2,
            found: rho.num_qubits(),
        });
    }
    Ok(())
}

/// ρ^{T_B} with B the second label of the register.
fn transposed_on_second(rho: &DensityMatrix) -> Result<CMatrix> {
    check_two_qubits(rho)?;
    partial_transpose(rho, rho.labels()[1])
}

fn negativity_of(spectrum: &[f64]) -> f64 {
    spectrum
        .iter()
        .filter(|&&v| v < ENTANGLEMENT_THRESHOLD)
        .map(|v| -v)
        .sum()
}

/// Determinant by Gaussian elimination with partial pivoting.
pub fn determinant(m: &CMatrix) -> Complex64 {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.nrows();
    let mut a = m.clone();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[(i, col)].norm().total_cmp(&a[(j, col)].norm()))
            .expect("non-empty column");
        if a[(pivot, col)] == ZERO {
            return ZERO;
        }
        if pivot != col {
            a.swap_rows(pivot, col);
            det = -det;
        }
        let p = a[(col, col)];
        det *= p;
        for row in col + 1..n {
            let factor = a[(row, col)] / p;
            if factor != ZERO {
                for k in col..n {
                    let v = a[(col, k)];
                    a[(row, k)] -= factor * v;
                }
            }
        }
    }
    det
}

fn real_part(z: Complex64, what: &str) -> Result<f64> {
    if z.im.abs() > PSD_TOL {
        return Err(Error::Invariant(format!(
            "{what} has imaginary part {:e}",
            z.im
        )));
    }
    Ok(z.re)
}

/// Leading 3×3 principal minor and full determinant of ρ^{T_B}.
pub fn w_determinants(rho: &DensityMatrix) -> Result<(f64, f64)> {
    let pt = transposed_on_second(rho)?;
    let w3 = determinant(&pt.view((0, 0), (3, 3)).into_owned());
    let w4 = determinant(&pt);
    Ok((real_part(w3, "W3")?, real_part(w4, "W4")?))
}

/// Sum of |λ| over the negative PT eigenvalues; eigenvalues within 1e-10 of zero count as zero.
pub fn negativity(rho: &DensityMatrix) -> Result<f64> {
    let pt = transposed_on_second(rho)?;
    Ok(negativity_of(&hermitian_spectrum(&pt)?))
}

pub fn ppt_verdict(rho: &DensityMatrix) -> Result<PairVerdict> {
    let pt = transposed_on_second(rho)?;
    let spectrum = hermitian_spectrum(&pt)?;
    let min = spectrum[0];
    let (w3, w4) = w_determinants(rho)?;
    let classification = if min < ENTANGLEMENT_THRESHOLD {
        Classification::Entangled
    } else {
        Classification::Separable
    };
    Ok(PairVerdict {
        pair: (rho.labels()[0], rho.labels()[1]),
        negativity: negativity_of(&spectrum),
        pt_eigenvalues: spectrum,
        min_pt_eigenvalue: min,
        w3,
        w4,
        classification,
        paper_claim: None,
        agrees_with_paper: None,
    })
}
