//! Dense complex linear algebra over labeled qubit registers.
//!
//! Amplitude and matrix indices follow one convention throughout: the first
//! label of a register is the most significant bit of the basis index.

mod density;
mod operator;
mod spectrum;
mod state;

pub use density::{partial_trace, partial_transpose, DensityMatrix, PartialTrace};
pub use operator::Operator;
pub use spectrum::{hermitian_residual, hermitian_spectrum};
pub use state::{apply_to_targets, tensor_product, StateVector};

use crate::error::{Error, Result};
use crate::label::QubitLabel;

pub use num_complex::Complex64;

/// Dense complex matrix used for operators and density matrices.
pub type CMatrix = nalgebra::DMatrix<Complex64>;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

/// Tolerance for algebraic identities (norms, traces, Hermiticity).
pub const ALGEBRAIC_TOL: f64 = 1e-12;
/// Tolerance for zero/PSD classification of eigenvalues.
pub const PSD_TOL: f64 = 1e-10;

pub(crate) fn check_unique(labels: &[QubitLabel]) -> Result<()> {
    for (i, label) in labels.iter().enumerate() {
        if labels[..i].contains(label) {
            return Err(Error::DuplicateLabel(*label));
        }
    }
    Ok(())
}

pub(crate) fn position(labels: &[QubitLabel], label: QubitLabel) -> Result<usize> {
    labels
        .iter()
        .position(|&l| l == label)
        .ok_or(Error::UnknownLabel(label))
}

/// For every basis index over `from`, the index of the same basis state over `to`.
pub(crate) fn permutation_map(from: &[QubitLabel], to: &[QubitLabel]) -> Result<Vec<usize>> {
    if from.len() != to.len() {
        return Err(Error::WrongRegisterSize {
            expected: from.len(),
            found: to.len(),
        });
    }
    check_unique(to)?;
    let n = from.len();
    // shift[p] = bit position in the new index of the label at old position p
    let mut shift = Vec::with_capacity(n);
    for label in from {
        let q = position(to, *label)?;
        shift.push(n - 1 - q);
    }
    let map = (0..1usize << n)
        .map(|i| {
            (0..n).fold(0usize, |acc, p| {
                let bit = (i >> (n - 1 - p)) & 1;
                acc | (bit << shift[p])
            })
        })
        .collect();
    Ok(map)
}

/// Extracts the bits of `index` at the given register positions, first position most significant.
pub(crate) fn gather_bits(index: usize, n: usize, positions: &[usize]) -> usize {
    positions
        .iter()
        .fold(0usize, |acc, &p| (acc << 1) | ((index >> (n - 1 - p)) & 1))
}

/// Kronecker product of two dense matrices.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let (ar, ac) = a.shape();
    let (br, bc) = b.shape();
    CMatrix::from_fn(ar * br, ac * bc, |i, j| {
        a[(i / br, j / bc)] * b[(i % br, j % bc)]
    })
}

/// Parses a ket string of '0'/'1' characters into a basis index (first char most significant).
pub fn ket_index(bits: &str) -> usize {
    bits.chars().fold(0usize, |acc, c| {
        (acc << 1)
            | match c {
                '0' => 0,
                '1' => 1,
                other => panic!("invalid ket character {other:?}"),
            }
    })
}
