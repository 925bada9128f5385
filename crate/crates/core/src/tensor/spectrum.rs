use nalgebra::SymmetricEigen;

use super::{CMatrix, PSD_TOL};
use crate::error::{Error, Result};

/// Largest entry of |m - m†|.
pub fn hermitian_residual(m: &CMatrix) -> f64 {
    let adj = m.adjoint();
    m.iter()
        .zip(adj.iter())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max)
}

/// Ascending real eigenvalues of a Hermitian matrix.
///
/// The residual anti-Hermitian part is removed before diagonalizing; inputs
/// whose residual exceeds 1e-10 are rejected.
pub fn hermitian_spectrum(m: &CMatrix) -> Result<Vec<f64>> {
    if !m.is_square() {
        return Err(Error::ShapeMismatch {
            expected: "square matrix".into(),
            found: format!("{}x{}", m.nrows(), m.ncols()),
        });
    }
    let residual = hermitian_residual(m);
    if residual > PSD_TOL {
        return Err(Error::NotHermitian { residual });
    }
    let sym = (m + m.adjoint()).scale(0.5);
    let eig = SymmetricEigen::try_new(sym, f64::EPSILON, 0)
        .ok_or_else(|| Error::Invariant("Hermitian eigensolver did not converge".into()))?;
    let mut values: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}
