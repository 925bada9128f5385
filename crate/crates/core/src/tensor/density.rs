use super::{
    check_unique, hermitian_residual, hermitian_spectrum, permutation_map, position, CMatrix,
    Complex64, StateVector, ALGEBRAIC_TOL, PSD_TOL, ZERO,
};
use crate::error::{Error, Result};
use crate::label::QubitLabel;

/// Mixed state over a labeled register.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    labels: Vec<QubitLabel>,
    rho: CMatrix,
}

impl DensityMatrix {
    /// Wraps a matrix without checking the physical invariants; see [`Self::validate`].
    pub fn new(labels: Vec<QubitLabel>, rho: CMatrix) -> Result<Self> {
        check_unique(&labels)?;
        let dim = 1usize << labels.len();
        if rho.shape() != (dim, dim) {
            return Err(Error::ShapeMismatch {
                expected: format!("{dim}x{dim}"),
                found: format!("{}x{}", rho.nrows(), rho.ncols()),
            });
        }
        Ok(Self { labels, rho })
    }

    pub fn from_pure(state: &StateVector) -> Self {
        let psi = nalgebra::DVector::from_column_slice(state.amps());
        Self {
            labels: state.labels().to_vec(),
            rho: &psi * psi.adjoint(),
        }
    }

    pub fn labels(&self) -> &[QubitLabel] {
        &self.labels
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.rho
    }

    pub fn num_qubits(&self) -> usize {
        self.labels.len()
    }

    /// ⟨row|ρ|col⟩ with kets written in this register's label order.
    pub fn element(&self, row: &str, col: &str) -> Complex64 {
        self.rho[(super::ket_index(row), super::ket_index(col))]
    }

    pub fn trace(&self) -> Complex64 {
        self.rho.trace()
    }

    /// Tr(ρ²).
    pub fn purity(&self) -> f64 {
        self.rho.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        hermitian_spectrum(&self.rho)
    }

    /// Checks Hermiticity (1e-12), unit trace (1e-12) and positivity (min eigenvalue ≥ -1e-10).
    pub fn validate(&self) -> Result<()> {
        let residual = hermitian_residual(&self.rho);
        if residual > ALGEBRAIC_TOL {
            return Err(Error::Invariant(format!(
                "density matrix over {:?} is not Hermitian (residual {residual:e})",
                self.labels
            )));
        }
        let trace = self.trace();
        if (trace - Complex64::new(1.0, 0.0)).norm() > ALGEBRAIC_TOL {
            return Err(Error::Invariant(format!(
                "density matrix over {:?} has trace {trace}",
                self.labels
            )));
        }
        let min = self.eigenvalues()?[0];
        if min < -PSD_TOL {
            return Err(Error::Invariant(format!(
                "density matrix over {:?} has eigenvalue {min:e}",
                self.labels
            )));
        }
        Ok(())
    }

    pub fn permuted(&self, order: &[QubitLabel]) -> Result<Self> {
        let map = permutation_map(&self.labels, order)?;
        let dim = self.rho.nrows();
        let mut rho = CMatrix::zeros(dim, dim);
        for (i, &pi) in map.iter().enumerate() {
            for (j, &pj) in map.iter().enumerate() {
                rho[(pi, pj)] = self.rho[(i, j)];
            }
        }
        Ok(Self {
            labels: order.to_vec(),
            rho,
        })
    }

    /// U ρ U† for a unitary over the whole register.
    pub fn conjugated(&self, unitary: &CMatrix) -> Result<Self> {
        if unitary.shape() != self.rho.shape() {
            return Err(Error::ShapeMismatch {
                expected: format!("{}x{}", self.rho.nrows(), self.rho.ncols()),
                found: format!("{}x{}", unitary.nrows(), unitary.ncols()),
            });
        }
        Ok(Self {
            labels: self.labels.clone(),
            rho: unitary * &self.rho * unitary.adjoint(),
        })
    }

    /// Max absolute entry difference after aligning label orders.
    pub fn max_abs_diff(&self, other: &DensityMatrix) -> Result<f64> {
        let other = other.permuted(&self.labels)?;
        Ok((&self.rho - &other.rho)
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max))
    }
}

/// States that can be reduced to a subset of their qubits.
pub trait PartialTrace {
    /// Traces out every label not in `keep`. The result is in canonical label
    /// order and has passed [`DensityMatrix::validate`].
    fn partial_trace(&self, keep: &[QubitLabel]) -> Result<DensityMatrix>;
}

fn split_keep(
    labels: &[QubitLabel],
    keep: &[QubitLabel],
) -> Result<(Vec<QubitLabel>, Vec<QubitLabel>)> {
    if keep.is_empty() {
        return Err(Error::EmptyKeep);
    }
    check_unique(keep)?;
    for &k in keep {
        position(labels, k)?;
    }
    let mut kept = keep.to_vec();
    kept.sort();
    let traced = labels
        .iter()
        .copied()
        .filter(|l| !kept.contains(l))
        .collect();
    Ok((kept, traced))
}

impl PartialTrace for StateVector {
    fn partial_trace(&self, keep: &[QubitLabel]) -> Result<DensityMatrix> {
        let (kept, traced) = split_keep(self.labels(), keep)?;
        let order: Vec<QubitLabel> = kept.iter().chain(&traced).copied().collect();
        let reordered = self.permuted(&order)?;
        // rows: kept basis, columns: traced basis
        let a = CMatrix::from_row_slice(1 << kept.len(), 1 << traced.len(), reordered.amps());
        let reduced = DensityMatrix {
            labels: kept,
            rho: &a * a.adjoint(),
        };
        reduced.validate()?;
        Ok(reduced)
    }
}

impl PartialTrace for DensityMatrix {
    fn partial_trace(&self, keep: &[QubitLabel]) -> Result<DensityMatrix> {
        let (kept, traced) = split_keep(&self.labels, keep)?;
        let order: Vec<QubitLabel> = kept.iter().chain(&traced).copied().collect();
        let reordered = self.permuted(&order)?;
        let kd = 1usize << kept.len();
        let td = 1usize << traced.len();
        let mut rho = CMatrix::from_element(kd, kd, ZERO);
        for r in 0..kd {
            for s in 0..kd {
                rho[(r, s)] = (0..td)
                    .map(|t| reordered.rho[(r * td + t, s * td + t)])
                    .sum();
            }
        }
        let reduced = DensityMatrix { labels: kept, rho };
        reduced.validate()?;
        Ok(reduced)
    }
}

pub fn partial_trace<S: PartialTrace + ?Sized>(
    state: &S,
    keep: &[QubitLabel],
) -> Result<DensityMatrix> {
    state.partial_trace(keep)
}

/// Partial transpose of a two-qubit density matrix on the named qubit.
pub fn partial_transpose(rho: &DensityMatrix, subsystem: QubitLabel) -> Result<CMatrix> {
    if rho.num_qubits() != 2 {
        return Err(Error::WrongRegisterSize {
            expected: 2,
            found: rho.num_qubits(),
        });
    }
    let shift = 1 - position(rho.labels(), subsystem)?;
    let mask = 1usize << shift;
    let m = rho.matrix();
    Ok(CMatrix::from_fn(4, 4, |i, j| {
        // swap the subsystem bit between row and column
        let (bi, bj) = (i & mask, j & mask);
        m[((i & !mask) | bj, (j & !mask) | bi)]
    }))
}
