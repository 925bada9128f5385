use super::{CMatrix, Complex64, I, ONE, ZERO};
use crate::error::{Error, Result};

/// A linear map from `in_arity` qubits to `out_arity` qubits.
///
/// The matrix has shape 2^out × 2^in. Column index bits follow the order of the
/// targets the operator is applied to; row index bits follow the output labels.
#[derive(Debug, Clone, PartialEq)]
pub struct Operator {
    matrix: CMatrix,
    in_arity: usize,
    out_arity: usize,
}

impl Operator {
    pub fn new(matrix: CMatrix, in_arity: usize, out_arity: usize) -> Result<Self> {
        if matrix.nrows() != 1 << out_arity || matrix.ncols() != 1 << in_arity {
            return Err(Error::ShapeMismatch {
                expected: format!("{}x{}", 1 << out_arity, 1 << in_arity),
                found: format!("{}x{}", matrix.nrows(), matrix.ncols()),
            });
        }
        Ok(Self {
            matrix,
            in_arity,
            out_arity,
        })
    }

    /// Square operator on `arity` qubits.
    pub fn square(matrix: CMatrix) -> Result<Self> {
        let dim = matrix.nrows();
        if !dim.is_power_of_two() || matrix.ncols() != dim {
            return Err(Error::ShapeMismatch {
                expected: "square 2^n matrix".into(),
                found: format!("{}x{}", matrix.nrows(), matrix.ncols()),
            });
        }
        let arity = dim.trailing_zeros() as usize;
        Self::new(matrix, arity, arity)
    }

    pub fn identity(arity: usize) -> Self {
        let dim = 1 << arity;
        Self {
            matrix: CMatrix::identity(dim, dim),
            in_arity: arity,
            out_arity: arity,
        }
    }

    fn single(entries: [Complex64; 4]) -> Self {
        Self {
            matrix: CMatrix::from_row_slice(2, 2, &entries),
            in_arity: 1,
            out_arity: 1,
        }
    }

    pub fn pauli_x() -> Self {
        Self::single([ZERO, ONE, ONE, ZERO])
    }

    pub fn pauli_y() -> Self {
        Self::single([ZERO, -I, I, ZERO])
    }

    pub fn pauli_z() -> Self {
        Self::single([ONE, ZERO, ZERO, -ONE])
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn in_arity(&self) -> usize {
        self.in_arity
    }

    pub fn out_arity(&self) -> usize {
        self.out_arity
    }

    /// Max entry of |M†M - I|.
    pub fn isometry_defect(&self) -> f64 {
        let gram = self.matrix.adjoint() * &self.matrix;
        let dim = gram.nrows();
        (gram - CMatrix::identity(dim, dim))
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    pub fn is_isometry(&self, tol: f64) -> bool {
        self.isometry_defect() <= tol
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        if self.in_arity != self.out_arity || !self.is_isometry(tol) {
            return false;
        }
        let gram = &self.matrix * self.matrix.adjoint();
        let dim = gram.nrows();
        (gram - CMatrix::identity(dim, dim))
            .iter()
            .all(|z| z.norm() <= tol)
    }
}
