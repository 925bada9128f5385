use super::{
    check_unique, gather_bits, permutation_map, position, Complex64, Operator, ALGEBRAIC_TOL, ONE,
    ZERO,
};
use crate::error::{Error, Result};
use crate::label::QubitLabel;

/// Pure state over a labeled register.
///
/// `amps[i]` is the amplitude of the basis state whose bits, read most
/// significant first, are the values of `labels` in order.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    labels: Vec<QubitLabel>,
    amps: Vec<Complex64>,
}

impl StateVector {
    pub fn new(labels: Vec<QubitLabel>, amps: Vec<Complex64>) -> Result<Self> {
        check_unique(&labels)?;
        if amps.len() != 1 << labels.len() {
            return Err(Error::ShapeMismatch {
                expected: format!("{} amplitudes", 1usize << labels.len()),
                found: format!("{} amplitudes", amps.len()),
            });
        }
        Ok(Self { labels, amps })
    }

    /// The zero-qubit register with amplitude 1.
    pub fn empty() -> Self {
        Self {
            labels: Vec::new(),
            amps: vec![ONE],
        }
    }

    /// Computational basis state; `bits` is read in the order of `labels`.
    pub fn basis(labels: Vec<QubitLabel>, bits: &str) -> Result<Self> {
        if bits.len() != labels.len() {
            return Err(Error::WrongRegisterSize {
                expected: labels.len(),
                found: bits.len(),
            });
        }
        Self::from_kets(labels, &[(bits, ONE)])
    }

    /// Superposition of basis kets given as bit strings over `labels`.
    pub fn from_kets(labels: Vec<QubitLabel>, kets: &[(&str, Complex64)]) -> Result<Self> {
        let mut amps = vec![ZERO; 1 << labels.len()];
        for (bits, amp) in kets {
            if bits.len() != labels.len() {
                return Err(Error::WrongRegisterSize {
                    expected: labels.len(),
                    found: bits.len(),
                });
            }
            amps[super::ket_index(bits)] += amp;
        }
        Self::new(labels, amps)
    }

    pub fn labels(&self) -> &[QubitLabel] {
        &self.labels
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn num_qubits(&self) -> usize {
        self.labels.len()
    }

    /// Amplitude of a basis ket written in this register's label order.
    pub fn amplitude(&self, bits: &str) -> Complex64 {
        self.amps[super::ket_index(bits)]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn normalize(&self) -> Result<Self> {
        let norm = self.norm_sqr().sqrt();
        if norm < f64::MIN_POSITIVE {
            return Err(Error::ZeroNorm);
        }
        Ok(Self {
            labels: self.labels.clone(),
            amps: self.amps.iter().map(|a| a / norm).collect(),
        })
    }

    pub fn is_normalized(&self) -> bool {
        (self.norm_sqr() - 1.0).abs() <= ALGEBRAIC_TOL
    }

    /// ⟨self|other⟩, with `other` reordered to this register's labels first.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        let other = other.permuted(&self.labels)?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Same state, amplitudes re-indexed for a new label order.
    pub fn permuted(&self, order: &[QubitLabel]) -> Result<Self> {
        let map = permutation_map(&self.labels, order)?;
        let mut amps = vec![ZERO; self.amps.len()];
        for (i, &j) in map.iter().enumerate() {
            amps[j] = self.amps[i];
        }
        Ok(Self {
            labels: order.to_vec(),
            amps,
        })
    }

    /// Same state stored in canonical (sorted) label order.
    pub fn canonical(&self) -> Self {
        let mut order = self.labels.clone();
        order.sort();
        self.permuted(&order)
            .expect("sorted labels are a permutation of the register")
    }

    pub fn tensor(&self, other: &StateVector) -> Result<Self> {
        let mut labels = self.labels.clone();
        for label in &other.labels {
            if labels.contains(label) {
                return Err(Error::DuplicateLabel(*label));
            }
            labels.push(*label);
        }
        let amps = self
            .amps
            .iter()
            .flat_map(|a| other.amps.iter().map(move |b| a * b))
            .collect();
        Ok(Self { labels, amps })
    }

    /// Applies `op` to `targets`, replacing them by `outputs`.
    ///
    /// Output labels may reuse target labels; any other output label must be
    /// fresh. The result is stored in canonical label order.
    pub fn apply_isometry(
        &self,
        op: &Operator,
        targets: &[QubitLabel],
        outputs: &[QubitLabel],
    ) -> Result<Self> {
        if targets.len() != op.in_arity() || outputs.len() != op.out_arity() {
            return Err(Error::ShapeMismatch {
                expected: format!("{} targets -> {} outputs", op.in_arity(), op.out_arity()),
                found: format!("{} targets -> {} outputs", targets.len(), outputs.len()),
            });
        }
        check_unique(targets)?;
        check_unique(outputs)?;
        let n = self.labels.len();
        let target_pos = targets
            .iter()
            .map(|&t| position(&self.labels, t))
            .collect::<Result<Vec<_>>>()?;
        let rest_pos: Vec<usize> = (0..n).filter(|p| !target_pos.contains(p)).collect();
        for out in outputs {
            if rest_pos.iter().any(|&p| self.labels[p] == *out) {
                return Err(Error::DuplicateLabel(*out));
            }
        }

        let out_n = outputs.len();
        let out_dim = 1usize << out_n;
        let mut amps = vec![ZERO; (1 << rest_pos.len()) * out_dim];
        let matrix = op.matrix();
        for (i, amp) in self.amps.iter().enumerate() {
            if *amp == ZERO {
                continue;
            }
            let r = gather_bits(i, n, &rest_pos);
            let t = gather_bits(i, n, &target_pos);
            let base = r << out_n;
            for o in 0..out_dim {
                let m = matrix[(o, t)];
                if m != ZERO {
                    amps[base | o] += m * amp;
                }
            }
        }
        let labels = rest_pos
            .iter()
            .map(|&p| self.labels[p])
            .chain(outputs.iter().copied())
            .collect();
        Ok(Self { labels, amps }.canonical())
    }

    /// Projects `label` onto `bit` and drops it from the register, without renormalizing.
    pub fn select(&self, label: QubitLabel, bit: u8) -> Result<Self> {
        let n = self.labels.len();
        let p = position(&self.labels, label)?;
        let shift = n - 1 - p;
        let low_mask = (1usize << shift) - 1;
        let amps = (0..1usize << (n - 1))
            .map(|k| {
                let high = k >> shift;
                let low = k & low_mask;
                self.amps[(high << (shift + 1)) | ((bit as usize) << shift) | low]
            })
            .collect();
        let mut labels = self.labels.clone();
        labels.remove(p);
        Ok(Self { labels, amps })
    }

    /// Maximum absolute amplitude difference after aligning label orders.
    pub fn max_abs_diff(&self, other: &StateVector) -> Result<f64> {
        let other = other.permuted(&self.labels)?;
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }
}

/// Kronecker product; the result lists `a`'s labels then `b`'s.
pub fn tensor_product(a: &StateVector, b: &StateVector) -> Result<StateVector> {
    a.tensor(b)
}

/// Applies a square operator to `targets`, identity elsewhere.
pub fn apply_to_targets(
    state: &StateVector,
    op: &Operator,
    targets: &[QubitLabel],
) -> Result<StateVector> {
    state.apply_isometry(op, targets, targets)
}
