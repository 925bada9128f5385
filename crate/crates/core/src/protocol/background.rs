//! Two-qubit broadcasting of α|00⟩ + β|11⟩ with local cloners and no machine readout.

use serde::Serialize;

use crate::cloner::{clone_qubit, CloneAssignment};
use crate::error::{Error, Result};
use crate::label::{Party, QubitLabel};
use crate::separability::{ppt_verdict, PairVerdict};
use crate::tensor::{partial_trace, Complex64, StateVector};

/// Bisection stops once the bracket is narrower than this.
pub const BISECTION_TOL: f64 = 1e-10;

const ORIGINAL_A: QubitLabel = QubitLabel::Data(1);
const ORIGINAL_B: QubitLabel = QubitLabel::Data(2);
const CLONE_A: QubitLabel = QubitLabel::Data(3);
const CLONE_B: QubitLabel = QubitLabel::Data(4);

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BackgroundPoint {
    pub alpha_sq: f64,
    /// Original of A with the clone of B.
    pub nonlocal: PairVerdict,
    /// Original of A with its own clone.
    pub local: PairVerdict,
}

/// Endpoints ½ ∓ √39/16 of the known inseparability interval.
pub fn reference_interval() -> (f64, f64) {
    let half_width = 39f64.sqrt() / 16.0;
    (0.5 - half_width, 0.5 + half_width)
}

pub fn two_qubit_broadcast(alpha_sq: f64) -> Result<BackgroundPoint> {
    if !(alpha_sq > 0.0 && alpha_sq < 1.0) {
        return Err(Error::OutOfRange {
            value: alpha_sq,
            range: "(0, 1)",
        });
    }
    let c = |v: f64| Complex64::new(v, 0.0);
    let input = StateVector::from_kets(
        vec![ORIGINAL_A, ORIGINAL_B],
        &[
            ("00", c(alpha_sq.sqrt())),
            ("11", c((1.0 - alpha_sq).sqrt())),
        ],
    )?;
    let cloners = [
        CloneAssignment {
            source: ORIGINAL_A,
            clone: CLONE_A,
            machine: QubitLabel::machine(Party::Alice, 1),
        },
        CloneAssignment {
            source: ORIGINAL_B,
            clone: CLONE_B,
            machine: QubitLabel::machine(Party::Bob, 1),
        },
    ];
    let cloned = cloners.iter().try_fold(input, |s, a| clone_qubit(&s, a))?;
    let nonlocal = ppt_verdict(&partial_trace(&cloned, &[ORIGINAL_A, CLONE_B])?)?;
    let local = ppt_verdict(&partial_trace(&cloned, &[ORIGINAL_A, CLONE_A])?)?;
    Ok(BackgroundPoint {
        alpha_sq,
        nonlocal,
        local,
    })
}

pub fn nonlocal_min_pt_eigenvalue(alpha_sq: f64) -> Result<f64> {
    Ok(two_qubit_broadcast(alpha_sq)?.nonlocal.min_pt_eigenvalue)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BackgroundScan {
    pub points: Vec<BackgroundPoint>,
    /// Sign changes of the non-local minimum PT eigenvalue, ascending.
    pub boundaries: Vec<f64>,
}

/// Evaluates `grid` midpoints (i + ½)/grid of (0, 1) and refines every sign
/// change of the non-local minimum PT eigenvalue by bisection.
pub fn scan_background(grid: usize, tol: f64) -> Result<BackgroundScan> {
    if grid < 2 {
        return Err(Error::OutOfRange {
            value: grid as f64,
            range: "[2, inf)",
        });
    }
    let points = (0..grid)
        .map(|i| two_qubit_broadcast((i as f64 + 0.5) / grid as f64))
        .collect::<Result<Vec<_>>>()?;
    let mut boundaries = Vec::new();
    for w in points.windows(2) {
        let (lo, hi) = (&w[0], &w[1]);
        let (f_lo, f_hi) = (lo.nonlocal.min_pt_eigenvalue, hi.nonlocal.min_pt_eigenvalue);
        if (f_lo < 0.0) != (f_hi < 0.0) {
            boundaries.push(bisect(lo.alpha_sq, hi.alpha_sq, f_lo < 0.0, tol)?);
        }
    }
    Ok(BackgroundScan { points, boundaries })
}

fn bisect(mut lo: f64, mut hi: f64, lo_negative: bool, tol: f64) -> Result<f64> {
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if (nonlocal_min_pt_eigenvalue(mid)? < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::separability::Classification;

    #[test]
    fn half_is_entangled() {
        let p = two_qubit_broadcast(0.5).unwrap();
        assert_eq!(p.nonlocal.classification, Classification::Entangled);
    }

    #[test]
    fn small_alpha_is_separable() {
        let p = two_qubit_broadcast(0.05).unwrap();
        assert_eq!(p.nonlocal.classification, Classification::Separable);
    }

    #[test]
    fn out_of_range() {
        for bad in [0.0, 1.0, -0.1, 1.5, f64::NAN] {
            assert!(matches!(
                two_qubit_broadcast(bad),
                Err(Error::OutOfRange { .. })
            ));
        }
    }

    #[test]
    fn grid_has_requested_size() {
        let scan = scan_background(100, 1e-8).unwrap();
        assert_eq!(scan.points.len(), 100);
        assert_eq!(scan.boundaries.len(), 2);
    }
}
