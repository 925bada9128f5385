//! Seeded random states and unitaries for property tests.
#![allow(dead_code)]

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

pub fn gaussian_complex<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Haar-random pure state of dimension `dim`.
pub fn pure_state<R: Rng>(rng: &mut R, dim: usize) -> Vec<Complex64> {
    let v: Vec<Complex64> = (0..dim).map(|_| gaussian_complex(rng)).collect();
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|z| z / norm).collect()
}

/// Random convex mixture of `terms` random pure two-qubit states.
pub fn mixed_two_qubit<R: Rng>(rng: &mut R, terms: usize) -> DMatrix<Complex64> {
    let weights: Vec<f64> = (0..terms).map(|_| rng.random::<f64>() + 1e-3).collect();
    let total: f64 = weights.iter().sum();
    let mut rho = DMatrix::zeros(4, 4);
    for w in weights {
        let psi = nalgebra::DVector::from_vec(pure_state(rng, 4));
        rho += (&psi * psi.adjoint()).scale(w / total);
    }
    rho
}

/// Random 1-4 term mixture blended with white noise, so many samples sit near
/// the separable boundary and both classes occur.
pub fn noisy_two_qubit<R: Rng>(rng: &mut R) -> DMatrix<Complex64> {
    let terms = rng.random_range(1..=4);
    let p: f64 = rng.random();
    let noise = DMatrix::<Complex64>::identity(4, 4).scale(0.25);
    mixed_two_qubit(rng, terms).scale(p) + noise.scale(1.0 - p)
}

/// Random convex mixture of `terms` product states ρ_A ⊗ ρ_B.
pub fn mixed_product<R: Rng>(rng: &mut R, terms: usize) -> DMatrix<Complex64> {
    let mut rho = DMatrix::zeros(4, 4);
    let weights: Vec<f64> = (0..terms).map(|_| rng.random::<f64>() + 1e-3).collect();
    let total: f64 = weights.iter().sum();
    for w in weights {
        let a = nalgebra::DVector::from_vec(pure_state(rng, 2));
        let b = nalgebra::DVector::from_vec(pure_state(rng, 2));
        let ab = a.kronecker(&b);
        rho += (&ab * ab.adjoint()).scale(w / total);
    }
    rho
}

/// Haar-random single-qubit unitary.
pub fn unitary_2x2<R: Rng>(rng: &mut R) -> DMatrix<Complex64> {
    let v = pure_state(rng, 2);
    let (a, b) = (v[0], v[1]);
    let phase = Complex64::from_polar(1.0, rng.random::<f64>() * std::f64::consts::TAU);
    DMatrix::from_row_slice(
        2,
        2,
        &[a * phase, -b.conj() * phase, b * phase, a.conj() * phase],
    )
}

/// Random real W parameters, any signs.
pub fn w_params<R: Rng>(rng: &mut R) -> (f64, f64, f64) {
    loop {
        let (a, b, c): (f64, f64, f64) = (
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
        );
        let n = (a * a + b * b + c * c).sqrt();
        if n > 1e-6 {
            return (a / n, b / n, c / n);
        }
    }
}

/// Positive-octant W parameters with every component at least `floor`.
pub fn interior_w_params<R: Rng>(rng: &mut R, floor: f64) -> (f64, f64, f64) {
    loop {
        let (a, b, c) = w_params(rng);
        let (a, b, c) = (a.abs(), b.abs(), c.abs());
        if a.min(b).min(c) >= floor {
            return (a, b, c);
        }
    }
}
