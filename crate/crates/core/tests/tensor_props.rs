mod oracle;

use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wbcast_core::tensor::{apply_to_targets, partial_trace, Operator, StateVector};
use wbcast_core::{bh_isometry, QubitLabel};

fn labels(n: usize) -> Vec<QubitLabel> {
    (1..=n as u8).map(QubitLabel::Data).collect()
}

fn random_state(n: usize, seed: u64) -> StateVector {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let amps = oracle::random::pure_state(&mut rng, 1 << n);
    StateVector::new(labels(n), amps).unwrap()
}

fn random_unitary(seed: u64) -> Operator {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Operator::square(oracle::random::unitary_2x2(&mut rng)).unwrap()
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn permuting_and_back_is_bit_exact((n, perm) in (1usize..=7).prop_flat_map(|n| (Just(n), permutation(n))), seed in any::<u64>()) {
        let state = random_state(n, seed);
        let order: Vec<QubitLabel> = perm.iter().map(|&i| state.labels()[i]).collect();
        let there = state.permuted(&order).unwrap();
        let back = there.permuted(state.labels()).unwrap();
        prop_assert_eq!(back.amps(), state.amps());
    }

    #[test]
    fn cloning_preserves_norm(n in 1usize..=5, target in 0usize..5, seed in any::<u64>()) {
        let state = random_state(n, seed);
        let source = QubitLabel::Data((target % n) as u8 + 1);
        let out = state
            .apply_isometry(&bh_isometry(), &[source], &[source, QubitLabel::Data(20), QubitLabel::Data(21)])
            .unwrap();
        prop_assert_eq!(out.num_qubits(), n + 2);
        prop_assert!((out.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn reduction_ignores_unitaries_outside_the_kept_set(n in 2usize..=6, keep_mask in 1u32..64, seed in any::<u64>()) {
        let state = random_state(n, seed);
        let all = labels(n);
        let keep: Vec<QubitLabel> = all.iter().enumerate()
            .filter(|(i, _)| keep_mask & (1 << i) != 0)
            .map(|(_, l)| *l)
            .collect();
        prop_assume!(!keep.is_empty());
        let before = partial_trace(&state, &keep).unwrap();
        let mut evolved = state.clone();
        for (k, label) in all.iter().enumerate().filter(|(_, l)| !keep.contains(l)) {
            evolved = apply_to_targets(&evolved, &random_unitary(seed ^ k as u64), &[*label]).unwrap();
        }
        let after = partial_trace(&evolved, &keep).unwrap();
        prop_assert!(before.max_abs_diff(&after).unwrap() < 1e-12);
    }

    #[test]
    fn reductions_are_valid_density_matrices(n in 1usize..=7, keep_mask in 1u32..128, seed in any::<u64>()) {
        let state = random_state(n, seed);
        let keep: Vec<QubitLabel> = labels(n).into_iter().enumerate()
            .filter(|(i, _)| keep_mask & (1 << i) != 0)
            .map(|(_, l)| l)
            .collect();
        prop_assume!(!keep.is_empty());
        let rho = partial_trace(&state, &keep).unwrap();
        prop_assert!(rho.validate().is_ok());
        prop_assert!(rho.eigenvalues().unwrap()[0] >= -1e-10);
        let mut sorted = keep.clone();
        sorted.sort();
        prop_assert_eq!(rho.labels(), sorted.as_slice());
    }
}

#[test]
fn twelve_qubit_register_round_trip() {
    let state = random_state(12, 7);
    let mut order = state.labels().to_vec();
    order.reverse();
    let back = state
        .permuted(&order)
        .unwrap()
        .permuted(state.labels())
        .unwrap();
    assert_eq!(back, state);
    let unit = Complex64::new(1.0, 0.0);
    assert!((state.inner(&state).unwrap() - unit).norm() < 1e-12);
}
