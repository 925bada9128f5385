//! Independent dense reference for the broadcasting pipeline.
//!
//! Builds every state as an explicit Kronecker product of cloner columns in
//! plain `f64` (all amplitudes are real before the local unitaries), selects
//! machine readouts by index filtering, and reduces by direct summation over
//! basis pairs. Shares no code with the crate under test.
#![allow(dead_code)]

pub mod random;

/// Image of |bit⟩ under the cloner, indexed by (source, clone, machine) bits, ↑ = 0.
pub fn bh_column(bit: usize) -> [f64; 8] {
    let major = (2.0f64 / 3.0).sqrt();
    let minor = 1.0 / 6.0f64.sqrt();
    let mut col = [0.0; 8];
    if bit == 0 {
        col[0b000] = major;
        col[0b011] = minor;
        col[0b101] = minor;
    } else {
        col[0b111] = major;
        col[0b010] = minor;
        col[0b100] = minor;
    }
    col
}

pub fn kron(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    out
}

fn bit(index: usize, n: usize, pos: usize) -> usize {
    (index >> (n - 1 - pos)) & 1
}

/// Keeps entries whose bits at `positions` equal `bits`, dropping those positions.
pub fn select(v: &[f64], n: usize, positions: &[usize], bits: &[usize]) -> Vec<f64> {
    let rest: Vec<usize> = (0..n).filter(|p| !positions.contains(p)).collect();
    let mut out = vec![0.0; 1 << rest.len()];
    for (i, amp) in v.iter().enumerate() {
        if positions.iter().zip(bits).all(|(&p, &b)| bit(i, n, p) == b) {
            let j = rest.iter().fold(0, |acc, &p| (acc << 1) | bit(i, n, p));
            out[j] = *amp;
        }
    }
    out
}

pub fn norm_sq(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum()
}

pub fn normalized(v: &[f64]) -> Vec<f64> {
    let n = norm_sq(v).sqrt();
    v.iter().map(|x| x / n).collect()
}

/// Branch string "UUD" → machine bits [0, 0, 1].
pub fn branch_bits(branch: &str) -> Vec<usize> {
    branch.chars().map(|c| usize::from(c == 'D')).collect()
}

/// Round-one state over (1,4,MA, 2,5,MB, 3,6,MC).
pub fn round_one(alpha: f64, beta: f64, gamma: f64) -> Vec<f64> {
    let mut total = vec![0.0; 1 << 9];
    // inputs |q1 q2 q3⟩: α|001⟩, β|010⟩, γ|100⟩
    for (coef, bits) in [(alpha, [0, 0, 1]), (beta, [0, 1, 0]), (gamma, [1, 0, 0])] {
        let term = kron(
            &kron(&bh_column(bits[0]), &bh_column(bits[1])),
            &bh_column(bits[2]),
        );
        for (t, x) in total.iter_mut().zip(term) {
            *t += coef * x;
        }
    }
    total
}

/// Post-readout six-qubit state over (1,4,2,5,3,6) and its probability.
pub fn after_round_one(alpha: f64, beta: f64, gamma: f64, branch: &str) -> (Vec<f64>, f64) {
    let raw = select(
        &round_one(alpha, beta, gamma),
        9,
        &[2, 5, 8],
        &branch_bits(branch),
    );
    let p = norm_sq(&raw);
    (normalized(&raw), p)
}

/// Round-two state over (1,4,7,MA, 2,5,8,MB, 3,6,9,MC) from a state over (1,4,2,5,3,6).
pub fn round_two(six: &[f64]) -> Vec<f64> {
    let mut total = vec![0.0; 1 << 12];
    for (i, amp) in six.iter().enumerate() {
        if *amp == 0.0 {
            continue;
        }
        let parties: Vec<Vec<f64>> = (0..3)
            .map(|k| {
                let original = bit(i, 6, 2 * k);
                let copy = bit(i, 6, 2 * k + 1);
                let mut e = [0.0; 2];
                e[original] = 1.0;
                kron(&e, &bh_column(copy))
            })
            .collect();
        let term = kron(&kron(&parties[0], &parties[1]), &parties[2]);
        for (t, x) in total.iter_mut().zip(term) {
            *t += amp * x;
        }
    }
    total
}

/// Nine-qubit state over (1,4,7,2,5,8,3,6,9) with both branch probabilities.
pub fn nine_qubit(alpha: f64, beta: f64, gamma: f64, b1: &str, b2: &str) -> (Vec<f64>, f64, f64) {
    let (six, p1) = after_round_one(alpha, beta, gamma, b1);
    let raw = select(&round_two(&six), 12, &[3, 7, 11], &branch_bits(b2));
    let p2 = norm_sq(&raw);
    (normalized(&raw), p1, p2)
}

/// Display order of the nine-qubit oracle state.
pub const NINE_ORDER: [u8; 9] = [1, 4, 7, 2, 5, 8, 3, 6, 9];

/// Closed form of the normalized all-up/all-up nine-qubit state over (1,4,7,2,5,8,3,6,9):
/// each group carries x̂ = 1/√6 on its two x-kets and ŷ = 2/√6 on its y-ket.
pub fn closed_form_nine(alpha: f64, beta: f64, gamma: f64) -> Vec<f64> {
    let x = 1.0 / 6.0f64.sqrt();
    let y = 2.0 / 6.0f64.sqrt();
    let mut v = vec![0.0; 1 << 9];
    let ket = |s: &str| usize::from_str_radix(s, 2).unwrap();
    for (coef, kets) in [
        (alpha, ["000000001", "000000010", "000000100"]),
        (beta, ["000001000", "000010000", "000100000"]),
        (gamma, ["001000000", "010000000", "100000000"]),
    ] {
        v[ket(kets[0])] += coef * x;
        v[ket(kets[1])] += coef * x;
        v[ket(kets[2])] += coef * y;
    }
    v
}

/// Reduced density matrix of `keep` (labels) from a real state over `order`.
pub fn reduce(v: &[f64], order: &[u8], keep: &[u8]) -> Vec<Vec<f64>> {
    let n = order.len();
    let keep_pos: Vec<usize> = keep
        .iter()
        .map(|k| order.iter().position(|o| o == k).unwrap())
        .collect();
    let trace_pos: Vec<usize> = (0..n).filter(|p| !keep_pos.contains(p)).collect();
    let dim = 1 << keep.len();
    let mut rho = vec![vec![0.0; dim]; dim];
    let nonzero: Vec<usize> = (0..v.len()).filter(|&i| v[i] != 0.0).collect();
    for &i in &nonzero {
        for &j in &nonzero {
            if trace_pos.iter().all(|&p| bit(i, n, p) == bit(j, n, p)) {
                let r = keep_pos.iter().fold(0, |acc, &p| (acc << 1) | bit(i, n, p));
                let c = keep_pos.iter().fold(0, |acc, &p| (acc << 1) | bit(j, n, p));
                rho[r][c] += v[i] * v[j];
            }
        }
    }
    rho
}

/// Partial transpose of a real two-qubit matrix on its second qubit.
pub fn partial_transpose_second(rho: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut out = vec![vec![0.0; 4]; 4];
    for a in 0..2 {
        for b in 0..2 {
            for a2 in 0..2 {
                for b2 in 0..2 {
                    out[2 * a + b][2 * a2 + b2] = rho[2 * a + b2][2 * a2 + b];
                }
            }
        }
    }
    out
}

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, ascending.
#[allow(clippy::needless_range_loop)]
pub fn jacobi_eigenvalues(m: &[Vec<f64>]) -> Vec<f64> {
    let n = m.len();
    let mut a: Vec<Vec<f64>> = m.to_vec();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut values: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    values.sort_by(f64::total_cmp);
    values
}

/// Minimum PT eigenvalue of the pair (a, b) with the transpose on the larger label.
pub fn pair_min_pt(v: &[f64], order: &[u8], a: u8, b: u8) -> f64 {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    let rho = reduce(v, order, &[lo, hi]);
    jacobi_eigenvalues(&partial_transpose_second(&rho))[0]
}

/// Oracle verdict: entangled iff the minimum PT eigenvalue is below -1e-10.
pub fn pair_entangled(v: &[f64], order: &[u8], a: u8, b: u8) -> bool {
    pair_min_pt(v, order, a, b) < -1e-10
}

/// Reference for the two-qubit background check: α|00⟩+β|11⟩ cloned on both sides.
/// The state is over (A, a, MA, B, b, MB), lowercase marking the clones.
pub fn two_qubit_cloned(alpha_sq: f64) -> Vec<f64> {
    let (a, b) = (alpha_sq.sqrt(), (1.0 - alpha_sq).sqrt());
    let zero = kron(&bh_column(0), &bh_column(0));
    let one = kron(&bh_column(1), &bh_column(1));
    zero.iter().zip(&one).map(|(z, o)| a * z + b * o).collect()
}
