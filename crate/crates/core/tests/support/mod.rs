//! Oracles shared by the integration tests. Nothing here calls the library's
//! channel, partial-trace or closed-form code.
#![allow(dead_code)]

use num_complex::Complex64;
use qshare::entanglement::{i_concurrence_pure, PureBipartiteState};
use qshare::qmath::ComplexMatrix;

pub const SQRT_2_3: f64 = 0.816_496_580_927_726;

/// λ₁ ∈ {0, 0.1, …, 1}.
pub fn lambda_grid() -> Vec<f64> {
    (0..=10).map(|i| i as f64 / 10.0).collect()
}

/// c ∈ {0.6, 0.65, …, 1.0}.
pub fn c_grid() -> Vec<f64> {
    (0..=8).map(|i| 0.6 + 0.05 * i as f64).collect()
}

pub fn grid() -> Vec<(f64, f64)> {
    let cs = c_grid();
    lambda_grid()
        .into_iter()
        .flat_map(|l| cs.iter().map(move |&c| (l, c)))
        .collect()
}

// Registers of the six-qudit pure state: system 1, environment 3, ancilla 1,
// system 2, environment 4, ancilla 2.
const REGISTER_OF_PARTY: [usize; 4] = [0, 1, 3, 4];

/// Output branches of one particle in level `i`: `(system, environment, ancilla, amplitude)`.
fn branches(i: usize, c: f64, d: f64, k: usize) -> Vec<(usize, usize, usize, f64)> {
    let mut out = vec![(i, i, i, c)];
    for j in (0..k).filter(|&j| j != i) {
        out.push((i, j, j, d));
        out.push((j, i, j, d));
    }
    out
}

/// The channel output as a pure state on six qudits, before any trace.
pub fn channel_pure_state(lambdas: &[f64], c: f64, d: f64) -> Vec<Complex64> {
    let k = lambdas.len();
    let mut psi = vec![Complex64::new(0.0, 0.0); k.pow(6)];
    for (i, &l) in lambdas.iter().enumerate() {
        for &(s1, e3, a1, x) in &branches(i, c, d, k) {
            for &(s2, e4, a2, y) in &branches(i, c, d, k) {
                let digits = [s1, e3, a1, s2, e4, a2];
                let idx = digits.iter().fold(0, |acc, &v| acc * k + v);
                psi[idx] += l.sqrt() * x * y;
            }
        }
    }
    psi
}

/// Reduced state of two parties (0 = system 1, 1 = env 3, 2 = system 2, 3 = env 4),
/// obtained by summing over every other register of the six-qudit state.
pub fn channel_pair(lambdas: &[f64], c: f64, d: f64, first: usize, second: usize) -> ComplexMatrix {
    let k = lambdas.len();
    let psi = channel_pure_state(lambdas, c, d);
    let (ra, rb) = (REGISTER_OF_PARTY[first], REGISTER_OF_PARTY[second]);
    let rest: Vec<usize> = (0..6).filter(|&r| r != ra && r != rb).collect();
    let mut rho = ComplexMatrix::zeros(k * k, k * k);
    let mut block = vec![Complex64::new(0.0, 0.0); k * k];
    for env in 0..k.pow(4) {
        let mut digits = [0usize; 6];
        let mut e = env;
        for &r in rest.iter().rev() {
            digits[r] = e % k;
            e /= k;
        }
        for a in 0..k {
            for b in 0..k {
                digits[ra] = a;
                digits[rb] = b;
                let idx = digits.iter().fold(0, |acc, &v| acc * k + v);
                block[a * k + b] = psi[idx];
            }
        }
        for x in 0..k * k {
            for y in 0..k * k {
                rho[(x, y)] += block[x] * block[y].conj();
            }
        }
    }
    let tr = rho.trace().re;
    rho.scale_real(1.0 / tr)
}

/// Concurrence of a two-qubit X-state: `2·max(0, |ρ₀₃| − √(ρ₁₁ρ₂₂), |ρ₁₂| − √(ρ₀₀ρ₃₃))`.
pub fn x_state_concurrence(m: &ComplexMatrix) -> f64 {
    let a = m[(0, 3)].norm() - (m[(1, 1)].re * m[(2, 2)].re).sqrt();
    let b = m[(1, 2)].norm() - (m[(0, 0)].re * m[(3, 3)].re).sqrt();
    2.0 * a.max(b).max(0.0)
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

fn compositions(n: usize, parts: usize, prefix: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if parts == 1 {
        prefix.push(n);
        visit(prefix);
        prefix.pop();
        return;
    }
    for first in 0..=n {
        prefix.push(first);
        compositions(n - first, parts - 1, prefix, visit);
        prefix.pop();
    }
}

/// Euclidean projection onto the probability simplex.
pub fn project_simplex(v: &[f64]) -> Vec<f64> {
    let mut u = v.to_vec();
    u.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let mut cumsum = 0.0;
    let mut theta = 0.0;
    for (j, &uj) in u.iter().enumerate() {
        cumsum += uj;
        let t = (cumsum - 1.0) / (j + 1) as f64;
        if uj - t > 0.0 {
            theta = t;
        }
    }
    v.iter().map(|&x| (x - theta).max(0.0)).collect()
}

fn padded(support: &[f64], k: usize) -> PureBipartiteState {
    let mut l = support.to_vec();
    l.resize(k, 0.0);
    PureBipartiteState::new(l).unwrap()
}

/// Largest I-concurrence over states whose Schmidt coefficients live on `r`
/// of the `k` levels: a composition grid (at most ~2·10⁵ points, step ≥ 10⁻³)
/// followed by projected gradient ascent on `Σ_{i<j} λᵢλⱼ`.
pub fn simplex_max_i_concurrence(r: usize, k: usize) -> f64 {
    let mut n = 1000;
    while n > r && binomial(n + r - 1, r - 1) > 2e5 {
        n -= 1;
    }
    let mut best = f64::NEG_INFINITY;
    let mut best_point = vec![0.0; r];
    compositions(n, r, &mut Vec::with_capacity(r), &mut |parts| {
        let l: Vec<f64> = parts.iter().map(|&p| p as f64 / n as f64).collect();
        let v = i_concurrence_pure(&padded(&l, k));
        if v > best {
            best = v;
            best_point = l;
        }
    });
    let mut x = best_point;
    for _ in 0..100_000 {
        let step: Vec<f64> = x.iter().map(|&xi| xi + 0.25 * (1.0 - xi)).collect();
        let next = project_simplex(&step);
        let moved = next.iter().zip(&x).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        x = next;
        if moved < 1e-10 {
            break;
        }
    }
    best.max(i_concurrence_pure(&padded(&x, k)))
}

/// Uniform sample from the `r`-simplex via normalized exponentials.
pub fn random_simplex(rng: &mut impl rand::Rng, r: usize) -> Vec<f64> {
    let e: Vec<f64> = (0..r).map(|_| -(1.0 - rng.random::<f64>()).ln()).collect();
    let s: f64 = e.iter().sum();
    e.into_iter().map(|x| x / s).collect()
}

/// `G·G†/Tr` for a square matrix `G` filled from `entries` (real, imaginary interleaved).
pub fn density_from_entries(n: usize, entries: &[f64]) -> ComplexMatrix {
    let g = ComplexMatrix::from_fn(n, n, |i, j| {
        let t = 2 * (i * n + j);
        Complex64::new(entries[t], entries[t + 1])
    });
    let m = &g * &g.dagger();
    let tr = m.trace().re;
    m.scale_real(1.0 / tr)
}

/// Bloch-vector qubit state `½(I + r·σ)` with `|r| ≤ 1`.
pub fn qubit_from_bloch(x: f64, y: f64, z: f64) -> ComplexMatrix {
    let h = 0.5;
    ComplexMatrix::from_fn(2, 2, |i, j| match (i, j) {
        (0, 0) => Complex64::new(h * (1.0 + z), 0.0),
        (1, 1) => Complex64::new(h * (1.0 - z), 0.0),
        (0, 1) => Complex64::new(h * x, -h * y),
        _ => Complex64::new(h * x, h * y),
    })
}
