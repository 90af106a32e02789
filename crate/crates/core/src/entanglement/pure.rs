use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qmath::{pauli, singular_values, ComplexMatrix};

/// Coefficients below this count as zero when computing the Schmidt rank.
pub const RANK_TOL: f64 = 1e-12;
const NORM_TOL: f64 = 1e-12;

/// A normalized pure-state amplitude vector.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if amplitudes.is_empty() || (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::domain("norm", norm, "state vector must have unit norm"));
        }
        Ok(Self { amplitudes })
    }

    /// Normalizes arbitrary nonzero amplitudes.
    pub fn normalized(amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::domain("norm", norm, "cannot normalize a zero vector"));
        }
        Self::new(amplitudes.into_iter().map(|z| z / norm).collect())
    }

    /// Computational basis vector `|index⟩` in dimension `dim`.
    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::IndexOutOfRange { index, len: dim });
        }
        let mut a = vec![Complex64::new(0.0, 0.0); dim];
        a[index] = Complex64::new(1.0, 0.0);
        Ok(Self { amplitudes: a })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn projector(&self) -> ComplexMatrix {
        ComplexMatrix::outer(&self.amplitudes)
    }
}

/// A k×k bipartite pure state in Schmidt form `Σᵢ √λᵢ |i⟩|i⟩`, stored by its coefficients λᵢ.
#[derive(Clone, Debug, PartialEq)]
pub struct PureBipartiteState {
    lambdas: Vec<f64>,
}

impl PureBipartiteState {
    /// Coefficients must be non-negative and sum to one within 1e-12.
    /// The local dimension is the number of coefficients.
    pub fn new(lambdas: Vec<f64>) -> Result<Self> {
        if lambdas.len() < 2 {
            return Err(Error::domain(
                "k",
                lambdas.len() as f64,
                "local dimension must be at least 2",
            ));
        }
        if let Some(&bad) = lambdas.iter().find(|&&l| !(l.is_finite() && l >= 0.0)) {
            return Err(Error::domain(
                "lambda",
                bad,
                "Schmidt coefficients must be non-negative",
            ));
        }
        let sum: f64 = lambdas.iter().sum();
        if (sum - 1.0).abs() > NORM_TOL {
            return Err(Error::domain("sum(lambda)", sum, "Schmidt coefficients must sum to 1"));
        }
        Ok(Self { lambdas })
    }

    /// Two-qubit state with coefficients (λ₁, 1 − λ₁).
    pub fn two_qubit(lambda1: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&lambda1) {
            return Err(Error::domain("lambda1", lambda1, "must lie in [0, 1]"));
        }
        Self::new(vec![lambda1, 1.0 - lambda1])
    }

    /// Equal weights over the first `r` of `k` levels.
    pub fn uniform(r: usize, k: usize) -> Result<Self> {
        if r == 0 || r > k {
            return Err(Error::domain("r", r as f64, format!("must lie in 1..={k}")));
        }
        let mut l = vec![0.0; k];
        l[..r].fill(1.0 / r as f64);
        Self::new(l)
    }

    pub fn k(&self) -> usize {
        self.lambdas.len()
    }

    pub fn lambdas(&self) -> &[f64] {
        &self.lambdas
    }

    pub fn schmidt_rank(&self) -> usize {
        self.schmidt_rank_with(RANK_TOL)
    }

    pub fn schmidt_rank_with(&self, tol: f64) -> usize {
        self.lambdas.iter().filter(|&&l| l > tol).count()
    }

    /// `Tr ρ_A² = Σ λᵢ²`.
    pub fn reduced_purity(&self) -> f64 {
        self.lambdas.iter().map(|l| l * l).sum()
    }

    /// Amplitudes `Σ √λᵢ |i⟩|i⟩` in the product basis `|a⟩|b⟩ ↦ a·k + b`.
    pub fn to_state_vector(&self) -> StateVector {
        let k = self.k();
        let mut a = vec![Complex64::new(0.0, 0.0); k * k];
        for (i, &l) in self.lambdas.iter().enumerate() {
            a[i * k + i] = Complex64::new(l.sqrt(), 0.0);
        }
        StateVector { amplitudes: a }
    }
}

/// Schmidt coefficients of a `dim_a × dim_b` pure state: squared singular values
/// of its coefficient matrix, in descending order.
pub fn schmidt_decompose(v: &StateVector, dim_a: usize, dim_b: usize) -> Result<PureBipartiteState> {
    if dim_a * dim_b != v.dim() {
        return Err(Error::DimensionMismatch {
            expected: dim_a * dim_b,
            found: v.dim(),
        });
    }
    if dim_a != dim_b {
        return Err(Error::DimensionMismatch {
            expected: dim_a,
            found: dim_b,
        });
    }
    let coeffs = ComplexMatrix::from_vec(dim_a, dim_b, v.amplitudes().to_vec())?;
    let sv = singular_values(&coeffs)?;
    let mut lambdas: Vec<f64> = sv.iter().map(|s| s * s).collect();
    // absorb round-off so the coefficients sum to one exactly
    let total: f64 = lambdas.iter().sum();
    lambdas.iter_mut().for_each(|l| *l /= total);
    PureBipartiteState::new(lambdas)
}

/// Two-qubit concurrence `2√(λ₁λ₂)`.
pub fn concurrence_pure(s: &PureBipartiteState) -> Result<f64> {
    if s.k() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: s.k(),
        });
    }
    Ok(2.0 * (s.lambdas[0] * s.lambdas[1]).sqrt())
}

/// Concurrence `|⟨ψ|σy⊗σy|ψ*⟩|` evaluated directly on a two-qubit amplitude vector.
pub fn concurrence_from_amplitudes(v: &StateVector) -> Result<f64> {
    if v.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: v.dim(),
        });
    }
    let yy = pauli::sigma_y().kron(&pauli::sigma_y());
    let psi = v.amplitudes();
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..4 {
        for j in 0..4 {
            acc += psi[i].conj() * yy[(i, j)] * psi[j].conj();
        }
    }
    Ok(acc.norm())
}

/// I-concurrence `√((2k/(k−1)) Σ_{i<j} λᵢλⱼ)` of a k×k pure state.
pub fn i_concurrence_pure(s: &PureBipartiteState) -> f64 {
    let k = s.k() as f64;
    let l = s.lambdas();
    let mut s2 = 0.0;
    for i in 0..l.len() {
        for j in (i + 1)..l.len() {
            s2 += l[i] * l[j];
        }
    }
    (2.0 * k / (k - 1.0) * s2).max(0.0).sqrt()
}

/// I-concurrence from the reduced purity, `√((k/(k−1))(1 − Tr ρ_A²))`.
pub fn i_concurrence_from_purity(k: usize, purity: f64) -> f64 {
    let k = k as f64;
    (k / (k - 1.0) * (1.0 - purity)).max(0.0).sqrt()
}

#[cfg(test)]
mod tests {
    use std::f64::consts::FRAC_1_SQRT_2;

    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn bell_state_schmidt() {
        let bell = StateVector::new(vec![c(FRAC_1_SQRT_2), c(0.0), c(0.0), c(FRAC_1_SQRT_2)]).unwrap();
        let s = schmidt_decompose(&bell, 2, 2).unwrap();
        assert!((s.lambdas()[0] - 0.5).abs() < 1e-15 && (s.lambdas()[1] - 0.5).abs() < 1e-15);
        assert_eq!(s.schmidt_rank(), 2);
    }

    #[test]
    fn product_state_schmidt() {
        let s = schmidt_decompose(&StateVector::basis(4, 1).unwrap(), 2, 2).unwrap();
        assert_eq!(s.lambdas(), &[1.0, 0.0]);
        assert_eq!(s.schmidt_rank(), 1);
    }

    #[test]
    fn schmidt_dimension_checks() {
        let v = StateVector::basis(6, 0).unwrap();
        assert!(matches!(
            schmidt_decompose(&v, 2, 2),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            schmidt_decompose(&v, 2, 3),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn concurrence_values() {
        let max = PureBipartiteState::new(vec![0.5, 0.5]).unwrap();
        let prod = PureBipartiteState::new(vec![1.0, 0.0]).unwrap();
        let skew = PureBipartiteState::new(vec![0.9, 0.1]).unwrap();
        assert!((concurrence_pure(&max).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(concurrence_pure(&prod).unwrap(), 0.0);
        assert!((concurrence_pure(&skew).unwrap() - 0.6).abs() < 1e-15);
        let amp = concurrence_from_amplitudes(&skew.to_state_vector()).unwrap();
        assert!((amp - 0.6).abs() < 1e-15);
    }

    #[test]
    fn concurrence_requires_qubits() {
        let q = PureBipartiteState::uniform(3, 3).unwrap();
        assert!(matches!(
            concurrence_pure(&q),
            Err(Error::DimensionMismatch { expected: 2, found: 3 })
        ));
    }

    #[test]
    fn i_concurrence_values() {
        let max3 = PureBipartiteState::uniform(3, 3).unwrap();
        assert!((i_concurrence_pure(&max3) - 1.0).abs() < 1e-15);
        let sr2 = PureBipartiteState::new(vec![0.5, 0.5, 0.0]).unwrap();
        assert!((i_concurrence_pure(&sr2) - 3f64.sqrt() / 2.0).abs() < 1e-15);
        let skew = PureBipartiteState::new(vec![0.9, 0.1]).unwrap();
        assert!((i_concurrence_pure(&skew) - 0.6).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_coefficients() {
        assert!(PureBipartiteState::new(vec![0.7, 0.2]).is_err());
        assert!(PureBipartiteState::new(vec![1.2, -0.2]).is_err());
        assert!(PureBipartiteState::new(vec![1.0]).is_err());
        assert!(PureBipartiteState::two_qubit(1.5).is_err());
    }
}
