use crate::error::{Error, Result};
use crate::qmath::{hermitian_eigensystem, partial_transpose, pauli, singular_values, DensityMatrix, SubsystemLayout};

/// Partial-transpose eigenvalues below `-PPT_TOL` certify entanglement.
pub const PPT_TOL: f64 = 1e-12;

/// Two-qubit mixed-state concurrence `max(0, μ₁ − μ₂ − μ₃ − μ₄)`.
///
/// The μᵢ are the descending square roots of the eigenvalues of `ρ·ρ̃` with
/// `ρ̃ = (σy⊗σy) ρ* (σy⊗σy)`. Since `√ρ ρ̃ √ρ = A·A†` for
/// `A = √ρ (σy⊗σy) conj(√ρ)`, they are the singular values of `A`.
pub fn wootters_concurrence(rho: &DensityMatrix) -> Result<f64> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: rho.dim(),
        });
    }
    let yy = pauli::sigma_y().kron(&pauli::sigma_y());
    let es = hermitian_eigensystem(rho.matrix())?;
    // eigenvalues at round-off level are zero; their square roots would not be
    let floor = 64.0 * f64::EPSILON * es.values[0].abs();
    let root = es.map_values(|x| if x > floor { x.sqrt() } else { 0.0 });
    let a = &(&root * &yy) * &root.conj();
    let mu = singular_values(&a)?;
    Ok((mu[0] - mu[1] - mu[2] - mu[3]).clamp(0.0, 1.0))
}

/// Smallest eigenvalue of the partial transpose on the second subsystem.
pub fn min_partial_transpose_eigenvalue(rho: &DensityMatrix, dim_a: usize, dim_b: usize) -> Result<f64> {
    if dim_a * dim_b != rho.dim() {
        return Err(Error::DimensionMismatch {
            expected: dim_a * dim_b,
            found: rho.dim(),
        });
    }
    let layout = SubsystemLayout::new(vec![dim_a, dim_b])?;
    let pt = partial_transpose(rho.matrix(), &layout, 1)?;
    Ok(hermitian_eigensystem(&pt)?.min())
}

/// Peres–Horodecki test: a negative partial-transpose eigenvalue certifies entanglement.
///
/// Necessary and sufficient for 2×2 and 2×3; only sufficient for entanglement beyond that.
pub fn ppt_entangled(rho: &DensityMatrix, dim_a: usize, dim_b: usize) -> Result<bool> {
    Ok(min_partial_transpose_eigenvalue(rho, dim_a, dim_b)? < -PPT_TOL)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmath::ComplexMatrix;

    fn werner_point() -> DensityMatrix {
        DensityMatrix::new(ComplexMatrix::from_real_rows(&[
            [13.0 / 36.0, 0.0, 0.0, 4.0 / 18.0],
            [0.0, 5.0 / 36.0, 0.0, 0.0],
            [0.0, 0.0, 5.0 / 36.0, 0.0],
            [4.0 / 18.0, 0.0, 0.0, 13.0 / 36.0],
        ]))
        .unwrap()
    }

    #[test]
    fn bell_state_is_maximal() {
        let bell = DensityMatrix::new(pauli::phi_plus_projector()).unwrap();
        assert!((wootters_concurrence(&bell).unwrap() - 1.0).abs() < 1e-12);
        assert!(ppt_entangled(&bell, 2, 2).unwrap());
    }

    #[test]
    fn maximally_mixed_is_separable() {
        let mixed = DensityMatrix::maximally_mixed(4);
        assert_eq!(wootters_concurrence(&mixed).unwrap(), 0.0);
        assert!(!ppt_entangled(&mixed, 2, 2).unwrap());
    }

    #[test]
    fn werner_point_concurrence_is_one_sixth() {
        let rho = werner_point();
        // X-state closed form: 2·max(0, |ρ₀₃| − √(ρ₁₁ρ₂₂)) = 2(2/9 − 5/36)
        assert!((wootters_concurrence(&rho).unwrap() - 1.0 / 6.0).abs() < 1e-12);
        assert!(ppt_entangled(&rho, 2, 2).unwrap());
        // partial transpose eigenvalues are 13/36 (×2), 5/36 ± 2/9
        let min = min_partial_transpose_eigenvalue(&rho, 2, 2).unwrap();
        assert!((min - (5.0 / 36.0 - 2.0 / 9.0)).abs() < 1e-14);
    }

    #[test]
    fn product_state_is_separable() {
        let a = ComplexMatrix::from_real_rows(&[[0.6, 0.3], [0.3, 0.4]]);
        let b = ComplexMatrix::from_real_rows(&[[0.2, -0.1], [-0.1, 0.8]]);
        let rho = DensityMatrix::new(a.kron(&b)).unwrap();
        assert!(!ppt_entangled(&rho, 2, 2).unwrap());
        assert!(wootters_concurrence(&rho).unwrap() < 1e-12);
    }

    #[test]
    fn dimension_errors() {
        let rho = DensityMatrix::maximally_mixed(2);
        assert!(wootters_concurrence(&rho).is_err());
        assert!(ppt_entangled(&rho, 2, 2).is_err());
    }
}
