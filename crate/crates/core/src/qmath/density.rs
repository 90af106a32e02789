use num_complex::Complex64;

use super::{hermitian_eigensystem, ComplexMatrix, DEFAULT_TOL};
use crate::error::{Error, Result};

/// A validated density operator: Hermitian, unit trace, positive semidefinite.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    /// Validates at [`DEFAULT_TOL`].
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        validate_density_matrix(matrix, DEFAULT_TOL)
    }

    /// `|ψ⟩⟨ψ|` for a normalized amplitude vector.
    pub fn from_pure(amplitudes: &[Complex64]) -> Result<Self> {
        Self::new(ComplexMatrix::outer(amplitudes))
    }

    /// `I/n`.
    pub fn maximally_mixed(n: usize) -> Self {
        Self {
            matrix: ComplexMatrix::identity(n).scale_real(1.0 / n as f64),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn purity(&self) -> f64 {
        self.matrix
            .trace_product(&self.matrix)
            .map(|z| z.re)
            .unwrap_or(f64::NAN)
    }
}

impl std::ops::Index<(usize, usize)> for DensityMatrix {
    type Output = Complex64;

    fn index(&self, idx: (usize, usize)) -> &Complex64 {
        &self.matrix[idx]
    }
}

impl AsRef<ComplexMatrix> for DensityMatrix {
    fn as_ref(&self) -> &ComplexMatrix {
        &self.matrix
    }
}

/// Checks hermiticity, then trace, then positivity, reporting the first violation.
pub fn validate_density_matrix(m: ComplexMatrix, tol: f64) -> Result<DensityMatrix> {
    m.ensure_square()?;
    let deviation = m.hermiticity_deviation();
    if deviation > tol {
        return Err(Error::NotHermitian { deviation });
    }
    let trace = m.trace();
    let trace_dev = (trace - Complex64::new(1.0, 0.0)).norm();
    if trace_dev > tol {
        return Err(Error::TraceNotOne {
            trace: trace.re,
            deviation: trace_dev,
        });
    }
    let min_eigenvalue = hermitian_eigensystem(&m)?.min();
    if min_eigenvalue < -tol {
        return Err(Error::NotPositive { min_eigenvalue });
    }
    Ok(DensityMatrix { matrix: m })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmath::pauli;

    #[test]
    fn maximally_mixed_qubit_is_valid() {
        let m = ComplexMatrix::identity(2).scale_real(0.5);
        assert!(validate_density_matrix(m, DEFAULT_TOL).is_ok());
    }

    #[test]
    fn werner_operating_point_is_valid() {
        let m = ComplexMatrix::from_real_rows(&[
            [13.0 / 36.0, 0.0, 0.0, 4.0 / 18.0],
            [0.0, 5.0 / 36.0, 0.0, 0.0],
            [0.0, 0.0, 5.0 / 36.0, 0.0],
            [4.0 / 18.0, 0.0, 0.0, 13.0 / 36.0],
        ]);
        assert!(validate_density_matrix(m, DEFAULT_TOL).is_ok());
    }

    #[test]
    fn overshooting_sigma_x_weight_is_not_positive() {
        let m = &pauli::identity() + &pauli::sigma_x().scale_real(9.0 / 4.0);
        match validate_density_matrix(m.scale_real(0.5), DEFAULT_TOL) {
            Err(Error::NotPositive { min_eigenvalue }) => {
                assert!((min_eigenvalue + 0.625).abs() < 1e-12)
            }
            other => panic!("expected positivity error, got {other:?}"),
        }
    }

    #[test]
    fn reports_trace_and_hermiticity() {
        let m = ComplexMatrix::identity(2);
        assert!(matches!(
            validate_density_matrix(m, DEFAULT_TOL),
            Err(Error::TraceNotOne { .. })
        ));
        let m = ComplexMatrix::from_real_rows(&[[0.5, 0.1], [0.0, 0.5]]);
        match validate_density_matrix(m, DEFAULT_TOL) {
            Err(Error::NotHermitian { deviation }) => assert!((deviation - 0.1).abs() < 1e-15),
            other => panic!("{other:?}"),
        }
    }
}
