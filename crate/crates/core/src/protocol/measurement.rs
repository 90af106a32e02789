use crate::error::{Error, Result};
use crate::qmath::{hermitian_eigensystem, pauli, trace_norm, ComplexMatrix, DensityMatrix, DEFAULT_TOL};

const COMPLETENESS_TOL: f64 = 1e-12;

/// A two-outcome measurement on a qubit.
///
/// Completeness (`effect0 + effect1 = I`) is required at construction;
/// positivity is recorded in [`BinaryMeasurement::is_valid`] so that
/// non-physical operator pairs can still be inspected.
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryMeasurement {
    effect0: ComplexMatrix,
    effect1: ComplexMatrix,
    min_eigenvalue: f64,
    valid: bool,
}

impl BinaryMeasurement {
    pub fn new(effect0: ComplexMatrix, effect1: ComplexMatrix) -> Result<Self> {
        for e in [&effect0, &effect1] {
            if e.rows() != 2 || e.cols() != 2 {
                return Err(Error::DimensionMismatch {
                    expected: 2,
                    found: e.rows(),
                });
            }
        }
        let sum = &effect0 + &effect1;
        let gap = sum.max_abs_diff(&ComplexMatrix::identity(2));
        if gap > COMPLETENESS_TOL {
            return Err(Error::domain(
                "effect0 + effect1 - I",
                gap,
                "effects must sum to the identity",
            ));
        }
        let min_eigenvalue = hermitian_eigensystem(&effect0)?
            .min()
            .min(hermitian_eigensystem(&effect1)?.min());
        Ok(Self {
            effect0,
            effect1,
            min_eigenvalue,
            valid: min_eigenvalue >= -DEFAULT_TOL,
        })
    }

    /// Projective measurement of σx; outcome 0 is the `+1` eigenspace.
    pub fn sigma_x() -> Self {
        let half_x = pauli::sigma_x().scale_real(0.5);
        let half_i = ComplexMatrix::identity(2).scale_real(0.5);
        Self::new(&half_i + &half_x, &half_i - &half_x).expect("σx projectors are complete")
    }

    pub fn effect0(&self) -> &ComplexMatrix {
        &self.effect0
    }

    pub fn effect1(&self) -> &ComplexMatrix {
        &self.effect1
    }

    /// Smallest eigenvalue over both effects.
    pub fn min_eigenvalue(&self) -> f64 {
        self.min_eigenvalue
    }

    pub fn is_valid(&self) -> bool {
        self.valid
    }

    /// Born probability of outcome 0, clamped to `[0, 1]`.
    pub fn probability0(&self, rho: &DensityMatrix) -> Result<f64> {
        if !self.valid {
            return Err(Error::InvalidMeasurement {
                min_eigenvalue: self.min_eigenvalue,
            });
        }
        Ok(self.effect0.trace_product(rho.matrix())?.re.clamp(0.0, 1.0))
    }
}

/// The pair `½(I ± σx/Q)` proposed for discriminating `½(I ± Qσx)`.
///
/// Its eigenvalues are `½(1 ± 1/Q)`, so it is a valid POVM only at `Q = 1`.
pub fn rescaled_povm(q: f64) -> Result<BinaryMeasurement> {
    if q == 0.0 {
        return Err(Error::Degenerate("1/Q is undefined at Q = 0".into()));
    }
    if !(q.is_finite() && q > 0.0) {
        return Err(Error::domain("Q", q, "must be positive"));
    }
    let half_i = ComplexMatrix::identity(2).scale_real(0.5);
    let x = pauli::sigma_x().scale_real(0.5 / q);
    BinaryMeasurement::new(&half_i + &x, &half_i - &x)
}

/// Optimal measurement for telling `rho0` from `rho1` at equal priors.
///
/// Effect 0 projects onto the positive eigenspace of `rho0 − rho1`; the success
/// probability is `½ + ¼‖rho0 − rho1‖₁`.
pub fn helstrom_measurement(rho0: &DensityMatrix, rho1: &DensityMatrix) -> Result<(BinaryMeasurement, f64)> {
    if rho0.dim() != 2 || rho1.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: rho0.dim().max(rho1.dim()),
        });
    }
    let diff = rho0.matrix() - rho1.matrix();
    let es = hermitian_eigensystem(&diff)?;
    let effect0 = es.map_values(|x| if x > DEFAULT_TOL { 1.0 } else { 0.0 });
    let effect1 = &ComplexMatrix::identity(2) - &effect0;
    let success = 0.5 + 0.25 * trace_norm(&diff)?;
    Ok((BinaryMeasurement::new(effect0, effect1)?, success))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bob_state(q: f64) -> DensityMatrix {
        let m = &ComplexMatrix::identity(2) + &pauli::sigma_x().scale_real(q);
        DensityMatrix::new(m.scale_real(0.5)).unwrap()
    }

    #[test]
    fn rescaled_povm_projective_at_unit_q() {
        let m = rescaled_povm(1.0).unwrap();
        assert!(m.is_valid());
        assert_eq!(m, BinaryMeasurement::sigma_x());
    }

    #[test]
    fn rescaled_povm_not_positive_below_unit_q() {
        let m = rescaled_povm(4.0 / 9.0).unwrap();
        assert!(!m.is_valid());
        assert!((m.min_eigenvalue() + 0.625).abs() < 1e-12);
        let m = rescaled_povm(0.5).unwrap();
        assert!(!m.is_valid());
        assert!((m.min_eigenvalue() + 0.5).abs() < 1e-12);
        assert!(m.probability0(&bob_state(0.5)).is_err());
    }

    #[test]
    fn rescaled_povm_degenerate() {
        assert!(matches!(rescaled_povm(0.0), Err(Error::Degenerate(_))));
        assert!(rescaled_povm(-0.1).is_err());
    }

    #[test]
    fn incomplete_pair_rejected() {
        assert!(BinaryMeasurement::new(ComplexMatrix::identity(2), ComplexMatrix::identity(2)).is_err());
    }

    #[test]
    fn helstrom_identical_states() {
        let rho = bob_state(0.3);
        let (m, p) = helstrom_measurement(&rho, &rho).unwrap();
        assert!((p - 0.5).abs() < 1e-15);
        assert!(m.is_valid());
    }

    #[test]
    fn helstrom_orthogonal_states() {
        let zero = DensityMatrix::new(ComplexMatrix::diagonal(&[1.0, 0.0])).unwrap();
        let one = DensityMatrix::new(ComplexMatrix::diagonal(&[0.0, 1.0])).unwrap();
        let (m, p) = helstrom_measurement(&zero, &one).unwrap();
        assert!((p - 1.0).abs() < 1e-15);
        assert!(m.effect0().approx_eq(&ComplexMatrix::diagonal(&[1.0, 0.0]), 1e-15));
    }

    #[test]
    fn helstrom_on_bob_states() {
        let q = 4.0 / 9.0;
        let (m, p) = helstrom_measurement(&bob_state(q), &bob_state(-q)).unwrap();
        assert!((p - 13.0 / 18.0).abs() < 1e-12);
        assert!(m.effect0().approx_eq(BinaryMeasurement::sigma_x().effect0(), 1e-12));
        assert!(m.effect1().approx_eq(BinaryMeasurement::sigma_x().effect1(), 1e-12));
    }
}
