//! Single-qubit Pauli matrices and a few fixed two-qubit states.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use super::ComplexMatrix;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

pub fn identity() -> ComplexMatrix {
    ComplexMatrix::identity(2)
}

pub fn sigma_x() -> ComplexMatrix {
    ComplexMatrix::from_vec(2, 2, vec![ZERO, ONE, ONE, ZERO]).unwrap()
}

pub fn sigma_y() -> ComplexMatrix {
    ComplexMatrix::from_vec(2, 2, vec![ZERO, -I, I, ZERO]).unwrap()
}

pub fn sigma_z() -> ComplexMatrix {
    ComplexMatrix::from_vec(2, 2, vec![ONE, ZERO, ZERO, -ONE]).unwrap()
}

/// Amplitudes of (|00⟩ + sign·|11⟩)/√2.
pub fn phi_vector(sign: f64) -> Vec<Complex64> {
    let a = Complex64::new(FRAC_1_SQRT_2, 0.0);
    vec![a, ZERO, ZERO, a * sign]
}

/// |Φ⁺⟩⟨Φ⁺|.
pub fn phi_plus_projector() -> ComplexMatrix {
    ComplexMatrix::outer(&phi_vector(1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pauli_algebra() {
        let x = sigma_x();
        let y = sigma_y();
        let z = sigma_z();
        assert!((&x * &x).approx_eq(&identity(), 0.0));
        assert!((&y * &y).approx_eq(&identity(), 0.0));
        // XY = iZ
        assert!((&x * &y).approx_eq(&z.scale(I), 0.0));
    }
}
