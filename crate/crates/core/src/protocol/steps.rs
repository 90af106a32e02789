use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;
use serde::Serialize;

use super::{BinaryMeasurement, RandomSource};
use crate::entanglement::StateVector;
use crate::error::{Error, Result};
use crate::noise::{apply_channel_to_vector, reduce_pair, NoiseChannelParams, Party};
use crate::qmath::{partial_trace, pauli, ComplexMatrix, DensityMatrix, SubsystemLayout};

const BORN_TOL: f64 = 1e-12;

/// Two-qubit state shared by Alice and Bob, together with the bit it encodes.
#[derive(Clone, Debug, PartialEq)]
pub struct SharedState {
    secret_bit: u8,
    rho: DensityMatrix,
}

impl SharedState {
    pub fn secret_bit(&self) -> u8 {
        self.secret_bit
    }

    pub fn rho(&self) -> &DensityMatrix {
        &self.rho
    }
}

fn check_bit(name: &'static str, bit: u8) -> Result<()> {
    if bit > 1 {
        return Err(Error::domain(name, bit as f64, "must be 0 or 1"));
    }
    Ok(())
}

/// Charlie's encoding: bit 0 (head) prepares `|φ⁺⟩`, bit 1 (tail) prepares `|φ⁻⟩`.
///
/// Both qubits go through the noisy channel and the state returned is the
/// (system 1, environment 4) pair, i.e. the non-local output.
pub fn prepare_shared_state(secret_bit: u8, p: &NoiseChannelParams) -> Result<SharedState> {
    check_bit("secret_bit", secret_bit)?;
    if p.k() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: p.k(),
        });
    }
    let sign = if secret_bit == 0 { 1.0 } else { -1.0 };
    let input = StateVector::new(pauli::phi_vector(sign))?;
    let four_party = apply_channel_to_vector(&input, p)?;
    let rho = reduce_pair(&four_party, 2, Party::System1, Party::Env4)?;
    Ok(SharedState { secret_bit, rho })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Participant {
    Alice,
    Bob,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MeasurementOutcome {
    pub party: Participant,
    pub basis: String,
    pub outcome_bit: u8,
    pub probability: f64,
}

/// Hadamard-basis vector: outcome 0 is `(|0⟩+|1⟩)/√2`, outcome 1 is `(|0⟩−|1⟩)/√2`.
fn hadamard_vector(outcome: u8) -> [Complex64; 2] {
    let a = Complex64::new(FRAC_1_SQRT_2, 0.0);
    if outcome == 0 {
        [a, a]
    } else {
        [a, -a]
    }
}

/// Born probability of Alice's Hadamard outcome and Bob's normalized post-measurement state.
pub fn alice_conditional(s: &SharedState, outcome: u8) -> Result<(f64, DensityMatrix)> {
    check_bit("outcome", outcome)?;
    let projector = ComplexMatrix::outer(&hadamard_vector(outcome)).kron(&ComplexMatrix::identity(2));
    let collapsed = &(&projector * s.rho.matrix()) * &projector;
    let bob = partial_trace(&collapsed, &SubsystemLayout::qubits(2), &[1])?;
    let probability = bob.trace().re;
    // The shared states have maximally mixed marginals, so each outcome has probability ½.
    assert!(
        (probability - 0.5).abs() <= BORN_TOL,
        "Alice's outcome probability {probability} differs from 1/2"
    );
    Ok((probability, DensityMatrix::new(bob.scale_real(1.0 / probability))?))
}

/// Alice measures her qubit in the Hadamard basis.
pub fn alice_measure(s: &SharedState, rng: &mut RandomSource) -> Result<(MeasurementOutcome, DensityMatrix)> {
    let (p0, post0) = alice_conditional(s, 0)?;
    let outcome_bit = rng.sample_binary(p0);
    let (probability, post) = if outcome_bit == 0 {
        (p0, post0)
    } else {
        alice_conditional(s, 1)?
    };
    Ok((
        MeasurementOutcome {
            party: Participant::Alice,
            basis: "hadamard".into(),
            outcome_bit,
            probability,
        },
        post,
    ))
}

/// Alice's announcement: `(|0⟩+|1⟩)/√2` is sent as 0, `(|0⟩−|1⟩)/√2` as 1.
pub fn announce(alice_outcome: u8) -> u8 {
    alice_outcome
}

/// Bob's measurement result and his guess of the secret bit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BobDecode {
    pub outcome: u8,
    pub guess: u8,
}

/// Bob measures his qubit and combines the result with Alice's classical bit.
///
/// Outcome 0 corresponds to the `+σx` effect. The guess is the outcome when
/// the classical bit is 0 and its complement when it is 1, because Alice's `−`
/// outcome flips the sign of Bob's coherence.
pub fn bob_decode(
    conditional: &DensityMatrix,
    classical_bit: u8,
    m: &BinaryMeasurement,
    rng: &mut RandomSource,
) -> Result<BobDecode> {
    check_bit("classical_bit", classical_bit)?;
    if !m.is_valid() {
        return Err(Error::InvalidMeasurement {
            min_eigenvalue: m.min_eigenvalue(),
        });
    }
    let outcome = rng.sample_binary(m.probability0(conditional)?);
    Ok(BobDecode {
        outcome,
        guess: outcome ^ classical_bit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::protocol::{helstrom_measurement, rescaled_povm};

    fn operating_point() -> NoiseChannelParams {
        NoiseChannelParams::from_c((2.0f64 / 3.0).sqrt(), 2).unwrap()
    }

    fn bob_state(q: f64) -> ComplexMatrix {
        (&ComplexMatrix::identity(2) + &pauli::sigma_x().scale_real(q)).scale_real(0.5)
    }

    #[test]
    fn head_gives_werner_point() {
        let s = prepare_shared_state(0, &operating_point()).unwrap();
        let expected = ComplexMatrix::from_real_rows(&[
            [13.0 / 36.0, 0.0, 0.0, 4.0 / 18.0],
            [0.0, 5.0 / 36.0, 0.0, 0.0],
            [0.0, 0.0, 5.0 / 36.0, 0.0],
            [4.0 / 18.0, 0.0, 0.0, 13.0 / 36.0],
        ]);
        assert!(s.rho().matrix().approx_eq(&expected, 1e-12));
    }

    #[test]
    fn tail_flips_corners() {
        let s = prepare_shared_state(1, &operating_point()).unwrap();
        assert!((s.rho()[(0, 3)].re + 2.0 / 9.0).abs() < 1e-12);
        assert!((s.rho()[(3, 0)].re + 2.0 / 9.0).abs() < 1e-12);
        assert!((s.rho()[(0, 0)].re - 13.0 / 36.0).abs() < 1e-12);
    }

    #[test]
    fn noiseless_channel_is_degenerate() {
        let p = NoiseChannelParams::from_c(1.0, 2).unwrap();
        let s = prepare_shared_state(0, &p).unwrap();
        assert!(s
            .rho()
            .matrix()
            .approx_eq(&ComplexMatrix::diagonal(&[0.5, 0.0, 0.0, 0.5]), 1e-15));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(prepare_shared_state(2, &operating_point()).is_err());
        let p3 = NoiseChannelParams::from_c(0.9, 3).unwrap();
        assert!(prepare_shared_state(0, &p3).is_err());
    }

    #[test]
    fn conditional_sign_table() {
        let q = 4.0 / 9.0;
        let plus = prepare_shared_state(0, &operating_point()).unwrap();
        let minus = prepare_shared_state(1, &operating_point()).unwrap();
        let cases = [(&plus, 0, q), (&plus, 1, -q), (&minus, 0, -q), (&minus, 1, q)];
        for (state, outcome, coherence) in cases {
            let (p, bob) = alice_conditional(state, outcome).unwrap();
            assert!((p - 0.5).abs() < 1e-12);
            assert!(bob.matrix().approx_eq(&bob_state(coherence), 1e-12));
        }
    }

    #[test]
    fn decode_noiseless_limit_is_certain() {
        let rho = DensityMatrix::new(bob_state(1.0)).unwrap();
        let m = BinaryMeasurement::sigma_x();
        let mut rng = RandomSource::new(3, 0);
        for _ in 0..200 {
            assert_eq!(bob_decode(&rho, 0, &m, &mut rng).unwrap().guess, 0);
            assert_eq!(bob_decode(&rho, 1, &m, &mut rng).unwrap().guess, 1);
        }
    }

    #[test]
    fn decode_rejects_rescaled_povm() {
        let rho = DensityMatrix::new(bob_state(4.0 / 9.0)).unwrap();
        let m = rescaled_povm(4.0 / 9.0).unwrap();
        let mut rng = RandomSource::new(3, 0);
        assert!(matches!(
            bob_decode(&rho, 0, &m, &mut rng),
            Err(Error::InvalidMeasurement { .. })
        ));
    }

    #[test]
    fn decode_probability_matches_born_rule() {
        let q = 4.0 / 9.0;
        let plus = DensityMatrix::new(bob_state(q)).unwrap();
        let minus = DensityMatrix::new(bob_state(-q)).unwrap();
        let (m, success) = helstrom_measurement(&plus, &minus).unwrap();
        assert!((m.probability0(&plus).unwrap() - 13.0 / 18.0).abs() < 1e-12);
        assert!((success - 13.0 / 18.0).abs() < 1e-12);
        let mixed = DensityMatrix::maximally_mixed(2);
        assert!((BinaryMeasurement::sigma_x().probability0(&mixed).unwrap() - 0.5).abs() < 1e-15);
    }
}
