//! Two-qubit entanglement witnesses and the entanglement threshold of the noisy channel.
//!
//! Both witnesses are multiples of `I − ϑ` with `ϑ = σx⊗σx − σy⊗σy + σz⊗σz`.
//! A negative expectation value certifies entanglement; a non-negative one is
//! inconclusive on its own. On the X-states produced by the channel, the
//! partial-transpose test turns a non-negative value into a separability
//! verdict, which is what [`audit_point`] reports.

use serde::Serialize;

use crate::entanglement::{concurrence_pure, ppt_entangled, wootters_concurrence, PureBipartiteState};
use crate::error::{Error, Result};
use crate::noise::{channel_coefficients, local_output, nonlocal_output, NoiseChannelParams};
use crate::qmath::{pauli, ComplexMatrix, DensityMatrix};

/// Expectation values below `-DETECTION_TOL` count as detection.
pub const DETECTION_TOL: f64 = 1e-12;

/// A 4×4 Hermitian observable with the convention `Tr(Wρ) < 0 ⇒ entangled`.
#[derive(Clone, Debug, PartialEq)]
pub struct WitnessOperator {
    name: String,
    matrix: ComplexMatrix,
}

impl WitnessOperator {
    pub fn new(name: impl Into<String>, matrix: ComplexMatrix) -> Result<Self> {
        if matrix.rows() != 4 || matrix.cols() != 4 {
            return Err(Error::DimensionMismatch {
                expected: 4,
                found: matrix.rows(),
            });
        }
        let deviation = matrix.hermiticity_deviation();
        if deviation > 1e-12 {
            return Err(Error::NotHermitian { deviation });
        }
        Ok(Self {
            name: name.into(),
            matrix,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }
}

/// `ϑ = σx⊗σx − σy⊗σy + σz⊗σz`.
pub fn pauli_correlator() -> ComplexMatrix {
    let xx = pauli::sigma_x().kron(&pauli::sigma_x());
    let yy = pauli::sigma_y().kron(&pauli::sigma_y());
    let zz = pauli::sigma_z().kron(&pauli::sigma_z());
    &(&xx - &yy) + &zz
}

fn scaled_witness(name: &str, scale: f64) -> WitnessOperator {
    let m = (&ComplexMatrix::identity(4) - &pauli_correlator()).scale_real(scale);
    WitnessOperator::new(name, m).expect("I - ϑ is a Hermitian 4x4 matrix")
}

/// `W₁ = (I − ϑ) / (2√3)`: diagonal `(0, 1/√3, 1/√3, 0)`, anti-diagonal corners `−1/√3`.
pub fn witness_w1() -> WitnessOperator {
    scaled_witness("W1", 1.0 / (2.0 * 3f64.sqrt()))
}

/// `W₂ = (I − ϑ) / 2 = √3·W₁`.
pub fn witness_w2() -> WitnessOperator {
    scaled_witness("W2", 0.5)
}

/// `Tr(W·ρ)`.
pub fn witness_expectation(w: &WitnessOperator, rho: &DensityMatrix) -> Result<f64> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: rho.dim(),
        });
    }
    let value = w.matrix.trace_product(rho.matrix())?;
    debug_assert!(value.im.abs() <= 1e-12, "imaginary residue {}", value.im);
    Ok(value.re)
}

pub fn detects(w: &WitnessOperator, rho: &DensityMatrix) -> Result<bool> {
    Ok(witness_expectation(w, rho)? < -DETECTION_TOL)
}

/// Concurrence an input state must exceed for the non-local output to stay entangled:
/// `(1 + c²) / (4c²)` on `1/√3 < c ≤ 1`.
pub fn critical_concurrence(c: f64) -> Result<f64> {
    let lower = 1.0 / 3f64.sqrt();
    if !(c > lower && c <= 1.0) {
        return Err(Error::domain(
            "c",
            c,
            format!("critical concurrence needs {lower:.6} < c <= 1"),
        ));
    }
    Ok((1.0 + c * c) / (4.0 * c * c))
}

/// Closed form of `Tr(W₁ρ₁₄)` at k = 2: `(−2/√3)(Q√(λ₁λ₂) − R)`.
pub fn nonlocal_w1_closed_form(s: &PureBipartiteState, p: &NoiseChannelParams) -> Result<f64> {
    Ok(-2.0 / 3f64.sqrt() * entanglement_margin(s, p)?)
}

/// `Tr(W₁ρ₁₃)` at k = 2 by direct contraction: `2d²/√3 = (1 − c²)/√3`.
pub fn local_w1_value(p: &NoiseChannelParams) -> f64 {
    2.0 * p.d() * p.d() / 3f64.sqrt()
}

/// `Q√(λ₁λ₂) − R`: positive exactly when the two-qubit non-local output is entangled.
pub fn entanglement_margin(s: &PureBipartiteState, p: &NoiseChannelParams) -> Result<f64> {
    if s.k() != 2 || p.k() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: s.k().max(p.k()),
        });
    }
    let co = channel_coefficients(p);
    let l = s.lambdas();
    Ok(co.q * (l[0] * l[1]).sqrt() - co.r)
}

/// Every verdict available for one output state.
#[derive(Clone, Debug, Serialize)]
pub struct StateVerdicts {
    pub w1_expectation: f64,
    pub w2_expectation: f64,
    pub witness_detects: bool,
    pub ppt_entangled: bool,
    pub min_pt_eigenvalue: f64,
    pub wootters_concurrence: f64,
}

impl StateVerdicts {
    pub fn evaluate(rho: &DensityMatrix) -> Result<Self> {
        let w1 = witness_w1();
        Ok(Self {
            w1_expectation: witness_expectation(&w1, rho)?,
            w2_expectation: witness_expectation(&witness_w2(), rho)?,
            witness_detects: detects(&w1, rho)?,
            ppt_entangled: ppt_entangled(rho, 2, 2)?,
            min_pt_eigenvalue: crate::entanglement::min_partial_transpose_eigenvalue(rho, 2, 2)?,
            wootters_concurrence: wootters_concurrence(rho)?,
        })
    }

    /// Separable per the partial-transpose test, which is exact for two qubits.
    pub fn separable(&self) -> bool {
        !self.ppt_entangled
    }
}

/// Local and non-local outputs at one `(λ₁, c)` with every verdict.
#[derive(Clone, Debug, Serialize)]
pub struct AuditPoint {
    pub lambda1: f64,
    pub c: f64,
    pub input_concurrence: f64,
    /// `None` when `c` is outside the domain of [`critical_concurrence`].
    pub critical_concurrence: Option<f64>,
    pub margin: f64,
    pub local: StateVerdicts,
    pub nonlocal: StateVerdicts,
}

pub fn audit_point(lambda1: f64, c: f64) -> Result<AuditPoint> {
    let s = PureBipartiteState::two_qubit(lambda1)?;
    let p = NoiseChannelParams::from_c(c, 2)?;
    Ok(AuditPoint {
        lambda1,
        c,
        input_concurrence: concurrence_pure(&s)?,
        critical_concurrence: critical_concurrence(c).ok(),
        margin: entanglement_margin(&s, &p)?,
        local: StateVerdicts::evaluate(&local_output(&s, &p)?)?,
        nonlocal: StateVerdicts::evaluate(&nonlocal_output(&s, &p)?)?,
    })
}
