//! The symmetric cloning-type noisy environment.
//!
//! A particle in level `|i⟩` meets an environment qudit in `|0⟩` and an ancilla,
//! and leaves as
//!
//! ```text
//! |i⟩|0⟩|M⟩ → c·|i⟩|i⟩|Xᵢ⟩ + d·Σ_{j≠i} (|i⟩|j⟩ + |j⟩|i⟩)|Xⱼ⟩,   c² + 2(k−1)d² = 1
//! ```
//!
//! with orthonormal ancilla states `|Xⱼ⟩`. Both halves of a bipartite pure state
//! pass through independent copies of this map. After the ancillas are traced
//! out, four qudits remain, stored in the fixed tensor order
//!
//! | slot | party |
//! |------|-------|
//! | 0 | system 1 (sent to Alice) |
//! | 1 | environment 3 (interacts with system 1) |
//! | 2 | system 2 (sent to Bob) |
//! | 3 | environment 4 (interacts with system 2) |
//!
//! The *local* outputs pair a system with its own environment (ρ₁₃, ρ₂₄); the
//! *non-local* outputs pair a system with the other particle's environment
//! (ρ₁₄, ρ₂₃).

use num_complex::Complex64;
use serde::Serialize;

use crate::entanglement::{PureBipartiteState, StateVector};
use crate::error::{Error, Result};
use crate::qmath::{partial_trace, permute_subsystems, ComplexMatrix, DensityMatrix, SubsystemLayout};

/// Largest local dimension for which the four-party state is built (256×256 at k = 4).
pub const MAX_K: usize = 4;
const UNITARITY_TOL: f64 = 1e-12;

/// One of the four qudits left after tracing out the ancillas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Party {
    System1,
    Env3,
    System2,
    Env4,
}

impl Party {
    pub const ALL: [Party; 4] = [Party::System1, Party::Env3, Party::System2, Party::Env4];

    pub fn slot(self) -> usize {
        match self {
            Party::System1 => 0,
            Party::Env3 => 1,
            Party::System2 => 2,
            Party::Env4 => 3,
        }
    }
}

/// Channel amplitudes `(c, d)` for local dimension `k`, with `c² + 2(k−1)d² = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct NoiseChannelParams {
    k: usize,
    c: f64,
    d: f64,
}

impl NoiseChannelParams {
    /// Solves the unitarity constraint for `d ≥ 0`.
    pub fn from_c(c: f64, k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::domain("k", k as f64, "local dimension must be at least 2"));
        }
        if !(0.0..=1.0).contains(&c) {
            return Err(Error::domain("c", c, "must lie in [0, 1]"));
        }
        let d = ((1.0 - c * c) / (2.0 * (k - 1) as f64)).max(0.0).sqrt();
        Ok(Self { k, c, d })
    }

    /// Explicit `(c, d)`; rejected unless the pair satisfies the unitarity constraint within 1e-12.
    pub fn new(c: f64, d: f64, k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::domain("k", k as f64, "local dimension must be at least 2"));
        }
        if !(0.0..=1.0).contains(&c) {
            return Err(Error::domain("c", c, "must lie in [0, 1]"));
        }
        if d.is_nan() || d < 0.0 {
            return Err(Error::domain("d", d, "must be non-negative"));
        }
        let norm = c * c + 2.0 * (k - 1) as f64 * d * d;
        if (norm - 1.0).abs() > UNITARITY_TOL {
            return Err(Error::domain("c^2 + 2(k-1)d^2", norm, "channel is not unitary"));
        }
        Ok(Self { k, c, d })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn d(&self) -> f64 {
        self.d
    }
}

/// Closed-form coefficients of the non-local output.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ChannelCoefficients {
    pub p: f64,
    pub q: f64,
    pub r: f64,
    pub s: f64,
}

/// `P = (c² + (k−1)d²)²`, `Q = d²(4c² + 4cd(k−2) + (k−2)d²)`, `R = d²(c² + (k−1)d²)`, `S = d⁴`.
///
/// At k = 2 these reduce to `P = (c²+d²)²`, `Q = 4c²d²`, `R = d²(c²+d²)`, `S = d⁴`.
/// The brute-force reduction confirms the whole set for k ≤ 3; see
/// [`nonlocal_closed_form_audit`] for larger k.
pub fn channel_coefficients(p: &NoiseChannelParams) -> ChannelCoefficients {
    let (c, d) = (p.c, p.d);
    let km1 = (p.k - 1) as f64;
    let km2 = p.k as f64 - 2.0;
    let diag = c * c + km1 * d * d;
    ChannelCoefficients {
        p: diag * diag,
        q: d * d * (4.0 * c * c + 4.0 * c * d * km2 + km2 * d * d),
        r: d * d * diag,
        s: d.powi(4),
    }
}

/// The channel as an isometry acting on one particle: `out[(a·k + e)·k + x]` is the
/// amplitude of `|a⟩_system |e⟩_env |X_x⟩_ancilla` for input level `i`.
fn channel_image(p: &NoiseChannelParams, i: usize) -> Vec<f64> {
    let k = p.k;
    let idx = |a: usize, e: usize, x: usize| (a * k + e) * k + x;
    let mut out = vec![0.0; k * k * k];
    out[idx(i, i, i)] = p.c;
    for j in (0..k).filter(|&j| j != i) {
        out[idx(i, j, j)] += p.d;
        out[idx(j, i, j)] += p.d;
    }
    out
}

/// Runs both halves of an arbitrary k×k pure state through the channel, traces out
/// both ancillas and returns the four-party state in slot order (1, 3, 2, 4).
///
/// The result is renormalized; the pre-normalization trace is logged at debug level.
pub fn apply_channel_to_vector(v: &StateVector, p: &NoiseChannelParams) -> Result<DensityMatrix> {
    let k = p.k;
    if k > MAX_K {
        return Err(Error::SizeGuard { k, max: MAX_K });
    }
    if v.dim() != k * k {
        return Err(Error::DimensionMismatch {
            expected: k * k,
            found: v.dim(),
        });
    }
    let images: Vec<Vec<f64>> = (0..k).map(|i| channel_image(p, i)).collect();
    let k2 = k * k;
    let n = k2 * k2;

    // branch[x1·k + x2] is the (1,3,2,4) state conditioned on ancilla outcomes (x1, x2)
    let mut branches = vec![vec![Complex64::new(0.0, 0.0); n]; k2];
    for i1 in 0..k {
        for i2 in 0..k {
            let amp = v.amplitudes()[i1 * k + i2];
            if amp.norm_sqr() == 0.0 {
                continue;
            }
            let (u1, u2) = (&images[i1], &images[i2]);
            for se1 in 0..k2 {
                for x1 in 0..k {
                    let w1 = u1[se1 * k + x1];
                    if w1 == 0.0 {
                        continue;
                    }
                    for se2 in 0..k2 {
                        for x2 in 0..k {
                            let w2 = u2[se2 * k + x2];
                            if w2 != 0.0 {
                                branches[x1 * k + x2][se1 * k2 + se2] += amp * (w1 * w2);
                            }
                        }
                    }
                }
            }
        }
    }

    let mut rho = ComplexMatrix::zeros(n, n);
    for branch in &branches {
        let support: Vec<usize> = (0..n).filter(|&r| branch[r].norm_sqr() != 0.0).collect();
        for &r in &support {
            for &s in &support {
                rho[(r, s)] += branch[r] * branch[s].conj();
            }
        }
    }
    let trace = rho.trace().re;
    log::debug!(
        "four-party output trace before normalization: {trace:.17} (k = {k}, c = {})",
        p.c
    );
    DensityMatrix::new(rho.scale_real(1.0 / trace))
}

/// [`apply_channel_to_vector`] on a Schmidt-form input.
pub fn apply_channel_full(s: &PureBipartiteState, p: &NoiseChannelParams) -> Result<DensityMatrix> {
    check_k(s, p)?;
    apply_channel_to_vector(&s.to_state_vector(), p)
}

/// Two-party reduction of a four-party output, with the factors in the order `(first, second)`.
pub fn reduce_pair(four_party: &DensityMatrix, k: usize, first: Party, second: Party) -> Result<DensityMatrix> {
    if first == second {
        return Err(Error::domain("pair", first.slot() as f64, "parties must differ"));
    }
    let layout = SubsystemLayout::new(vec![k; 4])?;
    let reduced = partial_trace(four_party.matrix(), &layout, &[first.slot(), second.slot()])?;
    let reduced = if first.slot() > second.slot() {
        permute_subsystems(&reduced, &SubsystemLayout::new(vec![k, k])?, &[1, 0])?
    } else {
        reduced
    };
    DensityMatrix::new(reduced)
}

fn check_k(s: &PureBipartiteState, p: &NoiseChannelParams) -> Result<()> {
    if s.k() != p.k {
        return Err(Error::DimensionMismatch {
            expected: p.k,
            found: s.k(),
        });
    }
    Ok(())
}

/// Local output `ρ₁₃ = ρ₂₄ = c² Σᵢ λᵢ|ii⟩⟨ii| + d² Σ_{i≠j} λᵢ (|ij⟩+|ji⟩)(⟨ij|+⟨ji|)`.
pub fn local_output(s: &PureBipartiteState, p: &NoiseChannelParams) -> Result<DensityMatrix> {
    check_k(s, p)?;
    let k = p.k;
    let idx = |a: usize, b: usize| a * k + b;
    let (c2, d2) = (p.c * p.c, p.d * p.d);
    let mut m = ComplexMatrix::zeros(k * k, k * k);
    for (i, &l) in s.lambdas().iter().enumerate() {
        m[(idx(i, i), idx(i, i))] += c2 * l;
        for j in (0..k).filter(|&j| j != i) {
            let w = Complex64::new(d2 * l, 0.0);
            for a in [idx(i, j), idx(j, i)] {
                for b in [idx(i, j), idx(j, i)] {
                    m[(a, b)] += w;
                }
            }
        }
    }
    DensityMatrix::new(m)
}

/// Closed-form non-local output matrix before validation.
///
/// `P Σᵢ λᵢ|ii⟩⟨ii| + Q Σ_{i≠j} √(λᵢλⱼ)|ii⟩⟨jj| + R Σ_{i≠j} λᵢ(|ij⟩⟨ij| + |ji⟩⟨ji|) + S Σᵢ Σ_{j,l≠i} λᵢ|jl⟩⟨jl|`
pub fn nonlocal_closed_form(s: &PureBipartiteState, p: &NoiseChannelParams) -> Result<ComplexMatrix> {
    check_k(s, p)?;
    let k = p.k;
    let co = channel_coefficients(p);
    let idx = |a: usize, b: usize| a * k + b;
    let l = s.lambdas();
    let mut m = ComplexMatrix::zeros(k * k, k * k);
    for i in 0..k {
        m[(idx(i, i), idx(i, i))] += co.p * l[i];
        for j in (0..k).filter(|&j| j != i) {
            m[(idx(i, i), idx(j, j))] += co.q * (l[i] * l[j]).sqrt();
            m[(idx(i, j), idx(i, j))] += co.r * l[i];
            m[(idx(j, i), idx(j, i))] += co.r * l[i];
            for q in (0..k).filter(|&q| q != i) {
                m[(idx(j, q), idx(j, q))] += co.s * l[i];
            }
        }
    }
    Ok(m)
}

/// Non-local output `ρ₁₄ = ρ₂₃` from the closed form.
///
/// At k = 2 this is the X-state with diagonal `(Pλ₁+Sλ₂, R, R, Pλ₂+Sλ₁)` and
/// corners `Q√(λ₁λ₂)`. For k ≥ 4 the closed form departs from the exact channel
/// output (see [`nonlocal_closed_form_audit`]); use [`apply_channel_full`] with
/// [`reduce_pair`] when the exact state is needed.
pub fn nonlocal_output(s: &PureBipartiteState, p: &NoiseChannelParams) -> Result<DensityMatrix> {
    DensityMatrix::new(nonlocal_closed_form(s, p)?)
}

/// Comparison of the closed-form non-local output with the brute-force channel reduction.
#[derive(Clone, Debug, Serialize)]
pub struct ClosedFormAudit {
    pub k: usize,
    pub c: f64,
    /// Largest entrywise gap between closed form and ρ₁₄ from the channel.
    pub max_entry_deviation: f64,
    /// Largest entrywise gap between ρ₁₄ and ρ₂₃, both from the channel.
    pub nonlocal_pair_deviation: f64,
    /// Coherence coefficient `⟨00|ρ₁₄|11⟩ / √(λ₁λ₂)` measured on the channel output.
    pub q_measured: f64,
    /// Coefficient `Q` of [`channel_coefficients`].
    pub q_closed_form: f64,
}

/// Measures how far the closed-form non-local output is from the channel output.
///
/// Needs λ₁λ₂ > 0 to measure the coherence coefficient (otherwise `q_measured` is NaN).
pub fn nonlocal_closed_form_audit(s: &PureBipartiteState, p: &NoiseChannelParams) -> Result<ClosedFormAudit> {
    let full = apply_channel_full(s, p)?;
    let rho14 = reduce_pair(&full, p.k, Party::System1, Party::Env4)?;
    let rho23 = reduce_pair(&full, p.k, Party::System2, Party::Env3)?;
    let closed = nonlocal_closed_form(s, p)?;
    let k = p.k;
    let l = s.lambdas();
    let q_measured = rho14[(0, k + 1)].re / (l[0] * l[1]).sqrt();
    Ok(ClosedFormAudit {
        k,
        c: p.c,
        max_entry_deviation: closed.max_abs_diff(rho14.matrix()),
        nonlocal_pair_deviation: rho14.matrix().max_abs_diff(rho23.matrix()),
        q_measured,
        q_closed_form: channel_coefficients(p).q,
    })
}

/// Least-squares fit of `w|Φ⁺⟩⟨Φ⁺| + ((1−w)/4)·I₄` to a two-qubit state.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct WernerFit {
    pub weight: f64,
    /// Largest entrywise modulus of `ρ − fit`.
    pub residual: f64,
}

pub fn werner_decomposition_check(rho: &DensityMatrix) -> Result<WernerFit> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: rho.dim(),
        });
    }
    let quarter = ComplexMatrix::identity(4).scale_real(0.25);
    // ρ − I/4 = w·B with B = |Φ⁺⟩⟨Φ⁺| − I/4, ‖B‖²_F = 3/4
    let basis = &crate::qmath::pauli::phi_plus_projector() - &quarter;
    let centered = rho.matrix() - &quarter;
    let weight = basis.trace_product(&centered)?.re / 0.75;
    let fit = &quarter + &basis.scale_real(weight);
    Ok(WernerFit {
        weight,
        residual: fit.max_abs_diff(rho.matrix()),
    })
}
