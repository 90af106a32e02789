//! Pure-state Schmidt analysis, concurrence and I-concurrence, the Schmidt-rank
//! bound on I-concurrence, and two mixed-state oracles (Wootters concurrence and
//! the partial-transpose test).
//!
//! Schmidt coefficients are stored as probabilities λᵢ, so a k×k pure state is
//! `Σᵢ √λᵢ |i⟩|i⟩`. The I-concurrence of such a state is
//!
//! ```text
//! C_I = √( (2k/(k−1)) · Σ_{i<j} λᵢλⱼ ) = √( (k/(k−1)) · (1 − Tr ρ_A²) )
//! ```
//!
//! and for k = 2 it coincides with the ordinary concurrence `2√(λ₁λ₂)`.
//!
//! No convex-roof optimization is attempted for mixed states beyond two qubits.

mod bound;
mod mixed;
mod pure;

pub use bound::{max_i_concurrence, max_i_concurrence_limit, max_i_concurrence_ordering};
pub use mixed::{min_partial_transpose_eigenvalue, ppt_entangled, wootters_concurrence, PPT_TOL};
pub use pure::{
    concurrence_from_amplitudes, concurrence_pure, i_concurrence_from_purity, i_concurrence_pure, schmidt_decompose,
    PureBipartiteState, StateVector, RANK_TOL,
};
