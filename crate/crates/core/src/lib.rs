//! Entanglement under a symmetric noisy environment, and a secret-sharing
//! protocol built on the resulting two-qubit mixed states.
//!
//! The crate is organized bottom-up:
//!
//! - [`qmath`]: dense complex matrices, partial traces, a Jacobi Hermitian
//!   eigensolver and density-matrix validation.
//! - [`entanglement`]: Schmidt decomposition, concurrence and I-concurrence,
//!   the Schmidt-rank bound, Wootters concurrence and the partial-transpose test.
//! - [`noise`]: the cloning-type channel, applied literally to both particles,
//!   and the closed-form local and non-local outputs.
//! - [`witness`]: the witnesses `W₁`, `W₂` and the entanglement threshold.
//! - [`protocol`]: the secret-sharing rounds, Helstrom discrimination, and a
//!   reproducible Monte Carlo driver.
//!
//! ```
//! use qshare::noise::{nonlocal_output, NoiseChannelParams};
//! use qshare::entanglement::{wootters_concurrence, PureBipartiteState};
//!
//! let input = PureBipartiteState::two_qubit(0.5)?;
//! let channel = NoiseChannelParams::from_c((2.0f64 / 3.0).sqrt(), 2)?;
//! let shared = nonlocal_output(&input, &channel)?;
//! assert!((shared[(0, 0)].re - 13.0 / 36.0).abs() < 1e-12);
//! assert!((wootters_concurrence(&shared)? - 1.0 / 6.0).abs() < 1e-12);
//! # Ok::<(), qshare::Error>(())
//! ```

pub mod entanglement;
mod error;
pub mod noise;
pub mod protocol;
pub mod qmath;
pub mod witness;

pub use error::{Error, Result};
