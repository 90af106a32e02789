//! Dense complex linear algebra for the small matrices this crate works with.
//!
//! Everything here is sized for at most 256×256 (four subsystems of local
//! dimension 4). Matrices are immutable values once built; all operations are
//! pure functions.

mod density;
mod eigen;
mod layout;
mod matrix;
pub mod pauli;

pub use density::{validate_density_matrix, DensityMatrix};
pub use eigen::{
    hermitian_eigensystem, psd_sqrt, singular_values, trace_norm, Eigensystem, JACOBI_MAX_SWEEPS, JACOBI_THRESHOLD,
};
pub use layout::{partial_trace, partial_transpose, permute_subsystems, SubsystemLayout};
pub use matrix::{tensor_product, ComplexMatrix};

/// Default absolute tolerance for validity checks.
pub const DEFAULT_TOL: f64 = 1e-10;
