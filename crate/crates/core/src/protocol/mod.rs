//! Two-qubit mixed-state secret sharing.
//!
//! 1. Charlie tosses a coin and prepares `|φ⁺⟩` (head, bit 0) or `|φ⁻⟩` (tail,
//!    bit 1), then sends one qubit to Alice and one to Bob through the noisy
//!    channel. They end up sharing `ρ⁺` or `ρ⁻`.
//! 2. Alice measures in the Hadamard basis. Each outcome has probability ½ and
//!    leaves Bob with `½(I ± Qσx)`.
//! 3. Alice announces her outcome as a classical bit.
//! 4. Bob measures σx and combines his outcome with Alice's bit.
//!
//! Bob's two candidate states are not orthogonal for `Q < 1`, so no
//! measurement identifies the secret with certainty. The optimal (Helstrom)
//! measurement is the σx projection, succeeding with probability `(1 + Q)/2`.
//! The operator pair `½(I ± σx/Q)` is available as [`rescaled_povm`] for
//! inspection, but [`bob_decode`] rejects it because it is not positive.

mod measurement;
mod rng;
mod simulate;
mod steps;

pub use measurement::{helstrom_measurement, rescaled_povm, BinaryMeasurement};
pub use rng::RandomSource;
pub use simulate::{
    run_rounds, run_rounds_sequential, run_rounds_with, security_audit, ProtocolSetup, ProtocolTranscript, Round,
    SecurityReport, SimulationSummary, TranscriptStats,
};
pub use steps::{
    alice_conditional, alice_measure, announce, bob_decode, prepare_shared_state, BobDecode, MeasurementOutcome,
    Participant, SharedState,
};
