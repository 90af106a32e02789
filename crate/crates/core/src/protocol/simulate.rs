use std::io::{self, Write};

use rayon::prelude::*;
use serde::Serialize;

use super::{
    alice_conditional, alice_measure, announce, bob_decode, helstrom_measurement, prepare_shared_state,
    BinaryMeasurement, RandomSource, SharedState,
};
use crate::error::{Error, Result};
use crate::noise::{channel_coefficients, NoiseChannelParams};
use crate::qmath::{partial_trace, ComplexMatrix, DensityMatrix, SubsystemLayout};

/// Everything a round needs that does not depend on randomness.
#[derive(Clone, Debug)]
pub struct ProtocolSetup {
    params: NoiseChannelParams,
    shared: [SharedState; 2],
    measurement: BinaryMeasurement,
    helstrom_success: f64,
}

impl ProtocolSetup {
    /// Prepares both shared states and Bob's Helstrom measurement for the pair
    /// he receives after Alice announces 0.
    pub fn new(params: &NoiseChannelParams) -> Result<Self> {
        let shared = [prepare_shared_state(0, params)?, prepare_shared_state(1, params)?];
        let (_, bob_plus) = alice_conditional(&shared[0], 0)?;
        let (_, bob_minus) = alice_conditional(&shared[1], 0)?;
        let (measurement, helstrom_success) = helstrom_measurement(&bob_plus, &bob_minus)?;
        Ok(Self {
            params: *params,
            shared,
            measurement,
            helstrom_success,
        })
    }

    pub fn params(&self) -> &NoiseChannelParams {
        &self.params
    }

    pub fn shared_state(&self, secret_bit: u8) -> &SharedState {
        &self.shared[usize::from(secret_bit & 1)]
    }

    pub fn measurement(&self) -> &BinaryMeasurement {
        &self.measurement
    }

    /// Optimal success probability `(1 + Q)/2`.
    pub fn helstrom_success(&self) -> f64 {
        self.helstrom_success
    }

    /// Plays one round with the random stream `(seed, round)`.
    pub fn play_round(&self, seed: u64, round: u64) -> Result<Round> {
        let mut rng = RandomSource::new(seed, round);
        // head = 0 = |φ⁺⟩, tail = 1 = |φ⁻⟩
        let secret = rng.sample_binary(0.5);
        let (alice, conditional) = alice_measure(self.shared_state(secret), &mut rng)?;
        let classical = announce(alice.outcome_bit);
        let bob = bob_decode(&conditional, classical, &self.measurement, &mut rng)?;
        Ok(Round {
            round,
            secret,
            alice_outcome: alice.outcome_bit,
            classical,
            bob_outcome: bob.outcome,
            guess: bob.guess,
            correct: bob.guess == secret,
        })
    }
}

/// One protocol round as exported to JSON lines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Round {
    pub round: u64,
    pub secret: u8,
    pub alice_outcome: u8,
    pub classical: u8,
    pub bob_outcome: u8,
    pub guess: u8,
    pub correct: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TranscriptStats {
    pub rounds: u64,
    pub success_count: u64,
    /// Rounds per `[secret][classical]` branch.
    pub branch_counts: [[u64; 2]; 2],
    /// Correct guesses per `[secret][classical]` branch.
    pub branch_successes: [[u64; 2]; 2],
    /// Rounds in which Bob's raw outcome, without Alice's bit, equals the secret.
    pub bob_alone_matches: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProtocolTranscript {
    pub rounds: Vec<Round>,
    pub params: NoiseChannelParams,
    pub seed: u64,
    pub stats: TranscriptStats,
}

impl ProtocolTranscript {
    pub fn success_rate(&self) -> f64 {
        self.stats.success_count as f64 / self.stats.rounds as f64
    }

    /// Success rate of a Bob who guesses his own outcome and ignores Alice.
    pub fn bob_alone_success_rate(&self) -> f64 {
        self.stats.bob_alone_matches as f64 / self.stats.rounds as f64
    }

    pub fn write_jsonl<W: Write>(&self, mut out: W) -> io::Result<()> {
        for r in &self.rounds {
            serde_json::to_writer(&mut out, r)?;
            out.write_all(b"\n")?;
        }
        Ok(())
    }
}

fn collect_stats(rounds: &[Round]) -> TranscriptStats {
    let mut stats = TranscriptStats {
        rounds: rounds.len() as u64,
        ..Default::default()
    };
    for r in rounds {
        let (s, c) = (usize::from(r.secret), usize::from(r.classical));
        stats.branch_counts[s][c] += 1;
        if r.correct {
            stats.success_count += 1;
            stats.branch_successes[s][c] += 1;
        }
        if r.bob_outcome == r.secret {
            stats.bob_alone_matches += 1;
        }
    }
    stats
}

/// Runs `n` independent rounds of the protocol.
///
/// Round `i` draws from stream `(seed, i)`, so the transcript is the same
/// whether rounds run sequentially or in parallel.
pub fn run_rounds(n: u64, p: &NoiseChannelParams, seed: u64) -> Result<ProtocolTranscript> {
    let setup = ProtocolSetup::new(p)?;
    run_rounds_with(&setup, n, seed)
}

pub fn run_rounds_with(setup: &ProtocolSetup, n: u64, seed: u64) -> Result<ProtocolTranscript> {
    if n == 0 {
        return Err(Error::domain("rounds", 0.0, "at least one round is required"));
    }
    let rounds = (0..n)
        .into_par_iter()
        .map(|i| setup.play_round(seed, i))
        .collect::<Result<Vec<_>>>()?;
    let stats = collect_stats(&rounds);
    Ok(ProtocolTranscript {
        rounds,
        params: setup.params,
        seed,
        stats,
    })
}

/// Sequential reference for [`run_rounds`].
pub fn run_rounds_sequential(n: u64, p: &NoiseChannelParams, seed: u64) -> Result<ProtocolTranscript> {
    if n == 0 {
        return Err(Error::domain("rounds", 0.0, "at least one round is required"));
    }
    let setup = ProtocolSetup::new(p)?;
    let rounds = (0..n).map(|i| setup.play_round(seed, i)).collect::<Result<Vec<_>>>()?;
    let stats = collect_stats(&rounds);
    Ok(ProtocolTranscript {
        rounds,
        params: *p,
        seed,
        stats,
    })
}

/// Deviations showing that neither party alone holds information about the secret.
#[derive(Clone, Debug, Serialize)]
pub struct SecurityReport {
    /// `max ‖Tr_B ρ± − I/2‖_max`.
    pub alice_marginal_deviation: f64,
    /// `max ‖Tr_A ρ± − I/2‖_max`.
    pub bob_marginal_deviation: f64,
    /// `max ‖½(ρ_B^{s,0} + ρ_B^{s,1}) − I/2‖_max` over both secrets.
    pub bob_averaged_deviation: f64,
    /// Gap between Bob's conditional states that should coincide across secrets:
    /// `(ρ⁻, 0) ↔ (ρ⁺, 1)` and `(ρ⁻, 1) ↔ (ρ⁺, 0)`.
    pub crossed_conditional_deviation: f64,
    pub max_deviation: f64,
}

pub fn security_audit(p: &NoiseChannelParams) -> Result<SecurityReport> {
    let half = ComplexMatrix::identity(2).scale_real(0.5);
    let layout = SubsystemLayout::qubits(2);
    let mut alice_dev = 0.0f64;
    let mut bob_dev = 0.0f64;
    let mut averaged_dev = 0.0f64;
    let mut conditionals: Vec<[DensityMatrix; 2]> = Vec::with_capacity(2);
    for bit in 0..2u8 {
        let s = prepare_shared_state(bit, p)?;
        alice_dev = alice_dev.max(partial_trace(s.rho().matrix(), &layout, &[0])?.max_abs_diff(&half));
        bob_dev = bob_dev.max(partial_trace(s.rho().matrix(), &layout, &[1])?.max_abs_diff(&half));
        let (p0, b0) = alice_conditional(&s, 0)?;
        let (p1, b1) = alice_conditional(&s, 1)?;
        let averaged = &b0.matrix().scale_real(p0) + &b1.matrix().scale_real(p1);
        averaged_dev = averaged_dev.max(averaged.max_abs_diff(&half));
        conditionals.push([b0, b1]);
    }
    let crossed = conditionals[1][0]
        .matrix()
        .max_abs_diff(conditionals[0][1].matrix())
        .max(conditionals[1][1].matrix().max_abs_diff(conditionals[0][0].matrix()));
    Ok(SecurityReport {
        alice_marginal_deviation: alice_dev,
        bob_marginal_deviation: bob_dev,
        bob_averaged_deviation: averaged_dev,
        crossed_conditional_deviation: crossed,
        max_deviation: alice_dev.max(bob_dev).max(averaged_dev).max(crossed),
    })
}

/// Summary record of a simulation run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimulationSummary {
    pub n: u64,
    pub c: f64,
    #[serde(rename = "Q")]
    pub q: f64,
    pub success_rate: f64,
    pub helstrom_bound: f64,
    pub security_max_deviation: f64,
}

impl SimulationSummary {
    pub fn new(t: &ProtocolTranscript, setup: &ProtocolSetup, security: &SecurityReport) -> Self {
        Self {
            n: t.stats.rounds,
            c: t.params.c(),
            q: channel_coefficients(&t.params).q,
            success_rate: t.success_rate(),
            helstrom_bound: setup.helstrom_success(),
            security_max_deviation: security.max_deviation,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_equals_sequential() {
        let p = NoiseChannelParams::from_c(0.75, 2).unwrap();
        let a = run_rounds(2000, &p, 11).unwrap();
        let b = run_rounds_sequential(2000, &p, 11).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn counts_add_up() {
        let p = NoiseChannelParams::from_c(0.9, 2).unwrap();
        let t = run_rounds(1000, &p, 5).unwrap();
        let total: u64 = t.stats.branch_counts.iter().flatten().sum();
        assert_eq!(total, 1000);
        assert_eq!(t.rounds.len(), 1000);
        assert!(t.rounds.iter().enumerate().all(|(i, r)| r.round == i as u64));
    }

    #[test]
    fn zero_rounds_rejected() {
        let p = NoiseChannelParams::from_c(0.9, 2).unwrap();
        assert!(run_rounds(0, &p, 1).is_err());
    }

    #[test]
    fn security_audit_operating_point() {
        for c in [(2.0f64 / 3.0).sqrt(), 1.0] {
            let r = security_audit(&NoiseChannelParams::from_c(c, 2).unwrap()).unwrap();
            assert!(r.max_deviation <= 1e-12, "{r:?}");
        }
    }

    #[test]
    fn jsonl_has_one_line_per_round() {
        let p = NoiseChannelParams::from_c(0.8, 2).unwrap();
        let t = run_rounds(10, &p, 2).unwrap();
        let mut buf = Vec::new();
        t.write_jsonl(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 10);
        let first: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
        for key in [
            "round",
            "secret",
            "alice_outcome",
            "classical",
            "bob_outcome",
            "guess",
            "correct",
        ] {
            assert!(first.get(key).is_some(), "missing {key}");
        }
    }
}
