use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Reproducible random stream keyed by `(seed, stream)`.
///
/// Backed by ChaCha8 with the stream id selecting an independent keystream, so
/// rounds keyed by their index can be drawn in any order or in parallel.
#[derive(Clone, Debug)]
pub struct RandomSource {
    seed: u64,
    stream: u64,
    rng: ChaCha8Rng,
}

impl RandomSource {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Self { seed, stream, rng }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn stream(&self) -> u64 {
        self.stream
    }

    /// Uniform draw in `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        self.rng.random::<f64>()
    }

    /// Inverse-CDF sample of a two-outcome distribution: 0 with probability `p0`, else 1.
    pub fn sample_binary(&mut self, p0: f64) -> u8 {
        if self.uniform() < p0 {
            0
        } else {
            1
        }
    }
}
