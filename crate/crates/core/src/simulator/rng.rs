use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Two uniform draws per trial.
pub const DRAWS_PER_TRIAL: u128 = 2;
/// `u32` keystream words consumed by one draw.
const WORDS_PER_DRAW: u128 = 2;

/// Counter-addressed stream of uniform draws.
///
/// Trial `i` reads the keystream words starting at `i * 4`, so its draws depend
/// only on `(seed, i)`.
pub struct TrialStream {
    rng: ChaCha8Rng,
}

impl TrialStream {
    /// Stream positioned at the first draw of `trial`.
    pub fn at(seed: u64, trial: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_word_pos(u128::from(trial) * DRAWS_PER_TRIAL * WORDS_PER_DRAW);
        Self { rng }
    }

    /// Uniform in `[0, 1)` with 53 random bits.
    pub fn uniform(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}
