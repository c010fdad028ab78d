//! Reproducible random streams for parallel Monte Carlo.
//!
//! Every sample of an experiment draws from its own ChaCha substream,
//! addressed by `(master seed, stream index)`. Substreams with distinct
//! indices are statistically independent, and a given address always
//! reproduces the same sequence, so results do not depend on how samples
//! are scheduled across worker threads.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Address of one reproducible random substream.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RngStream {
    /// Master seed shared by the whole run.
    pub seed: u64,
    /// Substream index, usually the sample number.
    pub index: u64,
}

impl RngStream {
    pub fn new(seed: u64, index: u64) -> Self {
        RngStream { seed, index }
    }

    /// Stream `index + offset` under the same master seed.
    pub fn substream(self, offset: u64) -> Self {
        RngStream {
            seed: self.seed,
            index: self.index.wrapping_add(offset),
        }
    }

    /// Instantiate the generator positioned at the start of this stream.
    pub fn rng(self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.index);
        rng
    }
}
