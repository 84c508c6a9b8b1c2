use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

/// Deterministic seed. Independent work items draw from numbered substreams,
/// so results do not depend on how work is split across threads.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeedSpec {
    pub seed: u64,
}

impl SeedSpec {
    pub const fn new(seed: u64) -> Self {
        SeedSpec { seed }
    }

    /// Generator for substream `stream`.
    pub fn rng(&self, stream: u64) -> ChaCha20Rng {
        let mut rng = ChaCha20Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }

    /// A new seed derived from this one, for nested experiments
    /// (e.g. trial `index` of a multi-seed study).
    pub fn derive(&self, index: u64) -> SeedSpec {
        // splitmix64 finalizer over (seed, index)
        let mut z = self
            .seed
            .wrapping_add(0x9E37_79B9_7F4A_7C15u64.wrapping_mul(index.wrapping_add(1)));
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        SeedSpec::new(z ^ (z >> 31))
    }
}

impl From<u64> for SeedSpec {
    fn from(seed: u64) -> Self {
        SeedSpec::new(seed)
    }
}
