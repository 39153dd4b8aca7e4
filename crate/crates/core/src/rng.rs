//! Seeded randomness. Every stage draws from its own generator, derived from
//! the run seed and a stage label by hashing, so inserting a stage never
//! shifts the draws of another.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

pub type StageRng = ChaCha8Rng;

/// Coefficient window for random integers over ℚ.
pub const WINDOW: i64 = 100;

pub fn sub_seed(seed: u64, label: &str) -> u64 {
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    h.update(label.as_bytes());
    let out = h.finalize();
    u64::from_le_bytes(out[..8].try_into().expect("8 bytes"))
}

pub fn stage_rng(seed: u64, label: &str) -> StageRng {
    ChaCha8Rng::seed_from_u64(sub_seed(seed, label))
}
