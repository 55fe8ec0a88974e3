//! Seeded randomness. All draws go through ChaCha8 seeded from 64-bit
//! values derived with [`mix`], so a single seed reproduces everything.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Identifier recorded in reports next to every seed.
pub const PRNG_NAME: &str = "chacha8/rand_chacha-0.3;splitmix64-derivation;v1";

/// Derives the `k`-th child seed of `seed` (SplitMix64 finalizer over
/// `seed + (k + 1) * golden`).
pub fn mix(seed: u64, k: u64) -> u64 {
    let mut z = seed.wrapping_add((k.wrapping_add(1)).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn children_differ() {
        assert_ne!(mix(1, 0), mix(1, 1));
        assert_ne!(mix(1, 0), mix(2, 0));
        assert_eq!(mix(42, 2), mix(42, 2));
    }
}
