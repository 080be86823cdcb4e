//! Reproducible randomness.
//!
//! Birth orders come from ChaCha8 (a counter-based stream cipher, output fixed by
//! the `rand_chacha` test vectors) keyed by a splitmix64 expansion of the 64-bit
//! seed, and a Fisher-Yates shuffle drawing bounded integers by widening
//! multiplication with rejection. All three pieces are spelled out here so that
//! a seed names the same order on every platform and crate version.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// splitmix64 output function (Steele, Lea, Flood).
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of trial `t` in a sweep with base seed `base`.
pub fn trial_seed(base: u64, t: u64) -> u64 {
    mix64(base ^ mix64(t.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA)))
}

/// ChaCha8 keyed by four consecutive splitmix64 outputs of `seed`.
pub fn stream(seed: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    let mut state = seed;
    for chunk in key.chunks_exact_mut(8) {
        state = state.wrapping_add(GOLDEN_GAMMA);
        chunk.copy_from_slice(&mix64(state).to_le_bytes());
    }
    ChaCha8Rng::from_seed(key)
}

/// Uniform integer in `[0, bound)` (Lemire's multiply-and-reject).
pub fn below<R: RngCore>(rng: &mut R, bound: u64) -> u64 {
    debug_assert!(bound > 0);
    let threshold = bound.wrapping_neg() % bound;
    loop {
        let m = u128::from(rng.next_u64()) * u128::from(bound);
        if (m as u64) >= threshold {
            return (m >> 64) as u64;
        }
    }
}

/// In-place Fisher-Yates: for `i` from the top down, swap slot `i` with a
/// uniform slot in `[0, i]`.
pub fn shuffle<T, R: RngCore>(rng: &mut R, items: &mut [T]) {
    for i in (1..items.len()).rev() {
        let j = below(rng, i as u64 + 1) as usize;
        items.swap(i, j);
    }
}
