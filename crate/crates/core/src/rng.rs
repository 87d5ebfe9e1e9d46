//! Deterministic, splittable random streams.
//!
//! Every stochastic choice takes an explicit RNG. Experiment streams are
//! derived from a master seed and a path of indices, so trial `i` and
//! strategy `s` inside it always see the same stream regardless of how the
//! trials are scheduled.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The RNG used throughout the crate. ChaCha output is platform independent.
pub type SimRng = ChaCha8Rng;

#[inline]
fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seeds a stream from `master` and a derivation path.
///
/// `split(seed, &[i])` is trial `i`; `split(seed, &[i, s])` is strategy `s`
/// within trial `i`. Distinct paths give unrelated streams.
pub fn split(master: u64, path: &[u64]) -> SimRng {
    let mut state = master;
    let mut acc = splitmix64(&mut state);
    for &p in path {
        // Fold the length in too, so [0] and [0, 0] differ.
        state ^= acc.rotate_left(17) ^ p.wrapping_mul(0xD6E8_FEB8_6659_FD93);
        acc = splitmix64(&mut state);
    }
    state ^= path.len() as u64;
    let mut seed = [0u8; 32];
    for chunk in seed.chunks_exact_mut(8) {
        chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
    }
    SimRng::from_seed(seed)
}

/// Uniform index in `0..len`, sampled through `u64` so results do not depend
/// on the platform's pointer width.
#[inline]
pub fn index<R: Rng + ?Sized>(rng: &mut R, len: usize) -> usize {
    debug_assert!(len > 0);
    rng.gen_range(0..len as u64) as usize
}
