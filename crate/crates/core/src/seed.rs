use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Derives an independent stream for `(seed, index)` so parallel or
/// reordered trials stay reproducible.
pub(crate) fn derive(seed: u64, index: u64) -> u64 {
    // splitmix64 over the combined word
    let mut z = seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15).rotate_left(17);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub(crate) fn rng(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive(seed, index))
}
