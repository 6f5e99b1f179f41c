//! Reproducible randomness.
//!
//! A single 64-bit seed is expanded into independent streams keyed by a
//! purpose tag and an index, so a sample depends only on `(seed, tag, index)`
//! and never on how many other samples were drawn before it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{Matrix, Scalar};

/// Coordinates of generic configurations are drawn from `[-GENERIC_RANGE, GENERIC_RANGE]`.
pub const GENERIC_RANGE: i64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeedTree {
    seed: u64,
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn fnv1a(tag: &str) -> u64 {
    tag.bytes().fold(0xCBF2_9CE4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01B3))
}

impl SeedTree {
    pub fn new(seed: u64) -> Self {
        SeedTree { seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    fn derive(&self, tag: &str, index: u64) -> u64 {
        splitmix64(splitmix64(self.seed ^ fnv1a(tag)) ^ splitmix64(index.wrapping_add(0x5555)))
    }

    pub fn child(&self, tag: &str, index: u64) -> SeedTree {
        SeedTree { seed: self.derive(tag, index) }
    }

    pub fn rng(&self, tag: &str, index: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.derive(tag, index))
    }
}

/// Matrix with integer entries uniform in `[-range, range]`.
pub fn random_integer_matrix<S: Scalar, R: Rng + ?Sized>(
    rows: usize,
    cols: usize,
    range: i64,
    rng: &mut R,
) -> Matrix<S> {
    Matrix::from_fn(rows, cols, |_, _| S::from_i64(rng.gen_range(-range..=range)))
}

pub fn random_integer_vector<S: Scalar, R: Rng + ?Sized>(len: usize, range: i64, rng: &mut R) -> Vec<S> {
    (0..len).map(|_| S::from_i64(rng.gen_range(-range..=range))).collect()
}

/// Rational vector with numerators in `[-range, range]` and denominators in `1..=den_max`.
pub fn random_rational_vector<S: Scalar, R: Rng + ?Sized>(
    len: usize,
    range: i64,
    den_max: i64,
    rng: &mut R,
) -> Vec<S> {
    (0..len)
        .map(|_| S::from_ratio(rng.gen_range(-range..=range), rng.gen_range(1..=den_max)))
        .collect()
}
