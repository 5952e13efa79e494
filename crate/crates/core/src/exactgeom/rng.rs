//! Seeded source of "generic" rational data.

use super::scalar::Scalar;
use num_bigint::BigInt;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

pub const DEFAULT_HEIGHT: i64 = 10_000;

/// Deterministic stream of bounded-height rationals.
///
/// Not `Sync`-shared: concurrent tasks take their own stream via [`Rng::derive`].
#[derive(Debug, Clone)]
pub struct Rng {
    seed: u64,
    height: i64,
    den_height: i64,
    inner: ChaCha8Rng,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Self::with_height(seed, DEFAULT_HEIGHT)
    }

    pub fn with_height(seed: u64, height: i64) -> Self {
        assert!(height >= 1, "height must be positive");
        Rng {
            seed,
            height,
            den_height: 1,
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Allows denominators in `[1, den_height]`.
    pub fn with_denominators(mut self, den_height: i64) -> Self {
        assert!(den_height >= 1);
        self.den_height = den_height;
        self
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn height(&self) -> i64 {
        self.height
    }

    /// Independent stream keyed by `label`; does not advance `self`.
    pub fn derive(&self, label: &str) -> Rng {
        Rng {
            seed: derive_seed(self.seed, label),
            height: self.height,
            den_height: self.den_height,
            inner: ChaCha8Rng::seed_from_u64(derive_seed(self.seed, label)),
        }
    }

    pub fn next_i64(&mut self) -> i64 {
        self.inner.random_range(-self.height..=self.height)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.random()
    }

    pub fn next_scalar(&mut self) -> Scalar {
        let num = self.next_i64();
        let den = if self.den_height > 1 {
            self.inner.random_range(1..=self.den_height)
        } else {
            1
        };
        Scalar::new(BigInt::from(num), BigInt::from(den))
    }

    pub fn vector(&mut self, len: usize) -> Vec<Scalar> {
        (0..len).map(|_| self.next_scalar()).collect()
    }

    /// Nonzero vector of the given length.
    pub fn nonzero_vector(&mut self, len: usize) -> Vec<Scalar> {
        loop {
            let v = self.vector(len);
            if v.iter().any(|x| *x != Scalar::from_integer(BigInt::from(0))) {
                return v;
            }
        }
    }
}

/// Stable 64-bit sub-seed: first eight bytes of SHA-256 over the parent seed and a label.
pub fn derive_seed(seed: u64, label: &str) -> u64 {
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    h.update(label.as_bytes());
    let out = h.finalize();
    u64::from_le_bytes(out[..8].try_into().expect("digest has 32 bytes"))
}
