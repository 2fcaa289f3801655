//! Seeded uniform source shared by every simulator.
//!
//! Backed by xoshiro256++ (seeded through SplitMix64), which has a published
//! reference implementation and produces the same stream on every platform.

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

const INV_2_52: f64 = 1.0 / (1u64 << 52) as f64;

/// Deterministic stream of uniforms on the open interval `(0, 1)`.
///
/// One stream per trajectory; it is `Send` but deliberately not `Clone`, so a
/// stream can't be silently duplicated and replayed twice inside one run.
#[derive(Debug)]
pub struct RngStream {
    seed: u64,
    inner: Xoshiro256PlusPlus,
    draws: u64,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            inner: Xoshiro256PlusPlus::seed_from_u64(seed),
            draws: 0,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Number of uniforms consumed so far.
    pub fn draws(&self) -> u64 {
        self.draws
    }

    /// Next uniform, strictly inside `(0, 1)`.
    ///
    /// The top 52 bits `k` map to `(k + 0.5) / 2^52`, so the smallest value is
    /// `2^-53` and the largest is `1 - 2^-53` (the last double below 1); neither
    /// endpoint is reachable.
    #[inline]
    pub fn uniform_open(&mut self) -> f64 {
        self.draws += 1;
        let k = self.inner.next_u64() >> 12;
        (k as f64 + 0.5) * INV_2_52
    }
}

/// Free-function form of [`RngStream::uniform_open`].
#[inline]
pub fn uniform_open(stream: &mut RngStream) -> f64 {
    stream.uniform_open()
}
