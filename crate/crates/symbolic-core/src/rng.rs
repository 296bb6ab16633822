//! Seeded sampling for reproducible checks.
//!
//! The generator is SplitMix64 (64-bit state, increment 0x9E3779B97F4A7C15,
//! output mixers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB) as provided by
//! `rand_xoshiro`. Small integers are drawn as `lo + next_u64() % (hi - lo + 1)`;
//! the modulo bias is irrelevant at these ranges and keeps the stream easy
//! to reproduce elsewhere.

use rand_core::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::scalar::{int, Rational};

pub struct SampleRng {
    inner: SplitMix64,
}

impl SampleRng {
    pub fn new(seed: u64) -> Self {
        SampleRng {
            inner: SplitMix64::seed_from_u64(seed),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform-ish integer in [lo, hi].
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }

    pub fn rational_in(&mut self, lo: i64, hi: i64) -> Rational {
        int(self.int_in(lo, hi))
    }

    /// The parameter distribution used for chart samples: integers 1..=7.
    pub fn param(&mut self) -> Rational {
        self.rational_in(1, 7)
    }
}
