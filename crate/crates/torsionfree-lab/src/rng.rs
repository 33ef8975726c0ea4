//! The normative pseudo-random generator for all sampling in this crate.
//!
//! The algorithm is SplitMix64 (Steele, Lea & Flood's mixing constants). It is
//! fixed here, in code, so that a `(seed, index)` pair reproduces the same
//! sample stream in any conforming reimplementation:
//!
//! * state update: `state += 0x9E3779B97F4A7C15`
//! * output mix:   `z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;`
//!   `z = (z ^ (z >> 27)) * 0x94D049BB133111EB; z ^ (z >> 31)`
//! * stream split: the generator for sample `i` under master seed `s` is
//!   `SplitMix64::new(s.wrapping_add((i as u64 + 1).wrapping_mul(GOLDEN)))`
//! * bounded draw: `below(n) = next_u64() % n`
//!
//! The modulo draw is part of the contract; its bias is irrelevant at the
//! moduli used here (fields and ranks far below 2^32).

pub const GOLDEN: u64 = 0x9E3779B97F4A7C15;

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    /// Deterministic per-sample generator; see module docs.
    pub fn split(seed: u64, index: u64) -> SplitMix64 {
        SplitMix64::new(seed.wrapping_add((index.wrapping_add(1)).wrapping_mul(GOLDEN)))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish draw in `0..n`; `n` must be nonzero.
    pub fn below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        self.next_u64() % n
    }

    /// Draw in the inclusive range `lo..=hi`.
    pub fn range(&mut self, lo: u64, hi: u64) -> u64 {
        debug_assert!(lo <= hi);
        lo + self.below(hi - lo + 1)
    }

    /// Signed draw in `-b..=b`.
    pub fn signed(&mut self, b: u64) -> i64 {
        self.below(2 * b + 1) as i64 - b as i64
    }
}
