//! SplitMix64, the only source of randomness in the crate.
//!
//! Every draw is specified down to the bit so that other implementations can
//! reproduce generated games and sweeps exactly:
//!
//! * `next_u64`: `state += 0x9E3779B97F4A7C15`, then the standard splitmix64
//!   finalizer on the new state.
//! * `below(n)`: rejection sampling; draw `x` until `x >= 2^64 mod n`, return
//!   `x mod n`.
//! * `uniform(lo, hi)`: `lo + below(hi - lo + 1)`.
//! * `stream_seed(master, j)`: the `(j + 1)`-th output of a generator seeded
//!   with `master`.

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        mix(self.state)
    }

    /// Uniform in `0..n`. Panics if `n == 0`.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "empty range");
        let threshold = n.wrapping_neg() % n;
        loop {
            let x = self.next_u64();
            if x >= threshold {
                return x % n;
            }
        }
    }

    /// Uniform in `lo..=hi`. Panics if `lo > hi` or the span exceeds `u64`.
    pub fn uniform(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi, "empty range");
        let span = (hi as i128 - lo as i128 + 1) as u128;
        if span > u64::MAX as u128 {
            // the full i64 range: every output is already uniform
            return self.next_u64() as i64;
        }
        (lo as i128 + self.below(span as u64) as i128) as i64
    }
}

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of sub-stream `index` derived from `master`.
pub fn stream_seed(master: u64, index: u64) -> u64 {
    mix(master.wrapping_add(GOLDEN_GAMMA.wrapping_mul(index.wrapping_add(1))))
}
