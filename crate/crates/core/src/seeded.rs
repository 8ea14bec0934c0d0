//! Seeded pseudo-randomness for the instance generators.
//!
//! Everything is built on splitmix64, used two ways: as a keyed PRF
//! (`pair_bit`, `derive`) so that independent draws — one per vertex pair —
//! can be evaluated in any order or in parallel with identical results, and
//! as a sequential stream for shuffles and partitions. Output depends only
//! on the seed, never on platform or crate versions.

#[inline]
pub(crate) fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// PRF value for (seed, index); one evaluation per draw.
pub(crate) fn keyed(seed: u64, index: u64) -> u64 {
    splitmix64(splitmix64(seed) ^ splitmix64(index.wrapping_add(0x6a09e667f3bcc909)))
}

/// Derives an independent sub-seed, e.g. one per generation attempt.
pub(crate) fn derive(seed: u64, tag: u64) -> u64 {
    keyed(seed, tag ^ 0xd1b54a32d192ed03)
}

/// Fair coin for the unordered pair {i,j}, i < j.
pub(crate) fn pair_coin(seed: u64, i: usize, j: usize) -> bool {
    debug_assert!(i < j);
    // pair index in the triangular enumeration
    let idx = (j * (j - 1)) / 2 + i;
    keyed(seed, idx as u64) & 1 == 1
}

/// Sequential splitmix64 stream for shuffles and class assignment.
pub(crate) struct Stream {
    state: u64,
}

impl Stream {
    pub fn new(seed: u64) -> Self {
        Stream {
            state: splitmix64(seed ^ 0x5851f42d4c957f2d),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound` by rejection, bound > 0.
    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let r = self.next_u64();
            if r >= threshold {
                return r % bound;
            }
        }
    }

    /// Fisher–Yates.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}
