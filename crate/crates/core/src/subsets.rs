//! Bitmask iteration over subsets of `0..n`.

use crate::graph::low_bits;

/// All `k`-element subsets of `0..n` in ascending mask order (Gosper's hack).
#[derive(Clone, Debug)]
pub struct KSubsets {
    next: Option<u64>,
    limit: u64,
}

impl KSubsets {
    /// Panics if `n > 63`.
    pub fn new(n: usize, k: usize) -> Self {
        assert!(n <= 63, "k-subsets need n <= 63, got {n}");
        let next = if k > n { None } else { Some(low_bits(k)) };
        KSubsets {
            next,
            limit: 1u64 << n,
        }
    }
}

impl Iterator for KSubsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        if cur == 0 {
            // k = 0: the empty set, once.
            self.next = None;
            return Some(0);
        }
        let low = cur & cur.wrapping_neg();
        let ripple = cur + low;
        let following = (((ripple ^ cur) >> 2) / low) | ripple;
        self.next = (following < self.limit).then_some(following);
        Some(cur)
    }
}

/// Nonempty subsets of `0..n` by ascending size, ascending mask within a size.
pub fn by_popcount(n: usize) -> impl Iterator<Item = u64> {
    (1..=n).flat_map(move |k| KSubsets::new(n, k))
}
