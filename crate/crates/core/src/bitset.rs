//! Fixed-length bit vectors used for orientation and separation sets.

use alloc::vec;
use alloc::vec::Vec;

/// A fixed-length vector of bits packed into 64-bit blocks.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitSet {
    blocks: Vec<u64>,
    len: usize,
}

impl BitSet {
    /// A set of `len` bits, all clear.
    pub fn new(len: usize) -> Self {
        BitSet { blocks: vec![0; len.div_ceil(64)], len }
    }

    /// Number of bits (set or clear) in the vector.
    pub fn len(&self) -> usize {
        self.len
    }

    /// True when the vector has zero bits.
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Write bit `i`.
    ///
    /// # Panics
    /// Panics when `i >= len`.
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range 0..{}", self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.blocks[i / 64] |= mask;
        } else {
            self.blocks[i / 64] &= !mask;
        }
    }

    /// Read bit `i`.
    ///
    /// # Panics
    /// Panics when `i >= len`.
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range 0..{}", self.len);
        self.blocks[i / 64] >> (i % 64) & 1 == 1
    }

    /// Number of set bits.
    pub fn count_ones(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    /// Bitwise symmetric difference with an equal-length set.
    ///
    /// # Panics
    /// Panics when the lengths differ.
    pub fn xor(&self, other: &BitSet) -> BitSet {
        assert_eq!(self.len, other.len, "bit vector lengths differ");
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a ^ b)
            .collect();
        BitSet { blocks, len: self.len }
    }

    /// `self.xor(other).count_ones()` without allocating.
    ///
    /// # Panics
    /// Panics when the lengths differ.
    pub fn xor_count(&self, other: &BitSet) -> usize {
        assert_eq!(self.len, other.len, "bit vector lengths differ");
        self.blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    /// Indices of set bits, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(bi, &block)| {
            let mut rest = block;
            core::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let tz = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(bi * 64 + tz)
                }
            })
        })
    }
}
