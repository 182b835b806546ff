//! Bit-packed vectors over GF(2), 64 bits per machine word.
//!
//! Everything downstream (Pauli words, symplectic vectors, row reduction)
//! stores its coordinates in a [`BitVec`] so that dot products, XOR and
//! weight queries become word-parallel AND/XOR/popcount loops.

use std::fmt;

/// A fixed-length vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    /// All-zero vector of the given length.
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0u64; len.div_ceil(64)],
        }
    }

    /// Build from an iterator of bits (`true` = 1). Length is the item count.
    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let collected: Vec<bool> = bits.into_iter().collect();
        let mut v = BitVec::zeros(collected.len());
        for (i, b) in collected.iter().enumerate() {
            if *b {
                v.set(i, true);
            }
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    /// In-place XOR with another vector of the same length.
    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (w, o) in self.words.iter_mut().zip(other.words.iter()) {
            *w ^= *o;
        }
    }

    /// Standard dot product mod 2: parity of `popcount(self & other)`.
    pub fn dot(&self, other: &BitVec) -> bool {
        debug_assert_eq!(self.len, other.len);
        let mut acc = 0u32;
        for (w, o) in self.words.iter().zip(other.words.iter()) {
            acc ^= (w & o).count_ones() & 1;
        }
        acc & 1 == 1
    }

    /// Number of positions where both vectors are 1.
    pub fn and_weight(&self, other: &BitVec) -> usize {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(other.words.iter())
            .map(|(w, o)| (w & o).count_ones() as usize)
            .sum()
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    /// Index of the first set bit, if any.
    pub fn first_one(&self) -> Option<usize> {
        for (k, w) in self.words.iter().enumerate() {
            if *w != 0 {
                return Some(k * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Indices of all set bits, ascending.
    pub fn ones(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (k, w) in self.words.iter().enumerate() {
            let mut bits = *w;
            while bits != 0 {
                out.push(k * 64 + bits.trailing_zeros() as usize);
                bits &= bits - 1;
            }
        }
        out
    }

    /// Concatenate two vectors.
    pub fn concat(&self, other: &BitVec) -> BitVec {
        let mut v = BitVec::zeros(self.len + other.len);
        for i in self.ones() {
            v.set(i, true);
        }
        for i in other.ones() {
            v.set(self.len + i, true);
        }
        v
    }

    /// The sub-vector `self[start..start + len]`.
    pub fn slice(&self, start: usize, len: usize) -> BitVec {
        debug_assert!(start + len <= self.len);
        let mut v = BitVec::zeros(len);
        for i in 0..len {
            if self.get(start + i) {
                v.set(i, true);
            }
        }
        v
    }

    /// Interpret the low bits of `value` as a vector of the given length.
    pub fn from_u64(value: u64, len: usize) -> Self {
        debug_assert!(len <= 64);
        let mut v = BitVec::zeros(len);
        if len > 0 {
            v.words[0] = value & (u64::MAX >> (64 - len));
        }
        v
    }

    /// Pack into a u64 (requires `len <= 64`). Used for small-scale enumeration.
    pub fn to_u64(&self) -> u64 {
        debug_assert!(self.len <= 64);
        if self.words.is_empty() {
            0
        } else {
            self.words[0]
        }
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}
