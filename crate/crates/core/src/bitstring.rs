//! Packed bit strings, the search-space elements of {0,1}^n.
//!
//! Bits are stored in 64-bit words; logical position 1 is the leftmost
//! character of the text form and maps to index 0 internally. Values are
//! immutable in spirit: all heuristics clone before mutating, and shared
//! references are safe across threads.

use std::fmt;

use rand::Rng;

use crate::{Error, Result};

/// A fixed-length bit string x ∈ {0,1}^n.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitString {
    n: usize,
    words: Vec<u64>,
}

impl BitString {
    /// All-zeros string of length `n`. Panics on `n == 0`.
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "dimension must be at least 1");
        BitString {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    /// All-ones string of length `n`.
    pub fn ones(n: usize) -> Self {
        let mut x = Self::zeros(n);
        for w in &mut x.words {
            *w = u64::MAX;
        }
        x.mask_tail();
        x
    }

    /// Uniform random string of length `n`.
    pub fn uniform<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut x = Self::zeros(n);
        for w in &mut x.words {
            *w = rng.random();
        }
        x.mask_tail();
        x
    }

    /// Parse the text form: '0'/'1' characters, position 1 leftmost.
    pub fn parse(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::InvalidParameter("empty bit string".into()));
        }
        let mut x = Self::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => x.set(i, true),
                _ => {
                    return Err(Error::InvalidParameter(format!(
                        "invalid character '{c}' in bit string"
                    )))
                }
            }
        }
        Ok(x)
    }

    /// Build a string of length `n` whose bit pattern is the low `n` bits
    /// of `v` (bit 0 of `v` is logical position 1). Requires `n <= 64`.
    pub fn from_index(n: usize, v: u64) -> Self {
        assert!(n >= 1 && n <= 64);
        let mut x = Self::zeros(n);
        x.words[0] = v;
        x.mask_tail();
        x
    }

    /// Inverse of [`from_index`](Self::from_index); requires `n <= 64`.
    pub fn to_index(&self) -> u64 {
        assert!(self.n <= 64);
        self.words[0]
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.n);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, v: bool) {
        debug_assert!(i < self.n);
        if v {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.n);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    /// Number of one-bits.
    pub fn ones_count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Bitwise complement.
    pub fn complement(&self) -> Self {
        let mut x = self.clone();
        for w in &mut x.words {
            *w = !*w;
        }
        x.mask_tail();
        x
    }

    /// XOR with another string of the same length.
    pub fn xor(&self, other: &BitString) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch);
        }
        let mut x = self.clone();
        for (w, o) in x.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
        Ok(x)
    }

    fn mask_tail(&mut self) {
        let rem = self.n % 64;
        if rem != 0 {
            *self.words.last_mut().unwrap() &= (1u64 << rem) - 1;
        }
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString({self})")
    }
}

/// Number of positions where `x` and `y` disagree.
pub fn hamming_distance(x: &BitString, y: &BitString) -> Result<usize> {
    if x.n != y.n {
        return Err(Error::DimensionMismatch);
    }
    Ok(x.words
        .iter()
        .zip(&y.words)
        .map(|(a, b)| (a ^ b).count_ones() as usize)
        .sum())
}
