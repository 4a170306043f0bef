//! Arithmetic over Z4 and Z2, the Gray map and the Lee/Hamming weights.
//!
//! Ring elements are stored as `u8` values in `0..4`; every operation
//! reduces modulo 4 before returning. Vectors are immutable values.
//!
//! The Gray map sends each quaternary symbol to two bits,
//!
//! ```text
//! 0 -> 00    1 -> 01    2 -> 11    3 -> 10
//! ```
//!
//! coordinate-major, so coordinate `i` lands on bits `2i` and `2i + 1`.
//! It is an isometry from (Z4^N, Lee) to (Z2^2N, Hamming).

use std::fmt;

use crate::error::{Error, Result};

/// Lee weight of a single symbol.
#[inline]
pub fn symbol_lee_weight(x: u8) -> usize {
    match x & 3 {
        0 => 0,
        2 => 2,
        _ => 1,
    }
}

#[inline]
fn gray_bits(x: u8) -> (u8, u8) {
    match x & 3 {
        0 => (0, 0),
        1 => (0, 1),
        2 => (1, 1),
        _ => (1, 0),
    }
}

/// A vector over the integers modulo 4.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Z4Vector(Vec<u8>);

impl Z4Vector {
    /// Builds a vector, rejecting entries outside `0..4`.
    pub fn new(entries: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = entries.iter().find(|&&x| x > 3) {
            return Err(Error::InvalidSymbol(bad));
        }
        Ok(Self(entries))
    }

    /// Builds a vector from arbitrary integers, reducing each modulo 4.
    pub fn from_reduced<I: IntoIterator<Item = u8>>(entries: I) -> Self {
        Self(entries.into_iter().map(|x| x & 3).collect())
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn all_twos(n: usize) -> Self {
        Self(vec![2; n])
    }

    pub fn all_ones(n: usize) -> Self {
        Self(vec![1; n])
    }

    /// The `i`-th standard basis vector of length `n`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Self(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u8] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u8> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// True when every entry is 0 or 2, i.e. `2v = 0`.
    pub fn is_order_two(&self) -> bool {
        self.0.iter().all(|&x| x & 1 == 0)
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }

    /// Componentwise sum modulo 4.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| (a + b) & 3)
                .collect(),
        ))
    }

    /// Componentwise difference modulo 4.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| (a + 4 - b) & 3)
                .collect(),
        ))
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|&a| (4 - a) & 3).collect())
    }

    /// Scalar multiple `c * v`; `c` is taken modulo 4.
    pub fn scale(&self, c: u8) -> Self {
        let c = c & 3;
        Self(self.0.iter().map(|&a| (a * c) & 3).collect())
    }

    /// Componentwise (Schur) product.
    pub fn schur(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| (a * b) & 3)
                .collect(),
        ))
    }

    /// Concatenation `(self | other)`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Self(v)
    }

    pub fn lee_weight(&self) -> usize {
        self.0.iter().map(|&x| symbol_lee_weight(x)).sum()
    }

    /// Lee distance, the Lee weight of `self - other`.
    pub fn lee_distance(&self, other: &Self) -> Result<usize> {
        Ok(self.sub(other)?.lee_weight())
    }

    pub fn gray_map(&self) -> Z2Vector {
        let mut bits = Vec::with_capacity(2 * self.len());
        for &x in &self.0 {
            let (a, b) = gray_bits(x);
            bits.push(a);
            bits.push(b);
        }
        Z2Vector(bits)
    }
}

impl fmt::Display for Z4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &x in &self.0 {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Z4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z4Vector({self})")
    }
}

/// A binary vector; Gray images live here.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Z2Vector(Vec<u8>);

impl Z2Vector {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if let Some(&bad) = bits.iter().find(|&&x| x > 1) {
            return Err(Error::InvalidSymbol(bad));
        }
        Ok(Self(bits))
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn hamming_weight(&self) -> usize {
        self.0.iter().filter(|&&b| b == 1).count()
    }

    pub fn xor(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(Self(
            self.0.iter().zip(&other.0).map(|(a, b)| a ^ b).collect(),
        ))
    }
}

impl fmt::Display for Z2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &x in &self.0 {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Z2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z2Vector({self})")
    }
}
