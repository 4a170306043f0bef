//! Parameters and linearity of Gray images.

use std::collections::HashSet;
use std::fmt;

use crate::code::QuaternaryCode;
use crate::enumerate::{enumerate_codewords, min_lee_distance};
use crate::error::{Error, Result};
use crate::gf4::Z4Vector;

/// Binary parameters `(n, 2^k, d)` of the Gray image of a code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrayImageReport {
    pub n: usize,
    pub k: usize,
    /// `None` for the zero code or when the distance is above the cap.
    pub d: Option<usize>,
    pub is_linear: bool,
}

impl fmt::Display for GrayImageReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self
            .d
            .map_or_else(|| "unavailable".to_string(), |d| d.to_string());
        write!(
            f,
            "n={} k={} d={} linear={}",
            self.n,
            self.k,
            d,
            if self.is_linear { "yes" } else { "no" }
        )
    }
}

pub fn gray_image_params(code: &QuaternaryCode, cap: u64) -> GrayImageReport {
    GrayImageReport {
        n: 2 * code.n(),
        k: code.log2_size(),
        d: min_lee_distance(code, cap).ok(),
        is_linear: is_gray_image_linear(code),
    }
}

/// The Gray image is linear iff `2 (u * v)` lies in the code for all
/// codewords `u`, `v`; the obstruction is bilinear, so canonical generator
/// pairs suffice. Order-two generators contribute nothing (`2 (2x * y) = 0`).
pub fn is_gray_image_linear(code: &QuaternaryCode) -> bool {
    let rows = code.canonical().order_four_rows();
    for (i, u) in rows.iter().enumerate() {
        for v in &rows[i + 1..] {
            let w = u.schur(v).expect("rows share a length").scale(2);
            if !code.contains(&w).expect("rows share a length") {
                return false;
            }
        }
    }
    true
}

/// Exhaustive check that the Gray image is closed under XOR.
pub fn gray_image_is_xor_closed(code: &QuaternaryCode, cap: u64) -> Result<bool> {
    let words: Vec<Z4Vector> = enumerate_codewords(code, cap)?.collect();
    let image: HashSet<Vec<u8>> = words.iter().map(|w| w.gray_map().bits().to_vec()).collect();
    for a in &image {
        for b in &image {
            let x: Vec<u8> = a.iter().zip(b).map(|(p, q)| p ^ q).collect();
            if !image.contains(&x) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn distance_within_cap(code: &QuaternaryCode, cap: u64) -> Result<Option<usize>> {
    match min_lee_distance(code, cap) {
        Ok(d) => Ok(Some(d)),
        Err(Error::ZeroCode) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Gray image is a binary `(2^m, 2^(m+1), 2^(m-1))` code.
pub fn hadamard_check(code: &QuaternaryCode, m: usize, cap: u64) -> Result<bool> {
    let n = 1usize << m;
    if 2 * code.n() != n || code.log2_size() != m + 1 {
        return Ok(false);
    }
    Ok(distance_within_cap(code, cap)? == Some(n / 2))
}

/// Gray image is a binary `(2^m, 2^(2^m - m - 1), 4)` code.
pub fn extended_perfect_check(code: &QuaternaryCode, m: usize, cap: u64) -> Result<bool> {
    let n = 1usize << m;
    if 2 * code.n() != n || n < m + 1 || code.log2_size() != n - m - 1 {
        return Ok(false);
    }
    Ok(distance_within_cap(code, cap)? == Some(4))
}
