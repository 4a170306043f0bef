//! Exhaustive enumeration, Lee weight distributions and minimum distance.
//!
//! Codewords are walked with a mixed-radix odometer over the canonical
//! generators (radix 2 for order-two rows, 4 for order-four rows). Each
//! digit increment adds one generator, and a wrap adds it once more, which
//! returns that digit's contribution to zero. Internally words are packed
//! as two bit planes; with `x = 2h + l`, addition is
//! `l' = l1 ^ l2`, `h' = h1 ^ h2 ^ (l1 & l2)`, and the Lee weight is
//! `popcount(h) + popcount(h ^ l)` (the Hamming weight of the Gray image).

use crate::code::QuaternaryCode;
use crate::error::{Error, Result};
use crate::gf4::Z4Vector;

/// Default enumeration cap, in codewords.
pub const DEFAULT_CAP: u64 = 1 << 26;

fn check_cap(code: &QuaternaryCode, cap: u64) -> Result<()> {
    let log2 = code.log2_size();
    if log2 >= 64 || (1u64 << log2) > cap {
        return Err(Error::CapExceeded {
            log2_size: log2,
            cap,
        });
    }
    Ok(())
}

/// Bit-plane packed rows.
struct Packed {
    words: usize,
    lo: Vec<u64>,
    hi: Vec<u64>,
}

impl Packed {
    fn new(n: usize, rows: &[Z4Vector]) -> Self {
        let words = n.div_ceil(64).max(1);
        let mut lo = vec![0u64; words * rows.len()];
        let mut hi = vec![0u64; words * rows.len()];
        for (r, row) in rows.iter().enumerate() {
            for (i, &x) in row.entries().iter().enumerate() {
                let (w, b) = (r * words + i / 64, i % 64);
                lo[w] |= u64::from(x & 1) << b;
                hi[w] |= u64::from(x >> 1) << b;
            }
        }
        Self { words, lo, hi }
    }

    #[inline]
    fn add_row(&self, r: usize, lo: &mut [u64], hi: &mut [u64]) {
        let base = r * self.words;
        for t in 0..self.words {
            let (a, b) = (lo[t], hi[t]);
            let (c, d) = (self.lo[base + t], self.hi[base + t]);
            lo[t] = a ^ c;
            hi[t] = b ^ d ^ (a & c);
        }
    }
}

#[inline]
fn packed_lee_weight(lo: &[u64], hi: &[u64]) -> usize {
    lo.iter()
        .zip(hi)
        .map(|(l, h)| (h.count_ones() + (h ^ l).count_ones()) as usize)
        .sum()
}

fn unpack(n: usize, lo: &[u64], hi: &[u64]) -> Z4Vector {
    Z4Vector::from_reduced((0..n).map(|i| {
        let (w, b) = (i / 64, i % 64);
        (((hi[w] >> b) & 1) << 1 | ((lo[w] >> b) & 1)) as u8
    }))
}

fn radices(code: &QuaternaryCode) -> Vec<u8> {
    let mut r = vec![2u8; code.gamma()];
    r.extend(std::iter::repeat_n(4u8, code.delta()));
    r
}

/// Calls `visit` with the bit planes of every codeword, in odometer order.
fn walk_packed<F: FnMut(&[u64], &[u64])>(code: &QuaternaryCode, mut visit: F) {
    let rows = code.canonical().rows();
    let packed = Packed::new(code.n(), rows);
    let radix = radices(code);
    let k = rows.len();
    let mut digits = vec![0u8; k];
    let mut lo = vec![0u64; packed.words];
    let mut hi = vec![0u64; packed.words];
    visit(&lo, &hi);
    loop {
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            packed.add_row(i, &mut lo, &mut hi);
            digits[i] += 1;
            if digits[i] < radix[i] {
                break;
            }
            digits[i] = 0;
        }
        visit(&lo, &hi);
    }
}

/// Iterator over all codewords, yielded in lexicographic order of the
/// coefficient tuples over the canonical generators (last generator
/// varying fastest).
pub struct Codewords {
    n: usize,
    packed: Packed,
    radix: Vec<u8>,
    digits: Vec<u8>,
    lo: Vec<u64>,
    hi: Vec<u64>,
    started: bool,
    done: bool,
}

impl Iterator for Codewords {
    type Item = Z4Vector;

    fn next(&mut self) -> Option<Z4Vector> {
        if self.done {
            return None;
        }
        if self.started {
            let mut i = self.digits.len();
            loop {
                if i == 0 {
                    self.done = true;
                    return None;
                }
                i -= 1;
                self.packed.add_row(i, &mut self.lo, &mut self.hi);
                self.digits[i] += 1;
                if self.digits[i] < self.radix[i] {
                    break;
                }
                self.digits[i] = 0;
            }
        }
        self.started = true;
        Some(unpack(self.n, &self.lo, &self.hi))
    }
}

/// Enumerates every codeword exactly once; fails if the code is larger
/// than `cap`.
pub fn enumerate_codewords(code: &QuaternaryCode, cap: u64) -> Result<Codewords> {
    check_cap(code, cap)?;
    let packed = Packed::new(code.n(), code.canonical().rows());
    let words = packed.words;
    Ok(Codewords {
        n: code.n(),
        packed,
        radix: radices(code),
        digits: vec![0; code.canonical().row_count()],
        lo: vec![0; words],
        hi: vec![0; words],
        started: false,
        done: false,
    })
}

/// Number of codewords of each Lee weight `0..=2N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeeWeightDistribution {
    counts: Vec<u64>,
}

impl LeeWeightDistribution {
    pub fn from_counts(counts: Vec<u64>) -> Self {
        Self { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Smallest nonzero weight that occurs, if any.
    pub fn min_nonzero_weight(&self) -> Option<usize> {
        self.counts
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, &c)| c > 0)
            .map(|(w, _)| w)
    }
}

pub fn lee_weight_distribution(code: &QuaternaryCode, cap: u64) -> Result<LeeWeightDistribution> {
    check_cap(code, cap)?;
    let mut counts = vec![0u64; 2 * code.n() + 1];
    walk_packed(code, |lo, hi| counts[packed_lee_weight(lo, hi)] += 1);
    Ok(LeeWeightDistribution { counts })
}

/// Canonical generators all of even Lee weight and `γ + 2δ = 2N - 1`:
/// the code is the even-weight code.
fn is_even_code(code: &QuaternaryCode) -> bool {
    code.n() > 0
        && code.log2_size() == 2 * code.n() - 1
        && code
            .canonical()
            .rows()
            .iter()
            .all(|r| r.lee_weight() % 2 == 0)
}

/// Exact minimum Lee distance (minimum nonzero Lee weight).
///
/// The whole space and the even-weight code are recognised from their type
/// and answered directly; everything else is enumerated within `cap`.
pub fn min_lee_distance(code: &QuaternaryCode, cap: u64) -> Result<usize> {
    if code.is_zero() {
        return Err(Error::ZeroCode);
    }
    if code.is_whole_space() {
        return Ok(1);
    }
    if is_even_code(code) {
        return Ok(2);
    }
    check_cap(code, cap)?;
    let mut best = usize::MAX;
    let mut first = true;
    walk_packed(code, |lo, hi| {
        if first {
            first = false;
            return;
        }
        best = best.min(packed_lee_weight(lo, hi));
    });
    Ok(best)
}

/// Minimum Lee distance by searching outward from zero: all vectors of Lee
/// weight 1, 2, ... are tested for membership until one is found.
///
/// There are C(2N, w) vectors of Lee weight `w` in Z4^N, so this is cheap
/// whenever the distance is small, independent of the code size. Fails if
/// more than `budget` vectors would be tested.
pub fn min_lee_distance_by_ball(code: &QuaternaryCode, budget: u64) -> Result<usize> {
    if code.is_zero() {
        return Err(Error::ZeroCode);
    }
    let n = code.n();
    let mut visited = 0u64;
    let mut scratch = vec![0u8; n];
    for w in 1..=2 * n {
        let mut found = false;
        search_weight(code, &mut scratch, 0, w, &mut visited, budget, &mut found)?;
        if found {
            return Ok(w);
        }
    }
    unreachable!("a nonzero code has a nonzero codeword of weight at most 2N")
}

fn search_weight(
    code: &QuaternaryCode,
    v: &mut Vec<u8>,
    pos: usize,
    remaining: usize,
    visited: &mut u64,
    budget: u64,
    found: &mut bool,
) -> Result<()> {
    if *found {
        return Ok(());
    }
    if remaining == 0 {
        *visited += 1;
        if *visited > budget {
            return Err(Error::SearchBudgetExceeded { budget });
        }
        let word = Z4Vector::from_reduced(v.iter().copied());
        if code.contains(&word)? {
            *found = true;
        }
        return Ok(());
    }
    if pos == v.len() || 2 * (v.len() - pos) < remaining {
        return Ok(());
    }
    // symbol choices in increasing Lee weight: 0, then 1 and 3, then 2
    for (sym, wt) in [(0u8, 0usize), (1, 1), (3, 1), (2, 2)] {
        if wt > remaining {
            continue;
        }
        v[pos] = sym;
        search_weight(code, v, pos + 1, remaining - wt, visited, budget, found)?;
        v[pos] = 0;
        if *found {
            return Ok(());
        }
    }
    Ok(())
}
