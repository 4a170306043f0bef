use std::fmt;

use crate::error::{Error, Result};
use crate::gf4::Z4Vector;

/// Generator rows of a quaternary code in block layout: order-two rows
/// (entries in {0, 2}) first, then rows with at least one odd entry.
///
/// Zero rows are dropped on construction. The length `n` is carried
/// explicitly so that the empty matrix still describes a zero code of a
/// definite length.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GeneratorMatrix {
    n: usize,
    rows: Vec<Z4Vector>,
    order_two: usize,
}

impl GeneratorMatrix {
    /// Stable-partitions `rows` into the block layout.
    pub fn new(n: usize, rows: Vec<Z4Vector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::LengthMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        let (two, four): (Vec<_>, Vec<_>) = rows
            .into_iter()
            .filter(|r| !r.is_zero())
            .partition(Z4Vector::is_order_two);
        let order_two = two.len();
        let mut rows = two;
        rows.extend(four);
        Ok(Self { n, rows, order_two })
    }

    /// Parses rows written as digit strings, e.g. `["02", "11"]`.
    pub fn from_strs(n: usize, rows: &[&str]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|s| Z4Vector::new(s.bytes().map(|b| b.wrapping_sub(b'0')).collect()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, rows)
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            rows: Vec::new(),
            order_two: 0,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            n,
            rows: (0..n).map(|i| Z4Vector::unit(n, i)).collect(),
            order_two: 0,
        }
    }

    pub(crate) fn from_parts_unchecked(n: usize, rows: Vec<Z4Vector>, order_two: usize) -> Self {
        debug_assert!(rows[..order_two].iter().all(Z4Vector::is_order_two));
        debug_assert!(rows[order_two..].iter().all(|r| !r.is_order_two()));
        Self { n, rows, order_two }
    }

    /// Code length (number of quaternary coordinates).
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Z4Vector] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn order_two_rows(&self) -> &[Z4Vector] {
        &self.rows[..self.order_two]
    }

    pub fn order_four_rows(&self) -> &[Z4Vector] {
        &self.rows[self.order_two..]
    }

    /// Rows scaled by `c` (zero rows that appear are dropped).
    pub fn scaled(&self, c: u8) -> Self {
        Self::new(self.n, self.rows.iter().map(|r| r.scale(c)).collect())
            .expect("scaling preserves row length")
    }

    /// Every row multiplied componentwise by `diag`.
    pub fn times_diagonal(&self, diag: &Z4Vector) -> Result<Self> {
        let rows = self
            .rows
            .iter()
            .map(|r| r.schur(diag))
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.n, rows)
    }

    /// Stacks the rows of several matrices of the same length.
    pub fn stack(n: usize, parts: &[&GeneratorMatrix]) -> Result<Self> {
        let mut rows = Vec::new();
        for p in parts {
            if p.n != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: p.n,
                });
            }
            rows.extend(p.rows.iter().cloned());
        }
        Self::new(n, rows)
    }
}

impl fmt::Display for GeneratorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i == self.order_two && i > 0 {
                writeln!(f, "{}", "-".repeat(self.n))?;
            }
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GeneratorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GeneratorMatrix")
            .field("n", &self.n)
            .field("order_two", &self.order_two_rows())
            .field("order_four", &self.order_four_rows())
            .finish()
    }
}
