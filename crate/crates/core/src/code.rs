use std::fmt;

use crate::canonical::{reduces_to_zero, standard_form, StandardForm};
use crate::error::{Error, Result};
use crate::gf4::Z4Vector;
use crate::matrix::GeneratorMatrix;

/// Type `(N; γ, δ)` of a quaternary linear code: the code is isomorphic to
/// Z2^γ × Z4^δ and has 2^(γ+2δ) codewords.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CodeType {
    pub n: usize,
    pub gamma: usize,
    pub delta: usize,
}

impl CodeType {
    /// log2 of the number of codewords.
    pub fn log2_size(&self) -> usize {
        self.gamma + 2 * self.delta
    }
}

impl fmt::Display for CodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "N={} GAMMA={} DELTA={}", self.n, self.gamma, self.delta)
    }
}

/// A quaternary linear code.
///
/// Keeps two matrices: the generator it was built from (construction
/// layout, needed by the BQ-Plotkin transforms) and its canonical form
/// (used for type, membership, equality and enumeration).
#[derive(Clone)]
pub struct QuaternaryCode {
    generator: GeneratorMatrix,
    form: StandardForm,
}

impl QuaternaryCode {
    pub fn from_matrix(generator: GeneratorMatrix) -> Self {
        let form = standard_form(generator.n(), generator.rows());
        Self { generator, form }
    }

    pub fn from_rows(n: usize, rows: Vec<Z4Vector>) -> Result<Self> {
        Ok(Self::from_matrix(GeneratorMatrix::new(n, rows)?))
    }

    /// Convenience for tests and examples: rows as digit strings.
    pub fn from_strs(n: usize, rows: &[&str]) -> Result<Self> {
        Ok(Self::from_matrix(GeneratorMatrix::from_strs(n, rows)?))
    }

    pub fn zero(n: usize) -> Self {
        Self::from_matrix(GeneratorMatrix::empty(n))
    }

    pub fn whole_space(n: usize) -> Self {
        Self::from_matrix(GeneratorMatrix::identity(n))
    }

    /// The code `{0, 2·1}` spanned by the all-twos vector.
    pub fn repetition(n: usize) -> Self {
        Self::from_matrix(
            GeneratorMatrix::new(n, vec![Z4Vector::all_twos(n)]).expect("row has length n"),
        )
    }

    pub fn n(&self) -> usize {
        self.generator.n()
    }

    pub fn gamma(&self) -> usize {
        self.form.two_pivots.len()
    }

    pub fn delta(&self) -> usize {
        self.form.four_pivots.len()
    }

    pub fn code_type(&self) -> CodeType {
        CodeType {
            n: self.n(),
            gamma: self.gamma(),
            delta: self.delta(),
        }
    }

    pub fn log2_size(&self) -> usize {
        self.gamma() + 2 * self.delta()
    }

    /// The matrix this code was built from, in block layout.
    pub fn generator(&self) -> &GeneratorMatrix {
        &self.generator
    }

    /// Canonical generator matrix; identical for identical codes.
    pub fn canonical(&self) -> &GeneratorMatrix {
        &self.form.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.form.matrix.is_empty()
    }

    pub fn is_whole_space(&self) -> bool {
        self.gamma() == 0 && self.delta() == self.n()
    }

    /// Membership by reduction against the canonical form.
    pub fn contains(&self, v: &Z4Vector) -> Result<bool> {
        if v.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                found: v.len(),
            });
        }
        Ok(reduces_to_zero(&self.form, v.entries()))
    }

    /// True iff every generator of `self` lies in `other`.
    pub fn is_subcode_of(&self, other: &QuaternaryCode) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::LengthMismatch {
                expected: other.n(),
                found: self.n(),
            });
        }
        for row in self.canonical().rows() {
            if !other.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Same set of codewords.
    pub fn same_code(&self, other: &QuaternaryCode) -> bool {
        self.n() == other.n() && self.canonical() == other.canonical()
    }

    /// The same code, with its canonical form as generator.
    pub fn canonicalized(&self) -> Self {
        Self {
            generator: self.form.matrix.clone(),
            form: self.form.clone(),
        }
    }

    pub(crate) fn four_pivots(&self) -> &[usize] {
        &self.form.four_pivots
    }

    pub(crate) fn two_pivots(&self) -> &[usize] {
        &self.form.two_pivots
    }
}

impl fmt::Debug for QuaternaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QuaternaryCode")
            .field("type", &self.code_type())
            .field("canonical", &self.form.matrix)
            .finish()
    }
}

/// Canonical generator matrix of the span of `rows`.
pub fn canonical_form(n: usize, rows: &[Z4Vector]) -> Result<GeneratorMatrix> {
    if let Some(bad) = rows.iter().find(|r| r.len() != n) {
        return Err(Error::LengthMismatch {
            expected: n,
            found: bad.len(),
        });
    }
    Ok(standard_form(n, rows).matrix)
}

pub fn is_subcode(a: &QuaternaryCode, b: &QuaternaryCode) -> Result<bool> {
    a.is_subcode_of(b)
}

pub fn codes_equal(a: &QuaternaryCode, b: &QuaternaryCode) -> bool {
    a.same_code(b)
}
