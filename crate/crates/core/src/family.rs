//! The families `RM_s(r, m)` of quaternary linear Reed-Muller codes.
//!
//! Length is `N = 2^(m-1)` quaternary coordinates (binary length `2^m`),
//! with `0 <= s <= floor((m-1)/2)` and `-1 <= r <= m`. Construction:
//!
//! * `m = 1`: `RM_0(0,1) = <(2)>`, `RM_0(1,1) = <(1)>`;
//! * `r = -1`: zero code; `r = 0`: all-twos repetition; `r = m`: identity;
//! * `m` odd and `s = (m-1)/2`: BQ-Plotkin from the family `s - 1` at
//!   `m - 2`, with `RM_s(m-1,m) = BQ(RM(m-2), RM(m-2), RM(m-3))`;
//! * otherwise Plotkin from the same family at `m - 1`.

use std::collections::HashMap;
use std::fmt;

use crate::code::{CodeType, QuaternaryCode};
use crate::constructions::{bq_plotkin, plotkin};
use crate::error::{Error, Result};
use crate::matrix::GeneratorMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RmIndex {
    s: usize,
    r: i64,
    m: usize,
}

/// How a family member is obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Recipe {
    Base,
    Zero,
    Repetition,
    WholeSpace,
    Plotkin,
    BqPlotkin,
}

impl RmIndex {
    pub fn new(s: usize, r: i64, m: usize) -> Result<Self> {
        let fail = |reason: String| Err(Error::InvalidIndex { s, r, m, reason });
        if m < 1 {
            return fail("m must be at least 1".into());
        }
        if r < -1 || r > m as i64 {
            return fail(format!("r must satisfy -1 <= r <= {m}"));
        }
        if s > (m - 1) / 2 {
            return fail(format!("s must satisfy 0 <= s <= {}", (m - 1) / 2));
        }
        Ok(Self { s, r, m })
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Quaternary length `2^(m-1)`.
    pub fn length(&self) -> usize {
        1 << (self.m - 1)
    }

    /// True for the families only reachable through BQ-Plotkin.
    pub fn uses_bq(&self) -> bool {
        self.m % 2 == 1 && self.m >= 3 && self.s == (self.m - 1) / 2
    }

    pub fn recipe(&self) -> Recipe {
        match self.r {
            -1 => Recipe::Zero,
            _ if self.m == 1 => Recipe::Base,
            0 => Recipe::Repetition,
            r if r == self.m as i64 => Recipe::WholeSpace,
            _ if self.uses_bq() => Recipe::BqPlotkin,
            _ => Recipe::Plotkin,
        }
    }

    fn shifted(&self, ds: usize, dr: i64, dm: usize) -> RmIndex {
        RmIndex {
            s: self.s - ds,
            r: self.r - dr,
            m: self.m - dm,
        }
    }

    /// Inputs `(A, B)` of the Plotkin step, or `(A, B, C)` of the BQ step.
    fn parents(&self) -> Vec<RmIndex> {
        match self.recipe() {
            Recipe::Plotkin => vec![self.shifted(0, 0, 1), self.shifted(0, 1, 1)],
            Recipe::BqPlotkin if self.r == self.m as i64 - 1 => {
                let top = self.shifted(1, 1, 2);
                vec![top, top, self.shifted(1, 2, 2)]
            }
            Recipe::BqPlotkin => vec![
                self.shifted(1, 0, 2),
                self.shifted(1, 1, 2),
                self.shifted(1, 2, 2),
            ],
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for RmIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RM_{}({},{})", self.s, self.r, self.m)
    }
}

fn binomial(m: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (m - i) / (i + 1))
}

/// `Σ_{i=0}^{r} C(m, i)`, log2 of the size of `RM_s(r, m)`; 0 for `r = -1`.
pub fn rm_dimension(r: i64, m: usize) -> usize {
    if r < 0 {
        return 0;
    }
    (0..=(r as usize).min(m)).map(|i| binomial(m, i)).sum()
}

/// Memoised builder. Stored generator matrices are exactly those produced
/// by the constructions, so later BQ steps see the same `G'` and `Ĝ`.
#[derive(Default)]
pub struct RmBuilder {
    memo: HashMap<RmIndex, QuaternaryCode>,
}

impl RmBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, idx: RmIndex) -> &QuaternaryCode {
        if !self.memo.contains_key(&idx) {
            let code = self.build(idx);
            self.memo.insert(idx, code);
        }
        &self.memo[&idx]
    }

    pub fn code(&mut self, s: usize, r: i64, m: usize) -> Result<QuaternaryCode> {
        Ok(self.get(RmIndex::new(s, r, m)?).clone())
    }

    fn build(&mut self, idx: RmIndex) -> QuaternaryCode {
        let n = idx.length();
        match idx.recipe() {
            Recipe::Zero => QuaternaryCode::zero(n),
            Recipe::Base => QuaternaryCode::from_strs(1, &[if idx.r == 0 { "2" } else { "1" }])
                .expect("base matrices are valid"),
            Recipe::Repetition => QuaternaryCode::repetition(n),
            Recipe::WholeSpace => QuaternaryCode::from_matrix(GeneratorMatrix::identity(n)),
            Recipe::Plotkin => {
                let p = idx.parents();
                let a = self.get(p[0]).clone();
                let b = self.get(p[1]);
                plotkin(&a, b).expect("parents share a length")
            }
            Recipe::BqPlotkin => {
                let p = idx.parents();
                let a = self.get(p[0]).clone();
                let b = self.get(p[1]).clone();
                let c = self.get(p[2]);
                bq_plotkin(&a, &b, c).expect("parents share a length")
            }
        }
    }
}

/// Builds `RM_s(r, m)`.
pub fn rm_code(idx: RmIndex) -> QuaternaryCode {
    RmBuilder::new().get(idx).clone()
}

/// `(γ, δ)` for every family `s` and order `r = 0..=m` at fixed `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RmTable {
    pub m: usize,
    /// `rows[s][r]`
    pub rows: Vec<Vec<(usize, usize)>>,
}

impl fmt::Display for RmTable {
    /// One line per family, entries `(γ,δ)` separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|(g, d)| format!("({g},{d})")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

pub fn rm_table(m: usize) -> Result<RmTable> {
    RmIndex::new(0, 0, m)?;
    let mut builder = RmBuilder::new();
    let rows = (0..=(m - 1) / 2)
        .map(|s| {
            (0..=m as i64)
                .map(|r| {
                    let c = builder.get(RmIndex { s, r, m });
                    (c.gamma(), c.delta())
                })
                .collect()
        })
        .collect();
    Ok(RmTable { m, rows })
}

/// `(γ, δ)` from the type recurrences alone, without building any code.
pub fn rm_gamma_delta_predicted(idx: RmIndex) -> (usize, usize) {
    fn go(idx: RmIndex, memo: &mut HashMap<RmIndex, (usize, usize)>) -> (usize, usize) {
        if let Some(&v) = memo.get(&idx) {
            return v;
        }
        let v = match idx.recipe() {
            Recipe::Zero => (0, 0),
            Recipe::Base | Recipe::Repetition if idx.r == 0 => (1, 0),
            Recipe::Base => (0, 1),
            Recipe::Repetition => unreachable!(),
            Recipe::WholeSpace => (0, idx.length()),
            Recipe::Plotkin => {
                let p = idx.parents();
                let (a, b) = (go(p[0], memo), go(p[1], memo));
                (a.0 + b.0, a.1 + b.1)
            }
            Recipe::BqPlotkin => {
                let p = idx.parents();
                let (a, b, c) = (go(p[0], memo), go(p[1], memo), go(p[2], memo));
                (a.0 + c.0, a.1 + b.0 + 2 * b.1 + c.1)
            }
        };
        memo.insert(idx, v);
        v
    }
    go(idx, &mut HashMap::new())
}

/// Type of `RM_s(r, m)` as a [`CodeType`], from the recurrences.
pub fn rm_type_predicted(idx: RmIndex) -> CodeType {
    let (gamma, delta) = rm_gamma_delta_predicted(idx);
    CodeType {
        n: idx.length(),
        gamma,
        delta,
    }
}
