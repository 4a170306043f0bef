//! Inner products, dual codes and the MacWilliams identity for the Lee
//! weight enumerator.

use std::fmt;
use std::str::FromStr;

use crate::code::QuaternaryCode;
use crate::enumerate::{lee_weight_distribution, LeeWeightDistribution};
use crate::error::{Error, Result};
use crate::gf4::Z4Vector;
use crate::matrix::GeneratorMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InnerProductKind {
    /// `Σ u_i v_i mod 4`.
    Standard,
    /// `u · K_N · v^t` with `K_N` the Kronecker power of `diag(1, 3)`.
    Kronecker,
}

impl fmt::Display for InnerProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Standard => "standard",
            Self::Kronecker => "kronecker",
        })
    }
}

impl FromStr for InnerProductKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "standard" => Ok(Self::Standard),
            "kronecker" => Ok(Self::Kronecker),
            other => Err(format!("unknown inner product `{other}`")),
        }
    }
}

/// Diagonal of `K_N`: entry `i` is `3^popcount(i) mod 4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KroneckerDiagonal(Z4Vector);

impl KroneckerDiagonal {
    pub fn diag(&self) -> &Z4Vector {
        &self.0
    }
}

pub fn kronecker_diagonal(n: usize) -> Result<KroneckerDiagonal> {
    if !n.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(n));
    }
    Ok(KroneckerDiagonal(Z4Vector::from_reduced((0..n).map(|i| {
        if i.count_ones() % 2 == 0 {
            1
        } else {
            3
        }
    }))))
}

fn check_lengths(u: &Z4Vector, v: &Z4Vector) -> Result<()> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            expected: u.len(),
            found: v.len(),
        });
    }
    Ok(())
}

pub fn standard_inner(u: &Z4Vector, v: &Z4Vector) -> Result<u8> {
    check_lengths(u, v)?;
    Ok(u.entries()
        .iter()
        .zip(v.entries())
        .fold(0u8, |acc, (a, b)| (acc + a * b) & 3))
}

pub fn kronecker_inner(u: &Z4Vector, v: &Z4Vector) -> Result<u8> {
    check_lengths(u, v)?;
    let k = kronecker_diagonal(u.len())?;
    standard_inner(u, &v.schur(k.diag())?)
}

pub fn inner_product(u: &Z4Vector, v: &Z4Vector, kind: InnerProductKind) -> Result<u8> {
    match kind {
        InnerProductKind::Standard => standard_inner(u, v),
        InnerProductKind::Kronecker => kronecker_inner(u, v),
    }
}

/// Standard dual, read off the canonical form.
///
/// After permuting columns to `[P | Q | rest]` (order-four pivots, order-two
/// pivots, the remaining columns) the canonical matrix is
/// `[[I, A, B], [0, 2I, 2C]]` with `A`, `C` binary. A vector `x` is
/// orthogonal to it iff `x_P = -(A x_Q + B x_R)` and `x_Q ≡ C x_R (mod 2)`,
/// giving order-four generators `x_R = e_k, x_Q = C e_k` and order-two
/// generators `x_R = 0, x_Q = 2 e_j`.
fn standard_dual(code: &QuaternaryCode) -> QuaternaryCode {
    let n = code.n();
    let canon = code.canonical();
    let taus = canon.order_two_rows();
    let gs = canon.order_four_rows();
    let p = code.four_pivots();
    let q = code.two_pivots();
    let mut is_pivot = vec![false; n];
    for &c in p.iter().chain(q) {
        is_pivot[c] = true;
    }

    // x_P from x (with x_Q and x_R already set): x_P[i] = -Σ_{c ∉ P} g_i[c] x[c].
    let fill_p = |x: &mut Vec<u8>| {
        for (g, &pc) in gs.iter().zip(p) {
            let s = g
                .entries()
                .iter()
                .zip(x.iter())
                .enumerate()
                .filter(|(c, _)| !p.contains(c))
                .fold(0u8, |acc, (_, (a, b))| (acc + a * b) & 3);
            x[pc] = (4 - s) & 3;
        }
    };

    let mut rows = Vec::new();
    for &qc in q {
        let mut x = vec![0u8; n];
        x[qc] = 2;
        fill_p(&mut x);
        rows.push(Z4Vector::from_reduced(x));
    }
    for k in (0..n).filter(|&c| !is_pivot[c]) {
        let mut x = vec![0u8; n];
        x[k] = 1;
        for (t, &qc) in taus.iter().zip(q) {
            x[qc] = t.entries()[k] >> 1;
        }
        fill_p(&mut x);
        rows.push(Z4Vector::from_reduced(x));
    }
    QuaternaryCode::from_matrix(GeneratorMatrix::new(n, rows).expect("rows have length n"))
}

/// `{ u : <u, v> = 0 for all v in C }` under the chosen inner product.
pub fn dual_code(code: &QuaternaryCode, kind: InnerProductKind) -> Result<QuaternaryCode> {
    let std_dual = standard_dual(code);
    match kind {
        InnerProductKind::Standard => Ok(std_dual),
        InnerProductKind::Kronecker => {
            // <u, v>_K = <u, v K>, and K is its own inverse.
            let k = kronecker_diagonal(code.n())?;
            Ok(QuaternaryCode::from_matrix(
                std_dual.generator().times_diagonal(k.diag())?,
            ))
        }
    }
}

/// Generator rows pairwise orthogonal and `|a| · |b| = 4^N`.
pub fn verify_dual_pair(
    a: &QuaternaryCode,
    b: &QuaternaryCode,
    kind: InnerProductKind,
) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::LengthMismatch {
            expected: a.n(),
            found: b.n(),
        });
    }
    if kind == InnerProductKind::Kronecker {
        kronecker_diagonal(a.n())?;
    }
    if a.log2_size() + b.log2_size() != 2 * a.n() {
        return Ok(false);
    }
    for u in a.generator().rows() {
        for v in b.generator().rows() {
            if inner_product(u, v, kind)? != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `(1/|C|) W_C(x + y, x - y)` for the Lee enumerator
/// `W_C(x, y) = Σ A_w x^(2N - w) y^w`. `None` if some coefficient is not
/// divisible by `|C|`, which cannot happen for a linear code.
pub fn macwilliams_transform(dist: &LeeWeightDistribution, n: usize) -> Option<Vec<u64>> {
    let len = 2 * n;
    // (x + y)^(len - w) (x - y)^w, coefficient of x^(len - j) y^j.
    let binom = |a: usize, b: usize| -> i128 {
        if b > a {
            return 0;
        }
        let mut r: i128 = 1;
        for i in 0..b {
            r = r * (a - i) as i128 / (i + 1) as i128;
        }
        r
    };
    let mut out = vec![0i128; len + 1];
    for (w, &count) in dist.counts().iter().enumerate() {
        if count == 0 {
            continue;
        }
        for (j, slot) in out.iter_mut().enumerate() {
            let mut coeff = 0i128;
            for i in 0..=j.min(w) {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                coeff += sign * binom(w, i) * binom(len - w, j - i);
            }
            *slot += count as i128 * coeff;
        }
    }
    let size = dist.total() as i128;
    out.into_iter()
        .map(|c| (c >= 0 && c % size == 0).then(|| (c / size) as u64))
        .collect()
}

/// The dual's enumerated Lee distribution equals the transform of the
/// code's, and both inner products give the same dual distribution.
pub fn macwilliams_check(code: &QuaternaryCode, kind: InnerProductKind, cap: u64) -> Result<bool> {
    let dist = lee_weight_distribution(code, cap)?;
    let dual = dual_code(code, kind)?;
    let dual_dist = lee_weight_distribution(&dual, cap)?;
    let predicted = macwilliams_transform(&dist, code.n());
    if predicted.as_deref() != Some(dual_dist.counts()) {
        return Ok(false);
    }
    let other = match kind {
        InnerProductKind::Standard => InnerProductKind::Kronecker,
        InnerProductKind::Kronecker => InnerProductKind::Standard,
    };
    if !code.n().is_power_of_two() {
        return Ok(true);
    }
    let other_dist = lee_weight_distribution(&dual_code(code, other)?, cap)?;
    Ok(other_dist == dual_dist)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::codes_equal;
    use crate::enumerate::{enumerate_codewords, DEFAULT_CAP};

    fn v(s: &str) -> Z4Vector {
        Z4Vector::new(s.bytes().map(|b| b - b'0').collect()).unwrap()
    }

    fn code(n: usize, rows: &[&str]) -> QuaternaryCode {
        QuaternaryCode::from_strs(n, rows).unwrap()
    }

    #[test]
    fn inner_products() {
        assert_eq!(standard_inner(&v("1111"), &v("0123")).unwrap(), 2);
        assert_eq!(standard_inner(&v("2"), &v("2")).unwrap(), 0);
        assert_eq!(kronecker_inner(&v("11"), &v("11")).unwrap(), 0);
        assert!(standard_inner(&v("1"), &v("11")).is_err());
        assert!(matches!(
            kronecker_inner(&v("111"), &v("111")),
            Err(Error::NotPowerOfTwo(3))
        ));
    }

    #[test]
    fn diagonals() {
        assert_eq!(kronecker_diagonal(1).unwrap().diag(), &v("1"));
        assert_eq!(kronecker_diagonal(2).unwrap().diag(), &v("13"));
        assert_eq!(kronecker_diagonal(4).unwrap().diag(), &v("1331"));
        assert!(kronecker_diagonal(6).is_err());
    }

    #[test]
    fn trivial_duals() {
        let w = QuaternaryCode::whole_space(3);
        assert!(dual_code(&w, InnerProductKind::Standard).unwrap().is_zero());
        let z = QuaternaryCode::zero(3);
        assert!(dual_code(&z, InnerProductKind::Standard)
            .unwrap()
            .is_whole_space());
    }

    #[test]
    fn rm113_is_kronecker_self_dual() {
        let c = code(4, &["1111", "0123"]);
        let d = dual_code(&c, InnerProductKind::Kronecker).unwrap();
        assert!(codes_equal(&c, &d));
        assert!(verify_dual_pair(&c, &c, InnerProductKind::Kronecker).unwrap());
    }

    #[test]
    fn dual_pair_examples() {
        let rm002 = code(2, &["22"]);
        let rm012 = code(2, &["02", "11"]);
        assert!(verify_dual_pair(&rm002, &rm012, InnerProductKind::Kronecker).unwrap());
        assert!(verify_dual_pair(
            &QuaternaryCode::whole_space(2),
            &QuaternaryCode::zero(2),
            InnerProductKind::Standard
        )
        .unwrap());
        assert!(!verify_dual_pair(&rm012, &rm012, InnerProductKind::Kronecker).unwrap());
    }

    #[test]
    fn dual_is_orthogonal_and_sized() {
        // length 3 with a mixed type, checked by brute force
        let c = code(3, &["021", "112", "220"]);
        let d = dual_code(&c, InnerProductKind::Standard).unwrap();
        assert_eq!(c.log2_size() + d.log2_size(), 6);
        let words: Vec<_> = enumerate_codewords(&c, DEFAULT_CAP).unwrap().collect();
        let mut count = 0;
        for x in enumerate_codewords(&QuaternaryCode::whole_space(3), DEFAULT_CAP).unwrap() {
            let orth = words.iter().all(|w| standard_inner(&x, w).unwrap() == 0);
            assert_eq!(orth, d.contains(&x).unwrap(), "{x}");
            count += orth as usize;
        }
        assert_eq!(count, 1 << d.log2_size());
    }

    #[test]
    fn macwilliams_by_hand() {
        // RM_0(1,2): Lee weights 0,2,2,4 for {00,02,20,22} and 2 for the four odd words.
        let c = code(2, &["02", "11"]);
        let dist = lee_weight_distribution(&c, DEFAULT_CAP).unwrap();
        assert_eq!(dist.counts(), [1, 0, 6, 0, 1]);
        // dual {00, 22}
        assert_eq!(macwilliams_transform(&dist, 2).unwrap(), [1u64, 0, 0, 0, 1]);
        assert!(macwilliams_check(&c, InnerProductKind::Kronecker, DEFAULT_CAP).unwrap());
        assert!(macwilliams_check(
            &QuaternaryCode::whole_space(1),
            InnerProductKind::Standard,
            DEFAULT_CAP
        )
        .unwrap());
    }

    #[test]
    fn kind_parsing() {
        assert_eq!(
            "kronecker".parse::<InnerProductKind>(),
            Ok(InnerProductKind::Kronecker)
        );
        assert!("hermitian".parse::<InnerProductKind>().is_err());
        assert_eq!(InnerProductKind::Standard.to_string(), "standard");
    }
}
