//! Canonical generator matrices for subgroups of Z4^N.
//!
//! A code `C` determines two binary codes: its residue `R = C mod 2` and its
//! torsion `T = { x : 2x in C }`, with `R ⊆ T`, `dim R = δ` and
//! `dim T = γ + δ`. The canonical form is built from them:
//!
//! * `ρ_1..ρ_δ`, the reduced row echelon basis of `R`, pivots `p_i`;
//! * `τ_1..τ_γ`, the reduced row echelon basis of `{ t in T : t[p_i] = 0 }`,
//!   pivots `q_j` (disjoint from the `p_i`);
//! * order-two rows `2τ_j`;
//! * order-four rows `g_i`, the unique lift of `ρ_i` into `C` with
//!   `g_i[p_i] = 1`, `g_i[p_k] = 0` for `k != i` and `g_i[q_j] in {0, 1}`.
//!
//! The lift is unique because two lifts differ by `2t` with `t in T`, and an
//! element of `T` is determined by its bits at the pivots `p ∪ q`. Every
//! codeword is then `Σ a_i g_i + Σ b_j 2τ_j` with unique `a_i in Z4` and
//! `b_j in {0, 1}`, so the form has exactly `γ + δ` rows.

use crate::gf4::Z4Vector;
use crate::matrix::GeneratorMatrix;

type Bits = Vec<u8>;

fn xor_into(dst: &mut [u8], src: &[u8]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

/// In-place reduced row echelon form over GF(2). `tags` rows are carried
/// along with every row operation. Returns the pivot columns; rows past
/// `pivots.len()` are zero in `rows`.
fn rref_gf2(rows: &mut [Bits], tags: &mut [Bits]) -> Vec<usize> {
    let n = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..n {
        let Some(found) = (next..rows.len()).find(|&r| rows[r][col] == 1) else {
            continue;
        };
        rows.swap(next, found);
        tags.swap(next, found);
        let (pivot_row, pivot_tag) = (rows[next].clone(), tags[next].clone());
        for r in 0..rows.len() {
            if r != next && rows[r][col] == 1 {
                xor_into(&mut rows[r], &pivot_row);
                xor_into(&mut tags[r], &pivot_tag);
            }
        }
        pivots.push(col);
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    pivots
}

fn add_twice(g: &mut [u8], bits: &[u8]) {
    for (x, &b) in g.iter_mut().zip(bits) {
        *x = (*x + 2 * b) & 3;
    }
}

/// Canonical form together with the pivot columns used for reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct StandardForm {
    pub matrix: GeneratorMatrix,
    /// Pivot column of each order-two row, ascending.
    pub two_pivots: Vec<usize>,
    /// Pivot column of each order-four row, ascending.
    pub four_pivots: Vec<usize>,
}

pub(crate) fn standard_form(n: usize, rows: &[Z4Vector]) -> StandardForm {
    let k = rows.len();
    let mut residues: Vec<Bits> = rows
        .iter()
        .map(|r| r.entries().iter().map(|x| x & 1).collect())
        .collect();
    let mut combos: Vec<Bits> = (0..k)
        .map(|i| {
            let mut e = vec![0u8; k];
            e[i] = 1;
            e
        })
        .collect();
    let p = rref_gf2(&mut residues, &mut combos);
    let delta = p.len();

    // Kernel combinations of the residue map give the torsion beyond R:
    // Σ b_j r_j is even, and half of it lies in T.
    let mut extra: Vec<Bits> = combos[delta..]
        .iter()
        .map(|b| {
            let mut sum = vec![0u8; n];
            for (j, _) in b.iter().enumerate().filter(|(_, &bit)| bit == 1) {
                for (s, &x) in sum.iter_mut().zip(rows[j].entries()) {
                    *s = (*s + x) & 3;
                }
            }
            debug_assert!(sum.iter().all(|x| x & 1 == 0));
            let mut y: Bits = sum.iter().map(|x| x >> 1).collect();
            for (i, &col) in p.iter().enumerate() {
                if y[col] == 1 {
                    xor_into(&mut y, &residues[i]);
                }
            }
            y
        })
        .collect();
    let mut no_tags = vec![Vec::new(); extra.len()];
    let q = rref_gf2(&mut extra, &mut no_tags);
    let taus = &extra[..q.len()];

    let sigmas: Vec<Bits> = residues[..delta]
        .iter()
        .map(|rho| {
            let mut s = rho.clone();
            for (j, &col) in q.iter().enumerate() {
                if s[col] == 1 {
                    xor_into(&mut s, &taus[j]);
                }
            }
            s
        })
        .collect();

    let mut out: Vec<Z4Vector> = taus
        .iter()
        .map(|t| Z4Vector::from_reduced(t.iter().map(|b| 2 * b)))
        .collect();

    for i in 0..delta {
        let mut g = vec![0u8; n];
        for (j, _) in combos[i].iter().enumerate().filter(|(_, &bit)| bit == 1) {
            for (s, &x) in g.iter_mut().zip(rows[j].entries()) {
                *s = (*s + x) & 3;
            }
        }
        if g[p[i]] == 3 {
            for x in g.iter_mut() {
                *x = (*x * 3) & 3;
            }
        }
        for (kk, &col) in p.iter().enumerate() {
            if kk != i && g[col] == 2 {
                add_twice(&mut g, &sigmas[kk]);
            }
        }
        for (j, &col) in q.iter().enumerate() {
            if g[col] >= 2 {
                add_twice(&mut g, &taus[j]);
            }
        }
        debug_assert_eq!(g[p[i]], 1);
        out.push(Z4Vector::from_reduced(g));
    }

    StandardForm {
        matrix: GeneratorMatrix::from_parts_unchecked(n, out, q.len()),
        two_pivots: q,
        four_pivots: p,
    }
}

/// Reduces `v` against a standard form; the residue is zero iff `v` is a
/// codeword.
pub(crate) fn reduces_to_zero(form: &StandardForm, v: &[u8]) -> bool {
    let mut w = v.to_vec();
    for (g, &col) in form.matrix.order_four_rows().iter().zip(&form.four_pivots) {
        let c = w[col];
        if c != 0 {
            for (x, &y) in w.iter_mut().zip(g.entries()) {
                *x = (*x + 4 * 3 - c * y) & 3;
            }
        }
    }
    if w.iter().any(|x| x & 1 == 1) {
        return false;
    }
    for (t, &col) in form.matrix.order_two_rows().iter().zip(&form.two_pivots) {
        if w[col] == 2 {
            for (x, &y) in w.iter_mut().zip(t.entries()) {
                *x = (*x + y) & 3;
            }
        }
    }
    w.iter().all(|&x| x == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(n: usize, rows: &[&str]) -> StandardForm {
        let g = GeneratorMatrix::from_strs(n, rows).unwrap();
        standard_form(n, g.rows())
    }

    fn strs(m: &GeneratorMatrix) -> Vec<String> {
        m.rows().iter().map(|r| r.to_string()).collect()
    }

    #[test]
    fn redundant_multiple_collapses() {
        let f = form(2, &["22", "11"]);
        assert_eq!(strs(&f.matrix), ["11"]);
    }

    #[test]
    fn zero_rows_give_empty_form() {
        let f = form(2, &["00"]);
        assert!(f.matrix.is_empty());
    }

    #[test]
    fn plotkin_m2_layout() {
        let f = form(2, &["11", "02"]);
        assert_eq!(strs(&f.matrix), ["02", "11"]);
        assert_eq!(f.two_pivots, [1]);
        assert_eq!(f.four_pivots, [0]);
    }

    #[test]
    fn even_leading_entry_is_order_four() {
        // span{(2,1)} is cyclic of order 4.
        let f = form(2, &["21"]);
        assert_eq!(strs(&f.matrix), ["21"]);
        assert_eq!(f.matrix.order_two_rows().len(), 0);
    }

    #[test]
    fn units_normalised_to_one() {
        let f = form(3, &["301"]);
        assert_eq!(strs(&f.matrix), ["103"]);
    }

    #[test]
    fn idempotent() {
        let f = form(4, &["0002", "1111", "0123", "0011"]);
        let again = standard_form(4, f.matrix.rows());
        assert_eq!(f, again);
    }

    #[test]
    fn membership_by_reduction() {
        let f = form(4, &["1111", "0123"]);
        assert!(reduces_to_zero(&f, &[1, 2, 3, 0]));
        assert!(reduces_to_zero(&f, &[2, 2, 2, 2]));
        assert!(!reduces_to_zero(&f, &[1, 0, 0, 0]));
        assert!(!reduces_to_zero(&f, &[0, 0, 0, 2]));
    }
}
