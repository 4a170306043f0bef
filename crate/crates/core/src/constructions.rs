//! Plotkin-type constructions on generator matrices.
//!
//! All constructions work on the generator matrices the input codes were
//! built from, not on their canonical forms: the BQ-Plotkin transforms
//! `G'` and `Ĝ` depend on the particular matrix.

use crate::code::QuaternaryCode;
use crate::error::{Error, Result};
use crate::gf4::Z4Vector;
use crate::matrix::GeneratorMatrix;

fn same_length(codes: &[&QuaternaryCode]) -> Result<usize> {
    let n = codes[0].n();
    if let Some(bad) = codes.iter().find(|c| c.n() != n) {
        return Err(Error::LengthMismatch {
            expected: n,
            found: bad.n(),
        });
    }
    Ok(n)
}

/// Rows `(c_0 g | c_1 g | ... )` for every row `g` of `m`.
fn blocks(m: &GeneratorMatrix, coeffs: &[u8]) -> Vec<Z4Vector> {
    m.rows()
        .iter()
        .map(|g| {
            Z4Vector::from_reduced(
                coeffs
                    .iter()
                    .flat_map(|&c| g.entries().iter().map(move |&x| c * x)),
            )
        })
        .collect()
}

fn assemble(n: usize, parts: Vec<Vec<Z4Vector>>) -> QuaternaryCode {
    let rows = parts.into_iter().flatten().collect();
    QuaternaryCode::from_matrix(
        GeneratorMatrix::new(n, rows).expect("block rows have the assembled length"),
    )
}

/// `{ (u1 | u1 + u2) : u1 in A, u2 in B }`, generated by
/// `[[G_A, G_A], [0, G_B]]`.
pub fn plotkin(a: &QuaternaryCode, b: &QuaternaryCode) -> Result<QuaternaryCode> {
    let n = same_length(&[a, b])?;
    Ok(assemble(
        2 * n,
        vec![
            blocks(a.generator(), &[1, 1]),
            blocks(b.generator(), &[0, 1]),
        ],
    ))
}

/// `{ (u1 | u1 + u2 | u1 + 2u2 | u1 + 3u2) }`.
pub fn quaternary_plotkin(a: &QuaternaryCode, b: &QuaternaryCode) -> Result<QuaternaryCode> {
    let n = same_length(&[a, b])?;
    Ok(assemble(
        4 * n,
        vec![
            blocks(a.generator(), &[1, 1, 1, 1]),
            blocks(b.generator(), &[0, 1, 2, 3]),
        ],
    ))
}

/// `{ (u1 | u1 + u2 | u1 + 2u2 + u3 | u1 + 3u2 + u3 + u4) }`.
pub fn double_plotkin(
    a: &QuaternaryCode,
    b: &QuaternaryCode,
    c: &QuaternaryCode,
    d: &QuaternaryCode,
) -> Result<QuaternaryCode> {
    let n = same_length(&[a, b, c, d])?;
    Ok(assemble(
        4 * n,
        vec![
            blocks(a.generator(), &[1, 1, 1, 1]),
            blocks(b.generator(), &[0, 1, 2, 3]),
            blocks(c.generator(), &[0, 0, 1, 1]),
            blocks(d.generator(), &[0, 0, 0, 1]),
        ],
    ))
}

/// `G'`: every order-two row has its twos replaced by ones; order-four rows
/// are unchanged.
pub fn gen_prime(g: &GeneratorMatrix) -> GeneratorMatrix {
    let rows = g
        .order_two_rows()
        .iter()
        .map(|r| Z4Vector::from_reduced(r.entries().iter().map(|x| x >> 1)))
        .chain(g.order_four_rows().iter().cloned())
        .collect();
    GeneratorMatrix::new(g.n(), rows).expect("rows keep their length")
}

/// `Ĝ`: the order-four rows only.
pub fn gen_hat(g: &GeneratorMatrix) -> GeneratorMatrix {
    GeneratorMatrix::new(g.n(), g.order_four_rows().to_vec()).expect("rows keep their length")
}

/// BQ-Plotkin construction, generated by
///
/// ```text
/// G_A  G_A   G_A    G_A
///  0   G'_B  2G'_B  3G'_B
///  0   0     Ĝ_B    Ĝ_B
///  0   0     0      G_C
/// ```
pub fn bq_plotkin(
    a: &QuaternaryCode,
    b: &QuaternaryCode,
    c: &QuaternaryCode,
) -> Result<QuaternaryCode> {
    let n = same_length(&[a, b, c])?;
    let prime = gen_prime(b.generator());
    let hat = gen_hat(b.generator());
    Ok(assemble(
        4 * n,
        vec![
            blocks(a.generator(), &[1, 1, 1, 1]),
            blocks(&prime, &[0, 1, 2, 3]),
            blocks(&hat, &[0, 0, 1, 1]),
            blocks(c.generator(), &[0, 0, 0, 1]),
        ],
    ))
}
