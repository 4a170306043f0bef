//! Binary parameters of Gray images: linearity, and the Hadamard and
//! extended perfect profiles.

use std::fmt::Write;

use z4rm::{
    extended_perfect_check, gray_image_params, hadamard_check, rm_code, RmIndex, DEFAULT_CAP,
};

pub fn run(m: usize) -> z4rm::Result<String> {
    let mut out = String::new();
    for s in 0..=(m - 1) / 2 {
        for r in 0..=m as i64 {
            let code = rm_code(RmIndex::new(s, r, m)?);
            writeln!(
                out,
                "RM_{s}({r},{m}): {}",
                gray_image_params(&code, 1 << 20)
            )
            .unwrap();
        }
        let hadamard = rm_code(RmIndex::new(s, 1, m)?);
        writeln!(
            out,
            "  Hadamard RM_{s}(1,{m}): {}",
            hadamard_check(&hadamard, m, DEFAULT_CAP)?
        )
        .unwrap();
        if m >= 2 {
            let perfect = rm_code(RmIndex::new(s, m as i64 - 2, m)?);
            let ok = extended_perfect_check(&perfect, m, DEFAULT_CAP)?;
            writeln!(out, "  extended perfect RM_{s}({},{m}): {ok}", m - 2).unwrap();
        }
    }
    Ok(out)
}

fn main() {
    print!("{}", run(4).expect("m = 4 is small"));
}
