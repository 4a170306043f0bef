//! Builds the Reed-Muller families for one `m` and prints their parameter
//! grid together with the stored generator matrix of one member.
//!
//! cargo run --example build_family -- 4

use std::fmt::Write;

use z4rm::{rm_code, rm_gamma_delta_predicted, rm_table, RmIndex};

pub fn run(m: usize) -> z4rm::Result<String> {
    let mut out = String::new();
    let table = rm_table(m)?;
    writeln!(
        out,
        "(gamma,delta) for m = {m}, one line per s, r = 0..{m}:"
    )
    .unwrap();
    write!(out, "{table}").unwrap();

    let s = (m - 1) / 2;
    let r = (m as i64 - 1).min(2);
    let idx = RmIndex::new(s, r, m)?;
    let code = rm_code(idx);
    writeln!(out, "\n{idx}: {}", code.code_type()).unwrap();
    writeln!(
        out,
        "predicted (gamma,delta) = {:?}",
        rm_gamma_delta_predicted(idx)
    )
    .unwrap();
    writeln!(out, "construction generator:\n{}", code.generator()).unwrap();
    Ok(out)
}

fn main() {
    let m = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("m must be a positive integer"))
        .unwrap_or(3);
    print!("{}", run(m).expect("valid m"));
}
