//! The four Plotkin-type constructions on small inputs, with their types and
//! minimum Lee distances.

use std::fmt::Write;

use z4rm::{
    bq_plotkin, double_plotkin, min_lee_distance, plotkin, quaternary_plotkin, QuaternaryCode,
    DEFAULT_CAP,
};

fn describe(out: &mut String, name: &str, code: &QuaternaryCode) {
    let d = min_lee_distance(code, DEFAULT_CAP).expect("small nonzero code");
    writeln!(out, "{name}: {} d={d}", code.code_type()).unwrap();
    writeln!(out, "{}", code.generator()).unwrap();
}

pub fn run() -> z4rm::Result<String> {
    let whole = QuaternaryCode::from_strs(1, &["1"])?;
    let twos = QuaternaryCode::from_strs(1, &["2"])?;
    let zero = QuaternaryCode::zero(1);

    let mut out = String::new();
    describe(&mut out, "PC((1), (2))", &plotkin(&whole, &twos)?);
    describe(
        &mut out,
        "QP((2), (1))",
        &quaternary_plotkin(&twos, &whole)?,
    );
    describe(
        &mut out,
        "DP((1), (1), (1), (1))",
        &double_plotkin(&whole, &whole, &whole, &whole)?,
    );
    describe(
        &mut out,
        "BQ((1), (2), 0)",
        &bq_plotkin(&whole, &twos, &zero)?,
    );
    Ok(out)
}

fn main() {
    print!("{}", run().expect("constructions on equal lengths"));
}
