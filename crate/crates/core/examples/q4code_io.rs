//! Writing a code to the Q4CODE v1 text format and reading it back.

use std::fmt::Write;

use z4rm::{codes_equal, read_q4code, rm_code, write_q4code, RmIndex};

pub fn run() -> z4rm::Result<String> {
    let code = rm_code(RmIndex::new(1, 2, 3)?);
    let text = write_q4code(&code);
    let back = read_q4code(&text)?;

    let mut out = text.clone();
    writeln!(out, "round trip equal: {}", codes_equal(&code, &back)).unwrap();
    match read_q4code("Q4CODE v1\nN=2 GAMMA=0 DELTA=1\n22\n") {
        Ok(_) => writeln!(out, "mismatched header accepted").unwrap(),
        Err(e) => writeln!(out, "rejected: {e}").unwrap(),
    }
    Ok(out)
}

fn main() {
    print!("{}", run().expect("RM_1(2,3) serialises"));
}
