//! Minimum Lee distance by enumeration and by searching Lee-weight balls,
//! for codes too large to enumerate.

use z4rm::{
    min_lee_distance, min_lee_distance_by_ball, plotkin, rm_code, Error, RmIndex, DEFAULT_CAP,
};

pub fn run() -> z4rm::Result<String> {
    let mut out = String::new();
    let rm = rm_code(RmIndex::new(0, 2, 4)?);
    out += &format!(
        "RM_0(2,4) by enumeration: {}\n",
        min_lee_distance(&rm, DEFAULT_CAP)?
    );

    // 2^57 codewords: far above any enumeration cap
    let big = plotkin(
        &rm_code(RmIndex::new(0, 4, 5)?),
        &rm_code(RmIndex::new(0, 3, 5)?),
    )?;
    match min_lee_distance(&big, DEFAULT_CAP) {
        Err(Error::CapExceeded { log2_size, .. }) => {
            out += &format!("PC(RM_0(4,5), RM_0(3,5)) has 2^{log2_size} words\n")
        }
        other => out += &format!("unexpected: {other:?}\n"),
    }
    out += &format!(
        "  by ball search: {}\n",
        min_lee_distance_by_ball(&big, 1 << 26)?
    );
    Ok(out)
}

fn main() {
    print!("{}", run().expect("ball search within budget"));
}
