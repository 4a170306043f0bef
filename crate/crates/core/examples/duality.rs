//! Dual codes under both inner products, the family duality
//! `RM_s(r, m)^⊥ = RM_s(m - 1 - r, m)` and the MacWilliams identity.

use std::fmt::Write;

use z4rm::{
    dual_code, lee_weight_distribution, macwilliams_check, rm_code, verify_dual_pair,
    InnerProductKind, RmIndex, DEFAULT_CAP,
};

pub fn run(m: usize) -> z4rm::Result<String> {
    let mut out = String::new();
    for s in 0..=(m - 1) / 2 {
        for r in -1..=m as i64 {
            let a = rm_code(RmIndex::new(s, r, m)?);
            let b = rm_code(RmIndex::new(s, m as i64 - 1 - r, m)?);
            let ok = verify_dual_pair(&a, &b, InnerProductKind::Kronecker)?;
            writeln!(
                out,
                "RM_{s}({r},{m}) vs RM_{s}({},{m}): {ok}",
                m as i64 - 1 - r
            )
            .unwrap();
        }
    }

    let code = rm_code(RmIndex::new(0, 1, m)?);
    for kind in [InnerProductKind::Standard, InnerProductKind::Kronecker] {
        let dual = dual_code(&code, kind)?;
        let dist = lee_weight_distribution(&dual, DEFAULT_CAP)?;
        writeln!(
            out,
            "{kind} dual of RM_0(1,{m}): {} weights {:?}",
            dual.code_type(),
            dist.counts()
        )
        .unwrap();
        writeln!(
            out,
            "MacWilliams ({kind}): {}",
            macwilliams_check(&code, kind, DEFAULT_CAP)?
        )
        .unwrap();
    }
    Ok(out)
}

fn main() {
    print!("{}", run(3).expect("m = 3 is small"));
}
