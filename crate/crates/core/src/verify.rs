//! Family-wide invariant suite behind `z4rm verify --family`.

use std::fmt;

use crate::analysis::{
    extended_perfect_check, gray_image_is_xor_closed, hadamard_check, is_gray_image_linear,
};
use crate::code::QuaternaryCode;
use crate::duality::{dual_code, verify_dual_pair, InnerProductKind};
use crate::enumerate::min_lee_distance;
use crate::family::{rm_dimension, rm_gamma_delta_predicted, RmBuilder, RmIndex};

/// Enumeration cap of the default tier.
pub const DEFAULT_TIER_CAP: u64 = 1 << 20;
/// Enumeration cap of the extended tier.
pub const EXTENDED_TIER_CAP: u64 = 1 << 26;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Number of instances examined, or the first failing instance.
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} ({})", self.name, self.detail)
    }
}

struct Suite {
    builder: RmBuilder,
    max_m: usize,
}

impl Suite {
    fn indices(&self, with_minus_one: bool) -> Vec<RmIndex> {
        let lo = if with_minus_one { -1 } else { 0 };
        let mut out = Vec::new();
        for m in 1..=self.max_m {
            for s in 0..=(m - 1) / 2 {
                for r in lo..=m as i64 {
                    out.push(RmIndex::new(s, r, m).expect("enumerated indices are valid"));
                }
            }
        }
        out
    }

    fn code(&mut self, idx: RmIndex) -> QuaternaryCode {
        self.builder.get(idx).clone()
    }

    /// Runs `test` over `indices`; stops at the first failure. `None` means
    /// the instance was skipped.
    fn check(
        &mut self,
        name: &str,
        indices: Vec<RmIndex>,
        mut test: impl FnMut(&mut Self, RmIndex) -> Option<bool>,
    ) -> Check {
        let mut examined = 0;
        for idx in indices {
            match test(self, idx) {
                Some(true) => examined += 1,
                Some(false) => {
                    return Check {
                        name: name.to_string(),
                        passed: false,
                        detail: format!("fails at {idx}"),
                    }
                }
                None => {}
            }
        }
        Check {
            name: name.to_string(),
            passed: true,
            detail: format!("{examined} codes"),
        }
    }
}

/// Runs the invariant suite for every family member with `m <= max_m`.
pub fn verify_family(max_m: usize, extended: bool) -> Vec<Check> {
    let cap = if extended {
        EXTENDED_TIER_CAP
    } else {
        DEFAULT_TIER_CAP
    };
    let mut suite = Suite {
        builder: RmBuilder::new(),
        max_m,
    };
    let all = suite.indices(true);
    let nonzero = suite.indices(false);
    let mut checks = Vec::new();

    checks.push(suite.check("type recurrences", all.clone(), |s, idx| {
        let c = s.code(idx);
        Some(rm_gamma_delta_predicted(idx) == (c.gamma(), c.delta()))
    }));

    checks.push(suite.check("length and size", all.clone(), |s, idx| {
        let c = s.code(idx);
        Some(2 * c.n() == 1 << idx.m() && c.log2_size() == rm_dimension(idx.r(), idx.m()))
    }));

    checks.push(suite.check("minimum distance", nonzero.clone(), |s, idx| {
        let c = s.code(idx);
        let d = min_lee_distance(&c, cap).ok()?;
        Some(d == 1 << (idx.m() as i64 - idx.r()))
    }));

    checks.push(suite.check("inclusion chain", nonzero.clone(), |s, idx| {
        let lower = RmIndex::new(idx.s(), idx.r() - 1, idx.m()).ok()?;
        let (a, b) = (s.code(lower), s.code(idx));
        a.is_subcode_of(&b).ok()
    }));

    checks.push(suite.check("even code", nonzero.clone(), |s, idx| {
        if idx.r() != idx.m() as i64 - 1 {
            return None;
        }
        let c = s.code(idx);
        let even = c.generator().rows().iter().all(|g| g.lee_weight() % 2 == 0);
        Some(even && c.gamma() == 1 && c.delta() == (1 << (idx.m() - 1)) - 1)
    }));

    checks.push(suite.check("Kronecker duality", all.clone(), |s, idx| {
        let other = RmIndex::new(idx.s(), idx.m() as i64 - 1 - idx.r(), idx.m()).ok()?;
        let (a, b) = (s.code(idx), s.code(other));
        verify_dual_pair(&a, &b, InnerProductKind::Kronecker).ok()
    }));

    checks.push(suite.check("dual involution", all.clone(), |s, idx| {
        let c = s.code(idx);
        let dd = dual_code(
            &dual_code(&c, InnerProductKind::Kronecker).ok()?,
            InnerProductKind::Kronecker,
        )
        .ok()?;
        Some(c.same_code(&dd))
    }));

    checks.push(suite.check("Hadamard profile", nonzero.clone(), |s, idx| {
        if idx.r() != 1 {
            return None;
        }
        let c = s.code(idx);
        hadamard_check(&c, idx.m(), cap).ok()
    }));

    checks.push(
        suite.check("extended perfect profile", nonzero.clone(), |s, idx| {
            if idx.m() < 2 || idx.r() != idx.m() as i64 - 2 {
                return None;
            }
            let c = s.code(idx);
            extended_perfect_check(&c, idx.m(), cap).ok()
        }),
    );

    checks.push(suite.check("Gray linearity criterion", all, |s, idx| {
        let c = s.code(idx);
        let exhaustive = gray_image_is_xor_closed(&c, 1 << 12).ok()?;
        Some(exhaustive == is_gray_image_linear(&c))
    }));

    checks
}
