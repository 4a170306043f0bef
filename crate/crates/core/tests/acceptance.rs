//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use z4rm::{
    bq_plotkin, codes_equal, double_plotkin, dual_code, enumerate_codewords,
    extended_perfect_check, gray_image_is_xor_closed, hadamard_check, inner_product,
    is_gray_image_linear, is_subcode, kronecker_diagonal, kronecker_inner, lee_weight_distribution,
    macwilliams_check, min_lee_distance, min_lee_distance_by_ball, plotkin, quaternary_plotkin,
    verify_dual_pair, InnerProductKind, QuaternaryCode, RmBuilder, RmIndex, Z4Vector,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const CAP: u64 = 1 << 26;

fn indices(m: usize, r_lo: i64) -> impl Iterator<Item = RmIndex> {
    (0..=(m - 1) / 2).flat_map(move |s| {
        (r_lo..=m as i64).map(move |r| RmIndex::new(s, r, m).expect("valid index"))
    })
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn code(b: &mut RmBuilder, idx: RmIndex) -> QuaternaryCode {
    b.get(idx).clone()
}

/// Minimum distance with `None` for the zero code. Large codes are first
/// searched by Lee-weight balls, which is fast when the distance is small.
fn distance(c: &QuaternaryCode) -> Option<usize> {
    if c.is_zero() {
        return None;
    }
    if c.log2_size() > 20 {
        if let Ok(d) = min_lee_distance_by_ball(c, 1 << 22) {
            return Some(d);
        }
    }
    if c.log2_size() <= 26 {
        Some(min_lee_distance(c, CAP).unwrap())
    } else {
        Some(min_lee_distance_by_ball(c, 1 << 32).unwrap())
    }
}

fn scaled(d: Option<usize>, k: usize) -> Option<usize> {
    d.map(|d| d * k)
}

/// Minimum over the distances, treating `None` as infinity.
fn min_of(ds: &[Option<usize>]) -> Option<usize> {
    ds.iter().flatten().copied().min()
}

fn table_reproduction() -> Outcome {
    let expected = [
        "(1,0) (0,1)\n",
        "(1,0) (1,1) (0,2)\n",
        "(1,0) (2,1) (1,3) (0,4)\n(1,0) (0,2) (1,3) (0,4)\n",
        "(1,0) (3,1) (3,4) (1,7) (0,8)\n(1,0) (1,2) (1,5) (1,7) (0,8)\n",
        "(1,0) (4,1) (6,5) (4,11) (1,15) (0,16)\n\
         (1,0) (2,2) (2,7) (2,12) (1,15) (0,16)\n\
         (1,0) (0,3) (2,7) (0,13) (1,15) (0,16)\n",
    ];
    for (i, want) in expected.iter().enumerate() {
        let m = i + 1;
        let out = Command::new(env!("CARGO_BIN_EXE_z4rm"))
            .args(["table", "-m", &m.to_string()])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || {
            format!("table -m {m} exited with {}", out.status)
        })?;
        let got = String::from_utf8_lossy(&out.stdout);
        ensure(got == *want, || {
            format!("table -m {m}: got {got:?}, want {want:?}")
        })?;
    }
    Ok("m = 1..5, all families".into())
}

fn generator_fixtures() -> Outcome {
    let mut b = RmBuilder::new();
    let fixtures: [(usize, i64, usize, usize, &[&str]); 6] = [
        (0, 0, 2, 2, &["22"]),
        (0, 1, 2, 2, &["02", "11"]),
        (0, 2, 2, 2, &["10", "01"]),
        (1, 0, 3, 4, &["2222"]),
        (1, 1, 3, 4, &["1111", "0123"]),
        (1, 2, 3, 4, &["0002", "1111", "0123", "0011"]),
    ];
    for (s, r, m, n, rows) in fixtures {
        let built = code(&mut b, RmIndex::new(s, r, m).unwrap());
        let fixture = QuaternaryCode::from_strs(n, rows).unwrap();
        ensure(codes_equal(&built, &fixture), || {
            format!("RM_{s}({r},{m}) differs from {rows:?}")
        })?;
    }
    Ok("6 matrices".into())
}

fn distance_theorem() -> Outcome {
    let mut b = RmBuilder::new();
    let mut count = 0;
    for m in 1..=5 {
        for idx in indices(m, 0) {
            let c = code(&mut b, idx);
            let d = min_lee_distance(&c, CAP).map_err(|e| format!("{idx}: {e}"))?;
            let want = 1usize << (m as i64 - idx.r());
            ensure(d == want, || format!("{idx}: d = {d}, expected {want}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} codes, m <= 5 including m = 5, r = 3"))
}

fn duality_suite() -> Outcome {
    let mut b = RmBuilder::new();
    let mut pairs = 0;
    for m in 1..=5 {
        for idx in indices(m, -1) {
            let other = RmIndex::new(idx.s(), m as i64 - 1 - idx.r(), m).unwrap();
            let (a, c) = (code(&mut b, idx), code(&mut b, other));
            let ok =
                verify_dual_pair(&a, &c, InnerProductKind::Kronecker).map_err(|e| e.to_string())?;
            ensure(ok, || format!("{idx} and {other} are not Kronecker duals"))?;
            pairs += 1;
        }
    }
    let mut orth = 0;
    for m in 1..=4 {
        for idx in indices(m, -1) {
            let c = code(&mut b, idx);
            for kind in [InnerProductKind::Standard, InnerProductKind::Kronecker] {
                let dual = dual_code(&c, kind).unwrap();
                let back = dual_code(&dual, kind).unwrap();
                ensure(codes_equal(&c, &back), || {
                    format!("{idx}: {kind} dual is not an involution")
                })?;
                ensure(c.log2_size() + dual.log2_size() == 2 * c.n(), || {
                    format!("{idx}: |C||C^perp| != 4^N under {kind}")
                })?;
                // |C| |C^perp| = 4^N <= 2^16 here, so every pair is checked.
                let words: Vec<Z4Vector> = enumerate_codewords(&c, CAP).unwrap().collect();
                for u in enumerate_codewords(&dual, CAP).unwrap() {
                    for v in &words {
                        ensure(inner_product(&u, v, kind).unwrap() == 0, || {
                            format!("{idx}: {u} in the {kind} dual is not orthogonal to {v}")
                        })?;
                        orth += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{pairs} dual pairs, {orth} orthogonal word pairs"))
}

fn dual_equivalence() -> Outcome {
    let mut b = RmBuilder::new();
    let mut count = 0;
    for m in 1..=4 {
        for idx in indices(m, -1) {
            let c = code(&mut b, idx);
            let std =
                lee_weight_distribution(&dual_code(&c, InnerProductKind::Standard).unwrap(), CAP);
            let kron =
                lee_weight_distribution(&dual_code(&c, InnerProductKind::Kronecker).unwrap(), CAP);
            ensure(std.unwrap() == kron.unwrap(), || {
                format!("{idx}: dual distributions differ")
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} codes"))
}

fn macwilliams() -> Outcome {
    let mut b = RmBuilder::new();
    let mut count = 0;
    for m in 1..=4 {
        for idx in indices(m, -1) {
            let c = code(&mut b, idx);
            for kind in [InnerProductKind::Standard, InnerProductKind::Kronecker] {
                let ok = macwilliams_check(&c, kind, 1 << 16).map_err(|e| format!("{idx}: {e}"))?;
                ensure(ok, || format!("{idx}: MacWilliams mismatch under {kind}"))?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} codes, both inner products"))
}

fn hadamard_and_perfect() -> Outcome {
    let mut b = RmBuilder::new();
    let (mut had, mut perf) = (0, 0);
    for m in 1..=5 {
        for s in 0..=(m - 1) / 2 {
            let c = code(&mut b, RmIndex::new(s, 1, m).unwrap());
            ensure(hadamard_check(&c, m, CAP).unwrap(), || {
                format!("RM_{s}(1,{m}) is not Hadamard")
            })?;
            had += 1;
            // r = m - 2 = -1 at m = 1 is the zero code: no distance to test.
            if m >= 2 {
                let c = code(&mut b, RmIndex::new(s, m as i64 - 2, m).unwrap());
                let ok = extended_perfect_check(&c, m, CAP).unwrap();
                ensure(ok, || {
                    format!("RM_{s}({},{m}) is not extended perfect", m - 2)
                })?;
                perf += 1;
            }
        }
    }
    Ok(format!(
        "{had} Hadamard, {perf} extended perfect (m = 2..5)"
    ))
}

fn inclusion_chains() -> Outcome {
    let mut b = RmBuilder::new();
    let mut count = 0;
    for m in 1..=6 {
        for idx in indices(m, 0) {
            let lower = RmIndex::new(idx.s(), idx.r() - 1, m).unwrap();
            let (a, c) = (code(&mut b, lower), code(&mut b, idx));
            ensure(is_subcode(&a, &c).unwrap(), || {
                format!("{lower} is not inside {idx}")
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} inclusions, m <= 6"))
}

/// Distinct generator matrices among the family codes of length `2^(m-1)`.
fn family_inputs(b: &mut RmBuilder, m: usize) -> Vec<QuaternaryCode> {
    let mut out: Vec<QuaternaryCode> = Vec::new();
    for idx in indices(m, -1) {
        let c = code(b, idx);
        if !out.iter().any(|x| x.generator() == c.generator()) {
            out.push(c);
        }
    }
    out
}

fn construction_distances() -> Outcome {
    let mut b = RmBuilder::new();
    let (mut pc, mut bq, mut qp, mut dp) = (0, 0, 0, 0);
    for m in 1..=3 {
        let inputs = family_inputs(&mut b, m);
        let ds: Vec<Option<usize>> = inputs.iter().map(distance).collect();
        for (i, x) in inputs.iter().enumerate() {
            for (j, y) in inputs.iter().enumerate() {
                let p = plotkin(x, y).unwrap();
                let want = min_of(&[scaled(ds[i], 2), ds[j]]);
                ensure(distance(&p) == want, || format!("Plotkin m={m} ({i},{j})"))?;
                pc += 1;
                for (k, z) in inputs.iter().enumerate() {
                    let q = bq_plotkin(x, y, z).unwrap();
                    let want = min_of(&[scaled(ds[i], 4), scaled(ds[j], 2), ds[k]]);
                    ensure(distance(&q) == want, || {
                        format!("BQ-Plotkin m={m} ({i},{j},{k})")
                    })?;
                    bq += 1;
                }
            }
        }
    }
    for m in 1..=2 {
        let inputs = family_inputs(&mut b, m);
        let ds: Vec<Option<usize>> = inputs.iter().map(distance).collect();
        let at_least = |d: Option<usize>, bound: Option<usize>| match (d, bound) {
            (None, _) => true,
            (Some(d), Some(bound)) => d >= bound,
            (Some(_), None) => false,
        };
        for (i, x) in inputs.iter().enumerate() {
            for (j, y) in inputs.iter().enumerate() {
                let q = quaternary_plotkin(x, y).unwrap();
                let bound = min_of(&[scaled(ds[i], 4), scaled(ds[j], 2)]);
                ensure(at_least(distance(&q), bound), || {
                    format!("QP bound m={m} ({i},{j})")
                })?;
                qp += 1;
                for (k, z) in inputs.iter().enumerate() {
                    for (l, w) in inputs.iter().enumerate() {
                        let d = double_plotkin(x, y, z, w).unwrap();
                        let bound =
                            min_of(&[scaled(ds[i], 4), scaled(ds[j], 2), scaled(ds[k], 2), ds[l]]);
                        ensure(at_least(distance(&d), bound), || {
                            format!("DP bound m={m} ({i},{j},{k},{l})")
                        })?;
                        dp += 1;
                    }
                }
            }
        }
    }
    Ok(format!(
        "{pc} PC and {bq} BQ equalities, {qp} QP and {dp} DP bounds"
    ))
}

fn commutation() -> Outcome {
    let mut b = RmBuilder::new();
    let f: Vec<QuaternaryCode> = (-1..=2)
        .map(|r| code(&mut b, RmIndex::new(0, r, 2).unwrap()))
        .collect();
    let mut typed = 0;
    let mut distributed = 0;
    // every chain A ⊇ B ⊇ C ⊇ D, strict chain RM_0(2..-1, 2) included
    for a in 0..4 {
        for bb in 0..=a {
            for c in 0..=bb {
                for d in 0..=c {
                    let (fa, fb, fc, fd) = (&f[a], &f[bb], &f[c], &f[d]);
                    let x = plotkin(
                        &bq_plotkin(fa, fb, fc).unwrap(),
                        &bq_plotkin(fb, fc, fd).unwrap(),
                    )
                    .unwrap();
                    let y = bq_plotkin(
                        &plotkin(fa, fb).unwrap(),
                        &plotkin(fb, fc).unwrap(),
                        &plotkin(fc, fd).unwrap(),
                    )
                    .unwrap();
                    let label = || {
                        format!(
                            "chain r = ({}, {}, {}, {})",
                            a as i64 - 1,
                            bb as i64 - 1,
                            c as i64 - 1,
                            d as i64 - 1
                        )
                    };
                    ensure(x.code_type() == y.code_type(), || {
                        format!("{}: types differ", label())
                    })?;
                    typed += 1;
                    if x.log2_size() <= 24 {
                        let same = lee_weight_distribution(&x, CAP).unwrap()
                            == lee_weight_distribution(&y, CAP).unwrap();
                        ensure(same, || format!("{}: distributions differ", label()))?;
                        distributed += 1;
                    }
                }
            }
        }
    }
    ensure(distributed > 0, || "no chain was enumerated".into())?;
    Ok(format!(
        "{typed} chains by type, {distributed} by Lee distribution"
    ))
}

fn nonlinearity() -> Outcome {
    let mut b = RmBuilder::new();
    let mut nonlinear = Vec::new();
    for r in 1..=2 {
        let c = code(&mut b, RmIndex::new(1, r, 4).unwrap());
        if !gray_image_is_xor_closed(&c, CAP).unwrap() {
            nonlinear.push(r);
        }
    }
    ensure(!nonlinear.is_empty(), || {
        "every RM_1(r,4), r = 1..2, has a linear Gray image".into()
    })?;
    let mut agreed = 0;
    for m in 1..=5 {
        for idx in indices(m, -1) {
            let c = code(&mut b, idx);
            if c.log2_size() > 12 {
                continue;
            }
            let oracle = gray_image_is_xor_closed(&c, 1 << 12).unwrap();
            ensure(oracle == is_gray_image_linear(&c), || {
                format!("{idx}: criterion disagrees")
            })?;
            agreed += 1;
        }
    }
    Ok(format!(
        "RM_1(r,4) nonlinear for r in {nonlinear:?}; criterion agrees on {agreed} codes"
    ))
}

fn kronecker_lemmas() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for n in [2usize, 4, 8, 16] {
        let half = n / 2;
        for _ in 0..10_000 {
            let mut rand_vec =
                |len: usize| Z4Vector::from_reduced((0..len).map(|_| rng.gen_range(0..4u8)));
            let (u1, u2, v1, v2) = (
                rand_vec(half),
                rand_vec(half),
                rand_vec(half),
                rand_vec(half),
            );
            let whole = kronecker_inner(&u1.concat(&u2), &v1.concat(&v2)).unwrap();
            let split =
                (kronecker_inner(&u1, &v1).unwrap() + 3 * kronecker_inner(&u2, &v2).unwrap()) & 3;
            ensure(whole == split, || {
                format!("split fails at N = {n}: {u1}|{u2}, {v1}|{v2}")
            })?;
        }
    }
    let mut n = 1;
    while n <= 1024 {
        let k = kronecker_diagonal(n).unwrap();
        let sq = k.diag().schur(k.diag()).unwrap();
        ensure(sq == Z4Vector::all_ones(n), || {
            format!("K_{n} is not self-inverse")
        })?;
        n *= 2;
    }
    Ok("4 x 10^4 random pairs, N <= 1024 self-inverse".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("table reproduction", table_reproduction),
        ("generator-matrix fixtures", generator_fixtures),
        ("distance theorem", distance_theorem),
        ("duality suite", duality_suite),
        ("standard vs Kronecker duals", dual_equivalence),
        ("MacWilliams identity", macwilliams),
        ("Hadamard / extended perfect", hadamard_and_perfect),
        ("inclusion chains", inclusion_chains),
        ("construction distances", construction_distances),
        ("commutation", commutation),
        ("Gray nonlinearity", nonlinearity),
        ("Kronecker lemmas", kronecker_lemmas),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
