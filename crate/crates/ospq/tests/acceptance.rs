//! The acceptance gate: ten exactness criteria covering the Cartan-Weyl
//! construction, the Hopf structure, the classical limit, and the rewriting
//! engine. Everything is exact symbolic computation — tolerance zero — and
//! each criterion prints a single PASS/FAIL line (run with --nocapture to
//! see them) and fails its own test on any deviation.

use num::{BigInt, BigRational, One};
use once_cell::sync::Lazy;
use ospq::algebra::{Element, Gen, Monomial};
use ospq::cartanweyl::schur::{
    schur_forward, schur_inverse, verify_generating_identity, FormalPoly,
};
use ospq::cartanweyl::{
    build_root_vectors, verify_prop1, verify_prop2, verify_remark, RootVectorTable,
};
use ospq::classical::{
    check_classical, check_limit_coherence, super_commutator, ClassicalCtx, LoopElement,
};
use ospq::hopf::{check_hopf_axioms, coproduct_ideal_failures, generators};
use ospq::rewrite::RewriteSystem;
use ospq::roots::{enumerate_positive, normal_order, validate_normal_order, Direction};
use ospq::scalar::{Scalar, SurdRat};
use ospq::Ctx;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::time::Instant;

static CTX: Lazy<Ctx> = Lazy::new(Ctx::default_unit);
static SYS: Lazy<RewriteSystem> =
    Lazy::new(|| RewriteSystem::complete(&CTX, 10, 512).expect("completion at bound 10"));
static TABLE2: Lazy<RootVectorTable> = Lazy::new(|| build_root_vectors(&CTX, 2));
static TABLE3: Lazy<RootVectorTable> = Lazy::new(|| build_root_vectors(&CTX, 3));

fn conclude(num: u32, pass: bool, detail: &str) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    println!("criterion {num:02}: {verdict} — {detail}");
    assert!(pass, "criterion {num:02} failed: {detail}");
}

#[test]
fn criterion_01_real_root_pairings_at_level_one() {
    let t0 = Instant::now();
    let reports = verify_prop1(&CTX, &TABLE3, &SYS, 1).expect("certified at bound 10");
    assert_eq!(reports.len(), 4, "all four pairing families lie inside the level-3 table");
    let pass = reports.iter().all(|r| r.pass);
    let names: Vec<&str> = reports.iter().map(|r| r.relation.as_str()).collect();
    conclude(
        1,
        pass,
        &format!(
            "level-1 real-root pairings [{}] all reduce to exactly 0 at bound {} in {:.1?}",
            names.join(", "),
            SYS.bound(),
            t0.elapsed()
        ),
    );
}

#[test]
fn criterion_02_odd_root_pairings_at_level_two() {
    let t0 = Instant::now();
    match verify_prop1(&CTX, &TABLE2, &SYS, 2) {
        Ok(reports) => {
            assert_eq!(reports.len(), 2, "the level-2 table scopes the check to the odd families");
            let pass = reports.iter().all(|r| r.pass);
            let names: Vec<&str> = reports.iter().map(|r| r.relation.as_str()).collect();
            conclude(
                2,
                pass,
                &format!(
                    "level-2 odd pairings [{}] reduce to exactly 0 at bound {} in {:.1?}",
                    names.join(", "),
                    SYS.bound(),
                    t0.elapsed()
                ),
            );
        }
        Err(e) => conclude(2, false, &format!("bound ceiling hit, verdict uncertified: {e}")),
    }
}

#[test]
fn criterion_03_imaginary_root_pairings_match_one_reading() {
    let d11 = verify_prop2(&CTX, &TABLE2, &SYS, 1, 1).expect("certified");
    let d22 = verify_prop2(&CTX, &TABLE2, &SYS, 2, 2).expect("certified");
    let o12 = verify_prop2(&CTX, &TABLE2, &SYS, 1, 2).expect("certified");
    let o21 = verify_prop2(&CTX, &TABLE2, &SYS, 2, 1).expect("certified");

    let reading = d11.matched_reading.clone().unwrap_or_else(|| "none".into());
    let same_reading = d22.matched_reading.as_deref() == Some(reading.as_str());
    let pass = d11.pass
        && d22.pass
        && reading != "none"
        && same_reading
        && o12.pass
        && o21.pass;
    conclude(
        3,
        pass,
        &format!(
            "diagonal imaginary pairings match the {reading} reading at n=1 and n=2 \
             (residuals exactly 0); off-diagonal brackets (1,2) and (2,1) reduce to exactly 0"
        ),
    );
}

#[test]
fn criterion_04_primed_family_breaks_orthogonality() {
    let primed = verify_remark(&CTX, &TABLE2, &SYS, 2, 1).expect("certified at bound 10");
    let unprimed = verify_prop2(&CTX, &TABLE2, &SYS, 2, 1).expect("certified");
    let pass = primed.pass && unprimed.pass;
    conclude(
        4,
        pass,
        &format!(
            "the primed level-2/level-1 bracket has a certified nonzero normal form \
             (bound {}), while the unprimed one reduces to exactly 0",
            primed.bound_used
        ),
    );
}

#[test]
fn criterion_05_schur_roundtrip_and_generating_identity() {
    let order = 6;
    let base: Vec<FormalPoly> = (0..order).map(FormalPoly::indeterminate).collect();

    let through_forward: Vec<FormalPoly> =
        (1..=order).map(|k| schur_forward(&CTX, k, &base)).collect();
    let fwd_then_inv =
        (1..=order).all(|n| schur_inverse(&CTX, n, &through_forward) == base[n - 1]);

    let through_inverse: Vec<FormalPoly> =
        (1..=order).map(|k| schur_inverse(&CTX, k, &base)).collect();
    let inv_then_fwd =
        (1..=order).all(|n| schur_forward(&CTX, n, &through_inverse) == base[n - 1]);

    let generating = verify_generating_identity(&CTX, order);
    conclude(
        5,
        fwd_then_inv && inv_then_fwd && generating,
        &format!(
            "partition transforms over commuting indeterminates roundtrip in both orders \
             for degrees 1..={order}, and the exponential generating identity matches \
             term-by-term through order {order}"
        ),
    );
}

#[test]
fn criterion_06_hopf_axioms_and_coproduct_stability() {
    let gens = generators();
    assert_eq!(gens.len(), 10, "three Cartan pairs plus four root generators");
    let axiom_failures = check_hopf_axioms(&CTX);
    let ideal_failures = coproduct_ideal_failures(&CTX, &SYS);
    let pass = axiom_failures.is_empty() && ideal_failures.is_empty();
    let detail = if pass {
        format!(
            "coassociativity, counit, and antipode hold exactly on all {} generators; \
             the coproducts of all eight defining relations reduce componentwise to 0",
            gens.len()
        )
    } else {
        format!(
            "axiom failures: {:?}; relations whose coproduct does not vanish: {:?}",
            axiom_failures, ideal_failures
        )
    };
    conclude(6, pass, &detail);
}

#[test]
fn criterion_07_classical_realization_and_cocycle() {
    let cl = ClassicalCtx::default_unit();
    let rep = check_classical(&cl, 3);
    let failed: Vec<&str> =
        rep.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();

    // cocycle laws on the homogeneous loop basis, |u-degree| ≤ 3:
    // super-antisymmetry and the graded cyclic identity
    // (-1)^{|x||z|} ψ([x,y],z) + (-1)^{|y||x|} ψ([y,z],x) + (-1)^{|z||y|} ψ([z,x],y) = 0
    let basis = cl.finite_basis();
    let le = LoopElement::from_matrix;
    let sign = |p: u8| if p % 2 == 0 { SurdRat::one() } else { SurdRat::from_int(-1) };
    let mut antisymmetric = true;
    let mut pairs = 0usize;
    for (a, pa, _) in &basis {
        for (b, pb, _) in &basis {
            for n in -3..=3i64 {
                for m in -3..=3i64 {
                    let x = le(a.shift(n));
                    let y = le(b.shift(m));
                    let mut rhs = cl.cocycle(&y, &x);
                    if (pa * pb) % 2 == 0 {
                        rhs = rhs.neg();
                    }
                    antisymmetric &= cl.cocycle(&x, &y) == rhs;
                    pairs += 1;
                }
            }
        }
    }
    let mut cyclic = true;
    let mut triples = 0usize;
    for (a, pa, _) in &basis {
        for (b, pb, _) in &basis {
            for (c, pc, _) in &basis {
                for n in -3..=3i64 {
                    for m in -3..=3i64 {
                        for k in -3..=3i64 {
                            let (x, y, z) = (a.shift(n), b.shift(m), c.shift(k));
                            let t1 = cl
                                .cocycle(&le(super_commutator(&x, &y)), &le(z.clone()))
                                .mul(&sign(pa * pc));
                            let t2 = cl
                                .cocycle(&le(super_commutator(&y, &z)), &le(x.clone()))
                                .mul(&sign(pb * pa));
                            let t3 = cl
                                .cocycle(&le(super_commutator(&z, &x)), &le(y.clone()))
                                .mul(&sign(pc * pb));
                            cyclic &= t1.add(&t2).add(&t3).is_zero();
                            triples += 1;
                        }
                    }
                }
            }
        }
    }

    let pass = rep.pass && antisymmetric && cyclic;
    let detail = if pass {
        format!(
            "the loop images satisfy the presentation and all bracket families up to \
             level 3 ({} checks); the cocycle is super-antisymmetric on {pairs} \
             homogeneous pairs and satisfies the graded cyclic identity on {triples} \
             homogeneous triples with |u-degree| ≤ 3",
            rep.checks.len()
        )
    } else {
        format!(
            "failing checks: {failed:?}; antisymmetric={antisymmetric}; cyclic={cyclic}"
        )
    };
    conclude(7, pass, &detail);
}

#[test]
fn criterion_08_classical_limit_coherence() {
    let two = BigRational::from_integer(BigInt::from(2));
    let a_limit = CTX.a_ratfn().eval_one().expect("no pole at q=1");
    let b_limit = CTX.b_ratfn().eval_one().expect("no pole at q=1");
    assert_eq!(a_limit, two, "the even normalization constant degenerates to 2");
    assert_eq!(b_limit, BigRational::one(), "the odd normalization constant degenerates to 1");

    let cl = ClassicalCtx::default_unit();
    let rep = check_limit_coherence(&CTX, &cl, 2);
    let failed: Vec<&str> =
        rep.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
    let detail = if rep.pass {
        format!(
            "the q→1 limits of the recursion constants exist (a→2, b→1) and all {} \
             root-vector recursions up to level 2 reproduce the loop brackets exactly",
            rep.checks.len()
        )
    } else {
        format!("failing recursions: {failed:?}")
    };
    conclude(8, rep.pass, &detail);
}

#[test]
fn criterion_09_normal_form_path_independence() {
    let mut rng = StdRng::seed_from_u64(0x05b1_2a17);
    let words = 120usize;
    let reduction_paths = 3usize;
    for i in 0..words {
        let len = rng.gen_range(1..=6);
        let word: Vec<Gen> =
            (0..len).map(|_| Gen::ALL[rng.gen_range(0..Gen::ALL.len())]).collect();
        let kexp = [rng.gen_range(-1..=1i64), rng.gen_range(-1..=1), rng.gen_range(-1..=1)];
        let x = Element::monomial(Monomial { kexp, word: word.clone() }, Scalar::one());

        let leftmost = SYS.normal_form(&CTX, &x);
        assert!(leftmost.certified, "length ≤ 6 is inside the completion bound");
        let again = SYS.normal_form(&CTX, &leftmost.element);
        assert_eq!(again.element, leftmost.element, "idempotence on word {i}: {word:?}");
        for path in 0..reduction_paths {
            let nf = SYS.normal_form_with_choices(&CTX, &x, &mut |k| rng.gen_range(0..k));
            assert_eq!(
                nf.element, leftmost.element,
                "randomized path {path} diverged on word {i}: {word:?}"
            );
        }
    }
    conclude(
        9,
        true,
        &format!(
            "{words} random weight-homogeneous words of length ≤ 6: the leftmost strategy \
             and {reduction_paths} randomized redex orders per word agree exactly, and the \
             normal form is idempotent on every word"
        ),
    );
}

#[test]
fn criterion_10_root_enumeration_and_orderings() {
    let render = |v: Vec<ospq::roots::RootLabel>| -> Vec<String> {
        v.into_iter().map(|r| r.to_string()).collect()
    };
    let full4 = [
        "a", "2a", "d-2a", "d-a", "d", "d+a", "d+2a", "2d-2a", "2d-a", "2d", "2d+a", "2d+2a",
        "3d-2a", "3d-a", "3d", "3d+a", "3d+2a", "4d-2a", "4d-a", "4d", "4d+a", "4d+2a",
    ];
    let reduced4 = [
        "a", "d-2a", "d-a", "d", "d+a", "d+2a", "2d-a", "2d", "2d+a", "3d-2a", "3d-a", "3d",
        "3d+a", "3d+2a", "4d-a", "4d", "4d+a",
    ];
    let full_ok = render(enumerate_positive(4, false)) == full4;
    let reduced_ok = render(enumerate_positive(4, true)) == reduced4;
    // smaller cutoffs are exactly the degree-bounded prefixes of the pinned lists
    let prefixes_ok = (0..4i64).all(|c| {
        let trim = |v: Vec<ospq::roots::RootLabel>| -> Vec<ospq::roots::RootLabel> {
            v.into_iter().filter(|r| r.c_delta() <= c).collect()
        };
        enumerate_positive(c, false) == trim(enumerate_positive(4, false))
            && enumerate_positive(c, true) == trim(enumerate_positive(4, true))
    });

    let mut orderings_ok = true;
    for cutoff in 1..=6 {
        for dir in [Direction::Clockwise, Direction::Anticlockwise] {
            let seq = normal_order(cutoff, dir);
            orderings_ok &= validate_normal_order(&seq).expect("well-formed input").is_none();
        }
    }

    conclude(
        10,
        full_ok && reduced_ok && prefixes_ok && orderings_ok,
        "positive systems at cutoff 4 match the pinned lists (and smaller cutoffs their \
         prefixes); both normal orderings pass the betweenness validator through cutoff 6",
    );
}
