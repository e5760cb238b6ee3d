//! Cross-identity structural invariants: the mod-free forms track the
//! originals, the rationality split reproduces the even/odd corollaries,
//! and the degenerate index corners behave.

use fibbern_core::exact::{rat_int, QuadExt, Rational};
use fibbern_core::identities::{
    evaluate_identity, EvalContext, ExactValue, IdentityId, IdentityParams, VerdictStatus,
};
use fibbern_core::sequences::lucas;
use num_traits::{One, Zero};

fn scalar(v: &Option<ExactValue>) -> QuadExt {
    match v {
        Some(ExactValue::Scalar(s)) => s.clone(),
        other => panic!("expected scalar, got {:?}", other),
    }
}

#[test]
fn mod_free_forms_track_the_originals() {
    // REM1_A/B/C verdicts coincide with T1A/B/C for every even n in the grid
    let ctx = EvalContext::for_default_grid();
    let pairs = [
        (IdentityId::Rem1A, IdentityId::T1A),
        (IdentityId::Rem1B, IdentityId::T1B),
        (IdentityId::Rem1C, IdentityId::T1C),
    ];
    for (rem, t1) in pairs {
        for n in (0..=30u32).step_by(2) {
            for j in 1..=8i64 {
                let p = IdentityParams::new(n).with_j(j);
                let a = evaluate_identity(&ctx, rem, &p).unwrap();
                let b = evaluate_identity(&ctx, t1, &p).unwrap();
                assert_eq!(a.status, b.status, "{} vs {} at {}", rem, t1, p);
                assert_eq!(a.status, VerdictStatus::Equal);
            }
        }
    }
}

#[test]
fn rationality_split_reproduces_the_even_corollaries() {
    // For even n, write S = Σ C(n,k) B_k α^{j(n−k)}/L_j^{n−k} and expand
    // α^s = α F_s + F_{s−1}: the √5 component must vanish (the k ≥ 1
    // vanishing sum) and the rational component must equal the F_{jk−1}
    // sum — both sides of the lemma-split argument at once.
    let ctx = EvalContext::for_default_grid();
    for j in 1..=8i64 {
        let inv_l = Rational::one() / Rational::from_integer(lucas(j));
        for n in (0..=30usize).step_by(2) {
            let mut s = QuadExt::zero();
            for k in 0..=n {
                let apow = ctx.alpha_pow_binet(j * (n - k) as i64);
                let w = ctx.binom(n, k)
                    * ctx.bern(k)
                    * fibbern_core::exact::rat_pow(&inv_l, (n - k) as i64);
                s += &apow.scale(&w);
            }
            assert!(
                s.irr.is_zero(),
                "√5 part of the split at n = {}, j = {}",
                n,
                j
            );

            let c10a = evaluate_identity(
                &ctx,
                IdentityId::C10A,
                &IdentityParams::new(n as u32).with_j(j),
            )
            .unwrap();
            assert_eq!(c10a.status, VerdictStatus::Equal);
            assert_eq!(
                QuadExt::from_rational(s.rat.clone()),
                scalar(&c10a.lhs),
                "rational part vs C10A at n = {}, j = {}",
                n,
                j
            );

            let c10b = evaluate_identity(
                &ctx,
                IdentityId::C10B,
                &IdentityParams::new(n as u32).with_j(j),
            )
            .unwrap();
            assert_eq!(scalar(&c10b.lhs), QuadExt::zero());
        }
    }
}

#[test]
fn c10a_right_side_is_rational_on_the_grid() {
    // each Equal verdict's B_n(α^j/L_j) value carries no √5 component
    let ctx = EvalContext::for_default_grid();
    for j in 1..=8i64 {
        for n in (0..=30u32).step_by(2) {
            let v = evaluate_identity(&ctx, IdentityId::C10A, &IdentityParams::new(n).with_j(j))
                .unwrap();
            assert_eq!(v.status, VerdictStatus::Equal);
            assert!(scalar(&v.rhs).irr.is_zero(), "n = {}, j = {}", n, j);
        }
    }
}

#[test]
fn degenerate_indices_are_exercised() {
    let ctx = EvalContext::for_default_grid();

    // T13 at n = 1 collapses to the constant identity 2F_j = 2F_j
    for j in 1..=8i64 {
        for sign in [
            fibbern_core::identities::Sign::Plus,
            fibbern_core::identities::Sign::Minus,
        ] {
            let v = evaluate_identity(
                &ctx,
                IdentityId::T13,
                &IdentityParams::new(1).with_j(j).with_sign(sign),
            )
            .unwrap();
            let expect = fibbern_core::exact::DensePoly::constant(ctx.fibq(j).scale(&rat_int(2)));
            assert_eq!(v.lhs, Some(ExactValue::Poly(expect.clone())));
            assert_eq!(v.rhs, Some(ExactValue::Poly(expect)));
        }
    }

    // n = 0 rows evaluate (not gate) wherever the identity admits them
    for (id, p) in [
        (IdentityId::L1A, IdentityParams::new(0).with_j(3)),
        (IdentityId::T1C, IdentityParams::new(0).with_j(2)),
        (IdentityId::T9B, IdentityParams::new(0).with_j(1).with_m(-4)),
        (IdentityId::C10A, IdentityParams::new(0).with_j(5)),
        (IdentityId::T12A, IdentityParams::new(0).with_j(4)),
        (IdentityId::ExJ3, IdentityParams::new(0)),
    ] {
        let v = evaluate_identity(&ctx, id, &p).unwrap();
        assert_eq!(v.status, VerdictStatus::Equal, "{} at {}", id, p);
    }

    // m = 0 and negative m pass through the reflection formulas,
    // including the F_{-1} read in C10A's k = 0 term
    for m in [-5i64, -1, 0] {
        let v = evaluate_identity(
            &ctx,
            IdentityId::T11A,
            &IdentityParams::new(4).with_j(2).with_m(m),
        )
        .unwrap();
        assert_eq!(v.status, VerdictStatus::Equal, "m = {}", m);
    }

    // k = 0 terms with F_{j·0} = 0 annihilate summands rather than panic
    let v = evaluate_identity(&ctx, IdentityId::C10B, &IdentityParams::new(0).with_j(1)).unwrap();
    assert_eq!(scalar(&v.lhs), QuadExt::zero());
}
