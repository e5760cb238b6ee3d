//! Index transforms of finite power sums: given h(z) = Σ v_k z^{w_k},
//! replace z^{w_k} by F_{i·w_k+m} z^{w_k} or L_{i·w_k+m} z^{w_k}.
//!
//! The companion closed forms are
//!   Σ v_k F_{i w_k + m} z^{w_k} = (α^m h(α^i z) − β^m h(β^i z))/√5,
//!   Σ v_k L_{i w_k + m} z^{w_k} =  α^m h(α^i z) + β^m h(β^i z),
//! the signs being forced by Binet (see the discrepancy ledger for the
//! swapped printed form). Only the finite, Laurent-polynomial case is
//! supported; negative exponents require an invertible z.

use crate::exact::QuadExt;
use crate::sequences::{alpha_power, beta_power, fib, lucas};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeqKind {
    F,
    L,
}

/// Σ v_k · S_{i·w_k+m} · z^{w_k} with S the Fibonacci or Lucas sequence.
pub fn lucas_transform(
    coeffs: &[(QuadExt, i64)],
    i: i64,
    m: i64,
    z: &QuadExt,
    kind: SeqKind,
) -> QuadExt {
    let mut acc = QuadExt::zero();
    for (v, w) in coeffs {
        let s = match kind {
            SeqKind::F => fib(i * w + m),
            SeqKind::L => lucas(i * w + m),
        };
        let term = &(v * &z.powi(*w)) * &QuadExt::from_rational(s.into());
        acc += &term;
    }
    acc
}

/// The corrected closed form of the same transform, for cross-checking.
pub fn lucas_transform_closed(
    coeffs: &[(QuadExt, i64)],
    i: i64,
    m: i64,
    z: &QuadExt,
    kind: SeqKind,
) -> QuadExt {
    let h = |arg: &QuadExt| -> QuadExt {
        let mut acc = QuadExt::zero();
        for (v, w) in coeffs {
            acc += &(v * &arg.powi(*w));
        }
        acc
    };
    let ha = &alpha_power(m) * &h(&(&alpha_power(i) * z));
    let hb = &beta_power(m) * &h(&(&beta_power(i) * z));
    match kind {
        SeqKind::F => {
            // (ha − hb)/√5 = (ha − hb)·√5/5
            &(&ha - &hb) * &QuadExt::from_parts(0, 1, 1, 5)
        }
        SeqKind::L => &ha + &hb,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bernoulli::bernoulli_poly;
    use crate::exact::ratio;

    fn qi(n: i64) -> QuadExt {
        QuadExt::from_int(n)
    }

    #[test]
    fn monomial_square() {
        // h(z) = z², i=1, m=0, z=1 → F_2 = 1
        let coeffs = [(QuadExt::one(), 2)];
        let got = lucas_transform(&coeffs, 1, 0, &QuadExt::one(), SeqKind::F);
        assert_eq!(got, QuadExt::one());
        assert_eq!(
            lucas_transform_closed(&coeffs, 1, 0, &QuadExt::one(), SeqKind::F),
            QuadExt::one()
        );
    }

    #[test]
    fn constant_picks_out_l_m() {
        // h(z) = 1 (v=1, w=0), i=5, m=3 → L_3 = 4; closed form α³+β³
        let coeffs = [(QuadExt::one(), 0)];
        let got = lucas_transform(&coeffs, 5, 3, &QuadExt::one(), SeqKind::L);
        assert_eq!(got, qi(4));
        assert_eq!(
            lucas_transform_closed(&coeffs, 5, 3, &QuadExt::one(), SeqKind::L),
            qi(4)
        );
    }

    #[test]
    fn bernoulli_shift_coefficients_match_direct_sum() {
        // h = B_2(x+z) expanded at x=0: v = (B_2, 2B_1, B_0), w = (0,1,2);
        // i=1, m=0, z=1 gives Σ C(2,k) F_k B_{2−k}
        let b2 = bernoulli_poly(2);
        let coeffs: Vec<(QuadExt, i64)> = (0..=2).map(|k| (b2.coeff(k), k as i64)).collect();
        let got = lucas_transform(&coeffs, 1, 0, &QuadExt::one(), SeqKind::F);
        // F_0 B_2 + 2 F_1 B_1 + F_2 B_0 = 0 − 1 + 1 = 0
        assert_eq!(got, QuadExt::zero());
        assert_eq!(
            lucas_transform_closed(&coeffs, 1, 0, &QuadExt::one(), SeqKind::F),
            QuadExt::zero()
        );
    }

    #[test]
    fn laurent_exponents_and_negative_indices() {
        let coeffs = [
            (QuadExt::from_rational(ratio(2, 3)), -2),
            (QuadExt::alpha(), 1),
            (qi(-3), 4),
        ];
        let z = QuadExt::from_parts(1, 2, 1, 3);
        for kind in [SeqKind::F, SeqKind::L] {
            for i in [-3i64, 1, 2] {
                for m in [-4i64, 0, 5] {
                    assert_eq!(
                        lucas_transform(&coeffs, i, m, &z, kind),
                        lucas_transform_closed(&coeffs, i, m, &z, kind),
                        "kind={:?} i={} m={}",
                        kind,
                        i,
                        m
                    );
                }
            }
        }
    }
}
