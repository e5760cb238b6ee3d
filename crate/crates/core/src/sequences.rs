//! Fibonacci and Lucas numbers for all integer indices.
//!
//! Positive indices use fast doubling; negative indices go through the
//! reflection formulas F_{−n} = (−1)^{n+1} F_n and L_{−n} = (−1)^n L_n,
//! so every index costs O(log n) big-integer multiplications.

use crate::exact::{ratio, QuadExt, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `(F_n, F_{n+1})` for `n >= 0` by fast doubling:
/// F_{2k} = F_k(2F_{k+1} − F_k), F_{2k+1} = F_k² + F_{k+1}².
fn fib_pair(n: u64) -> (BigInt, BigInt) {
    if n == 0 {
        return (BigInt::zero(), BigInt::one());
    }
    let (a, b) = fib_pair(n >> 1);
    let two_b_minus_a = (&b << 1) - &a;
    let c = &a * &two_b_minus_a;
    let d = &a * &a + &b * &b;
    if n & 1 == 0 {
        (c, d)
    } else {
        let e = &c + &d;
        (d, e)
    }
}

/// F_n for any integer index.
pub fn fib(n: i64) -> BigInt {
    if n >= 0 {
        fib_pair(n as u64).0
    } else {
        let f = fib_pair(n.unsigned_abs()).0;
        if n % 2 == 0 {
            -f
        } else {
            f
        }
    }
}

/// L_n for any integer index, via L_n = 2F_{n+1} − F_n.
pub fn lucas(n: i64) -> BigInt {
    let m = n.unsigned_abs();
    let (f, f1) = fib_pair(m);
    let l = (f1 << 1) - &f;
    if n >= 0 || m.is_multiple_of(2) {
        l
    } else {
        -l
    }
}

/// Naive iteration, kept as an independent reference (tests, benchmarks).
pub fn fib_iterative(n: i64) -> BigInt {
    let m = n.unsigned_abs();
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..m {
        let next = &a + &b;
        a = b;
        b = next;
    }
    if n >= 0 || n % 2 != 0 {
        a
    } else {
        -a
    }
}

/// Naive Lucas iteration from L_0 = 2, L_1 = 1.
pub fn lucas_iterative(n: i64) -> BigInt {
    let m = n.unsigned_abs();
    let (mut a, mut b) = (BigInt::from(2), BigInt::one());
    for _ in 0..m {
        let next = &a + &b;
        a = b;
        b = next;
    }
    if n >= 0 || m.is_multiple_of(2) {
        a
    } else {
        -a
    }
}

/// α^j expressed exactly as (L_j + F_j√5)/2, valid for any integer j.
///
/// Equivalent to α F_j + F_{j−1}; negative j yields the exact inverse
/// power (e.g. α⁻¹ = −β).
pub fn alpha_power(j: i64) -> QuadExt {
    let half = ratio(1, 2);
    QuadExt::new(
        Rational::from_integer(lucas(j)) * &half,
        Rational::from_integer(fib(j)) * &half,
    )
}

/// β^j = conj(α^j).
pub fn beta_power(j: i64) -> QuadExt {
    alpha_power(j).conj()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;

    #[test]
    fn initial_conditions() {
        assert_eq!(fib(0), BigInt::zero());
        assert_eq!(fib(1), BigInt::one());
        assert_eq!(lucas(0), BigInt::from(2));
        assert_eq!(lucas(1), BigInt::one());
    }

    #[test]
    fn small_values() {
        assert_eq!(fib(10), BigInt::from(55));
        assert_eq!(lucas(5), BigInt::from(11));
    }

    #[test]
    fn negative_indices() {
        assert_eq!(fib(-1), BigInt::one());
        assert_eq!(fib(-2), BigInt::from(-1));
        assert_eq!(lucas(-1), BigInt::from(-1));
        assert_eq!(lucas(-3), BigInt::from(-4));
    }

    #[test]
    fn doubling_agrees_with_iteration() {
        for n in -500..=500 {
            assert_eq!(fib(n), fib_iterative(n), "F_{}", n);
            assert_eq!(lucas(n), lucas_iterative(n), "L_{}", n);
        }
    }

    #[test]
    fn recurrence_across_zero() {
        for n in -60..=60i64 {
            assert_eq!(fib(n), fib(n - 1) + fib(n - 2));
            assert_eq!(lucas(n), lucas(n - 1) + lucas(n - 2));
        }
    }

    #[test]
    fn alpha_power_examples() {
        assert_eq!(alpha_power(0), QuadExt::one());
        assert_eq!(alpha_power(5), QuadExt::from_parts(11, 2, 5, 2));
        assert_eq!(alpha_power(5), QuadExt::alpha().pow(5));
        // α⁻¹ = −β
        assert_eq!(alpha_power(-1), -QuadExt::beta());
        assert_eq!(alpha_power(-7), QuadExt::alpha().powi(-7));
    }

    #[test]
    fn binet_consistency() {
        // α^n − β^n = F_n√5, α^n + β^n = L_n, for |n| ≤ 60
        for n in -60..=60i64 {
            let (a, b) = (alpha_power(n), beta_power(n));
            let diff = &a - &b;
            assert!(diff.rat.is_integer() && diff.rat == rat_int(0));
            assert_eq!(diff.irr, Rational::from_integer(fib(n)));
            let sum = &a + &b;
            assert_eq!(
                sum,
                QuadExt::from_rational(Rational::from_integer(lucas(n)))
            );
        }
    }

    #[test]
    fn product_identities() {
        // F_r L_s + F_s L_r = 2F_{r+s} and L_r L_s + 5F_r F_s = 2L_{r+s}
        for r in -20..=20i64 {
            for s in -20..=20i64 {
                let lhs_f = fib(r) * lucas(s) + fib(s) * lucas(r);
                assert_eq!(lhs_f, fib(r + s) * 2);
                let lhs_l = lucas(r) * lucas(s) + 5 * fib(s) * fib(r);
                assert_eq!(lhs_l, lucas(r + s) * 2);
            }
        }
    }

    #[test]
    fn five_f_equals_lucas_neighbors() {
        for n in -60..=60i64 {
            assert_eq!(5 * fib(n), lucas(n + 1) + lucas(n - 1));
        }
    }
}
