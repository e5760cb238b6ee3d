//! Exact scalar and polynomial arithmetic: arbitrary-precision rationals,
//! the quadratic field ℚ(√5), and dense polynomials over it.
//!
//! Every operation in this module is exact; no floating point appears
//! anywhere in the crate. Equality is structural, which works because
//! rationals are kept in lowest terms with positive denominator at all
//! times (`BigRational` normalizes on construction and after arithmetic).

mod poly;
mod quad;

pub use poly::DensePoly;
pub use quad::QuadExt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::sync::RwLock;

/// Arbitrary-precision rational number, always in lowest terms with
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the rational `num/den`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `base^exp` for a nonzero rational base and a signed exponent.
pub fn rat_pow(base: &Rational, exp: i64) -> Rational {
    if exp == 0 {
        return Rational::one();
    }
    let mag = exp.unsigned_abs();
    let num = base.numer().pow(mag as u32);
    let den = base.denom().pow(mag as u32);
    if exp > 0 {
        Rational::new(num, den)
    } else {
        assert!(!base.is_zero(), "negative power of zero");
        Rational::new(den, num)
    }
}

/// `2^exp` as a rational, allowing negative exponents.
pub fn two_pow(exp: i64) -> Rational {
    rat_pow(&rat_int(2), exp)
}

// Pascal-triangle cache shared across the crate. Rows are appended on
// demand; concurrent readers share the lock in read mode.
static PASCAL: RwLock<Vec<Vec<BigInt>>> = RwLock::new(Vec::new());

/// Exact binomial coefficient `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    {
        let table = PASCAL.read().unwrap();
        if n < table.len() {
            return table[n][k].clone();
        }
    }
    let mut table = PASCAL.write().unwrap();
    while table.len() <= n {
        let r = table.len();
        let mut row = vec![BigInt::one(); r + 1];
        for c in 1..r {
            row[c] = &table[r - 1][c - 1] + &table[r - 1][c];
        }
        table.push(row);
    }
    table[n][k].clone()
}

/// Binomial coefficient as a rational, convenient in summations.
pub fn binomial_rat(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(n, k))
}

/// Renders a rational as `p/q` (or just `p` when `q = 1`).
pub fn rational_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Sign of a rational as -1, 0, or 1.
pub(crate) fn rat_sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}
