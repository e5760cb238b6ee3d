//! Elements of the quadratic field ℚ(√5).

use super::{rat_int, rat_sign, ratio, rational_string, Rational};
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// An element `rat + irr·√5` of ℚ(√5) with exact rational components.
///
/// The golden ratio α = (1+√5)/2 and its conjugate β = (1−√5)/2 live here,
/// as do all values of the identity sums. Equality is componentwise; there
/// is no tolerance anywhere.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    /// Coefficient of 1.
    pub rat: Rational,
    /// Coefficient of √5.
    pub irr: Rational,
}

impl QuadExt {
    pub fn new(rat: Rational, irr: Rational) -> Self {
        QuadExt { rat, irr }
    }

    pub fn from_rational(rat: Rational) -> Self {
        QuadExt {
            rat,
            irr: Rational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat_int(n))
    }

    /// `(a/b) + (c/d)√5` from integer parts.
    pub fn from_parts(a: i64, b: i64, c: i64, d: i64) -> Self {
        QuadExt {
            rat: ratio(a, b),
            irr: ratio(c, d),
        }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// √5 itself.
    pub fn sqrt5() -> Self {
        QuadExt {
            rat: Rational::zero(),
            irr: Rational::one(),
        }
    }

    /// The golden ratio α = (1+√5)/2.
    pub fn alpha() -> Self {
        Self::from_parts(1, 2, 1, 2)
    }

    /// β = (1−√5)/2 = −1/α, the conjugate root of x² = x + 1.
    pub fn beta() -> Self {
        Self::from_parts(1, 2, -1, 2)
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }

    /// True when the √5 component vanishes.
    pub fn is_rational(&self) -> bool {
        self.irr.is_zero()
    }

    /// Field conjugation √5 ↦ −√5; swaps α and β, fixes ℚ.
    pub fn conj(&self) -> Self {
        QuadExt {
            rat: self.rat.clone(),
            irr: -self.irr.clone(),
        }
    }

    /// Field norm `a² − 5b²`; multiplicative, zero only at zero.
    pub fn norm(&self) -> Rational {
        &self.rat * &self.rat - rat_int(5) * &self.irr * &self.irr
    }

    /// Multiplicative inverse, `None` for zero: conj(x)/norm(x).
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conj();
        Some(QuadExt {
            rat: c.rat / &n,
            irr: c.irr / &n,
        })
    }

    /// `self^k` for `k >= 0` by repeated squaring; `x^0 = 1` for every x.
    pub fn pow(&self, k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = QuadExt::one();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self^k` for any signed k; panics on a negative power of zero.
    pub fn powi(&self, k: i64) -> Self {
        if k >= 0 {
            self.pow(k as u64)
        } else {
            self.inverse()
                .expect("negative power of zero in QuadExt::powi")
                .pow(k.unsigned_abs())
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        QuadExt {
            rat: &self.rat * r,
            irr: &self.irr * r,
        }
    }

    /// Sign of the real embedding (√5 > 0): -1, 0, or 1.
    pub fn sign(&self) -> i32 {
        let (sr, si) = (rat_sign(&self.rat), rat_sign(&self.irr));
        match (sr, si) {
            (0, s) | (s, 0) => s,
            (a, b) if a == b => a,
            _ => {
                // Mixed signs: compare a² against 5b².
                let a2 = &self.rat * &self.rat;
                let b2 = rat_int(5) * &self.irr * &self.irr;
                match a2.cmp(&b2) {
                    Ordering::Greater => sr,
                    Ordering::Less => si,
                    Ordering::Equal => 0, // impossible: √5 is irrational
                }
            }
        }
    }
}

impl Add for &QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        QuadExt {
            rat: &self.rat + &rhs.rat,
            irr: &self.irr + &rhs.irr,
        }
    }
}

impl Sub for &QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        QuadExt {
            rat: &self.rat - &rhs.rat,
            irr: &self.irr - &rhs.irr,
        }
    }
}

impl Mul for &QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        // (a + b√5)(c + d√5) = (ac + 5bd) + (ad + bc)√5
        let five = rat_int(5);
        QuadExt {
            rat: &self.rat * &rhs.rat + five * &self.irr * &rhs.irr,
            irr: &self.rat * &rhs.irr + &self.irr * &rhs.rat,
        }
    }
}

impl Div for &QuadExt {
    type Output = QuadExt;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &QuadExt) -> QuadExt {
        self * &rhs.inverse().expect("division by zero in QuadExt")
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            rat: -self.rat.clone(),
            irr: -self.irr.clone(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &QuadExt) -> QuadExt {
                $trait::$method(&self, rhs)
            }
        }
    )*};
}
forward_owned_binop!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -&self
    }
}

impl AddAssign<&QuadExt> for QuadExt {
    fn add_assign(&mut self, rhs: &QuadExt) {
        self.rat += &rhs.rat;
        self.irr += &rhs.irr;
    }
}

impl SubAssign<&QuadExt> for QuadExt {
    fn sub_assign(&mut self, rhs: &QuadExt) {
        self.rat -= &rhs.rat;
        self.irr -= &rhs.irr;
    }
}

impl MulAssign<&QuadExt> for QuadExt {
    fn mul_assign(&mut self, rhs: &QuadExt) {
        *self = &*self * rhs;
    }
}

impl From<Rational> for QuadExt {
    fn from(r: Rational) -> Self {
        QuadExt::from_rational(r)
    }
}

impl From<i64> for QuadExt {
    fn from(n: i64) -> Self {
        QuadExt::from_int(n)
    }
}

impl PartialOrd for QuadExt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order via the real embedding of ℚ(√5) (with √5 positive).
impl Ord for QuadExt {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign().cmp(&0)
    }
}

/// Prints `p/q + (r/s)√5`, suppressing zero components.
impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let irr_str = |r: &Rational| {
            let a = r.abs();
            if a.is_one() {
                "√5".to_string()
            } else {
                format!("({})√5", rational_string(&a))
            }
        };
        if self.irr.is_zero() {
            write!(f, "{}", rational_string(&self.rat))
        } else if self.rat.is_zero() {
            if self.irr.is_negative() {
                write!(f, "-{}", irr_str(&self.irr))
            } else {
                write!(f, "{}", irr_str(&self.irr))
            }
        } else {
            let op = if self.irr.is_negative() { "-" } else { "+" };
            write!(
                f,
                "{} {} {}",
                rational_string(&self.rat),
                op,
                irr_str(&self.irr)
            )
        }
    }
}

/// Serializes as `{"rat": "p/q", "irr": "p/q"}` with exact fractions.
impl Serialize for QuadExt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("QuadExt", 2)?;
        s.serialize_field("rat", &rational_string(&self.rat))?;
        s.serialize_field("irr", &rational_string(&self.irr))?;
        s.end()
    }
}
