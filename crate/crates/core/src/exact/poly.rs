//! Dense polynomials over ℚ(√5).

use super::QuadExt;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial stored by coefficient vector, index = degree.
///
/// The zero polynomial is the empty vector and reports degree −1, so
/// degree arithmetic stays total. The leading coefficient is nonzero
/// for every other polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensePoly {
    coeffs: Vec<QuadExt>,
}

impl DensePoly {
    /// Builds a polynomial, trimming trailing zero coefficients.
    pub fn from_coeffs(mut coeffs: Vec<QuadExt>) -> Self {
        while coeffs.last().is_some_and(QuadExt::is_zero) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    pub fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }

    pub fn constant(c: QuadExt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `c·x^k`.
    pub fn monomial(c: QuadExt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![QuadExt::zero(); k + 1];
        coeffs[k] = c;
        DensePoly { coeffs }
    }

    /// Degree, with −1 for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> QuadExt {
        self.coeffs.get(k).cloned().unwrap_or_else(QuadExt::zero)
    }

    pub fn coeffs(&self) -> &[QuadExt] {
        &self.coeffs
    }

    /// Exact evaluation at `x` by Horner's rule.
    pub fn eval(&self, x: &QuadExt) -> QuadExt {
        let mut acc = QuadExt::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn scale(&self, c: &QuadExt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        DensePoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Argument substitution `p(x) ↦ p(x + c)` (Horner in `x + c`).
    pub fn shift_arg(&self, c: &QuadExt) -> Self {
        let mut acc = DensePoly::zero();
        for k in self.coeffs.iter().rev() {
            // acc = acc·(x + c) + k
            let mut next = vec![QuadExt::zero(); acc.coeffs.len() + 1];
            for (i, a) in acc.coeffs.iter().enumerate() {
                next[i + 1] = &next[i + 1] + a;
                next[i] = &next[i] + &(a * c);
            }
            next[0] = &next[0] + k;
            acc = DensePoly::from_coeffs(next);
        }
        acc
    }

    /// Argument scaling `p(x) ↦ p(c·x)`.
    pub fn scale_arg(&self, c: &QuadExt) -> Self {
        let mut pow = QuadExt::one();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| {
                if i > 0 {
                    pow = &pow * c;
                }
                a * &pow
            })
            .collect();
        DensePoly::from_coeffs(coeffs)
    }

    /// `self^k` by repeated multiplication.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = DensePoly::constant(QuadExt::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &DensePoly {
    type Output = DensePoly;
    fn add(self, rhs: &DensePoly) -> DensePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect();
        DensePoly::from_coeffs(coeffs)
    }
}

impl Sub for &DensePoly {
    type Output = DensePoly;
    fn sub(self, rhs: &DensePoly) -> DensePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect();
        DensePoly::from_coeffs(coeffs)
    }
}

impl Mul for &DensePoly {
    type Output = DensePoly;
    fn mul(self, rhs: &DensePoly) -> DensePoly {
        if self.is_zero() || rhs.is_zero() {
            return DensePoly::zero();
        }
        let mut coeffs = vec![QuadExt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        DensePoly::from_coeffs(coeffs)
    }
}

impl Neg for &DensePoly {
    type Output = DensePoly;
    fn neg(self) -> DensePoly {
        DensePoly {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

macro_rules! forward_owned_poly_binop {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for DensePoly {
            type Output = DensePoly;
            fn $method(self, rhs: DensePoly) -> DensePoly {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}
forward_owned_poly_binop!(Add::add, Sub::sub, Mul::mul);

impl fmt::Display for DensePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("({})", c),
                1 => format!("({})·x", c),
                _ => format!("({})·x^{}", c, i),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use proptest::prelude::*;

    fn q(n: i64) -> QuadExt {
        QuadExt::from_int(n)
    }

    #[test]
    fn zero_polynomial_degree_and_eval() {
        let z = DensePoly::zero();
        assert_eq!(z.degree(), -1);
        assert_eq!(z.eval(&QuadExt::alpha()), QuadExt::zero());
        // trailing zeros trim back down to the zero polynomial
        assert_eq!(DensePoly::from_coeffs(vec![q(0), q(0)]), z);
    }

    #[test]
    fn eval_b1_at_alpha() {
        // x − 1/2 at α is √5/2
        let p = DensePoly::from_coeffs(vec![QuadExt::from_parts(-1, 2, 0, 1), q(1)]);
        assert_eq!(p.eval(&QuadExt::alpha()), QuadExt::from_parts(0, 1, 1, 2));
    }

    #[test]
    fn shift_arg_binomial() {
        // (x+1)³ = x³ + 3x² + 3x + 1
        let p = DensePoly::monomial(q(1), 3);
        let s = p.shift_arg(&q(1));
        assert_eq!(s.coeffs(), &[q(1), q(3), q(3), q(1)]);
        // shifting by c then −c is the identity
        let c = QuadExt::from_parts(2, 3, -1, 4);
        assert_eq!(s.shift_arg(&c).shift_arg(&-&c), s);
    }

    #[test]
    fn scale_arg_matches_eval() {
        let p = DensePoly::from_coeffs(vec![q(2), q(-1), q(0), q(5)]);
        let c = QuadExt::from_parts(1, 3, 1, 2);
        let x = QuadExt::from_parts(-2, 1, 1, 1);
        assert_eq!(p.scale_arg(&c).eval(&x), p.eval(&(&c * &x)));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn horner_matches_power_summation(
            coeffs in proptest::collection::vec((-9i64..=9, 1i64..=4, -9i64..=9, 1i64..=4), 0..=21),
            (xa, xb, xc, xd) in (-6i64..=6, 1i64..=3, -6i64..=6, 1i64..=3),
        ) {
            let p = DensePoly::from_coeffs(
                coeffs.iter().map(|&(a, b, c, d)| QuadExt::from_parts(a, b, c, d)).collect(),
            );
            let x = QuadExt::from_parts(xa, xb, xc, xd);
            // naive power summation Σ c_i x^i
            let mut naive = QuadExt::zero();
            for (i, c) in p.coeffs().iter().enumerate() {
                naive += &(c * &x.pow(i as u64));
            }
            prop_assert_eq!(p.eval(&x), naive);
        }
    }

    #[test]
    fn mul_degree_adds() {
        let p = DensePoly::from_coeffs(vec![q(1), q(1)]);
        let r = p.pow(4);
        assert_eq!(r.degree(), 4);
        assert_eq!(r.coeff(2), q(6));
        let half = QuadExt::new(ratio(1, 2), ratio(0, 1));
        assert_eq!(r.eval(&half), QuadExt::new(ratio(81, 16), ratio(0, 1)));
    }
}
