//! Exact Bernoulli numbers and Bernoulli polynomials.
//!
//! Convention: B_1 = −1/2 (so B_n = B_n(0) for the polynomials defined by
//! the EGF z·e^{xz}/(e^z − 1)), and B_{2n+1} = 0 for n ≥ 1. The numbers
//! come from the defining recurrence Σ_{k=0}^{n} C(n+1,k) B_k = 0, memoized
//! behind a lock so concurrent use stays a pure function. An
//! Akiyama–Tanigawa evaluation and a von Staudt–Clausen denominator check
//! are kept alongside as independent routes.

use crate::exact::{binomial, rat_int, DensePoly, QuadExt, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::sync::RwLock;

static BERN: RwLock<Vec<Rational>> = RwLock::new(Vec::new());

/// Exact B_n under the B_1 = −1/2 convention; memoized.
pub fn bernoulli_number(n: usize) -> Rational {
    {
        let table = BERN.read().unwrap();
        if n < table.len() {
            return table[n].clone();
        }
    }
    let mut table = BERN.write().unwrap();
    if table.is_empty() {
        table.push(Rational::one());
    }
    while table.len() <= n {
        let m = table.len();
        if m > 1 && m % 2 == 1 {
            table.push(Rational::zero());
            continue;
        }
        // B_m = −(1/(m+1)) Σ_{k<m} C(m+1,k) B_k
        let mut sum = Rational::zero();
        for (k, b) in table.iter().enumerate() {
            if !b.is_zero() {
                sum += Rational::from_integer(binomial(m + 1, k)) * b;
            }
        }
        table.push(-sum / rat_int(m as i64 + 1));
    }
    table[n].clone()
}

/// B_0 … B_n as a vector, handy for precomputing before parallel work.
pub fn bernoulli_numbers_upto(n: usize) -> Vec<Rational> {
    bernoulli_number(n);
    BERN.read().unwrap()[..=n].to_vec()
}

/// Recomputes B_0 … B_n by the defining recurrence without touching the
/// shared memo; reference path for benchmarks and cross-checks.
pub fn bernoulli_sequence_recurrence(n: usize) -> Vec<Rational> {
    let mut table = Vec::with_capacity(n + 1);
    table.push(Rational::one());
    while table.len() <= n {
        let m = table.len();
        if m > 1 && m % 2 == 1 {
            table.push(Rational::zero());
            continue;
        }
        let mut sum = Rational::zero();
        for (k, b) in table.iter().enumerate() {
            if !b.is_zero() {
                sum += Rational::from_integer(binomial(m + 1, k)) * b;
            }
        }
        table.push(-sum / rat_int(m as i64 + 1));
    }
    table
}

/// The Bernoulli polynomial B_n(x) = Σ_k C(n,k) B_{n−k} x^k as a
/// polynomial object over ℚ(√5).
pub fn bernoulli_poly(n: usize) -> DensePoly {
    let coeffs = (0..=n)
        .map(|k| {
            let b = bernoulli_number(n - k);
            QuadExt::from_rational(Rational::from_integer(binomial(n, k)) * b)
        })
        .collect();
    DensePoly::from_coeffs(coeffs)
}

/// Exact B_n(x) at a field point, via Horner evaluation.
pub fn bernoulli_poly_at(n: usize, x: &QuadExt) -> QuadExt {
    bernoulli_poly(n).eval(x)
}

/// B_n by the Akiyama–Tanigawa transform of 1/(m+1).
///
/// The transform natively produces the B_1 = +1/2 variant; the odd
/// entries above 1 vanish, so flipping n = 1 restores this crate's
/// convention.
pub fn bernoulli_akiyama_tanigawa(n: usize) -> Rational {
    let mut row: Vec<Rational> = (0..=n)
        .map(|m| Rational::new(BigInt::one(), BigInt::from(m as u64 + 1)))
        .collect();
    for i in 1..=n {
        for m in 0..=(n - i) {
            row[m] = rat_int(m as i64 + 1) * (&row[m] - &row[m + 1]);
        }
    }
    if n == 1 {
        -row[0].clone()
    } else {
        row[0].clone()
    }
}

/// Product of the primes p with (p−1) | n; by von Staudt–Clausen this
/// is the denominator of B_n for even n ≥ 2.
pub fn von_staudt_clausen_denominator(n: usize) -> BigInt {
    assert!(
        n >= 2 && n.is_multiple_of(2),
        "von Staudt-Clausen applies to even n >= 2"
    );
    let is_prime = |p: usize| {
        p >= 2
            && (2..p)
                .take_while(|d| d * d <= p)
                .all(|d| !p.is_multiple_of(d))
    };
    let mut denom = BigInt::one();
    for p in 2..=(n + 1) {
        if is_prime(p) && n.is_multiple_of(p - 1) {
            denom *= BigInt::from(p);
        }
    }
    denom
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{ratio, two_pow};
    use crate::sequences::{alpha_power, beta_power, fib, lucas};
    use num_traits::Signed;

    fn q(r: Rational) -> QuadExt {
        QuadExt::from_rational(r)
    }

    /// n·x^{n−1} with the n = 0 case taken as 0 (and 0⁰ = 1).
    fn n_pow(n: usize, x: &QuadExt) -> QuadExt {
        if n == 0 {
            QuadExt::zero()
        } else {
            x.pow(n as u64 - 1).scale(&rat_int(n as i64))
        }
    }

    /// The ℚ(√5) sample points used throughout the relation tests.
    fn sample_points() -> Vec<QuadExt> {
        let mut pts = vec![
            QuadExt::zero(),
            QuadExt::one(),
            q(ratio(1, 2)),
            QuadExt::from_int(-1),
            q(ratio(2, 3)),
            QuadExt::alpha(),
            QuadExt::beta(),
        ];
        for j in 1..=4i64 {
            pts.push(alpha_power(j).scale(&Rational::new(1.into(), lucas(j))));
        }
        pts
    }

    #[test]
    fn convention_values() {
        assert_eq!(bernoulli_number(0), rat_int(1));
        assert_eq!(bernoulli_number(1), ratio(-1, 2));
        assert_eq!(bernoulli_number(2), ratio(1, 6));
        assert_eq!(bernoulli_number(4), ratio(-1, 30));
        assert_eq!(bernoulli_number(6), ratio(1, 42));
        // the +1/2 convention is rejected
        assert_ne!(bernoulli_number(1), ratio(1, 2));
    }

    #[test]
    fn odd_bernoulli_vanish() {
        assert_eq!(bernoulli_number(7), Rational::zero());
        for n in 1..=15 {
            assert_eq!(bernoulli_number(2 * n + 1), Rational::zero());
        }
    }

    #[test]
    fn b12_from_recurrence() {
        assert_eq!(bernoulli_number(12), ratio(-691, 2730));
    }

    #[test]
    fn akiyama_tanigawa_agrees_exactly() {
        for n in 0..=60 {
            assert_eq!(
                bernoulli_akiyama_tanigawa(n),
                bernoulli_number(n),
                "B_{}",
                n
            );
        }
    }

    #[test]
    fn von_staudt_clausen_denominators() {
        for n in (2..=30).step_by(2) {
            let d = bernoulli_number(n).denom().clone();
            assert_eq!(d, von_staudt_clausen_denominator(n), "denom of B_{}", n);
        }
        assert_eq!(von_staudt_clausen_denominator(12), BigInt::from(2730));
    }

    #[test]
    fn poly_examples() {
        assert_eq!(bernoulli_poly(0), DensePoly::constant(QuadExt::one()));
        // B_1(x) = x − 1/2
        assert_eq!(
            bernoulli_poly(1),
            DensePoly::from_coeffs(vec![q(ratio(-1, 2)), QuadExt::one()])
        );
        // B_3(x) = x³ − (3/2)x² + (1/2)x
        assert_eq!(
            bernoulli_poly(3),
            DensePoly::from_coeffs(vec![
                QuadExt::zero(),
                q(ratio(1, 2)),
                q(ratio(-3, 2)),
                QuadExt::one(),
            ])
        );
    }

    #[test]
    fn poly_at_examples() {
        assert_eq!(bernoulli_poly_at(2, &QuadExt::zero()), q(ratio(1, 6)));
        // B_1(α) = α − 1/2 = √5/2
        assert_eq!(
            bernoulli_poly_at(1, &QuadExt::alpha()),
            QuadExt::from_parts(0, 1, 1, 2)
        );
        // B_n(1) = B_n(0) for n ≠ 1
        assert_eq!(bernoulli_poly_at(2, &QuadExt::one()), q(ratio(1, 6)));
    }

    #[test]
    fn difference_relation_as_polynomials() {
        // B_n(1+x) − B_n(x) = n·x^{n−1}, coefficient-wise
        for n in 0..=30usize {
            let b = bernoulli_poly(n);
            let lhs = &b.shift_arg(&QuadExt::one()) - &b;
            let rhs = if n == 0 {
                DensePoly::zero()
            } else {
                DensePoly::monomial(QuadExt::from_int(n as i64), n - 1)
            };
            assert_eq!(lhs, rhs, "n = {}", n);
        }
    }

    #[test]
    fn reflection_relation_as_polynomials() {
        // B_n(1−x) = (−1)^n B_n(x)
        for n in 0..=30usize {
            let b = bernoulli_poly(n);
            let lhs = b
                .shift_arg(&QuadExt::one())
                .scale_arg(&QuadExt::from_int(-1));
            let rhs = if n % 2 == 0 { b.clone() } else { -&b };
            assert_eq!(lhs, rhs, "n = {}", n);
        }
    }

    #[test]
    fn negation_relation_as_polynomials() {
        // B_n(−x) = (−1)^n (B_n(x) + n·x^{n−1})
        for n in 0..=30usize {
            let b = bernoulli_poly(n);
            let lhs = b.scale_arg(&QuadExt::from_int(-1));
            let mut rhs = b.clone();
            if n > 0 {
                rhs = &rhs + &DensePoly::monomial(QuadExt::from_int(n as i64), n - 1);
            }
            if n % 2 == 1 {
                rhs = -&rhs;
            }
            assert_eq!(lhs, rhs, "n = {}", n);
        }
    }

    #[test]
    fn raabe_multiplication_as_polynomials() {
        // B_n(mx) = m^{n−1} Σ_{k<m} B_n(x + k/m)
        for n in 0..=30usize {
            let b = bernoulli_poly(n);
            for m in 2..=5i64 {
                let lhs = b.scale_arg(&QuadExt::from_int(m));
                let mut sum = DensePoly::zero();
                for k in 0..m {
                    sum = &sum + &b.shift_arg(&q(ratio(k, m)));
                }
                let weight = crate::exact::rat_pow(&rat_int(m), n as i64 - 1);
                assert_eq!(lhs, sum.scale(&q(weight)), "n = {}, m = {}", n, m);
            }
        }
    }

    #[test]
    fn translation_relation_sampled() {
        // B_n(x+z) = Σ_k C(n,k) B_{n−k}(x) z^k, as a polynomial in x
        let zs = [q(ratio(1, 3)), QuadExt::alpha(), QuadExt::from_int(-2)];
        for n in 0..=20usize {
            let b = bernoulli_poly(n);
            for z in &zs {
                let lhs = b.shift_arg(z);
                let mut rhs = DensePoly::zero();
                for k in 0..=n {
                    let w = QuadExt::from_rational(Rational::from_integer(binomial(n, k)))
                        * z.pow(k as u64);
                    rhs = &rhs + &bernoulli_poly(n - k).scale(&w);
                }
                assert_eq!(lhs, rhs, "n = {}, z = {}", n, z);
            }
        }
    }

    #[test]
    fn pair_relations_both_signs() {
        // B_n(1+x) ± B_n(1+y) = B_n(x) ± B_n(y) + n(x^{n−1} ± y^{n−1}),
        // the 1−x variant, and B_n(−x) ± B_n(−y) = (−1)^n(...)
        let pts = sample_points();
        for n in (0..=30usize).step_by(3) {
            for x in &pts {
                for y in &pts {
                    for sgn in [1i64, -1] {
                        let s = QuadExt::from_int(sgn);
                        let comb = |u: QuadExt, v: QuadExt| &u + &(&s * &v);
                        let parity = QuadExt::from_int(if n % 2 == 0 { 1 } else { -1 });

                        let at = |p: &QuadExt| bernoulli_poly_at(n, p);
                        let lhs1 = comb(at(&(x + &QuadExt::one())), at(&(y + &QuadExt::one())));
                        let tail = comb(n_pow(n, x), n_pow(n, y));
                        assert_eq!(lhs1, &comb(at(x), at(y)) + &tail);

                        let refl = comb(at(&(&QuadExt::one() - x)), at(&(&QuadExt::one() - y)));
                        assert_eq!(lhs1, &(&parity * &refl) + &tail);

                        let lhs3 = comb(at(&-x.clone()), at(&-y.clone()));
                        assert_eq!(lhs3, &parity * &(&comb(at(x), at(y)) + &tail));
                    }
                }
            }
        }
    }

    #[test]
    fn constrained_pair_relations() {
        let pts = sample_points();
        for n in 0..=30usize {
            let at = |p: &QuadExt| bernoulli_poly_at(n, p);
            for y in &pts {
                // x − y = 1
                let x = y + &QuadExt::one();
                assert_eq!(&at(&x) - &at(y), n_pow(n, y));
                let neg = &at(&-x.clone()) - &at(&-y.clone());
                let expect = if n % 2 == 0 {
                    n_pow(n, &x)
                } else {
                    -n_pow(n, &x)
                };
                assert_eq!(neg, expect);

                // x + y = 1
                let x = &QuadExt::one() - y;
                let parity = QuadExt::from_int(if n % 2 == 0 { 1 } else { -1 });
                assert_eq!(&at(&x) - &(&parity * &at(y)), QuadExt::zero());
                let shifted = &at(&(&x + &QuadExt::one())) - &at(&(y + &QuadExt::one()));
                let tail = &n_pow(n, &x) - &n_pow(n, y);
                let expect = if n % 2 == 0 {
                    tail
                } else {
                    &at(y).scale(&rat_int(-2)) + &tail
                };
                assert_eq!(shifted, expect);
            }
        }
    }

    #[test]
    fn proof_step_identities_at_field_points() {
        for j in 1..=8i64 {
            let lj = Rational::from_integer(lucas(j));
            let inv_lj = Rational::one() / &lj;
            let a_pt = alpha_power(j).scale(&inv_lj);
            let b_pt = beta_power(j).scale(&inv_lj);
            // √5 F_j / L_j
            let w = QuadExt::new(Rational::zero(), Rational::from_integer(fib(j)) * &inv_lj);
            for n in 0..=30usize {
                let even = n % 2 == 0;
                // B_n(β^j/L_j) = (−1)^n B_n(α^j/L_j)
                let lhs = bernoulli_poly_at(n, &b_pt);
                let rhs = bernoulli_poly_at(n, &a_pt);
                assert_eq!(lhs, if even { rhs.clone() } else { -&rhs });

                // B_n(2α^j/L_j) − B_n(√5F_j/L_j) = n(√5F_j/L_j)^{n−1}
                let two_a = a_pt.scale(&rat_int(2));
                let step = &bernoulli_poly_at(n, &two_a) - &bernoulli_poly_at(n, &w);
                assert_eq!(step, n_pow(n, &w));

                let two_b = b_pt.scale(&rat_int(2));
                if even {
                    assert_eq!(bernoulli_poly_at(n, &two_b), bernoulli_poly_at(n, &w));
                } else {
                    assert_eq!(
                        &bernoulli_poly_at(n, &two_b) + &bernoulli_poly_at(n, &w),
                        QuadExt::zero()
                    );
                }

                // Component split: even n gives a rational value, odd n a pure
                // √5 multiple.
                let v = bernoulli_poly_at(n, &a_pt);
                if even {
                    assert!(v.irr.is_zero(), "n = {}, j = {}", n, j);
                } else {
                    assert!(v.rat.is_zero(), "n = {}, j = {}", n, j);
                }
            }
        }
    }

    #[test]
    fn tanh_coefficient_shape() {
        // 2^{2n}(2^{2n}−1)B_{2n}/(2n) alternates in sign and is nonzero,
        // the sanity floor under the EGF constructions.
        for n in 1..=8usize {
            let c = two_pow(2 * n as i64)
                * (two_pow(2 * n as i64) - rat_int(1))
                * bernoulli_number(2 * n)
                / rat_int(2 * n as i64);
            assert!(!c.is_zero());
            assert_eq!(c.is_positive(), n % 2 == 1);
        }
    }
}
