//! Truncated Laurent exponential generating functions over ℚ(√5).
//!
//! A series here is Σ a_n z^n/n! plus an optional principal part with
//! poles of order at most two: coth(cz) carries 1/(cz) and 1/sinh²(cz)
//! carries 1/(cz)². Truncation order is data, not configuration — every
//! value knows the largest coefficient it can answer for, Cauchy products
//! shrink that range by the partner's pole depth, and reading past it is
//! an error rather than a silent zero.
//!
//! The hyperbolic constructors take their coefficients from the explicit
//! Bernoulli-number expansions of coth, tanh and their derivatives, so
//! no series division happens anywhere.

use crate::bernoulli::bernoulli_number;
use crate::exact::{binomial, rat_int, two_pow, QuadExt, Rational};
use crate::sequences::{fib, lucas};
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EgfError {
    #[error("coefficient z^{index} outside the valid range -2..={order}")]
    CoeffOutOfRange { index: i64, order: usize },
    #[error("degenerate zero argument for {kind:?}")]
    DegenerateArgument { kind: HyperbolicKind },
    #[error("functional equation {0} requires the x parameter")]
    MissingParameter(&'static str),
    #[error("truncation order {order} too small for {what}")]
    OrderTooSmall { order: usize, what: &'static str },
}

/// Truncated Laurent EGF: `principal[0]/z² + principal[1]/z + Σ coeffs[n]·zⁿ/n!`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentEgf {
    principal: [QuadExt; 2],
    coeffs: Vec<QuadExt>,
    order: usize,
}

impl LaurentEgf {
    /// Regular series from a coefficient rule `n ↦ a_n`.
    pub fn from_egf_coeffs(order: usize, f: impl FnMut(usize) -> QuadExt) -> Self {
        LaurentEgf {
            principal: [QuadExt::zero(), QuadExt::zero()],
            coeffs: (0..=order).map(f).collect(),
            order,
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_egf_coeffs(order, |_| QuadExt::zero())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Raw coefficients of z^{−2} and z^{−1}.
    pub fn principal(&self) -> &[QuadExt; 2] {
        &self.principal
    }

    /// Pole depth 0, 1, or 2.
    pub fn pole_depth(&self) -> usize {
        if !self.principal[0].is_zero() {
            2
        } else if !self.principal[1].is_zero() {
            1
        } else {
            0
        }
    }

    /// EGF coefficient a_n for n ≥ 0, raw pole coefficients for n = −1, −2.
    pub fn coeff(&self, n: i64) -> Result<QuadExt, EgfError> {
        match n {
            -2 => Ok(self.principal[0].clone()),
            -1 => Ok(self.principal[1].clone()),
            _ if n >= 0 && (n as usize) <= self.order => Ok(self.coeffs[n as usize].clone()),
            _ => Err(EgfError::CoeffOutOfRange {
                index: n,
                order: self.order,
            }),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order.min(rhs.order);
        LaurentEgf {
            principal: [
                &self.principal[0] + &rhs.principal[0],
                &self.principal[1] + &rhs.principal[1],
            ],
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] + &rhs.coeffs[n])
                .collect(),
            order,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&QuadExt::from_int(-1)))
    }

    pub fn scale(&self, c: &QuadExt) -> Self {
        LaurentEgf {
            principal: [&self.principal[0] * c, &self.principal[1] * c],
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            order: self.order,
        }
    }

    /// Forgets the pole, keeping the regular part.
    pub fn drop_principal(&self) -> Self {
        LaurentEgf {
            principal: [QuadExt::zero(), QuadExt::zero()],
            coeffs: self.coeffs.clone(),
            order: self.order,
        }
    }

    /// Multiplication by z. The pole shallows by one and every known
    /// ordinary coefficient shifts up, so the order grows by one.
    pub fn mul_by_z(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.order + 2);
        coeffs.push(self.principal[1].clone());
        for n in 1..=(self.order + 1) {
            coeffs.push(self.coeffs[n - 1].scale(&rat_int(n as i64)));
        }
        LaurentEgf {
            principal: [QuadExt::zero(), self.principal[0].clone()],
            coeffs,
            order: self.order + 1,
        }
    }

    /// Division by z; the pole may deepen to order 2 at most.
    ///
    /// Panics if the input already has a z^{−2} pole.
    pub fn div_by_z(&self) -> Self {
        assert!(
            self.principal[0].is_zero(),
            "div_by_z would create a pole deeper than order 2"
        );
        assert!(self.order >= 1, "div_by_z needs at least order 1");
        let coeffs = (0..self.order)
            .map(|n| self.coeffs[n + 1].scale(&Rational::new(1.into(), (n as i64 + 1).into())))
            .collect();
        LaurentEgf {
            principal: [self.principal[1].clone(), self.coeffs[0].clone()],
            coeffs,
            order: self.order - 1,
        }
    }

    /// Cauchy product with binomial weights and principal-part bookkeeping.
    ///
    /// The result is valid to `min(N_a − depth_b, N_b − depth_a)`; order
    /// shrinkage is encoded in the result, not reported as an error.
    /// Panics if the product would need a pole deeper than z^{−2} (the
    /// constructors never build such inputs).
    pub fn mul(&self, rhs: &Self) -> Self {
        let (pa2, pa1) = (&self.principal[0], &self.principal[1]);
        let (pb2, pb1) = (&rhs.principal[0], &rhs.principal[1]);

        let deep2 = &(pa1 * pb2) + &(pa2 * pb1);
        let deep3 = pa2 * pb2;
        assert!(
            deep2.is_zero() && deep3.is_zero(),
            "product pole exceeds order 2"
        );
        assert!(
            self.order > rhs.pole_depth() && rhs.order > self.pole_depth(),
            "orders too small for pole bookkeeping"
        );

        let order = (self.order - rhs.pole_depth()).min(rhs.order - self.pole_depth());

        let principal = [
            &(&(pa2 * &rhs.coeffs[0]) + &(&self.coeffs[0] * pb2)) + &(pa1 * pb1),
            &(&(pa1 * &rhs.coeffs[0]) + &(pa2 * &rhs.coeffs[1]))
                + &(&(&self.coeffs[0] * pb1) + &(&self.coeffs[1] * pb2)),
        ];

        let mut coeffs = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = QuadExt::zero();
            for k in 0..=n {
                if self.coeffs[k].is_zero() || rhs.coeffs[n - k].is_zero() {
                    continue;
                }
                let w = QuadExt::from_rational(Rational::from_integer(binomial(n, k)));
                acc += &(&(&self.coeffs[k] * &rhs.coeffs[n - k]) * &w);
            }
            // pole-against-regular terms: p_{-1}·b_{n+1}/(n+1), p_{-2}·b_{n+2}/((n+1)(n+2))
            let n1 = rat_int(n as i64 + 1);
            let n2 = rat_int(n as i64 + 2);
            if !pa1.is_zero() {
                acc += &(pa1 * &rhs.coeffs[n + 1]).scale(&(Rational::one() / &n1));
            }
            if !pa2.is_zero() {
                acc += &(pa2 * &rhs.coeffs[n + 2]).scale(&(Rational::one() / (&n1 * &n2)));
            }
            if !pb1.is_zero() {
                acc += &(pb1 * &self.coeffs[n + 1]).scale(&(Rational::one() / &n1));
            }
            if !pb2.is_zero() {
                acc += &(pb2 * &self.coeffs[n + 2]).scale(&(Rational::one() / (&n1 * &n2)));
            }
            coeffs.push(acc);
        }
        LaurentEgf {
            principal,
            coeffs,
            order,
        }
    }
}

/// EGF of e^{cz}: coefficients a_n = c^n, no principal part.
pub fn egf_exp(c: &QuadExt, order: usize) -> LaurentEgf {
    let mut pow = QuadExt::one();
    LaurentEgf::from_egf_coeffs(order, |n| {
        if n > 0 {
            pow = &pow * c;
        }
        pow.clone()
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HyperbolicKind {
    Sinh,
    Cosh,
    Tanh,
    Coth,
    InvSinhSq,
    InvCoshSq,
}

/// Series of `kind(c·z)` to the given order.
///
/// coth and 1/sinh² carry principal parts 1/(cz) and 1/(cz)²; the kinds
/// with poles or with Bernoulli tails reject c = 0 as degenerate.
pub fn egf_hyperbolic(
    kind: HyperbolicKind,
    c: &QuadExt,
    order: usize,
) -> Result<LaurentEgf, EgfError> {
    use HyperbolicKind::*;
    if c.is_zero() && !matches!(kind, Sinh | Cosh) {
        return Err(EgfError::DegenerateArgument { kind });
    }
    let mut series = match kind {
        Sinh => {
            let mut pow = QuadExt::one();
            LaurentEgf::from_egf_coeffs(order, |n| {
                if n > 0 {
                    pow = &pow * c;
                }
                if n % 2 == 1 {
                    pow.clone()
                } else {
                    QuadExt::zero()
                }
            })
        }
        Cosh => {
            let mut pow = QuadExt::one();
            LaurentEgf::from_egf_coeffs(order, |n| {
                if n > 0 {
                    pow = &pow * c;
                }
                if n % 2 == 0 {
                    pow.clone()
                } else {
                    QuadExt::zero()
                }
            })
        }
        // tanh(w) = Σ_{i≥1} 2^{2i}(2^{2i}−1) B_{2i} w^{2i−1}/(2i)!
        Tanh => bernoulli_series(order, c, 1, |i| {
            two_pow(2 * i) * (two_pow(2 * i) - rat_int(1)) * bernoulli_number(2 * i as usize)
                / rat_int(2 * i)
        }),
        // coth(w) = 1/w + Σ_{i≥1} 2^{2i} B_{2i} w^{2i−1}/(2i)!
        Coth => bernoulli_series(order, c, 1, |i| {
            two_pow(2 * i) * bernoulli_number(2 * i as usize) / rat_int(2 * i)
        }),
        // 1/sinh²(w) = 1/w² − Σ_{i≥1} (2i−1) 2^{2i} B_{2i} w^{2i−2}/(2i)!
        InvSinhSq => bernoulli_series(order, c, 0, |i| {
            -(two_pow(2 * i) * bernoulli_number(2 * i as usize)) / rat_int(2 * i)
        }),
        // 1/cosh²(w) = Σ_{i≥1} (2i−1) 2^{2i}(2^{2i}−1) B_{2i} w^{2i−2}/(2i)!
        InvCoshSq => bernoulli_series(order, c, 0, |i| {
            two_pow(2 * i) * (two_pow(2 * i) - rat_int(1)) * bernoulli_number(2 * i as usize)
                / rat_int(2 * i)
        }),
    };
    match kind {
        Coth => {
            series.principal[1] = c.inverse().expect("checked nonzero").clone();
        }
        InvSinhSq => {
            let inv = c.inverse().expect("checked nonzero");
            series.principal[0] = &inv * &inv;
        }
        _ => {}
    }
    Ok(series)
}

/// Series with EGF coefficient `coeff(i)·c^{2i−2+offset}` at index
/// `2i−2+offset` for i ≥ 1, zero elsewhere.
fn bernoulli_series(
    order: usize,
    c: &QuadExt,
    offset: usize,
    coeff: impl Fn(i64) -> Rational,
) -> LaurentEgf {
    let mut coeffs = vec![QuadExt::zero(); order + 1];
    let mut i = 1i64;
    loop {
        let idx = (2 * i - 2) as usize + offset;
        if idx > order {
            break;
        }
        coeffs[idx] = c.pow(idx as u64).scale(&coeff(i));
        i += 1;
    }
    LaurentEgf {
        principal: [QuadExt::zero(), QuadExt::zero()],
        coeffs,
        order,
    }
}

/// EGF of (F_{jn})_{n≥0}.
pub fn fib_egf(j: i64, order: usize) -> LaurentEgf {
    LaurentEgf::from_egf_coeffs(order, |n| {
        QuadExt::from_rational(Rational::from_integer(fib(j * n as i64)))
    })
}

/// EGF of (L_{jn})_{n≥0}.
pub fn lucas_egf(j: i64, order: usize) -> LaurentEgf {
    LaurentEgf::from_egf_coeffs(order, |n| {
        QuadExt::from_rational(Rational::from_integer(lucas(j * n as i64)))
    })
}

/// EGF of (B_n(x)·c^n)_{n≥0}, i.e. H(x, cz) for the Bernoulli EGF H.
pub fn bernoulli_egf(x: &QuadExt, c: &QuadExt, order: usize) -> LaurentEgf {
    let mut pow = QuadExt::one();
    LaurentEgf::from_egf_coeffs(order, |n| {
        if n > 0 {
            pow = &pow * c;
        }
        &crate::bernoulli::bernoulli_poly_at(n, x) * &pow
    })
}

/// The functional equations the convolution identities flow from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FunctionalEq {
    /// F²(z) = (4/5) e^{L_j z} sinh²(√5F_j z/2)
    EgfFSq,
    /// L²(z) = 4 e^{L_j z} cosh²(√5F_j z/2)
    EgfLSq,
    /// F(z)L(z)/sinh²(√5F_j z/2) = (4/√5) e^{L_j z} coth(√5F_j z/2)
    FlId,
    /// (√5/2) F(z) e^{−L_j z/2} = tanh(√5F_j z/2) cosh(√5F_j z/2)
    TanhForm,
    /// (1/2) L(z) e^{−L_j z/2} = coth(√5F_j z/2) sinh(√5F_j z/2)
    CothForm,
    /// F(z) L(z) H(x, √5F_j z) = 2F_j z e^{L_j z} e^{(√5F_j/2)(2x−1)z} cosh(√5F_j z/2)
    HRelation,
}

impl FunctionalEq {
    pub const ALL: [FunctionalEq; 6] = [
        FunctionalEq::EgfFSq,
        FunctionalEq::EgfLSq,
        FunctionalEq::FlId,
        FunctionalEq::TanhForm,
        FunctionalEq::CothForm,
        FunctionalEq::HRelation,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            FunctionalEq::EgfFSq => "EGF_F_SQ",
            FunctionalEq::EgfLSq => "EGF_L_SQ",
            FunctionalEq::FlId => "FL_ID",
            FunctionalEq::TanhForm => "TANH_FORM",
            FunctionalEq::CothForm => "COTH_FORM",
            FunctionalEq::HRelation => "H_RELATION",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|eq| eq.tag() == tag)
    }
}

/// Outcome of a functional-equation check: confirmation through the
/// requested order or the first differing coefficient.
#[derive(Clone, Debug)]
pub struct SeriesVerdict {
    pub eq: FunctionalEq,
    pub j: i64,
    pub order: usize,
    pub x: Option<QuadExt>,
    pub confirmed: bool,
    /// `(index, lhs, rhs)` of the first mismatch, principal indices included.
    pub first_mismatch: Option<(i64, QuadExt, QuadExt)>,
    pub lhs_principal: [QuadExt; 2],
    pub rhs_principal: [QuadExt; 2],
}

/// Builds both sides of a functional equation from independent
/// ingredients — sequence EGFs coefficient-by-coefficient on one side,
/// exponential/hyperbolic constructors on the other — and compares them
/// coefficient-exactly through the requested order.
pub fn check_functional_equation(
    eq: FunctionalEq,
    j: i64,
    order: usize,
    x: Option<&QuadExt>,
) -> Result<SeriesVerdict, EgfError> {
    if order < 4 {
        return Err(EgfError::OrderTooSmall {
            order,
            what: "functional equation check",
        });
    }
    // Build ingredients with slack so pole-depth shrinkage still covers
    // the requested order.
    let n = order + 2;
    let f_j = fib(j);
    let l_j = lucas(j);
    let half_arg = QuadExt::new(Rational::zero(), Rational::new(f_j.clone(), 2.into()));
    let exp_lj = egf_exp(
        &QuadExt::from_rational(Rational::from_integer(l_j.clone())),
        n,
    );
    let exp_neg_half_lj = egf_exp(
        &QuadExt::from_rational(Rational::new(-l_j.clone(), 2.into())),
        n,
    );

    let (lhs, rhs, x_used) = match eq {
        FunctionalEq::EgfFSq => {
            let f = fib_egf(j, n);
            let sinh = egf_hyperbolic(HyperbolicKind::Sinh, &half_arg, n)?;
            let rhs = exp_lj.mul(&sinh.mul(&sinh)).scale(&QuadExt::new(
                Rational::new(4.into(), 5.into()),
                Rational::zero(),
            ));
            (f.mul(&f), rhs, None)
        }
        FunctionalEq::EgfLSq => {
            let l = lucas_egf(j, n);
            let cosh = egf_hyperbolic(HyperbolicKind::Cosh, &half_arg, n)?;
            let rhs = exp_lj.mul(&cosh.mul(&cosh)).scale(&QuadExt::from_int(4));
            (l.mul(&l), rhs, None)
        }
        FunctionalEq::FlId => {
            let fl = fib_egf(j, n).mul(&lucas_egf(j, n));
            let inv_sq = egf_hyperbolic(HyperbolicKind::InvSinhSq, &half_arg, n)?;
            let coth = egf_hyperbolic(HyperbolicKind::Coth, &half_arg, n)?;
            // 4/√5 = (4/5)√5
            let four_over_sqrt5 = QuadExt::new(Rational::zero(), Rational::new(4.into(), 5.into()));
            (
                fl.mul(&inv_sq),
                exp_lj.mul(&coth).scale(&four_over_sqrt5),
                None,
            )
        }
        FunctionalEq::TanhForm => {
            let sqrt5_half = QuadExt::new(Rational::zero(), Rational::new(1.into(), 2.into()));
            let lhs = fib_egf(j, n).mul(&exp_neg_half_lj).scale(&sqrt5_half);
            let tanh = egf_hyperbolic(HyperbolicKind::Tanh, &half_arg, n)?;
            let cosh = egf_hyperbolic(HyperbolicKind::Cosh, &half_arg, n)?;
            (lhs, tanh.mul(&cosh), None)
        }
        FunctionalEq::CothForm => {
            let lhs = lucas_egf(j, n).mul(&exp_neg_half_lj).scale(&QuadExt::new(
                Rational::new(1.into(), 2.into()),
                Rational::zero(),
            ));
            let coth = egf_hyperbolic(HyperbolicKind::Coth, &half_arg, n)?;
            let sinh = egf_hyperbolic(HyperbolicKind::Sinh, &half_arg, n)?;
            (lhs, coth.mul(&sinh), None)
        }
        FunctionalEq::HRelation => {
            let x = x.ok_or(EgfError::MissingParameter("H_RELATION"))?;
            let sqrt5_fj = QuadExt::new(Rational::zero(), Rational::from_integer(f_j.clone()));
            let h = bernoulli_egf(x, &sqrt5_fj, n);
            let lhs = fib_egf(j, n).mul(&lucas_egf(j, n)).mul(&h);
            // single exponential with argument L_j + (√5F_j/2)(2x − 1)
            let two_x_minus_1 = &x.scale(&rat_int(2)) - &QuadExt::one();
            let arg = &QuadExt::from_rational(Rational::from_integer(l_j.clone()))
                + &(&half_arg * &two_x_minus_1);
            let cosh = egf_hyperbolic(HyperbolicKind::Cosh, &half_arg, n)?;
            let rhs = egf_exp(&arg, n)
                .mul(&cosh)
                .mul_by_z()
                .scale(&QuadExt::from_rational(
                    Rational::from_integer(f_j.clone()) * rat_int(2),
                ));
            (lhs, rhs, Some(x.clone()))
        }
    };

    debug_assert!(lhs.order() >= order && rhs.order() >= order);
    let mut first_mismatch = None;
    for idx in -2..=(order as i64) {
        let a = lhs.coeff(idx)?;
        let b = rhs.coeff(idx)?;
        if a != b {
            first_mismatch = Some((idx, a, b));
            break;
        }
    }
    Ok(SeriesVerdict {
        eq,
        j,
        order,
        x: x_used,
        confirmed: first_mismatch.is_none(),
        first_mismatch,
        lhs_principal: lhs.principal.clone(),
        rhs_principal: rhs.principal.clone(),
    })
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
    fn exp_examples() {
        let e0 = egf_exp(&q(0), 5);
        assert_eq!(e0.coeff(0).unwrap(), QuadExt::one());
        for n in 1..=5 {
            assert_eq!(e0.coeff(n).unwrap(), QuadExt::zero());
        }
        let e1 = egf_exp(&q(1), 4);
        for n in 0..=4 {
            assert_eq!(e1.coeff(n).unwrap(), QuadExt::one());
        }
        // a_3 of e^{αz} is α³ = 2 + √5
        let ea = egf_exp(&QuadExt::alpha(), 3);
        assert_eq!(ea.coeff(3).unwrap(), QuadExt::from_parts(2, 1, 1, 1));
    }

    #[test]
    fn sinh_coefficients() {
        let s = egf_hyperbolic(HyperbolicKind::Sinh, &q(1), 8).unwrap();
        assert_eq!(s.coeff(1).unwrap(), QuadExt::one());
        assert_eq!(s.coeff(2).unwrap(), QuadExt::zero());
        assert_eq!(s.coeff(3).unwrap(), QuadExt::one());
    }

    #[test]
    fn coth_has_pole_and_one_third() {
        let c = egf_hyperbolic(HyperbolicKind::Coth, &q(1), 8).unwrap();
        assert_eq!(c.coeff(-1).unwrap(), QuadExt::one());
        assert_eq!(c.coeff(-2).unwrap(), QuadExt::zero());
        // coefficient of z¹: 2²B_2/2 = 1/3
        assert_eq!(c.coeff(1).unwrap(), QuadExt::from_rational(ratio(1, 3)));
        assert_eq!(c.coeff(2).unwrap(), QuadExt::zero());
    }

    #[test]
    fn inv_sinh_sq_values() {
        let s = egf_hyperbolic(HyperbolicKind::InvSinhSq, &q(1), 8).unwrap();
        assert_eq!(s.coeff(-2).unwrap(), QuadExt::one());
        assert_eq!(s.coeff(0).unwrap(), QuadExt::from_rational(ratio(-1, 3)));
    }

    #[test]
    fn zero_argument_rejected_for_pole_kinds() {
        for kind in [
            HyperbolicKind::Tanh,
            HyperbolicKind::Coth,
            HyperbolicKind::InvSinhSq,
            HyperbolicKind::InvCoshSq,
        ] {
            assert!(egf_hyperbolic(kind, &q(0), 8).is_err());
        }
        assert!(egf_hyperbolic(HyperbolicKind::Sinh, &q(0), 8).is_ok());
    }

    #[test]
    fn exp_product_adds_exponents() {
        let a = QuadExt::alpha();
        let b = QuadExt::from_parts(-1, 3, 1, 2);
        let prod = egf_exp(&a, 10).mul(&egf_exp(&b, 10));
        let direct = egf_exp(&(&a + &b), 10);
        assert_eq!(prod, direct);
    }

    #[test]
    fn sinh_cosh_double_angle() {
        let sinh = egf_hyperbolic(HyperbolicKind::Sinh, &q(1), 8).unwrap();
        let cosh = egf_hyperbolic(HyperbolicKind::Cosh, &q(1), 8).unwrap();
        let prod = sinh.mul(&cosh);
        let sinh2 = egf_hyperbolic(HyperbolicKind::Sinh, &q(2), 8).unwrap();
        for n in 0..=8 {
            assert_eq!(
                prod.coeff(n).unwrap(),
                sinh2.coeff(n).unwrap().scale(&ratio(1, 2)),
                "z^{}",
                n
            );
        }
    }

    #[test]
    fn coth_times_sinh_is_cosh() {
        let coth = egf_hyperbolic(HyperbolicKind::Coth, &q(1), 10).unwrap();
        let sinh = egf_hyperbolic(HyperbolicKind::Sinh, &q(1), 10).unwrap();
        let prod = coth.mul(&sinh);
        let cosh = egf_hyperbolic(HyperbolicKind::Cosh, &q(1), 10).unwrap();
        assert_eq!(prod.pole_depth(), 0, "principal parts cancel");
        for n in 0..=8 {
            assert_eq!(prod.coeff(n).unwrap(), cosh.coeff(n).unwrap(), "z^{}", n);
        }
    }

    #[test]
    fn coeff_examples_and_range_errors() {
        assert_eq!(egf_exp(&q(2), 10).coeff(3).unwrap(), q(8));
        let cosh = egf_hyperbolic(HyperbolicKind::Cosh, &q(1), 10).unwrap();
        assert_eq!(cosh.coeff(5).unwrap(), QuadExt::zero());
        assert_eq!(fib_egf(1, 10).coeff(6).unwrap(), q(8)); // F_6 = 8
        assert!(matches!(
            fib_egf(1, 10).coeff(11),
            Err(EgfError::CoeffOutOfRange {
                index: 11,
                order: 10
            })
        ));
        assert!(fib_egf(1, 10).coeff(-3).is_err());
    }

    #[test]
    fn product_order_shrinks_by_pole_depth() {
        let fl = fib_egf(1, 12).mul(&lucas_egf(1, 12));
        assert_eq!(fl.order(), 12);
        let inv = egf_hyperbolic(HyperbolicKind::InvSinhSq, &q(1), 12).unwrap();
        assert_eq!(fl.mul(&inv).order(), 10);
        let coth = egf_hyperbolic(HyperbolicKind::Coth, &q(1), 12).unwrap();
        assert_eq!(fl.mul(&coth).order(), 11);
    }

    #[test]
    fn even_times_even_parity_mask() {
        // (Σ a_{2i} z^{2i}/(2i)!)·(Σ b_{2i} z^{2i}/(2i)!) has coefficient
        // Σ_k C(n,k)·(1+(−1)^n)(1+(−1)^k)/4·a_k b_{n−k}
        let a =
            LaurentEgf::from_egf_coeffs(12, |n| if n % 2 == 0 { q(n as i64 + 1) } else { q(0) });
        let b = LaurentEgf::from_egf_coeffs(12, |n| {
            if n % 2 == 0 {
                q(2 * n as i64 - 3)
            } else {
                q(0)
            }
        });
        let prod = a.mul(&b);
        for n in 0..=12usize {
            let mut expect = QuadExt::zero();
            for k in 0..=n {
                let mask = (1 + if n % 2 == 0 { 1i64 } else { -1 })
                    * (1 + if k % 2 == 0 { 1i64 } else { -1 })
                    / 4;
                if mask == 0 {
                    continue;
                }
                let w = QuadExt::from_rational(Rational::from_integer(binomial(n, k)));
                expect +=
                    &(&(&a.coeff(k as i64).unwrap() * &b.coeff((n - k) as i64).unwrap()) * &w);
            }
            assert_eq!(prod.coeff(n as i64).unwrap(), expect, "z^{}", n);
        }
    }

    #[test]
    fn mixed_parity_product_lemma() {
        // Σa_n zⁿ · Σb_{2n} z^{2n} picks out Σ_{k≤⌊n/2⌋} a_{n−2k} b_{2k}
        // (stated for ordinary series; binomial weights carry it to EGFs)
        let a = LaurentEgf::from_egf_coeffs(12, |n| q(3 * n as i64 - 5));
        let b = LaurentEgf::from_egf_coeffs(12, |n| {
            if n % 2 == 0 {
                q(n as i64 * n as i64 + 1)
            } else {
                q(0)
            }
        });
        let prod = a.mul(&b);
        for n in 0..=12usize {
            let mut expect = QuadExt::zero();
            for k in 0..=(n / 2) {
                let w = QuadExt::from_rational(Rational::from_integer(binomial(n, 2 * k)));
                expect += &(&(&a.coeff((n - 2 * k) as i64).unwrap()
                    * &b.coeff(2 * k as i64).unwrap())
                    * &w);
            }
            assert_eq!(prod.coeff(n as i64).unwrap(), expect, "z^{}", n);
        }
    }

    #[test]
    fn functional_equations_confirm_small_orders() {
        for j in 1..=3 {
            for eq in [
                FunctionalEq::EgfFSq,
                FunctionalEq::EgfLSq,
                FunctionalEq::FlId,
                FunctionalEq::TanhForm,
                FunctionalEq::CothForm,
            ] {
                let v = check_functional_equation(eq, j, 16, None).unwrap();
                assert!(
                    v.confirmed,
                    "{:?} j={} mismatch {:?}",
                    eq, j, v.first_mismatch
                );
            }
            let v =
                check_functional_equation(FunctionalEq::HRelation, j, 16, Some(&QuadExt::alpha()))
                    .unwrap();
            assert!(v.confirmed, "H_RELATION j={} {:?}", j, v.first_mismatch);
        }
    }

    #[test]
    fn fl_id_principal_part() {
        // both sides of FL_ID show the 1/z coefficient 8/(5F_j)
        for j in 1..=4 {
            let v = check_functional_equation(FunctionalEq::FlId, j, 8, None).unwrap();
            let expect = QuadExt::from_rational(Rational::new(8.into(), 5 * fib(j)));
            assert_eq!(v.lhs_principal[1], expect);
            assert_eq!(v.rhs_principal[1], expect);
            assert!(v.lhs_principal[0].is_zero() && v.rhs_principal[0].is_zero());
        }
    }

    #[test]
    fn h_relation_requires_x() {
        assert!(matches!(
            check_functional_equation(FunctionalEq::HRelation, 1, 8, None),
            Err(EgfError::MissingParameter(_))
        ));
    }

    fn arb_quad() -> impl Strategy<Value = QuadExt> {
        (-9i64..=9, 1i64..=4, -9i64..=9, 1i64..=4)
            .prop_map(|(a, b, c, d)| QuadExt::from_parts(a, b, c, d))
    }

    fn arb_series(order: usize) -> impl Strategy<Value = LaurentEgf> {
        proptest::collection::vec(arb_quad(), order + 1)
            .prop_map(move |v| LaurentEgf::from_egf_coeffs(order, |n| v[n].clone()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn mul_is_commutative(a in arb_series(8), b in arb_series(8)) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
        }

        #[test]
        fn mul_is_associative(a in arb_series(8), b in arb_series(8), c in arb_series(8)) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn mul_distributes_over_add(a in arb_series(8), b in arb_series(8), c in arb_series(8)) {
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }
    }
}
