//! Shared evaluation context: precomputed sequence, Bernoulli and
//! binomial tables plus memoized Bernoulli-polynomial values at field
//! points. Everything is either immutable after construction or behind
//! a read-write lock, so a single context can back parallel grid
//! evaluation; the memos are transparent (same results with or without).
//!
//! The context also carries the oracle-side state: a cache of generating
//! functions keyed by series kind and j, golden-ratio powers built by
//! pure quadratic-field multiplication (independent of the fast-doubling
//! integer tables), and Bernoulli point values through the power-sum
//! route (independent of Horner evaluation).

use crate::bernoulli::{bernoulli_numbers_upto, bernoulli_poly};
use crate::egf::LaurentEgf;
use crate::exact::{binomial, DensePoly, QuadExt, Rational};
use crate::sequences::{fib, lucas};
use num_bigint::BigInt;
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

pub struct EvalContext {
    n_max: usize,
    fib_lo: i64,
    fib_table: Vec<BigInt>,
    lucas_table: Vec<BigInt>,
    bern: Vec<Rational>,
    bpoly: Vec<DensePoly>,
    /// point ↦ [B_0(point), …, B_{n_max}(point)] by Horner
    bp_values: RwLock<HashMap<QuadExt, Arc<Vec<QuadExt>>>>,
    /// point ↦ same column by the power-sum route (oracle side)
    bp_sum_values: RwLock<HashMap<QuadExt, Arc<Vec<QuadExt>>>>,
    /// α^t for t in [fib_lo, fib_hi], by iterated field multiplication
    alpha_pows: Vec<QuadExt>,
    pub(super) egf_order: usize,
    pub(super) egf_memo: RwLock<HashMap<(u8, i64), Arc<LaurentEgf>>>,
}

impl EvalContext {
    /// Context sized for grids up to `n_max` with sequence indices in
    /// `[fib_lo, fib_hi]`.
    pub fn new(n_max: usize, fib_lo: i64, fib_hi: i64) -> Self {
        assert!(fib_lo <= 0 && fib_hi > 0);
        let alpha = QuadExt::alpha();
        let alpha_inv = -QuadExt::beta(); // α⁻¹
        let mut alpha_pows = vec![QuadExt::one(); (fib_hi - fib_lo + 1) as usize];
        let zero_idx = (-fib_lo) as usize;
        for i in (zero_idx + 1)..alpha_pows.len() {
            alpha_pows[i] = &alpha_pows[i - 1] * &alpha;
        }
        for i in (0..zero_idx).rev() {
            alpha_pows[i] = &alpha_pows[i + 1] * &alpha_inv;
        }
        EvalContext {
            n_max,
            fib_lo,
            fib_table: (fib_lo..=fib_hi).map(fib).collect(),
            lucas_table: (fib_lo..=fib_hi).map(lucas).collect(),
            bern: bernoulli_numbers_upto(2 * n_max + 10),
            bpoly: (0..=n_max).map(bernoulli_poly).collect(),
            bp_values: RwLock::new(HashMap::new()),
            bp_sum_values: RwLock::new(HashMap::new()),
            alpha_pows,
            egf_order: 2 * n_max + 6,
            egf_memo: RwLock::new(HashMap::new()),
        }
    }

    /// Sized for the default verification grid.
    pub fn for_default_grid() -> Self {
        Self::new(32, -24, 560)
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn fib_int(&self, t: i64) -> BigInt {
        let idx = t - self.fib_lo;
        if idx >= 0 && (idx as usize) < self.fib_table.len() {
            self.fib_table[idx as usize].clone()
        } else {
            fib(t)
        }
    }

    pub fn lucas_int(&self, t: i64) -> BigInt {
        let idx = t - self.fib_lo;
        if idx >= 0 && (idx as usize) < self.lucas_table.len() {
            self.lucas_table[idx as usize].clone()
        } else {
            lucas(t)
        }
    }

    pub fn fib_rat(&self, t: i64) -> Rational {
        Rational::from_integer(self.fib_int(t))
    }

    pub fn lucas_rat(&self, t: i64) -> Rational {
        Rational::from_integer(self.lucas_int(t))
    }

    pub fn fibq(&self, t: i64) -> QuadExt {
        QuadExt::from_rational(self.fib_rat(t))
    }

    pub fn lucq(&self, t: i64) -> QuadExt {
        QuadExt::from_rational(self.lucas_rat(t))
    }

    /// √5·F_t as a field element.
    pub fn sqrt5_fib(&self, t: i64) -> QuadExt {
        QuadExt::new(Rational::from_integer(0.into()), self.fib_rat(t))
    }

    pub fn bern(&self, k: usize) -> Rational {
        if k < self.bern.len() {
            self.bern[k].clone()
        } else {
            crate::bernoulli::bernoulli_number(k)
        }
    }

    pub fn bernq(&self, k: usize) -> QuadExt {
        QuadExt::from_rational(self.bern(k))
    }

    pub fn binom(&self, n: usize, k: usize) -> Rational {
        Rational::from_integer(binomial(n, k))
    }

    pub fn binomq(&self, n: usize, k: usize) -> QuadExt {
        QuadExt::from_rational(self.binom(n, k))
    }

    pub fn bpoly(&self, n: usize) -> DensePoly {
        if n < self.bpoly.len() {
            self.bpoly[n].clone()
        } else {
            bernoulli_poly(n)
        }
    }

    /// Borrowed access for hot loops; callers stay within `n_max`.
    pub fn bpoly_ref(&self, n: usize) -> &DensePoly {
        &self.bpoly[n]
    }

    /// B_n(c) through the memoized per-point column (Horner evaluation
    /// of the cached polynomials).
    pub fn bern_at(&self, n: usize, c: &QuadExt) -> QuadExt {
        if n > self.n_max {
            return bernoulli_poly(n).eval(c);
        }
        self.bern_column(c)[n].clone()
    }

    /// The whole memoized column [B_0(c), …, B_{n_max}(c)].
    pub fn bern_column(&self, c: &QuadExt) -> Arc<Vec<QuadExt>> {
        {
            let memo = self.bp_values.read().unwrap();
            if let Some(col) = memo.get(c) {
                return col.clone();
            }
        }
        let col: Arc<Vec<QuadExt>> =
            Arc::new((0..=self.n_max).map(|t| self.bpoly[t].eval(c)).collect());
        self.bp_values
            .write()
            .unwrap()
            .entry(c.clone())
            .or_insert(col)
            .clone()
    }

    fn sum_column_limit(&self, c: &QuadExt, limit: usize) -> Vec<QuadExt> {
        let mut pows = Vec::with_capacity(limit + 1);
        pows.push(QuadExt::one());
        for i in 1..=limit {
            pows.push(&pows[i - 1] * c);
        }
        (0..=limit)
            .map(|t| {
                let mut acc = QuadExt::zero();
                for k in 0..=t {
                    let b = self.bern(k);
                    if b != Rational::from_integer(0.into()) {
                        acc += &pows[t - k].scale(&(self.binom(t, k) * b));
                    }
                }
                acc
            })
            .collect()
    }

    fn sum_column(&self, c: &QuadExt) -> Vec<QuadExt> {
        self.sum_column_limit(c, self.n_max)
    }

    /// B_n(c) through the power-sum route Σ_k C(n,k) B_k c^{n−k} — the
    /// oracle's second path, independent of Horner evaluation.
    pub fn bern_at_sum(&self, n: usize, c: &QuadExt) -> QuadExt {
        let compute_col = |limit: usize| -> Vec<QuadExt> { self.sum_column_limit(c, limit) };
        if n > self.n_max {
            return compute_col(n)[n].clone();
        }
        self.bern_sum_column(c)[n].clone()
    }

    /// The whole power-sum column [B_0(c), …, B_{n_max}(c)].
    pub fn bern_sum_column(&self, c: &QuadExt) -> Arc<Vec<QuadExt>> {
        {
            let memo = self.bp_sum_values.read().unwrap();
            if let Some(col) = memo.get(c) {
                return col.clone();
            }
        }
        let col = Arc::new(self.sum_column(c));
        self.bp_sum_values
            .write()
            .unwrap()
            .entry(c.clone())
            .or_insert(col)
            .clone()
    }

    /// α^t by iterated field multiplication (never through the integer
    /// sequence tables).
    pub fn alpha_pow_binet(&self, t: i64) -> QuadExt {
        let idx = t - self.fib_lo;
        if idx >= 0 && (idx as usize) < self.alpha_pows.len() {
            self.alpha_pows[idx as usize].clone()
        } else {
            QuadExt::alpha().powi(t)
        }
    }

    pub fn beta_pow_binet(&self, t: i64) -> QuadExt {
        self.alpha_pow_binet(t).conj()
    }
}
