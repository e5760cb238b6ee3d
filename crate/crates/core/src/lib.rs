//! Exact verification of Fibonacci–Lucas–Bernoulli identities over ℚ(√5).
//!
//! The crate evaluates a closed catalog of binomial-convolution and
//! Bernoulli-polynomial identities with arbitrary-precision rational
//! arithmetic, re-derives the convolution family from the generating
//! functions of (F_{jn}) and (L_{jn}) as an independent oracle, and keeps
//! a machine-evidenced ledger of the places where the printed source
//! formulas needed correction.
//!
//! Layering, bottom up:
//! - [`exact`]: rationals, ℚ(√5), dense polynomials
//! - [`sequences`]: Fibonacci/Lucas for all integer indices
//! - [`bernoulli`]: Bernoulli numbers and polynomials
//! - [`egf`]: truncated Laurent exponential generating functions
//! - [`identities`]: the catalog, grid runner, oracle and ledger

#![allow(clippy::manual_is_multiple_of)]

pub mod bernoulli;
pub mod egf;
pub mod exact;
pub mod identities;
pub mod sequences;

pub use exact::{DensePoly, QuadExt, Rational};
pub use identities::{
    EvalContext, GridSpec, IdentityId, IdentityParams, IdentityVerdict, VerdictStatus,
    VerificationReport,
};
