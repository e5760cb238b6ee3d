//! The identity catalog: every displayed Fibonacci–Lucas–Bernoulli
//! relation as a closed, enumerable list, with exact evaluation, an
//! independent oracle per family, a deterministic grid runner, and the
//! discrepancy ledger.
//!
//! Catalog entries carry their side conditions declaratively (parity of
//! n, floors on n and j, which parameters they take), so the grid runner
//! gates tuples into `NotApplicable` without per-identity code. Hard
//! domain violations (q < 2, a missing parameter, j < 1 where the
//! identity needs positive j) are parameter errors instead — they never
//! arise from the default grid.

mod context;
mod eval;
mod grid;
mod ledger;
mod oracle;
mod transform;

pub use context::EvalContext;
pub use eval::evaluate_identity;
pub use grid::{
    verify_grid, verify_grid_opts, GridSpec, IdSummary, Totals, VerdictRecord, VerificationReport,
};
pub use ledger::{discrepancy_ledger, DiscrepancyEntry, Evidence};
pub use oracle::{oracle_check, OracleError};
pub use transform::{lucas_transform, lucas_transform_closed, SeqKind};

use crate::exact::QuadExt;
use serde::Serialize;
use std::fmt;
use thiserror::Error;

/// One tag per displayed identity; the catalog is closed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[allow(clippy::upper_case_acronyms)]
pub enum IdentityId {
    L1A,
    L1B,
    L1C,
    T1A,
    T1B,
    T1C,
    SpecJ1A,
    SpecJ1B,
    SpecJ1C,
    Rem1A,
    Rem1B,
    Rem1C,
    T2A,
    T2APart,
    T2B,
    T2BPart,
    T2Conseq,
    T3A,
    T3B,
    T3AEven,
    T7A,
    T7B,
    C8A,
    C8B,
    T9A,
    T9B,
    C10A,
    C10B,
    C10C,
    C10D,
    T11A,
    T11B,
    T12A,
    T12B,
    T13,
    C21,
    C22A,
    C22B,
    ExJ3,
    ExBeta,
    C23,
    ExQ2Gen,
    ExQ2J1,
    ExQ3Gen,
    ExQ3J1,
    Lem6F,
    Lem6L,
}

impl IdentityId {
    pub const ALL: [IdentityId; 47] = [
        IdentityId::L1A,
        IdentityId::L1B,
        IdentityId::L1C,
        IdentityId::T1A,
        IdentityId::T1B,
        IdentityId::T1C,
        IdentityId::SpecJ1A,
        IdentityId::SpecJ1B,
        IdentityId::SpecJ1C,
        IdentityId::Rem1A,
        IdentityId::Rem1B,
        IdentityId::Rem1C,
        IdentityId::T2A,
        IdentityId::T2APart,
        IdentityId::T2B,
        IdentityId::T2BPart,
        IdentityId::T2Conseq,
        IdentityId::T3A,
        IdentityId::T3B,
        IdentityId::T3AEven,
        IdentityId::T7A,
        IdentityId::T7B,
        IdentityId::C8A,
        IdentityId::C8B,
        IdentityId::T9A,
        IdentityId::T9B,
        IdentityId::C10A,
        IdentityId::C10B,
        IdentityId::C10C,
        IdentityId::C10D,
        IdentityId::T11A,
        IdentityId::T11B,
        IdentityId::T12A,
        IdentityId::T12B,
        IdentityId::T13,
        IdentityId::C21,
        IdentityId::C22A,
        IdentityId::C22B,
        IdentityId::ExJ3,
        IdentityId::ExBeta,
        IdentityId::C23,
        IdentityId::ExQ2Gen,
        IdentityId::ExQ2J1,
        IdentityId::ExQ3Gen,
        IdentityId::ExQ3J1,
        IdentityId::Lem6F,
        IdentityId::Lem6L,
    ];

    pub fn tag(self) -> &'static str {
        self.entry().tag
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|id| id.tag() == tag)
    }

    /// Tags matching a glob pattern (`*` wildcards only).
    pub fn matching(pattern: &str) -> Vec<Self> {
        Self::ALL
            .into_iter()
            .filter(|id| glob_match(pattern, id.tag()))
            .collect()
    }

    pub fn entry(self) -> &'static CatalogEntry {
        &CATALOG[Self::ALL.iter().position(|&id| id == self).unwrap()]
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

fn glob_match(pattern: &str, text: &str) -> bool {
    // '*' matches any run of characters; everything else is literal.
    let pat: Vec<char> = pattern.chars().collect();
    let txt: Vec<char> = text.chars().collect();
    fn rec(p: &[char], t: &[char]) -> bool {
        match p.first() {
            None => t.is_empty(),
            Some('*') => (0..=t.len()).any(|i| rec(&p[1..], &t[i..])),
            Some(c) => t.first() == Some(c) && rec(&p[1..], &t[1..]),
        }
    }
    rec(&pat, &txt)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_int(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn quad(self) -> QuadExt {
        QuadExt::from_int(self.as_int())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Which optional parameters an identity consumes.
#[derive(Clone, Copy, Debug, Default)]
pub struct ParamUses {
    pub j: bool,
    pub m: bool,
    pub q: bool,
    pub sign: bool,
    pub z: ZChoice,
}

/// Where grid values for the z parameter come from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ZChoice {
    #[default]
    None,
    /// {1/L_j, −1/L_j, 2/L_j, 1} — the substitution points of the shift
    /// parameter.
    PerJ,
    /// The standard ℚ(√5) sample set.
    SampleSet,
}

/// Scalar identity or coefficient-wise polynomial identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ValueKind {
    Scalar,
    Polynomial,
}

/// Which independent re-derivation route covers the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleFamily {
    /// Coefficient extraction from the generating-function equations.
    Egf,
    /// Binet substitution (quadratic-field powers) plus the binomial
    /// theorem.
    Binet,
}

/// Declarative catalog row: identity metadata plus its side conditions.
#[derive(Debug)]
pub struct CatalogEntry {
    pub id: IdentityId,
    pub tag: &'static str,
    pub summary: &'static str,
    pub kind: ValueKind,
    pub family: OracleFamily,
    pub uses: ParamUses,
    /// Soft gates: tuples failing these become `NotApplicable`.
    pub n_parity: Option<Parity>,
    pub n_min: u32,
    pub j_min_soft: i64,
    /// Hard floor on j (positive-index identities); violations are
    /// parameter errors.
    pub j_min_hard: i64,
}

impl CatalogEntry {
    /// `Err` on a hard domain violation, `Ok(false)` when a soft side
    /// condition gates the tuple out, `Ok(true)` when it is evaluable.
    pub fn check_params(&self, p: &IdentityParams) -> Result<bool, ParamError> {
        let need = |present: bool, what: &'static str| {
            if present {
                Ok(())
            } else {
                Err(ParamError::Missing {
                    id: self.id,
                    param: what,
                })
            }
        };
        if self.uses.j {
            need(p.j.is_some(), "j")?;
        }
        if self.uses.m {
            need(p.m.is_some(), "m")?;
        }
        if self.uses.q {
            need(p.q.is_some(), "q")?;
        }
        if self.uses.sign {
            need(p.sign.is_some(), "sign")?;
        }
        if self.uses.z != ZChoice::None {
            need(p.z.is_some(), "z")?;
        }
        if let Some(q) = p.q {
            if self.uses.q && q < 2 {
                return Err(ParamError::OutOfDomain {
                    id: self.id,
                    reason: format!("q = {} but the Raabe parameter requires q >= 2", q),
                });
            }
        }
        if let Some(j) = p.j {
            if self.uses.j && j < self.j_min_hard {
                return Err(ParamError::OutOfDomain {
                    id: self.id,
                    reason: format!(
                        "j = {} but the identity requires j >= {}",
                        j, self.j_min_hard
                    ),
                });
            }
            if self.uses.j && j < self.j_min_soft {
                return Ok(false);
            }
        }
        if p.n < self.n_min {
            return Ok(false);
        }
        match self.n_parity {
            Some(Parity::Even) if !p.n.is_multiple_of(2) => Ok(false),
            Some(Parity::Odd) if p.n % 2 != 1 => Ok(false),
            _ => Ok(true),
        }
    }
}

/// Parameter tuple for one identity evaluation; fields are optional per
/// the identity's arity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct IdentityParams {
    pub n: u32,
    pub j: Option<i64>,
    pub m: Option<i64>,
    pub q: Option<i64>,
    pub sign: Option<Sign>,
    pub z: Option<QuadExt>,
    pub x: Option<QuadExt>,
}

impl IdentityParams {
    pub fn new(n: u32) -> Self {
        IdentityParams {
            n,
            j: None,
            m: None,
            q: None,
            sign: None,
            z: None,
            x: None,
        }
    }

    pub fn with_j(mut self, j: i64) -> Self {
        self.j = Some(j);
        self
    }

    pub fn with_m(mut self, m: i64) -> Self {
        self.m = Some(m);
        self
    }

    pub fn with_q(mut self, q: i64) -> Self {
        self.q = Some(q);
        self
    }

    pub fn with_sign(mut self, sign: Sign) -> Self {
        self.sign = Some(sign);
        self
    }

    pub fn with_z(mut self, z: QuadExt) -> Self {
        self.z = Some(z);
        self
    }

    pub fn with_x(mut self, x: QuadExt) -> Self {
        self.x = Some(x);
        self
    }
}

impl fmt::Display for IdentityParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        if let Some(j) = self.j {
            write!(f, " j={}", j)?;
        }
        if let Some(m) = self.m {
            write!(f, " m={}", m)?;
        }
        if let Some(q) = self.q {
            write!(f, " q={}", q)?;
        }
        if let Some(s) = self.sign {
            write!(f, " sign={}", s)?;
        }
        if let Some(z) = &self.z {
            write!(f, " z={}", z)?;
        }
        if let Some(x) = &self.x {
            write!(f, " x={}", x)?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum VerdictStatus {
    Equal,
    Unequal,
    NotApplicable,
}

impl VerdictStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictStatus::Equal => "Equal",
            VerdictStatus::Unequal => "Unequal",
            VerdictStatus::NotApplicable => "NotApplicable",
        }
    }
}

/// Exact value of one side of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactValue {
    Scalar(QuadExt),
    Poly(crate::exact::DensePoly),
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactValue::Scalar(v) => write!(f, "{}", v),
            ExactValue::Poly(p) => write!(f, "{}", p),
        }
    }
}

/// Outcome of evaluating one identity at one parameter tuple.
#[derive(Clone, Debug)]
pub struct IdentityVerdict {
    pub id: IdentityId,
    pub params: IdentityParams,
    pub lhs: Option<ExactValue>,
    pub rhs: Option<ExactValue>,
    pub status: VerdictStatus,
    pub note: Option<String>,
}

impl IdentityVerdict {
    pub(crate) fn decided(
        id: IdentityId,
        params: IdentityParams,
        lhs: ExactValue,
        rhs: ExactValue,
    ) -> Self {
        let status = if lhs == rhs {
            VerdictStatus::Equal
        } else {
            VerdictStatus::Unequal
        };
        IdentityVerdict {
            id,
            params,
            lhs: Some(lhs),
            rhs: Some(rhs),
            status,
            note: None,
        }
    }

    pub(crate) fn not_applicable(id: IdentityId, params: IdentityParams, note: &str) -> Self {
        IdentityVerdict {
            id,
            params,
            lhs: None,
            rhs: None,
            status: VerdictStatus::NotApplicable,
            note: Some(note.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("{id}: missing required parameter {param}")]
    Missing { id: IdentityId, param: &'static str },
    #[error("{id}: {reason}")]
    OutOfDomain { id: IdentityId, reason: String },
}

use OracleFamily::{Binet, Egf};
use ValueKind::{Polynomial, Scalar};

const fn uses() -> ParamUses {
    ParamUses {
        j: false,
        m: false,
        q: false,
        sign: false,
        z: ZChoice::None,
    }
}

const fn uses_j() -> ParamUses {
    ParamUses { j: true, ..uses() }
}

const fn uses_jm() -> ParamUses {
    ParamUses {
        j: true,
        m: true,
        ..uses()
    }
}

macro_rules! entry {
    ($id:ident, $tag:literal, $summary:literal, $kind:expr, $family:expr, $uses:expr
     $(, parity: $parity:expr)? $(, n_min: $n_min:expr)? $(, j_soft: $j_soft:expr)?
     $(, j_hard: $j_hard:expr)?) => {{
        #[allow(unused_mut, unused_assignments)]
        {
            let mut n_parity: Option<Parity> = None;
            let mut n_min: u32 = 0;
            let mut j_min_soft: i64 = i64::MIN;
            let mut j_min_hard: i64 = i64::MIN;
            $(n_parity = Some($parity);)?
            $(n_min = $n_min;)?
            $(j_min_soft = $j_soft;)?
            $(j_min_hard = $j_hard;)?
            CatalogEntry {
                id: IdentityId::$id,
                tag: $tag,
                summary: $summary,
                kind: $kind,
                family: $family,
                uses: $uses,
                n_parity,
                n_min,
                j_min_soft,
                j_min_hard,
            }
        }
    }};
}

/// The full catalog, in tag order. Index must follow `IdentityId::ALL`.
pub static CATALOG: [CatalogEntry; 47] = [
    entry!(L1A, "L1A", "sum C(n,k) F_{jk} F_{j(n-k)} = (2^n L_{jn} - 2 L_j^n)/5",
        Scalar, Egf, uses_j(), j_hard: 1),
    entry!(L1B, "L1B", "sum C(n,k) L_{jk} L_{j(n-k)} = 2^n L_{jn} + 2 L_j^n",
        Scalar, Egf, uses_j(), j_hard: 1),
    entry!(L1C, "L1C", "sum C(n,k) F_{jk} L_{j(n-k)} = 2^n F_{jn}",
        Scalar, Egf, uses_j(), j_hard: 1),
    entry!(T1A, "T1A", "even-tail B_{n-k+2} convolution of 2^k L_{jk} - 2 L_j^k",
        Scalar, Egf, uses_j(), j_hard: 1),
    entry!(T1B, "T1B", "even-tail (2^{n-k+2}-1) B_{n-k+2} convolution of 2^k L_{jk} + 2 L_j^k",
        Scalar, Egf, uses_j(), j_hard: 1),
    entry!(T1C, "T1C", "mixed-parity B convolution of 2^k F_{jk} and L_j^k",
        Scalar, Egf, uses_j(), j_hard: 1),
    entry!(
        SpecJ1A,
        "SPEC_J1_A",
        "j = 1 case of T1A (the problem-proposal identity)",
        Scalar,
        Egf,
        uses()
    ),
    entry!(
        SpecJ1B,
        "SPEC_J1_B",
        "j = 1 case of T1B",
        Scalar,
        Egf,
        uses()
    ),
    entry!(
        SpecJ1C,
        "SPEC_J1_C",
        "j = 1 case of T1C",
        Scalar,
        Egf,
        uses()
    ),
    entry!(Rem1A, "REM1_A", "mod-free form of T1A, n even",
        Scalar, Egf, uses_j(), parity: Parity::Even, j_hard: 1),
    entry!(Rem1B, "REM1_B", "mod-free form of T1B, n even",
        Scalar, Egf, uses_j(), parity: Parity::Even, j_hard: 1),
    entry!(Rem1C, "REM1_C", "mod-free form of T1C, n even",
        Scalar, Egf, uses_j(), parity: Parity::Even, j_hard: 1),
    entry!(T2A, "T2A", "alternating F_{j(k+1)} sum against even-n Bernoulli tail",
        Scalar, Egf, uses_j(), j_hard: 1),
    entry!(T2APart, "T2A_PART", "sum_{k=1}^{2n} (-1)^k C(2n-1,k-1) 2^k F_{jk}/(k L_j^k) = 0",
        Scalar, Egf, uses_j(), n_min: 1, j_hard: 1),
    entry!(T2B, "T2B", "alternating L_{jk} sum with B_k tail equals 1 + (-1)^n",
        Scalar, Egf, uses_j(), n_min: 1, j_hard: 1),
    entry!(T2BPart, "T2B_PART", "sum_{k=0}^{2n-1} (-1)^k C(2n-1,k) 2^k L_{jk}/L_j^k = 0",
        Scalar, Egf, uses_j(), n_min: 1, j_hard: 1),
    entry!(T2Conseq, "T2_CONSEQ", "sum C(n,k) 2^k B_k/(n-k+1) = 0 for even n >= 2",
        Scalar, Egf, uses(), parity: Parity::Even, n_min: 2),
    entry!(T3A, "T3A", "floor(n/2) convolution of F_{j(n-2k+1)} B_{2k} minus binomial half-sum",
        Scalar, Egf, uses_j(), j_hard: 1),
    entry!(T3B, "T3B", "floor(n/2) convolution of L_{j(n-2k)} B_{2k+2} minus weighted half-sum",
        Scalar, Egf, uses_j(), j_hard: 1),
    entry!(T3AEven, "T3A_EVEN", "rewritten T3A: even-part sum equals F_j L_{nj}/2",
        Scalar, Egf, uses_j(), j_hard: 1),
    entry!(
        T7A,
        "T7A",
        "sum C(n,k) F_{jk+m} B_{n-k}(x) z^k as a polynomial identity in x",
        Polynomial,
        Binet,
        ParamUses {
            j: true,
            m: true,
            z: ZChoice::PerJ,
            ..uses()
        }
    ),
    entry!(
        T7B,
        "T7B",
        "sum C(n,k) L_{jk+m} B_{n-k}(x) z^k as a polynomial identity in x",
        Polynomial,
        Binet,
        ParamUses {
            j: true,
            m: true,
            z: ZChoice::PerJ,
            ..uses()
        }
    ),
    entry!(
        C8A,
        "C8A",
        "x = 0 case of T7A, a polynomial identity in z",
        Polynomial,
        Binet,
        uses_jm()
    ),
    entry!(
        C8B,
        "C8B",
        "x = 0 case of T7B, a polynomial identity in z",
        Polynomial,
        Binet,
        uses_jm()
    ),
    entry!(
        T9A,
        "T9A",
        "sum C(n,k) F_{jk+m} B_{n-k}/L_j^k with F_m/L_m branches",
        Scalar,
        Binet,
        uses_jm()
    ),
    entry!(
        T9B,
        "T9B",
        "sum C(n,k) L_{jk+m} B_{n-k}/L_j^k with L_m/F_m branches",
        Scalar,
        Binet,
        uses_jm()
    ),
    entry!(C10A, "C10A", "sum C(n,k) F_{jk-1} B_{n-k}/L_j^k = B_n(alpha^j/L_j), n even",
        Scalar, Binet, uses_j(), parity: Parity::Even),
    entry!(C10B, "C10B", "sum_{k>=1} C(n,k) F_{jk} B_{n-k}/L_j^k = 0, n even",
        Scalar, Binet, uses_j(), parity: Parity::Even),
    entry!(C10C, "C10C", "sum C(n,k) L_{jk-1} B_{n-k}/L_j^k = sqrt5 B_n(alpha^j/L_j), n odd",
        Scalar, Binet, uses_j(), parity: Parity::Odd),
    entry!(C10D, "C10D", "sum C(n,k) L_{jk} B_{n-k}/L_j^k = 0, n odd",
        Scalar, Binet, uses_j(), parity: Parity::Odd),
    entry!(
        T11A,
        "T11A",
        "alternating-sign variant of T9A with the n F_{j(n-1)+m} tail",
        Scalar,
        Binet,
        uses_jm()
    ),
    entry!(
        T11B,
        "T11B",
        "alternating-sign variant of T9B with the n L_{j(n-1)+m} tail",
        Scalar,
        Binet,
        uses_jm()
    ),
    entry!(T12A, "T12A", "sum C(n,k) 2^k F_{jk} B_{n-k}/L_j^k = (n/sqrt5)(sqrt5 F_j/L_j)^{n-1}, n even",
        Scalar, Binet, uses_j(), parity: Parity::Even),
    entry!(T12B, "T12B", "sum C(n,k) 2^k L_{jk} B_{n-k}/L_j^k = n (sqrt5 F_j/L_j)^{n-1}, n odd",
        Scalar, Binet, uses_j(), parity: Parity::Odd),
    entry!(T13, "T13", "sum C(n,k) 2^k F_{jk} (s sqrt5 F_j)^{n-k} B_{n-k}(x), polynomial in x",
        Polynomial, Binet, ParamUses { j: true, sign: true, ..uses() }, j_hard: 1),
    entry!(C21, "C21", "x = 0 case of T13",
        Scalar, Binet, ParamUses { j: true, sign: true, ..uses() }, j_hard: 1),
    entry!(C22A, "C22A", "x = alpha case of T13 (+ branch), with L_{j+3}",
        Scalar, Binet, uses_j(), j_hard: 1),
    entry!(C22B, "C22B", "x = alpha case of T13 (- branch), with L_{j-3}, j >= 3",
        Scalar, Binet, uses_j(), j_soft: 3, j_hard: 1),
    entry!(ExJ3, "EX_J3", "j = 3 case of C22B", Scalar, Binet, uses()),
    entry!(
        ExBeta,
        "EX_BETA",
        "x = beta, j = 1 case of T13",
        Scalar,
        Binet,
        uses()
    ),
    entry!(C23, "C23", "Raabe q-analog of T13 with q L_j shifts",
        Scalar, Binet, ParamUses { j: true, q: true, sign: true, ..uses() }, n_min: 1, j_hard: 1),
    entry!(ExQ2Gen, "EX_Q2_GEN", "q = 2 case of C23",
        Scalar, Binet, uses_j(), n_min: 1, j_hard: 1),
    entry!(ExQ2J1, "EX_Q2_J1", "q = 2, j = 1 case of C23 in closed form",
        Scalar, Binet, uses(), n_min: 1),
    entry!(ExQ3Gen, "EX_Q3_GEN", "q = 3 case of C23",
        Scalar, Binet, uses_j(), n_min: 1, j_hard: 1),
    entry!(ExQ3J1, "EX_Q3_J1", "q = 3, j = 1 case of C23",
        Scalar, Binet, uses(), n_min: 1),
    entry!(
        Lem6F,
        "LEM6_F",
        "Fibonacci index transform of h(z) = z(1+z^2)^n",
        Scalar,
        Binet,
        ParamUses {
            j: true,
            m: true,
            z: ZChoice::SampleSet,
            ..uses()
        }
    ),
    entry!(
        Lem6L,
        "LEM6_L",
        "Lucas index transform of h(z) = z(1+z^2)^n",
        Scalar,
        Binet,
        ParamUses {
            j: true,
            m: true,
            z: ZChoice::SampleSet,
            ..uses()
        }
    ),
];

/// The standard ℚ(√5) sample points {0, 1, 1/2, −1, 2/3, α, β}.
pub fn sample_points() -> Vec<QuadExt> {
    vec![
        QuadExt::zero(),
        QuadExt::one(),
        QuadExt::from_parts(1, 2, 0, 1),
        QuadExt::from_int(-1),
        QuadExt::from_parts(2, 3, 0, 1),
        QuadExt::alpha(),
        QuadExt::beta(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_closed_and_aligned() {
        assert_eq!(CATALOG.len(), IdentityId::ALL.len());
        for (i, id) in IdentityId::ALL.into_iter().enumerate() {
            assert_eq!(CATALOG[i].id, id);
            assert_eq!(id.entry().id, id);
            assert_eq!(IdentityId::from_tag(id.tag()), Some(id));
        }
        // tags are unique
        let mut tags: Vec<_> = IdentityId::ALL.iter().map(|id| id.tag()).collect();
        tags.sort_unstable();
        tags.dedup();
        assert_eq!(tags.len(), 47);
    }

    #[test]
    fn glob_matching() {
        assert_eq!(IdentityId::matching("L1*").len(), 3);
        assert_eq!(IdentityId::matching("T2*").len(), 5);
        assert_eq!(IdentityId::matching("*").len(), 47);
        assert_eq!(IdentityId::matching("T9A").len(), 1);
        assert!(IdentityId::matching("NOSUCH").is_empty());
        assert_eq!(IdentityId::matching("*_J1").len(), 2); // EX_Q2_J1, EX_Q3_J1
    }

    #[test]
    fn side_condition_gating() {
        let t12a = IdentityId::T12A.entry();
        assert_eq!(
            t12a.check_params(&IdentityParams::new(2).with_j(1)),
            Ok(true)
        );
        assert_eq!(
            t12a.check_params(&IdentityParams::new(3).with_j(1)),
            Ok(false)
        );
        assert!(t12a.check_params(&IdentityParams::new(2)).is_err());

        let c22b = IdentityId::C22B.entry();
        assert_eq!(
            c22b.check_params(&IdentityParams::new(4).with_j(2)),
            Ok(false)
        );
        assert_eq!(
            c22b.check_params(&IdentityParams::new(4).with_j(3)),
            Ok(true)
        );

        let c23 = IdentityId::C23.entry();
        let bad_q = IdentityParams::new(2)
            .with_j(1)
            .with_q(1)
            .with_sign(Sign::Plus);
        assert!(matches!(
            c23.check_params(&bad_q),
            Err(ParamError::OutOfDomain { .. })
        ));

        let conseq = IdentityId::T2Conseq.entry();
        assert_eq!(conseq.check_params(&IdentityParams::new(0)), Ok(false));
        assert_eq!(conseq.check_params(&IdentityParams::new(2)), Ok(true));
    }
}
