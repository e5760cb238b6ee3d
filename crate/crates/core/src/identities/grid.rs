//! Deterministic grid verification: enumerate each identity's parameter
//! tuples, evaluate in parallel, and emit a report whose bytes do not
//! depend on the number of worker threads (verdicts are sorted by
//! identity tag and parameter tuple before rendering).

use super::context::EvalContext;
use super::eval::evaluate_identity;
use super::{
    CatalogEntry, ExactValue, IdentityId, IdentityParams, IdentityVerdict, Sign, VerdictStatus,
    ZChoice,
};
use crate::exact::{rat_int, QuadExt, Rational};
use crate::sequences::lucas;
use num_traits::One;
use serde::Serialize;

/// Parameter ranges for a verification run. The defaults reproduce the
/// full acceptance grid.
#[derive(Clone, Debug, Serialize)]
pub struct GridSpec {
    pub n_max: u32,
    pub j_max: i64,
    pub m_lo: i64,
    pub m_hi: i64,
    pub q_max: i64,
    /// Truncation order echoed to functional-equation checks.
    pub order: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            n_max: 30,
            j_max: 8,
            m_lo: -5,
            m_hi: 5,
            q_max: 6,
            order: 32,
        }
    }
}

impl GridSpec {
    /// Shift samples for the x-polynomial identities: 1/L_j, −1/L_j,
    /// 2/L_j, 1.
    pub fn z_per_j(j: i64) -> Vec<QuadExt> {
        let inv_lj = Rational::one() / Rational::from_integer(lucas(j));
        vec![
            QuadExt::from_rational(inv_lj.clone()),
            QuadExt::from_rational(-inv_lj.clone()),
            QuadExt::from_rational(rat_int(2) * inv_lj),
            QuadExt::one(),
        ]
    }

    /// All parameter tuples for one catalog entry, in deterministic order.
    pub fn tuples(&self, entry: &CatalogEntry) -> Vec<IdentityParams> {
        let js: Vec<Option<i64>> = if entry.uses.j {
            (1..=self.j_max).map(Some).collect()
        } else {
            vec![None]
        };
        let ms: Vec<Option<i64>> = if entry.uses.m {
            (self.m_lo..=self.m_hi).map(Some).collect()
        } else {
            vec![None]
        };
        let qs: Vec<Option<i64>> = if entry.uses.q {
            (2..=self.q_max).map(Some).collect()
        } else {
            vec![None]
        };
        let signs: Vec<Option<Sign>> = if entry.uses.sign {
            vec![Some(Sign::Plus), Some(Sign::Minus)]
        } else {
            vec![None]
        };
        let mut out = Vec::new();
        for n in 0..=self.n_max {
            for &j in &js {
                let zs: Vec<Option<QuadExt>> = match entry.uses.z {
                    ZChoice::None => vec![None],
                    ZChoice::PerJ => Self::z_per_j(j.unwrap_or(1))
                        .into_iter()
                        .map(Some)
                        .collect(),
                    ZChoice::SampleSet => super::sample_points().into_iter().map(Some).collect(),
                };
                for &m in &ms {
                    for &q in &qs {
                        for &sign in &signs {
                            for z in &zs {
                                out.push(IdentityParams {
                                    n,
                                    j,
                                    m,
                                    q,
                                    sign,
                                    z: z.clone(),
                                    x: None,
                                });
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdSummary {
    pub identity: String,
    pub equal: usize,
    pub unequal: usize,
    pub not_applicable: usize,
}

#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct Totals {
    pub equal: usize,
    pub unequal: usize,
    pub not_applicable: usize,
}

/// Exact value in report form: scalars keep their two fraction
/// components, polynomials their compact text rendering.
#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum ValueRepr {
    Scalar {
        rat: String,
        irr: String,
        #[serde(skip)]
        display: String,
    },
    Poly(String),
}

impl ValueRepr {
    fn from_quad(q: &QuadExt) -> Self {
        ValueRepr::Scalar {
            rat: crate::exact::rational_string(&q.rat),
            irr: crate::exact::rational_string(&q.irr),
            display: q.to_string(),
        }
    }

    fn from_value(v: &ExactValue) -> Self {
        match v {
            ExactValue::Scalar(q) => Self::from_quad(q),
            ExactValue::Poly(p) => ValueRepr::Poly(p.to_string()),
        }
    }

    fn cell(&self) -> &str {
        match self {
            ValueRepr::Scalar { display, .. } => display,
            ValueRepr::Poly(s) => s,
        }
    }
}

/// The parameter tuple as reported; fields the identity does not take
/// are omitted.
#[derive(Clone, Debug, Serialize)]
pub struct ParamsRecord {
    pub n: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<ValueRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<ValueRepr>,
}

/// One record per verdict.
#[derive(Clone, Debug, Serialize)]
pub struct VerdictRecord {
    pub identity: String,
    pub params: ParamsRecord,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<ValueRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<ValueRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerdictRecord {
    fn from_verdict(v: &IdentityVerdict) -> Self {
        VerdictRecord {
            identity: v.id.tag().to_string(),
            params: ParamsRecord {
                n: v.params.n,
                j: v.params.j,
                m: v.params.m,
                q: v.params.q,
                sign: v.params.sign.map(|s| s.to_string()),
                z: v.params.z.as_ref().map(ValueRepr::from_quad),
                x: v.params.x.as_ref().map(ValueRepr::from_quad),
            },
            status: v.status.as_str(),
            lhs: v.lhs.as_ref().map(ValueRepr::from_value),
            rhs: v.rhs.as_ref().map(ValueRepr::from_value),
            note: v.note.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VerificationReport {
    pub grid: GridSpec,
    pub identities: Vec<String>,
    pub summaries: Vec<IdSummary>,
    pub totals: Totals,
    pub records: Vec<VerdictRecord>,
}

impl VerificationReport {
    pub fn unequal(&self) -> usize {
        self.totals.unequal
    }

    pub fn summary_for(&self, tag: &str) -> Option<&IdSummary> {
        self.summaries.iter().find(|s| s.identity == tag)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("identity,n,j,m,q,sign,z,x,status,lhs,rhs,note\n");
        let cell = |s: Option<String>| -> String {
            match s {
                None => String::new(),
                Some(v) => {
                    if v.contains(',') || v.contains('"') || v.contains('\n') {
                        format!("\"{}\"", v.replace('"', "\"\""))
                    } else {
                        v
                    }
                }
            }
        };
        let repr = |v: &Option<ValueRepr>| v.as_ref().map(|r| r.cell().to_string());
        for r in &self.records {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{},{}\n",
                r.identity,
                r.params.n,
                r.params.j.map(|v| v.to_string()).unwrap_or_default(),
                r.params.m.map(|v| v.to_string()).unwrap_or_default(),
                r.params.q.map(|v| v.to_string()).unwrap_or_default(),
                cell(r.params.sign.clone()),
                cell(repr(&r.params.z)),
                cell(repr(&r.params.x)),
                r.status,
                cell(repr(&r.lhs)),
                cell(repr(&r.rhs)),
                cell(r.note.clone()),
            ));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "verification grid: n <= {}, j <= {}, m in [{}, {}], q in [2, {}]\n\n",
            self.grid.n_max, self.grid.j_max, self.grid.m_lo, self.grid.m_hi, self.grid.q_max
        ));
        out.push_str(&format!(
            "{:<12} {:>8} {:>8} {:>8}\n",
            "identity", "equal", "unequal", "n/a"
        ));
        for s in &self.summaries {
            out.push_str(&format!(
                "{:<12} {:>8} {:>8} {:>8}\n",
                s.identity, s.equal, s.unequal, s.not_applicable
            ));
        }
        out.push_str(&format!(
            "\ntotals: {} equal, {} unequal, {} not applicable\n",
            self.totals.equal, self.totals.unequal, self.totals.not_applicable
        ));
        let failures: Vec<&VerdictRecord> = self
            .records
            .iter()
            .filter(|r| r.status == "Unequal")
            .collect();
        if !failures.is_empty() {
            out.push_str("\nUNEQUAL verdicts:\n");
            for r in failures {
                let p = &r.params;
                out.push_str(&format!(
                    "  {} n={}{}{}{}{}{}  lhs={}  rhs={}\n",
                    r.identity,
                    p.n,
                    p.j.map(|v| format!(" j={}", v)).unwrap_or_default(),
                    p.m.map(|v| format!(" m={}", v)).unwrap_or_default(),
                    p.q.map(|v| format!(" q={}", v)).unwrap_or_default(),
                    p.sign
                        .as_ref()
                        .map(|v| format!(" sign={}", v))
                        .unwrap_or_default(),
                    p.z.as_ref()
                        .map(|v| format!(" z={}", v.cell()))
                        .unwrap_or_default(),
                    r.lhs.as_ref().map(|v| v.cell()).unwrap_or("-"),
                    r.rhs.as_ref().map(|v| v.cell()).unwrap_or("-"),
                ));
            }
        }
        out
    }
}

/// Runs the given identities over the grid with `jobs` worker threads.
pub fn verify_grid(
    ctx: &EvalContext,
    ids: &[IdentityId],
    grid: &GridSpec,
    jobs: usize,
) -> VerificationReport {
    verify_grid_opts(ctx, ids, grid, jobs, None)
}

/// Like [`verify_grid`], optionally corrupting one identity's right-hand
/// side (adds 1) to exercise failure reporting end to end.
pub fn verify_grid_opts(
    ctx: &EvalContext,
    ids: &[IdentityId],
    grid: &GridSpec,
    jobs: usize,
    inject_fault: Option<IdentityId>,
) -> VerificationReport {
    let mut ids: Vec<IdentityId> = ids.to_vec();
    ids.sort_unstable();
    ids.dedup();

    let work: Vec<(IdentityId, IdentityParams)> = ids
        .iter()
        .flat_map(|&id| grid.tuples(id.entry()).into_iter().map(move |p| (id, p)))
        .collect();

    let jobs = jobs.max(1).min(work.len().max(1));
    let mut verdicts: Vec<IdentityVerdict> = if work.is_empty() {
        Vec::new()
    } else {
        // strided assignment balances the expensive polynomial families
        // across workers; the sort below makes the output order
        // independent of the split
        std::thread::scope(|scope| {
            let work = &work;
            let handles: Vec<_> = (0..jobs)
                .map(|w| {
                    scope.spawn(move || {
                        work.iter()
                            .skip(w)
                            .step_by(jobs)
                            .map(|(id, p)| {
                                let mut v = evaluate_identity(ctx, *id, p)
                                    .expect("grid tuples satisfy hard domains");
                                if inject_fault == Some(*id) {
                                    corrupt(&mut v);
                                }
                                v
                            })
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("worker"))
                .collect()
        })
    };

    verdicts.sort_by(|a, b| {
        a.id.tag()
            .cmp(b.id.tag())
            .then_with(|| a.params.cmp(&b.params))
    });

    let mut summaries: Vec<IdSummary> = Vec::new();
    let mut totals = Totals::default();
    for &id in &ids {
        let mut s = IdSummary {
            identity: id.tag().to_string(),
            equal: 0,
            unequal: 0,
            not_applicable: 0,
        };
        for v in verdicts.iter().filter(|v| v.id == id) {
            match v.status {
                VerdictStatus::Equal => s.equal += 1,
                VerdictStatus::Unequal => s.unequal += 1,
                VerdictStatus::NotApplicable => s.not_applicable += 1,
            }
        }
        totals.equal += s.equal;
        totals.unequal += s.unequal;
        totals.not_applicable += s.not_applicable;
        summaries.push(s);
    }
    summaries.sort_by(|a, b| a.identity.cmp(&b.identity));

    let records = verdicts.iter().map(VerdictRecord::from_verdict).collect();
    let mut identities: Vec<String> = ids.iter().map(|id| id.tag().to_string()).collect();
    identities.sort();

    VerificationReport {
        grid: grid.clone(),
        identities,
        summaries,
        totals,
        records,
    }
}

/// Adds 1 to the right-hand side so the verdict flips to Unequal.
fn corrupt(v: &mut IdentityVerdict) {
    if v.status != VerdictStatus::Equal {
        return;
    }
    let one = QuadExt::one();
    if let Some(rhs) = &mut v.rhs {
        *rhs = match rhs {
            ExactValue::Scalar(s) => ExactValue::Scalar(&*s + &one),
            ExactValue::Poly(p) => {
                ExactValue::Poly(&*p + &crate::exact::DensePoly::constant(one.clone()))
            }
        };
    }
    v.status = VerdictStatus::Unequal;
    v.note = Some("injected fault: right-hand side corrupted".to_string());
}
