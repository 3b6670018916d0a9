//! Parametrized Gröbner families for the exception states.
//!
//! At an exception the discrepancy `b` of the first member reaching `l` is
//! unknown. The family treats it as a slot: for each value the blocked step
//! is completed with Procedure 1/2 exactly as the run would, and the
//! remaining indexes of `S(t)` are replayed with two rules:
//!
//! * a member whose gap `k - LP` lies outside a full footprint (`|Δ| = t`)
//!   cannot fail, so it is not evaluated;
//! * a discrepancy whose window needs an unknown cell becomes a further slot
//!   (`b_0`, `b_1`, ...).
//!
//! Every other discrepancy is computed from the table, which yields the
//! deterministic post-updates. Candidates are then filtered by their root
//! count, error values and agreement with every known syndrome.
//!
//! ```
//! use bmsa::bmsa::{run, BmsaOutcome};
//! use bmsa::family::{enumerate_and_select, FamilyTemplate};
//! use bmsa::fixtures;
//! use bmsa::inference::{infer, InferenceResult};
//! use bmsa::lattice::{ip, MonomialOrder};
//!
//! let (field, table) = fixtures::example1_table();
//! let BmsaOutcome::Blocked { state, .. } = run(&table, 3, MonomialOrder::Lex, &field).unwrap().outcome else {
//!     unreachable!()
//! };
//! let InferenceResult::Exception(case) = infer(ip(1, 2), &state, &table, &field).unwrap() else {
//!     unreachable!()
//! };
//! let template = FamilyTemplate::build(case, &state).unwrap();
//! let sel = enumerate_and_select(&template, &table, &field.primitive_pair(), &field).unwrap();
//! assert_eq!(sel.error.to_poly(), fixtures::example1_error(&field));
//! ```

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::bmsa::{BmsaError, BmsaState};
use crate::gf::{FieldElem, FieldTower, RootPair};
use crate::inference::ExceptionCase;
use crate::lattice::IndexPair;
use crate::locator::{self, ErrorEstimate, LocatorError};
use crate::poly::BiPoly;
use crate::syndrome::{Discrepancy, SyndromeTable};

/// Largest number of slots enumerated.
pub const MAX_SLOTS: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("state does not match the exception it was tagged with")]
    UnsupportedCase,
    #[error("family needs more than {MAX_SLOTS} slots")]
    TooManySlots,
    #[error("no parameter assignment is consistent with the known syndromes")]
    NoConsistentCandidate,
    #[error("several parameter assignments give different consistent errors: {0:?}")]
    MultipleConsistentCandidates(Vec<Vec<FieldElem>>),
}

/// The blocked state of an exception, with the member whose discrepancy at
/// `l` is the leading slot `b`.
#[derive(Debug, Clone)]
pub struct FamilyTemplate {
    pub case: ExceptionCase,
    pub state: BmsaState,
    /// Members with `LP ⪯ l`; the first carries the slot `b`.
    pub reaching: Vec<usize>,
}

/// A fully instantiated basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateBasis {
    pub params: Vec<FieldElem>,
    pub basis: Vec<BiPoly>,
    /// Steps after `l` where a member was updated.
    pub post_updates: Vec<IndexPair>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Consistent,
    FailsAt { index: IndexPair, value: FieldElem },
    TooManyRoots(usize),
    Overflow(IndexPair),
    Unsolvable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Consistent => write!(f, "consistent"),
            Verdict::FailsAt { index, value } => write!(f, "fails at {index} with {value}"),
            Verdict::TooManyRoots(n) => write!(f, "{n} common roots"),
            Verdict::Overflow(k) => write!(f, "footprint overflow at {k}"),
            Verdict::Unsolvable => write!(f, "no error values"),
        }
    }
}

/// One line of the candidate ledger.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateRecord {
    pub params: Vec<(String, String)>,
    pub verdict: String,
}

pub fn slot_name(i: usize) -> String {
    if i == 0 {
        "b".to_string()
    } else {
        format!("b_{}", i - 1)
    }
}

enum Step {
    Done(CandidateBasis),
    NeedSlot,
    Overflow(IndexPair),
}

impl FamilyTemplate {
    pub fn build(case: ExceptionCase, state: &BmsaState) -> Result<Self, FamilyError> {
        if state.l() != Some(case.l) || state.defining_points() != case.s_list {
            return Err(FamilyError::UnsupportedCase);
        }
        let reaching: Vec<usize> = (0..state.d()).filter(|&i| state.f[i].lp.precedes(case.l)).collect();
        if reaching.is_empty() {
            return Err(FamilyError::UnsupportedCase);
        }
        Ok(FamilyTemplate { case, state: state.clone(), reaching })
    }

    /// The member carrying `b`, as `base + b * direction` after the update at `l`
    /// (only meaningful when the update at `l` is Procedure 1).
    pub fn linear_member(&self, field: &FieldTower) -> Option<(BiPoly, BiPoly)> {
        let i = self.reaching[0];
        let base = self.state.f[i].poly.clone();
        let one = self.state.procedure1(self.case.l, &self.state.f[i], field.one(), field).ok()?;
        let direction = one.sub_scaled_shift(field.one(), IndexPair::ZERO, &base, field);
        Some((base, direction))
    }

    /// Instantiates the family for `params`, slot `b` first.
    fn instantiate(&self, params: &[FieldElem], table: &SyndromeTable, field: &FieldTower) -> Result<Step, BmsaError> {
        let l = self.case.l;
        let mut slots = params.iter().copied();
        let mut state = self.state.clone();
        // slot b fixes u_l, which settles every other member reaching l
        let Some(b) = slots.next() else {
            return Ok(Step::NeedSlot);
        };
        let lead = self.reaching[0];
        let ul = match crate::inference::candidate(&state, lead, l, table, field) {
            Ok(v) => field.add(b, v),
            Err(e) => return Err(BmsaError::InvariantBroken(e.to_string())),
        };
        let table = table.filled(l, ul);
        let mut failed = Vec::new();
        for &i in &self.reaching {
            let d = if i == lead {
                b
            } else {
                match table.discrepancy_within(&state.f[i].poly, l, state.order(), field, state.t()) {
                    Discrepancy::Value(v) => v,
                    Discrepancy::ByConvention | Discrepancy::OutsideRange => FieldElem::Zero,
                    Discrepancy::NeedsUnknown(_) => match slots.next() {
                        Some(v) => v,
                        None => return Ok(Step::NeedSlot),
                    },
                }
            };
            if !d.is_zero() {
                failed.push((i, d));
            }
        }
        match state.update(l, &failed, field) {
            Err(BmsaError::FootprintOverflow { .. }) => return Ok(Step::Overflow(l)),
            r => r?,
        };
        state.advance();
        let mut post = Vec::new();
        while let Some(k) = state.l() {
            let full = state.footprint.len() == state.t() as usize;
            let mut failed = Vec::new();
            for i in 0..state.d() {
                let e = &state.f[i];
                if !e.lp.precedes(k) || (full && !state.footprint.contains(&(k - e.lp))) {
                    continue;
                }
                let d = match table.discrepancy_within(&e.poly, k, state.order(), field, state.t()) {
                    Discrepancy::Value(v) => v,
                    Discrepancy::ByConvention | Discrepancy::OutsideRange => FieldElem::Zero,
                    Discrepancy::NeedsUnknown(_) => match slots.next() {
                        Some(v) => v,
                        None => return Ok(Step::NeedSlot),
                    },
                };
                if !d.is_zero() {
                    failed.push((i, d));
                }
            }
            if !failed.is_empty() {
                post.push(k);
            }
            match state.update(k, &failed, field) {
                Err(BmsaError::FootprintOverflow { .. }) => return Ok(Step::Overflow(k)),
                r => r?,
            };
            state.advance();
        }
        let used = params.len() - slots.len();
        Ok(Step::Done(CandidateBasis { params: params[..used].to_vec(), basis: state.polys(), post_updates: post }))
    }

    /// The basis for a complete assignment, or `None` if `params` has the
    /// wrong length or the assignment overflows the footprint.
    pub fn resolve_post_updates(
        &self,
        params: &[FieldElem],
        table: &SyndromeTable,
        field: &FieldTower,
    ) -> Result<Option<CandidateBasis>, BmsaError> {
        Ok(match self.instantiate(params, table, field)? {
            Step::Done(c) if c.params.len() == params.len() => Some(c),
            _ => None,
        })
    }
}

/// Checks one candidate basis against the table.
pub fn judge(
    basis: &[BiPoly],
    table: &SyndromeTable,
    t: u32,
    order: crate::lattice::MonomialOrder,
    alpha: &RootPair,
    field: &FieldTower,
) -> (Verdict, Option<ErrorEstimate>) {
    let support = locator::defining_set(basis, alpha, field);
    if support.len() > t as usize {
        return (Verdict::TooManyRoots(support.len()), None);
    }
    let est = if field.q() == 2 {
        ErrorEstimate { coeffs: support.iter().map(|&p| (p, field.one())).collect() }
    } else {
        match locator::error_values(&support, table, alpha, field) {
            Ok(e) => e,
            Err(LocatorError::Inconsistent | LocatorError::SingularSystem | LocatorError::NonBaseFieldSolution(_)) => {
                return (Verdict::Unsolvable, None)
            }
        }
    };
    let cells = locator::check_sequence(table, t, order);
    match locator::first_mismatch(&est, table, cells, alpha, field) {
        Some((index, value)) => (Verdict::FailsAt { index, value }, Some(est)),
        None => (Verdict::Consistent, Some(est)),
    }
}

#[derive(Debug, Clone)]
pub struct Selection {
    pub candidate: CandidateBasis,
    pub error: ErrorEstimate,
    pub ledger: Vec<CandidateRecord>,
}

/// Enumerates every assignment (each slot over `0, a^0, a^1, ...`, first slot
/// most significant) and returns the unique consistent one.
pub fn enumerate_and_select(
    template: &FamilyTemplate,
    table: &SyndromeTable,
    alpha: &RootPair,
    field: &FieldTower,
) -> Result<Selection, FamilyError> {
    let values: Vec<FieldElem> = field.elements().collect();
    let t = template.state.t();
    let order = template.state.order();
    let mut ledger = Vec::new();
    let mut found: Vec<(CandidateBasis, ErrorEstimate)> = Vec::new();
    let mut stack: Vec<Vec<FieldElem>> = vec![Vec::new()];
    while let Some(params) = stack.pop() {
        let step = template.instantiate(&params, table, field).map_err(|_| FamilyError::UnsupportedCase)?;
        let record = |verdict: String| CandidateRecord {
            params: params.iter().enumerate().map(|(i, v)| (slot_name(i), v.to_string())).collect(),
            verdict,
        };
        match step {
            Step::NeedSlot => {
                if params.len() == MAX_SLOTS {
                    return Err(FamilyError::TooManySlots);
                }
                for &v in values.iter().rev() {
                    let mut p = params.clone();
                    p.push(v);
                    stack.push(p);
                }
            }
            Step::Overflow(k) => ledger.push(record(Verdict::Overflow(k).to_string())),
            Step::Done(cand) => {
                let (verdict, est) = judge(&cand.basis, table, t, order, alpha, field);
                ledger.push(record(verdict.to_string()));
                if verdict == Verdict::Consistent {
                    let est = est.expect("consistent verdicts carry an estimate");
                    if !found.iter().any(|(_, e)| *e == est) {
                        found.push((cand, est));
                    }
                }
            }
        }
    }
    match found.len() {
        0 => Err(FamilyError::NoConsistentCandidate),
        1 => {
            let (candidate, error) = found.pop().expect("one candidate");
            Ok(Selection { candidate, error, ledger })
        }
        _ => Err(FamilyError::MultipleConsistentCandidates(found.into_iter().map(|(c, _)| c.params).collect())),
    }
}

/// Renders the candidate ledger as JSON lines.
pub fn render_ledger(records: &[CandidateRecord]) -> String {
    records.iter().map(|r| serde_json::to_string(r).expect("records serialize") + "\n").collect()
}
