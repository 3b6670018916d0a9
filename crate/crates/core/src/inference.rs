//! Inference of a missing syndrome at a border index.
//!
//! When a run blocks on the unknown cell `u_l`, the live minimal set decides
//! whether some member is guaranteed to satisfy a recurrence at `l`. If so,
//! that relation is linear in `u_l` with coefficient one and is solved
//! directly. The states where no member is guaranteed are reported as tagged
//! exceptions, which [`crate::family`] turns into parametrized bases.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::bmsa::{check_condition, resume, run, BmsaOutcome, BmsaState, MinimalEntry, StepRecord};
use crate::family::{enumerate_and_select, CandidateRecord, FamilyTemplate};
use crate::gf::{FieldElem, FieldTower, RootPair};
use crate::lattice::{in_s_t, Footprint, IndexPair, MonomialOrder};
use crate::locator::{self, ErrorEstimate};
use crate::poly::BiPoly;
use crate::syndrome::{Cell, SyndromeTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BorderClass {
    /// `l1, l2 > 1` and `l1 + l2 = t`.
    Interior,
    /// `l = (1, t-1)`.
    EdgeLow,
    /// `l = (t-1, 1)` with `t > 2`.
    EdgeHigh,
    /// `l = (0, l2)` with `t + s^(d)_2 - 1 <= l2 <= 2t - 1`.
    AxisX2,
    /// `l = (l1, 0)` with `t + s^(1)_1 - 1 <= l1 <= 2t - 1`.
    AxisX1,
    NotInferable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ExceptionTag {
    Lex1a,
    Lex1b,
    Lex1c,
    Lex2b,
    Lex2c,
    Grad1b,
    Grad1c,
    Grad2a,
    Grad2b,
    Grad2c,
    AxisX2d2,
    AxisX1d2,
}

impl fmt::Display for ExceptionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// An exception with the parameters that triggered it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExceptionCase {
    pub tag: ExceptionTag,
    pub d: usize,
    pub s_list: Vec<IndexPair>,
    pub l: IndexPair,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InferenceResult {
    /// `witness` indexes the minimal set (0-based).
    Solved {
        value: FieldElem,
        witness: usize,
    },
    /// Distinct values proposed by different witnesses.
    Ambiguous {
        candidates: Vec<(FieldElem, usize)>,
    },
    Exception(ExceptionCase),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InferenceError {
    #[error("witness window at {l} needs a second unknown cell {cell}")]
    WitnessWindowUnknown { l: IndexPair, cell: IndexPair },
    #[error("{0} is not a border index")]
    NotInferable(IndexPair),
    #[error("no member of the minimal set reaches {0}")]
    NoWitness(IndexPair),
}

pub fn classify(l: IndexPair, state: &BmsaState) -> BorderClass {
    let t = state.t() as i32;
    let s = state.defining_points();
    let (first, last) = (s[0], s[s.len() - 1]);
    if l.n1 > 0 && l.n2 > 0 {
        if l.degree() != t {
            BorderClass::NotInferable
        } else if l.n1 == 1 {
            BorderClass::EdgeLow
        } else if l.n2 == 1 && t > 2 {
            BorderClass::EdgeHigh
        } else {
            BorderClass::Interior
        }
    } else if l.n1 == 0 && l.n2 > 0 && (t + last.n2 - 1..=2 * t - 1).contains(&l.n2) {
        BorderClass::AxisX2
    } else if l.n2 == 0 && l.n1 > 0 && (t + first.n1 - 1..=2 * t - 1).contains(&l.n1) {
        BorderClass::AxisX1
    } else {
        BorderClass::NotInferable
    }
}

/// The exception matching the state at an edge index, if any.
pub fn edge_exception(l: IndexPair, state: &BmsaState) -> Option<ExceptionTag> {
    use ExceptionTag::*;
    let t = state.t() as i32;
    let s = state.defining_points();
    let d = s.len();
    let lex = state.order() == MonomialOrder::Lex;
    let low = l == IndexPair { n1: 1, n2: t - 1 };
    let two = |i: usize, p: (i32, i32)| s.get(i).is_some_and(|x| (x.n1, x.n2) == p);
    if low {
        if lex && d == 2 && s[0].n1 == 1 && s[1].n2 == t {
            return Some(Lex1a);
        }
        if d == 2 && two(0, (2, 0)) && t == 2 * s[1].n2 && (!lex || l != (IndexPair { n1: 1, n2: 1 })) {
            return Some(if lex { Lex1b } else { Grad1b });
        }
        if d == 3 && two(0, (2, 0)) && t == s[1].n2 + s[2].n2 {
            return Some(if lex { Lex1c } else { Grad1c });
        }
    } else {
        if !lex && d == 2 && s[0].n1 == t && s[1].n2 == 1 {
            return Some(Grad2a);
        }
        if d == 2 && two(1, (0, 2)) && t == 2 * s[0].n1 {
            return Some(if lex { Lex2b } else { Grad2b });
        }
        if d == 3 && two(2, (0, 2)) && t == s[0].n1 + s[1].n1 {
            return Some(if lex { Lex2c } else { Grad2c });
        }
    }
    None
}

/// `-Σ_{m ≠ LP} f_m u_{m+l-LP}`: the value of `u_l` making member `i` vanish at `l`.
pub fn candidate(
    state: &BmsaState,
    i: usize,
    l: IndexPair,
    table: &SyndromeTable,
    field: &FieldTower,
) -> Result<FieldElem, InferenceError> {
    let e = &state.f[i];
    let mut acc = FieldElem::Zero;
    for (m, c) in e.poly.terms() {
        if m == e.lp {
            continue;
        }
        let k = m + l - e.lp;
        match table.get(k) {
            Cell::Known(v) => acc = field.add(acc, field.mul(c, v)),
            Cell::Unknown => {
                let (r1, r2) = table.periods();
                return Err(InferenceError::WitnessWindowUnknown { l, cell: k.wrap(r1, r2) });
            }
        }
    }
    Ok(field.neg(acc))
}

fn from_witnesses(
    state: &BmsaState,
    witnesses: &[usize],
    l: IndexPair,
    table: &SyndromeTable,
    field: &FieldTower,
) -> Result<InferenceResult, InferenceError> {
    let mut candidates: Vec<(FieldElem, usize)> = Vec::new();
    for &i in witnesses {
        let v = candidate(state, i, l, table, field)?;
        if !candidates.iter().any(|&(w, _)| w == v) {
            candidates.push((v, i));
        }
    }
    match candidates.as_slice() {
        [] => Err(InferenceError::NoWitness(l)),
        [(value, witness)] => Ok(InferenceResult::Solved { value: *value, witness: *witness }),
        _ => Ok(InferenceResult::Ambiguous { candidates }),
    }
}

/// Members whose leading power product divides `l`.
fn below(state: &BmsaState, l: IndexPair) -> Vec<usize> {
    (0..state.d()).filter(|&i| state.f[i].lp.precedes(l)).collect()
}

pub fn infer_interior(
    l: IndexPair,
    state: &BmsaState,
    table: &SyndromeTable,
    field: &FieldTower,
) -> Result<InferenceResult, InferenceError> {
    let s = state.defining_points();
    let d = s.len();
    let (s1, sd) = (s[0], s[d - 1]);
    let picks: Vec<usize> = if d >= 4 {
        vec![0, d - 1]
    } else if l.n1 > s1.n1 {
        vec![0]
    } else if l.n1 == s1.n1 && l.n2 >= sd.n2 {
        vec![0, d - 1]
    } else if l.n1 < s1.n1 && l.n2 > sd.n2 {
        vec![d - 1]
    } else {
        vec![1.min(d - 1)]
    };
    let mut witnesses: Vec<usize> = picks.into_iter().filter(|&i| s[i].precedes(l)).collect();
    witnesses.dedup();
    if witnesses.is_empty() {
        witnesses = below(state, l);
    }
    from_witnesses(state, &witnesses, l, table, field)
}

pub fn infer_edge(
    l: IndexPair,
    state: &BmsaState,
    table: &SyndromeTable,
    field: &FieldTower,
) -> Result<InferenceResult, InferenceError> {
    if let Some(tag) = edge_exception(l, state) {
        return Ok(InferenceResult::Exception(case(tag, l, state)));
    }
    from_witnesses(state, &below(state, l), l, table, field)
}

pub fn infer_axis(
    l: IndexPair,
    state: &BmsaState,
    table: &SyndromeTable,
    field: &FieldTower,
) -> Result<InferenceResult, InferenceError> {
    let t = state.t() as i32;
    let s = state.defining_points();
    let d = s.len();
    let (witness, boundary, exceptional, tag) = if l.n1 == 0 {
        (d - 1, l.n2 == t + s[d - 1].n2 - 1, d == 2 && s[0] == IndexPair { n1: 1, n2: 0 }, ExceptionTag::AxisX2d2)
    } else {
        (0, l.n1 == t + s[0].n1 - 1, d == 2 && s[d - 1] == IndexPair { n1: 0, n2: 1 }, ExceptionTag::AxisX1d2)
    };
    if boundary && exceptional {
        return Ok(InferenceResult::Exception(case(tag, l, state)));
    }
    from_witnesses(state, &[witness], l, table, field)
}

fn case(tag: ExceptionTag, l: IndexPair, state: &BmsaState) -> ExceptionCase {
    let s_list = state.defining_points();
    ExceptionCase { tag, d: s_list.len(), s_list, l }
}

/// Classifies `l` and dispatches to the matching inference rule.
pub fn infer(
    l: IndexPair,
    state: &BmsaState,
    table: &SyndromeTable,
    field: &FieldTower,
) -> Result<InferenceResult, InferenceError> {
    match classify(l, state) {
        BorderClass::Interior => infer_interior(l, state, table, field),
        BorderClass::EdgeLow | BorderClass::EdgeHigh => infer_edge(l, state, table, field),
        BorderClass::AxisX2 | BorderClass::AxisX1 => infer_axis(l, state, table, field),
        BorderClass::NotInferable => Err(InferenceError::NotInferable(l)),
    }
}

/// Knobs for [`resolve`].
#[derive(Debug, Clone)]
pub struct ResolveOptions {
    /// Orders tried in turn; only the first is used without order switching.
    pub orders: Vec<MonomialOrder>,
    pub order_switch: bool,
    /// Try every value of the missing cell when inference and families fail.
    pub exhaustive_fallback: bool,
}

impl Default for ResolveOptions {
    fn default() -> Self {
        ResolveOptions {
            orders: vec![MonomialOrder::Lex, MonomialOrder::Graded],
            order_switch: true,
            exhaustive_fallback: true,
        }
    }
}

impl ResolveOptions {
    /// Straight to the family of the first order's exception.
    pub fn family_only(order: MonomialOrder) -> Self {
        ResolveOptions { orders: vec![order], order_switch: false, exhaustive_fallback: false }
    }
}

/// How the basis was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    /// No unknown cell was needed (or every known syndrome is zero).
    Direct,
    /// A blocking cell was solved from a guaranteed relation.
    Inferred,
    /// Several proposed values were checked against the known syndromes.
    Candidates,
    Family,
    Exhaustive,
}

/// One diagnostic record per blocked run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub order: MonomialOrder,
    pub blocked_at: IndexPair,
    pub cell: IndexPair,
    pub class: BorderClass,
    pub exception: Option<ExceptionTag>,
    pub witnesses: Vec<usize>,
    pub candidates: Vec<FieldElem>,
    pub note: String,
}

#[derive(Debug, Clone)]
pub struct Resolution {
    pub order: MonomialOrder,
    pub basis: Vec<BiPoly>,
    pub footprint: Footprint,
    /// The input table with the missing cells of `S(t)` filled in.
    pub table: SyndromeTable,
    pub error: ErrorEstimate,
    pub route: Route,
    pub diagnostics: Vec<Diagnostic>,
    pub trace: Vec<StepRecord>,
    pub family_ledger: Vec<CandidateRecord>,
    /// Orders run although their l-/g-condition failed.
    pub condition_warnings: Vec<MonomialOrder>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolveError {
    #[error("more than one unknown cell in S(t): {0:?}")]
    MultipleUnknowns(Vec<IndexPair>),
    #[error("undecodable: {0}")]
    Undecodable(String),
}

/// A located and verified error for a finished run.
pub fn finalize(
    state: &BmsaState,
    table: &SyndromeTable,
    alpha: &RootPair,
    field: &FieldTower,
) -> Result<ErrorEstimate, String> {
    let basis = state.polys();
    let support = locator::defining_set(&basis, alpha, field);
    if support.len() != state.footprint.len() || support.len() > state.t() as usize {
        return Err(format!("{} common roots for a footprint of size {}", support.len(), state.footprint.len()));
    }
    let est = locator::error_values(&support, table, alpha, field).map_err(|e| e.to_string())?;
    if est.weight() != support.len() || !locator::verify(&est, table, alpha, field) {
        return Err("error estimate disagrees with the known syndromes".into());
    }
    Ok(est)
}

enum Attempt {
    Done(Box<Resolution>),
    Exception(BmsaState, ExceptionCase, Vec<StepRecord>),
    Failed,
}

/// Recovers a basis for the recurrence ideal and the error when at most one
/// cell of `S(t)` is unknown: lex first, inference at the blocking cell,
/// then the other order, then the exception families, then (optionally)
/// every value of the missing cell.
pub fn resolve(
    table: &SyndromeTable,
    t: u32,
    alpha: &RootPair,
    field: &FieldTower,
    opts: &ResolveOptions,
) -> Result<Resolution, ResolveError> {
    let order0 = opts.orders.first().copied().unwrap_or(MonomialOrder::Lex);
    let mut st: Vec<IndexPair> = table.grid().filter(|&n| in_s_t(n, t)).collect();
    order0.sort(&mut st);
    let missing: Vec<IndexPair> = st.iter().copied().filter(|&n| table.known(n).is_none()).collect();
    if missing.len() > 1 {
        return Err(ResolveError::MultipleUnknowns(missing));
    }
    let mut diagnostics = Vec::new();
    let mut warnings = Vec::new();
    if table.all_known_zero() {
        let state = BmsaState::new(order0, t, table.periods()).map_err(|e| ResolveError::Undecodable(e.to_string()))?;
        return Ok(Resolution {
            order: order0,
            basis: state.polys(),
            footprint: state.footprint.clone(),
            table: complete(table, &missing, &ErrorEstimate::zero(), alpha, field),
            error: ErrorEstimate::zero(),
            route: Route::Direct,
            diagnostics,
            trace: Vec::new(),
            family_ledger: Vec::new(),
            condition_warnings: warnings,
        });
    }
    let orders: Vec<MonomialOrder> = if opts.order_switch { opts.orders.clone() } else { vec![order0] };
    let mut exceptions = Vec::new();
    let mut last_err = String::from("no order produced a basis");
    for &order in &orders {
        if !check_condition(table, t, order) {
            warnings.push(order);
        }
        match attempt(table, t, order, alpha, field, &missing, &mut diagnostics, &mut last_err) {
            Attempt::Done(mut r) => {
                r.diagnostics = diagnostics;
                r.condition_warnings = warnings;
                return Ok(*r);
            }
            Attempt::Exception(state, case, trace) => exceptions.push((state, case, trace)),
            Attempt::Failed => {}
        }
    }
    for (state, case, trace) in exceptions {
        let order = state.order();
        let template = match FamilyTemplate::build(case, &state) {
            Ok(t) => t,
            Err(e) => {
                last_err = e.to_string();
                continue;
            }
        };
        match enumerate_and_select(&template, table, alpha, field) {
            Ok(sel) => {
                let mut fin = state.clone();
                fin.f = sel
                    .candidate
                    .basis
                    .iter()
                    .map(|p| MinimalEntry { lp: p.lp(order).expect("nonzero"), poly: p.clone() })
                    .collect();
                return Ok(Resolution {
                    order,
                    basis: sel.candidate.basis.clone(),
                    footprint: footprint_of(&fin),
                    table: complete(table, &missing, &sel.error, alpha, field),
                    error: sel.error,
                    route: Route::Family,
                    diagnostics,
                    trace,
                    family_ledger: sel.ledger,
                    condition_warnings: warnings,
                });
            }
            Err(e) => last_err = e.to_string(),
        }
    }
    if opts.exhaustive_fallback {
        if let [cell] = missing.as_slice() {
            let mut found: Vec<(Resolution, FieldElem)> = Vec::new();
            for v in field.elements() {
                let filled = table.filled(*cell, v);
                let Ok(r) = run(&filled, t, order0, field) else { continue };
                let BmsaOutcome::Basis(state) = r.outcome else { continue };
                let Ok(est) = finalize(&state, &filled, alpha, field) else { continue };
                if found.iter().all(|(f, _)| f.error != est) {
                    found.push((
                        Resolution {
                            order: order0,
                            basis: state.polys(),
                            footprint: state.footprint.clone(),
                            table: filled,
                            error: est,
                            route: Route::Exhaustive,
                            diagnostics: Vec::new(),
                            trace: r.trace,
                            family_ledger: Vec::new(),
                            condition_warnings: Vec::new(),
                        },
                        v,
                    ));
                }
            }
            if found.len() == 1 {
                let (mut r, _) = found.pop().expect("one");
                r.diagnostics = diagnostics;
                r.condition_warnings = warnings;
                return Ok(r);
            }
            last_err = format!("{} consistent completions of {cell}", found.len());
        }
    }
    Err(ResolveError::Undecodable(last_err))
}

fn footprint_of(state: &BmsaState) -> Footprint {
    crate::lattice::footprint_from_defining_points(&state.defining_points()).unwrap_or_default()
}

fn complete(
    table: &SyndromeTable,
    missing: &[IndexPair],
    est: &ErrorEstimate,
    alpha: &RootPair,
    field: &FieldTower,
) -> SyndromeTable {
    let mut out = table.clone();
    for &n in missing {
        out.set(n, Cell::Known(est.syndrome(n, table.tau(), alpha, field)));
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn attempt(
    table: &SyndromeTable,
    t: u32,
    order: MonomialOrder,
    alpha: &RootPair,
    field: &FieldTower,
    missing: &[IndexPair],
    diagnostics: &mut Vec<Diagnostic>,
    last_err: &mut String,
) -> Attempt {
    let mut trace = Vec::new();
    let state = match BmsaState::new(order, t, table.periods()) {
        Ok(s) => s,
        Err(e) => {
            *last_err = e.to_string();
            return Attempt::Failed;
        }
    };
    let mut current = table.clone();
    let mut route = Route::Direct;
    let mut outcome = resume(state, &current, field, &mut trace);
    loop {
        let (state, cell) = match outcome {
            Err(e) => {
                *last_err = format!("{order}: {e}");
                return Attempt::Failed;
            }
            Ok(BmsaOutcome::Basis(state)) => {
                return match finalize(&state, &current, alpha, field) {
                    Ok(error) => Attempt::Done(Box::new(Resolution {
                        order,
                        basis: state.polys(),
                        footprint: state.footprint.clone(),
                        table: complete(&current, missing, &error, alpha, field),
                        error,
                        route,
                        diagnostics: Vec::new(),
                        trace,
                        family_ledger: Vec::new(),
                        condition_warnings: Vec::new(),
                    })),
                    Err(e) => {
                        *last_err = format!("{order}: {e}");
                        Attempt::Failed
                    }
                };
            }
            Ok(BmsaOutcome::Blocked { state, cell }) => (state, cell),
        };
        let l = state.l().expect("blocked runs have a current index");
        let mut diag = Diagnostic {
            order,
            blocked_at: l,
            cell,
            class: classify(l, &state),
            exception: None,
            witnesses: Vec::new(),
            candidates: Vec::new(),
            note: String::new(),
        };
        if cell != l {
            diag.note = format!("window at {l} needs unknown cell {cell}");
            *last_err = diag.note.clone();
            diagnostics.push(diag);
            return Attempt::Failed;
        }
        match infer(l, &state, &current, field) {
            Ok(InferenceResult::Solved { value, witness }) => {
                diag.witnesses = vec![witness];
                diag.candidates = vec![value];
                diagnostics.push(diag);
                current = current.filled(l, value);
                route = Route::Inferred;
                outcome = resume(state, &current, field, &mut trace);
            }
            Ok(InferenceResult::Ambiguous { candidates }) => {
                diag.witnesses = candidates.iter().map(|&(_, w)| w).collect();
                diag.candidates = candidates.iter().map(|&(v, _)| v).collect();
                let mut good = Vec::new();
                for &(v, _) in &candidates {
                    let filled = current.filled(l, v);
                    let mut tr = trace.clone();
                    if let Ok(BmsaOutcome::Basis(s)) = resume(state.clone(), &filled, field, &mut tr) {
                        if let Ok(error) = finalize(&s, &filled, alpha, field) {
                            good.push((s, filled, error, tr));
                        }
                    }
                }
                if good.len() == 1 {
                    diag.note = "one candidate verified".into();
                    diagnostics.push(diag);
                    let (s, filled, error, tr) = good.pop().expect("one");
                    return Attempt::Done(Box::new(Resolution {
                        order,
                        basis: s.polys(),
                        footprint: s.footprint.clone(),
                        table: complete(&filled, missing, &error, alpha, field),
                        error,
                        route: Route::Candidates,
                        diagnostics: Vec::new(),
                        trace: tr,
                        family_ledger: Vec::new(),
                        condition_warnings: Vec::new(),
                    }));
                }
                diag.note = format!("{} candidates verified", good.len());
                *last_err = diag.note.clone();
                diagnostics.push(diag);
                return Attempt::Failed;
            }
            Ok(InferenceResult::Exception(case)) => {
                diag.exception = Some(case.tag);
                diagnostics.push(diag);
                return Attempt::Exception(state, case, trace);
            }
            Err(e) => {
                diag.note = e.to_string();
                *last_err = diag.note.clone();
                diagnostics.push(diag);
                return Attempt::Failed;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bmsa::{run, BmsaOutcome};
    use crate::fixtures;
    use crate::lattice::ip;

    fn blocked(order: MonomialOrder) -> (FieldTower, SyndromeTable, BmsaState) {
        let (field, table) = fixtures::example1_table();
        match run(&table, 3, order, &field).unwrap().outcome {
            BmsaOutcome::Blocked { state, cell } => {
                assert_eq!(cell, ip(1, 2));
                (field, table, state)
            }
            BmsaOutcome::Basis(_) => panic!("expected to block"),
        }
    }

    #[test]
    fn classification() {
        let (_, _, state) = blocked(MonomialOrder::Lex);
        assert_eq!(classify(ip(1, 2), &state), BorderClass::EdgeLow);
        assert_eq!(classify(ip(2, 1), &state), BorderClass::EdgeHigh);
        assert_eq!(classify(ip(1, 1), &state), BorderClass::NotInferable);
        // s^(d) = (0,3): axis range starts at t + 3 - 1 = 5
        assert_eq!(classify(ip(0, 5), &state), BorderClass::AxisX2);
        assert_eq!(classify(ip(0, 4), &state), BorderClass::NotInferable);
        let t4 = BmsaState::new(MonomialOrder::Lex, 4, (15, 15)).unwrap();
        assert_eq!(classify(ip(2, 2), &t4), BorderClass::Interior);
    }

    #[test]
    fn lex_blocks_in_exception_one_a() {
        let (field, table, state) = blocked(MonomialOrder::Lex);
        let r = infer(ip(1, 2), &state, &table, &field).unwrap();
        assert_eq!(
            r,
            InferenceResult::Exception(ExceptionCase {
                tag: ExceptionTag::Lex1a,
                d: 2,
                s_list: vec![ip(1, 0), ip(0, 3)],
                l: ip(1, 2)
            })
        );
    }

    #[test]
    fn graded_solves_missing_value() {
        let (field, table, state) = blocked(MonomialOrder::Graded);
        let r = infer(ip(1, 2), &state, &table, &field).unwrap();
        assert_eq!(r, InferenceResult::Solved { value: FieldElem::Zero, witness: 1 });
    }
}
