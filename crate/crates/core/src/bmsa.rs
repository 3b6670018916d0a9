//! The Berlekamp–Massey–Sakata iteration over `S(t)`.
//!
//! A [`BmsaState`] carries the minimal set `F`, the auxiliary set `G` (one
//! entry per footprint corner) and the footprint `Δ`. Each step evaluates
//! every member of `F` at the current index and applies Procedure 1 (the
//! footprint is unchanged) or Procedure 2 (the footprint grows). A step whose
//! window touches an unknown syndrome blocks instead of guessing.
//!
//! ```
//! use bmsa::bmsa::{run, BmsaOutcome};
//! use bmsa::fixtures;
//! use bmsa::lattice::{ip, MonomialOrder};
//!
//! let (field, table) = fixtures::example1_table();
//! let out = run(&table, 3, MonomialOrder::Lex, &field).unwrap();
//! match out.outcome {
//!     BmsaOutcome::Blocked { cell, .. } => assert_eq!(cell, ip(1, 2)),
//!     BmsaOutcome::Basis(_) => unreachable!(),
//! }
//! ```

use serde::Serialize;
use thiserror::Error;

use crate::gf::{FieldElem, FieldTower};
use crate::lattice::{
    corners, defining_points_of, delta_rect, s_t_set, Footprint, IndexPair, LatticeError, MonomialOrder,
};
use crate::poly::{BiPoly, PolyError};
use crate::syndrome::{Discrepancy, SyndromeTable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BmsaError {
    #[error("footprint of size {size} exceeds capability t = {t}")]
    FootprintOverflow { size: usize, t: u32 },
    #[error("no auxiliary polynomial covers {0}")]
    NoCoveringCorner(IndexPair),
    #[error("invariant broken: {0}")]
    InvariantBroken(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// A member of the minimal set with its leading power product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalEntry {
    pub poly: BiPoly,
    pub lp: IndexPair,
}

/// A polynomial that failed at `k` with value `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuxEntry {
    pub g: BiPoly,
    pub lp: IndexPair,
    pub k: IndexPair,
    pub v: FieldElem,
}

impl AuxEntry {
    /// The footprint corner `k - LP(g)` this entry serves.
    pub fn corner(&self) -> IndexPair {
        self.k - self.lp
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StepAction {
    None,
    Proc1,
    Proc2,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuxRecord {
    pub g: String,
    pub k: [i32; 2],
    pub v: String,
}

/// One line of the step trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepRecord {
    pub order: MonomialOrder,
    pub l: [i32; 2],
    pub action: StepAction,
    #[serde(rename = "F")]
    pub f: Vec<String>,
    #[serde(rename = "G")]
    pub g: Vec<AuxRecord>,
    pub delta: Vec<[i32; 2]>,
}

/// Renders records as JSON lines.
pub fn render_trace(records: &[StepRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r).expect("trace records serialize"));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone)]
pub struct BmsaState {
    order: MonomialOrder,
    t: u32,
    pub f: Vec<MinimalEntry>,
    pub g: Vec<AuxEntry>,
    pub footprint: Footprint,
    steps: Vec<IndexPair>,
    pos: usize,
}

#[derive(Debug, Clone)]
pub enum StepResult {
    Advanced(StepRecord),
    Blocked(IndexPair),
    Finished,
}

impl BmsaState {
    /// `F = {1}`, `G = Δ = ∅`, positioned at the first index of `S(t)`.
    pub fn new(order: MonomialOrder, t: u32, periods: (u32, u32)) -> Result<Self, BmsaError> {
        Ok(Self::with_steps(order, t, s_t_set(t, order, periods)?))
    }

    /// Like [`BmsaState::new`] but visiting `steps` (ascending under `order`).
    pub fn with_steps(order: MonomialOrder, t: u32, steps: Vec<IndexPair>) -> Self {
        BmsaState {
            order,
            t,
            f: vec![MinimalEntry { poly: BiPoly::one(), lp: IndexPair::ZERO }],
            g: Vec::new(),
            footprint: Footprint::new(),
            steps,
            pos: 0,
        }
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// The index the next step will process.
    pub fn l(&self) -> Option<IndexPair> {
        self.steps.get(self.pos).copied()
    }

    /// Indexes still to be processed, current one included.
    pub fn remaining(&self) -> &[IndexPair] {
        &self.steps[self.pos.min(self.steps.len())..]
    }

    pub fn advance(&mut self) {
        self.pos += 1;
    }

    pub fn d(&self) -> usize {
        self.f.len()
    }

    pub fn defining_points(&self) -> Vec<IndexPair> {
        self.f.iter().map(|e| e.lp).collect()
    }

    pub fn polys(&self) -> Vec<BiPoly> {
        self.f.iter().map(|e| e.poly.clone()).collect()
    }

    pub fn record(&self, l: IndexPair, action: StepAction) -> StepRecord {
        StepRecord {
            order: self.order,
            l: [l.n1, l.n2],
            action,
            f: self.f.iter().map(|e| e.poly.render(self.order)).collect(),
            g: self
                .g
                .iter()
                .map(|a| AuxRecord { g: a.g.render(self.order), k: [a.k.n1, a.k.n2], v: a.v.to_string() })
                .collect(),
            delta: self.footprint.iter().map(|p| [p.n1, p.n2]).collect(),
        }
    }

    /// Evaluates every member of `F` at the current index.
    pub fn discrepancies(&self, table: &SyndromeTable, field: &FieldTower) -> Option<Vec<Discrepancy>> {
        let l = self.l()?;
        Some(self.f.iter().map(|e| table.discrepancy_within(&e.poly, l, self.order, field, self.t)).collect())
    }

    /// Processes the current index.
    pub fn step(&mut self, table: &SyndromeTable, field: &FieldTower) -> Result<StepResult, BmsaError> {
        let Some(l) = self.l() else {
            return Ok(StepResult::Finished);
        };
        let mut failed = Vec::new();
        for (i, d) in self.discrepancies(table, field).unwrap_or_default().into_iter().enumerate() {
            match d {
                Discrepancy::NeedsUnknown(c) => return Ok(StepResult::Blocked(c)),
                Discrepancy::Value(v) if !v.is_zero() => failed.push((i, v)),
                _ => {}
            }
        }
        let action = self.update(l, &failed, field)?;
        self.advance();
        Ok(StepResult::Advanced(self.record(l, action)))
    }

    /// Applies the update at `l` for the members `failed` (index into `F`,
    /// nonzero discrepancy). Does not advance.
    pub fn update(
        &mut self,
        l: IndexPair,
        failed: &[(usize, FieldElem)],
        field: &FieldTower,
    ) -> Result<StepAction, BmsaError> {
        if failed.is_empty() {
            return Ok(StepAction::None);
        }
        let grows = failed.iter().any(|&(i, _)| !self.footprint.contains(&(l - self.f[i].lp)));
        let action = if grows {
            self.procedure2(l, failed, field)?;
            StepAction::Proc2
        } else {
            for &(i, d) in failed {
                let h = self.procedure1(l, &self.f[i], d, field)?;
                self.f[i].poly = h;
            }
            StepAction::Proc1
        };
        self.normalize(field)?;
        Ok(action)
    }

    /// The auxiliary entry covering `gap` with the smallest shift, and that shift.
    fn covering(&self, gap: IndexPair) -> Option<(&AuxEntry, IndexPair)> {
        self.g
            .iter()
            .filter(|a| gap.precedes(a.corner()))
            .map(|a| (a, a.corner() - gap))
            .min_by_key(|(_, e)| e.degree())
    }

    /// `f - (d / v_j) X^e g_j` for the covering corner `j`.
    pub fn procedure1(
        &self,
        l: IndexPair,
        f: &MinimalEntry,
        d: FieldElem,
        field: &FieldTower,
    ) -> Result<BiPoly, BmsaError> {
        let gap = l - f.lp;
        let (aux, e) = self.covering(gap).ok_or(BmsaError::NoCoveringCorner(gap))?;
        let c = field.div(d, aux.v).map_err(|_| BmsaError::InvariantBroken("zero auxiliary value".into()))?;
        Ok(f.poly.sub_scaled_shift(c, e, &aux.g, field))
    }

    fn procedure2(&mut self, l: IndexPair, failed: &[(usize, FieldElem)], field: &FieldTower) -> Result<(), BmsaError> {
        let mut fp = self.footprint.clone();
        for &(i, _) in failed {
            fp.extend(delta_rect(l - self.f[i].lp));
        }
        if fp.len() > self.t as usize {
            return Err(BmsaError::FootprintOverflow { size: fp.len(), t: self.t });
        }
        let disc = |i: usize| failed.iter().find(|&&(j, _)| j == i).map(|&(_, d)| d);
        let points = defining_points_of(&fp);
        let mut new_f = Vec::with_capacity(points.len());
        for &s in &points {
            // a member that did not fail is kept (or shifted) as is
            let below = |want_failed: bool| {
                self.f
                    .iter()
                    .enumerate()
                    .filter(|(i, e)| e.lp.precedes(s) && disc(*i).is_some() == want_failed)
                    .max_by(|a, b| self.order.cmp(a.1.lp, b.1.lp))
            };
            let poly = if let Some((_, e)) = below(false) {
                e.poly.shift_mul(s - e.lp)
            } else if let Some((i, e)) = below(true) {
                let base = e.poly.shift_mul(s - e.lp);
                if s.precedes(l) {
                    let gap = l - s;
                    let (aux, sh) = self.covering(gap).ok_or(BmsaError::NoCoveringCorner(gap))?;
                    let c = field
                        .div(disc(i).expect("failed member"), aux.v)
                        .map_err(|_| BmsaError::InvariantBroken("zero auxiliary value".into()))?;
                    base.sub_scaled_shift(c, sh, &aux.g, field)
                } else {
                    base
                }
            } else {
                return Err(BmsaError::InvariantBroken(format!("no member below new defining point {s}")));
            };
            new_f.push(MinimalEntry { poly, lp: s });
        }
        let mut new_g = Vec::new();
        for c in corners(&points) {
            let fresh = failed.iter().find(|&&(i, _)| l - self.f[i].lp == c);
            if let Some(&(i, d)) = fresh {
                new_g.push(AuxEntry { g: self.f[i].poly.clone(), lp: self.f[i].lp, k: l, v: d });
            } else if let Some(a) = self.g.iter().find(|a| a.corner() == c) {
                new_g.push(a.clone());
            } else {
                return Err(BmsaError::InvariantBroken(format!("no auxiliary polynomial for corner {c}")));
            }
        }
        self.f = new_f;
        self.g = new_g;
        self.footprint = fp;
        Ok(())
    }

    fn normalize(&mut self, field: &FieldTower) -> Result<(), BmsaError> {
        let family = self.polys();
        for e in &mut self.f {
            e.poly = e.poly.normal_form(&family, self.order, field)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub enum BmsaOutcome {
    Basis(BmsaState),
    Blocked { state: BmsaState, cell: IndexPair },
}

impl BmsaOutcome {
    pub fn state(&self) -> &BmsaState {
        match self {
            BmsaOutcome::Basis(s) | BmsaOutcome::Blocked { state: s, .. } => s,
        }
    }
}

/// Result of [`run`]: the outcome, the step trace, and whether the
/// l-/g-condition held.
#[derive(Debug, Clone)]
pub struct Run {
    pub outcome: BmsaOutcome,
    pub trace: Vec<StepRecord>,
    pub condition_met: bool,
}

/// Steps until the end or the first blocking window.
pub fn resume(
    mut state: BmsaState,
    table: &SyndromeTable,
    field: &FieldTower,
    trace: &mut Vec<StepRecord>,
) -> Result<BmsaOutcome, BmsaError> {
    loop {
        match state.step(table, field)? {
            StepResult::Advanced(r) => trace.push(r),
            StepResult::Blocked(cell) => return Ok(BmsaOutcome::Blocked { state, cell }),
            StepResult::Finished => return Ok(BmsaOutcome::Basis(state)),
        }
    }
}

/// Runs the iteration over `S(t)` under `order`.
pub fn run(table: &SyndromeTable, t: u32, order: MonomialOrder, field: &FieldTower) -> Result<Run, BmsaError> {
    let state = BmsaState::new(order, t, table.periods())?;
    let mut trace = Vec::new();
    let outcome = resume(state, table, field, &mut trace)?;
    Ok(Run { outcome, trace, condition_met: check_condition(table, t, order) })
}

/// Runs over every index of the first period instead of `S(t)`.
pub fn run_full_grid(
    table: &SyndromeTable,
    t: u32,
    order: MonomialOrder,
    field: &FieldTower,
) -> Result<BmsaOutcome, BmsaError> {
    let mut steps: Vec<IndexPair> = table.grid().collect();
    order.sort(&mut steps);
    resume(BmsaState::with_steps(order, t, steps), table, field, &mut Vec::new())
}

/// The l-condition (lex) or g-condition (graded).
pub fn check_condition(table: &SyndromeTable, t: u32, order: MonomialOrder) -> bool {
    let nonzero = |n| table.known(n).is_some_and(|v| !v.is_zero());
    match order {
        MonomialOrder::Lex => (0..t as i32).any(|j| nonzero(IndexPair { n1: 0, n2: j })),
        MonomialOrder::Graded => nonzero(IndexPair { n1: 1, n2: 0 }) || nonzero(IndexPair { n1: 0, n2: 1 }),
    }
}
