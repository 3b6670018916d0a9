//! Replays of the worked examples, each checked against its expected values.
//!
//! ```
//! use bmsa::demo::{run_demo, Demo};
//!
//! let report = run_demo(Demo::Esquivando);
//! assert!(report.passed(), "{:?}", report.mismatches);
//! ```

use std::fmt::Debug;
use std::str::FromStr;

use crate::bmsa::{run, BmsaOutcome, BmsaState, StepRecord};
use crate::fixtures;
use crate::gf::{FieldElem, FieldTower};
use crate::inference::{classify, infer, resolve, ExceptionTag, InferenceResult, ResolveOptions, Route};
use crate::lattice::{ip, s_t_set, IndexPair, MonomialOrder};
use crate::locator::ErrorEstimate;
use crate::syndrome::{Discrepancy, SyndromeTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Demo {
    /// The 15x15 binary code, its offset and the table with one missing cell.
    Planteamiento,
    /// Both orders on that table: lex blocks, graded infers the cell.
    Esquivando,
    /// The parametrized basis and its candidate ledger.
    Caso1t3,
    /// A `t = 4` table whose missing cell hits an edge exception.
    Caso2b,
    /// A three-point footprint hitting edge exceptions in both orders.
    Casos1c2c,
}

impl Demo {
    pub const ALL: [Demo; 5] = [Demo::Planteamiento, Demo::Esquivando, Demo::Caso1t3, Demo::Caso2b, Demo::Casos1c2c];

    pub fn name(self) -> &'static str {
        match self {
            Demo::Planteamiento => "planteamiento",
            Demo::Esquivando => "esquivando",
            Demo::Caso1t3 => "caso1t3",
            Demo::Caso2b => "caso2b",
            Demo::Casos1c2c => "casos1c2c",
        }
    }
}

impl FromStr for Demo {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Demo::ALL.into_iter().find(|d| d.name() == s).ok_or_else(|| format!("unknown demo {s:?}"))
    }
}

/// Output of a replay: report lines, the step trace and any mismatches.
#[derive(Debug, Clone)]
pub struct DemoReport {
    pub demo: Demo,
    pub lines: Vec<String>,
    pub trace: Vec<StepRecord>,
    pub mismatches: Vec<String>,
}

impl DemoReport {
    fn new(demo: Demo) -> Self {
        DemoReport { demo, lines: Vec::new(), trace: Vec::new(), mismatches: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn say(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    fn check<T: PartialEq + Debug>(&mut self, what: &str, got: T, want: T) {
        if got != want {
            self.mismatches.push(format!("{what}: got {got:?}, expected {want:?}"));
        }
    }

    fn fail(&mut self, what: &str, err: impl std::fmt::Display) {
        self.mismatches.push(format!("{what}: {err}"));
    }
}

pub fn run_demo(demo: Demo) -> DemoReport {
    let mut r = DemoReport::new(demo);
    match demo {
        Demo::Planteamiento => planteamiento(&mut r),
        Demo::Esquivando => esquivando(&mut r),
        Demo::Caso1t3 => caso1t3(&mut r),
        Demo::Caso2b => caso2b(&mut r),
        Demo::Casos1c2c => casos1c2c(&mut r),
    }
    r
}

/// Expected `F`, `G` and footprint after a step.
struct Row {
    l: (i32, i32),
    f: &'static [&'static str],
    g: &'static [&'static str],
    delta: &'static [(i32, i32)],
}

const LEX_ROWS: &[Row] = &[
    Row { l: (0, 0), f: &["X1", "X2"], g: &["1"], delta: &[(0, 0)] },
    Row { l: (0, 1), f: &["X1", "X2 + a^6"], g: &["1"], delta: &[(0, 0)] },
    Row { l: (0, 3), f: &["X1", "X2^3 + a^6 X2^2 + a"], g: &["X2 + a^6"], delta: &[(0, 0), (0, 1), (0, 2)] },
    Row { l: (0, 5), f: &["X1", "X2^3 + a^6 X2^2 + a^5 X2 + a^6"], g: &["X2 + a^6"], delta: &[(0, 0), (0, 1), (0, 2)] },
    Row {
        l: (1, 0),
        f: &["X1 + a X2 + a^2", "X2^3 + a^6 X2^2 + a^5 X2 + a^6"],
        g: &["X2 + a^6"],
        delta: &[(0, 0), (0, 1), (0, 2)],
    },
    Row {
        l: (1, 1),
        f: &["X1 + a X2 + a^2", "X2^3 + a^6 X2^2 + a^5 X2 + a^6"],
        g: &["X2 + a^6"],
        delta: &[(0, 0), (0, 1), (0, 2)],
    },
];

const GRADED_ROWS: &[Row] = &[
    Row { l: (0, 0), f: &["X1", "X2"], g: &["1"], delta: &[(0, 0)] },
    Row { l: (1, 0), f: &["X1 + a^12", "X2"], g: &["1"], delta: &[(0, 0)] },
    Row { l: (0, 1), f: &["X1 + a^12", "X2 + a^6"], g: &["1"], delta: &[(0, 0)] },
    Row { l: (0, 2), f: &["X1 + a^12", "X2 + a^6"], g: &["1"], delta: &[(0, 0)] },
    Row { l: (3, 0), f: &["X1^3 + a^12 X1^2 + a^10", "X2 + a^6"], g: &["X1 + a^12"], delta: &[(0, 0), (1, 0), (2, 0)] },
    Row {
        l: (2, 1),
        f: &["X1^3 + a^12 X1^2 + a^10", "X2 + a^7 X1 + a^12"],
        g: &["X1 + a^12"],
        delta: &[(0, 0), (1, 0), (2, 0)],
    },
];

fn check_rows(r: &mut DemoReport, order: MonomialOrder, trace: &[StepRecord], rows: &[Row]) {
    for row in rows {
        let what = format!("{order} step ({},{})", row.l.0, row.l.1);
        let Some(rec) = trace.iter().find(|s| s.l == [row.l.0, row.l.1]) else {
            r.fail(&what, "missing from the trace");
            continue;
        };
        let f: Vec<&str> = rec.f.iter().map(String::as_str).collect();
        let g: Vec<&str> = rec.g.iter().map(|a| a.g.as_str()).collect();
        let delta: Vec<(i32, i32)> = rec.delta.iter().map(|d| (d[0], d[1])).collect();
        r.check(&format!("{what} F"), f, row.f.to_vec());
        r.check(&format!("{what} G"), g, row.g.to_vec());
        r.check(&format!("{what} delta"), delta, row.delta.to_vec());
    }
}

fn render_table(table: &SyndromeTable, t: u32) -> Vec<String> {
    let st = s_t_set(t, MonomialOrder::Lex, table.periods()).expect("t fits the grid");
    let rows = st.iter().map(|n| n.n1).max().unwrap_or(0);
    (0..=rows)
        .map(|i| {
            st.iter()
                .filter(|n| n.n1 == i)
                .map(|&n| table.known(n).map_or("?".to_string(), |v| v.to_string()))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect()
}

fn blocked(
    r: &mut DemoReport,
    table: &SyndromeTable,
    t: u32,
    order: MonomialOrder,
    field: &FieldTower,
) -> Option<BmsaState> {
    match run(table, t, order, field) {
        Ok(run) => {
            r.trace.extend(run.trace);
            match run.outcome {
                BmsaOutcome::Blocked { state, .. } => Some(state),
                BmsaOutcome::Basis(_) => {
                    r.fail(&format!("{order} run"), "finished without blocking");
                    None
                }
            }
        }
        Err(e) => {
            r.fail(&format!("{order} run"), e);
            None
        }
    }
}

fn render_error(e: &ErrorEstimate) -> String {
    let p = e.to_poly();
    if p.is_zero() {
        "0".into()
    } else {
        p.render(MonomialOrder::Lex)
    }
}

fn planteamiento(r: &mut DemoReport) {
    let code = fixtures::example1_code();
    let field = &code.field;
    r.say(format!(
        "code: q = {}, periods {:?}, |D| = {}, t = {}",
        field.q(),
        code.periods(),
        code.defining_set.len(),
        code.t
    ));
    let choice = match code.choose_tau() {
        Ok(c) => c,
        Err(e) => return r.fail("offset", e),
    };
    r.say(format!(
        "tau = {}, missing = [{}]",
        choice.tau,
        choice.missing.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(", ")
    ));
    r.check("tau", choice.tau, ip(0, 0));
    r.check("missing", choice.missing.clone(), vec![ip(1, 2)]);
    let e = fixtures::example1_error(field);
    let table = code.syndrome_table(&e, choice.tau);
    let (_, expected) = fixtures::example1_table();
    for line in render_table(&table, code.t) {
        r.say(line);
    }
    let st = s_t_set(code.t, MonomialOrder::Lex, code.periods()).expect("t fits");
    for n in st {
        r.check(&format!("u{n}"), table.known(n), expected.known(n));
    }
}

fn esquivando(r: &mut DemoReport) {
    let (field, table) = fixtures::example1_table();
    let t = fixtures::EXAMPLE1_T;
    if let Some(state) = blocked(r, &table, t, MonomialOrder::Lex, &field) {
        check_rows(r, MonomialOrder::Lex, &r.trace.clone(), LEX_ROWS);
        let l = state.l().expect("blocked");
        r.say(format!("lex blocks at {l} ({:?})", classify(l, &state)));
        match infer(l, &state, &table, &field) {
            Ok(InferenceResult::Exception(case)) => {
                r.say(format!("lex: exception {} with d = {} and s = {:?}", case.tag, case.d, pairs(&case.s_list)));
                r.check(
                    "lex exception",
                    (case.tag, case.d, case.s_list),
                    (ExceptionTag::Lex1a, 2, vec![ip(1, 0), ip(0, 3)]),
                );
            }
            other => r.fail("lex inference", format!("{other:?}")),
        }
        let filled = table.filled(l, FieldElem::Zero);
        let d = filled.discrepancy(&state.f[0].poly, l, MonomialOrder::Lex, &field);
        r.say(format!("lex: with u{l} = 0, f1 has discrepancy {}", show(d)));
        r.check("lex discrepancy with the true value", d, Discrepancy::Value(field.pow_a(11)));
    }
    let start = r.trace.len();
    if let Some(state) = blocked(r, &table, t, MonomialOrder::Graded, &field) {
        let trace = r.trace[start..].to_vec();
        check_rows(r, MonomialOrder::Graded, &trace, GRADED_ROWS);
        let l = state.l().expect("blocked");
        match infer(l, &state, &table, &field) {
            Ok(InferenceResult::Solved { value, witness }) => {
                r.say(format!("graded: u{l} = {value} from f{}", witness + 1));
                r.check("graded inference", (value, witness), (FieldElem::Zero, 1));
            }
            other => r.fail("graded inference", format!("{other:?}")),
        }
    }
    match resolve(&table, t, &field.primitive_pair(), &field, &ResolveOptions::default()) {
        Ok(res) => {
            r.say(format!("resolved by {:?} under {}", res.route, res.order));
            r.say(format!("e = {}", render_error(&res.error)));
            r.check("route", (res.route, res.order), (Route::Inferred, MonomialOrder::Graded));
            r.check("error", res.error.to_poly(), fixtures::example1_error(&field));
        }
        Err(e) => r.fail("resolve", e),
    }
}

fn caso1t3(r: &mut DemoReport) {
    let (field, table) = fixtures::example1_table();
    let opts = ResolveOptions::family_only(MonomialOrder::Lex);
    match resolve(&table, fixtures::EXAMPLE1_T, &field.primitive_pair(), &field, &opts) {
        Ok(res) => {
            r.trace = res.trace.clone();
            for rec in &res.family_ledger {
                let params: Vec<String> = rec.params.iter().map(|(k, v)| format!("{k} = {v}")).collect();
                r.say(format!("{}: {}", params.join(", "), rec.verdict));
            }
            let verdict = |b: &str| {
                res.family_ledger
                    .iter()
                    .find(|c| c.params.first().is_some_and(|(_, v)| v == b))
                    .map(|c| c.verdict.clone())
                    .unwrap_or_default()
            };
            r.check("b = 0", verdict("0").as_str(), "fails at (2,1) with a^14");
            r.check("b = a", verdict("a").as_str(), "fails at (2,1) with a^7");
            r.check("b = a^11", verdict("a^11").as_str(), "consistent");
            let consistent = res.family_ledger.iter().filter(|c| c.verdict == "consistent").count();
            r.check("consistent assignments", consistent, 1);
            r.say(format!("e = {}", render_error(&res.error)));
            r.check("route", res.route, Route::Family);
            r.check("error", res.error.to_poly(), fixtures::example1_error(&field));
        }
        Err(e) => r.fail("resolve", e),
    }
}

fn caso2b(r: &mut DemoReport) {
    let (field, full) = fixtures::caso2b_table();
    let t = fixtures::CASO2B_T;
    let cell = fixtures::CASO2B_MISSING;
    let table = full.masked(cell);
    for line in render_table(&table, t) {
        r.say(line);
    }
    let Some(state) = blocked(r, &table, t, MonomialOrder::Lex, &field) else { return };
    let l = state.l().expect("blocked");
    r.check("blocking index", l, cell);
    let f: Vec<String> = state.polys().iter().map(|p| p.render(MonomialOrder::Lex)).collect();
    r.say(format!("F = {{{}}}", f.join(", ")));
    r.check("F before the step", f, vec!["X1^2 + X1".to_string(), "X2^2 + X2 + 1".to_string()]);
    let g: Vec<(String, IndexPair, FieldElem)> =
        state.g.iter().map(|a| (a.g.render(MonomialOrder::Lex), a.k, a.v)).collect();
    r.check("G", g, vec![("X1 X2 + X1 + 1".to_string(), ip(2, 2), field.one())]);
    let ds: Vec<Discrepancy> =
        state.polys().iter().map(|p| full.discrepancy(p, l, MonomialOrder::Lex, &field)).collect();
    r.say(format!("discrepancies at {l}: {}", ds.iter().map(|&d| show(d)).collect::<Vec<_>>().join(", ")));
    r.check("discrepancies", ds, vec![Discrepancy::Value(field.one()), Discrepancy::ByConvention]);
    match infer(l, &state, &table, &field) {
        Ok(InferenceResult::Exception(case)) => {
            r.say(format!("exception {} with d = {} and s = {:?}", case.tag, case.d, pairs(&case.s_list)));
            r.check("exception", case.tag, ExceptionTag::Lex2b);
        }
        other => r.fail("inference", format!("{other:?}")),
    }
    if let Ok(run) = run(&full, t, MonomialOrder::Lex, &field) {
        if let Some(rec) = run.trace.iter().find(|s| s.l == [cell.n1, cell.n2]) {
            r.say(format!("with the true value, F = {{{}}}", rec.f.join(", ")));
            r.check(
                "F after the step",
                rec.f.clone(),
                vec!["X1^2 + X1 X2 + 1".to_string(), "X2^2 + X2 + 1".to_string()],
            );
        }
    }
    match resolve(&table, t, &field.primitive_pair(), &field, &ResolveOptions::family_only(MonomialOrder::Lex)) {
        Ok(res) => {
            r.say(format!("family: e = {}", render_error(&res.error)));
            let direct = resolve(&full, t, &field.primitive_pair(), &field, &ResolveOptions::default());
            r.check("family error", Some(res.error), direct.ok().map(|d| d.error));
        }
        Err(e) => r.fail("family", e),
    }
}

fn casos1c2c(r: &mut DemoReport) {
    let (field, full) = fixtures::casos1c2c_table();
    let t = fixtures::CASOS1C2C_T;
    let expected = [
        (MonomialOrder::Lex, ip(1, 2), ExceptionTag::Lex1c),
        (MonomialOrder::Lex, ip(2, 1), ExceptionTag::Lex2c),
        (MonomialOrder::Graded, ip(2, 1), ExceptionTag::Grad2c),
        (MonomialOrder::Graded, ip(1, 2), ExceptionTag::Grad1c),
    ];
    let direct = resolve(&full, t, &field.primitive_pair(), &field, &ResolveOptions::default());
    let truth = match &direct {
        Ok(d) => {
            let basis: Vec<String> = d.basis.iter().map(|p| p.render(MonomialOrder::Lex)).collect();
            r.say(format!("full table: basis {{{}}}", basis.join(", ")));
            r.check(
                "basis",
                basis,
                ["X1^2 + a^7 X1 + a^10 X2 + a^5", "X1 X2 + a^3 X1 + a^2 X2 + a^5", "X2^2 + a^6 X2 + a^5"]
                    .map(String::from)
                    .to_vec(),
            );
            Some(d.error.clone())
        }
        Err(e) => {
            r.fail("full table", e);
            None
        }
    };
    for (order, cell, tag) in expected {
        let table = full.masked(cell);
        let Some(state) = blocked(r, &table, t, order, &field) else { continue };
        let l = state.l().expect("blocked");
        r.check(&format!("{order} blocking index"), l, cell);
        if l == ip(1, 2) || l == ip(2, 1) {
            let g: Vec<(String, IndexPair, FieldElem)> =
                state.g.iter().map(|a| (a.g.render(order), a.k, a.v)).collect();
            r.check(
                &format!("{order} G at {l}"),
                g,
                vec![
                    ("X2 + a^2".to_string(), ip(1, 1), field.pow_a(13)),
                    ("X1 + a^12".to_string(), ip(1, 1), field.pow_a(13)),
                ],
            );
        }
        let ds: Vec<String> = state.polys().iter().map(|p| show(full.discrepancy(p, l, order, &field))).collect();
        match infer(l, &state, &table, &field) {
            Ok(InferenceResult::Exception(case)) => {
                r.say(format!("{order}, u{cell} missing: exception {} (discrepancies {})", case.tag, ds.join(", ")));
                r.check(&format!("{order} exception at {cell}"), case.tag, tag);
            }
            other => r.fail(&format!("{order} inference at {cell}"), format!("{other:?}")),
        }
        match resolve(&table, t, &field.primitive_pair(), &field, &ResolveOptions::family_only(order)) {
            Ok(res) => r.check(&format!("{order} family error at {cell}"), Some(res.error), truth.clone()),
            Err(e) => r.fail(&format!("{order} family at {cell}"), e),
        }
    }
}

fn pairs(s: &[IndexPair]) -> Vec<(i32, i32)> {
    s.iter().map(|p| (p.n1, p.n2)).collect()
}

fn show(d: Discrepancy) -> String {
    match d {
        Discrepancy::Value(v) => v.to_string(),
        Discrepancy::ByConvention => "0 (by convention)".into(),
        Discrepancy::OutsideRange => "0 (outside S(t))".into(),
        Discrepancy::NeedsUnknown(c) => format!("needs u{c}"),
    }
}
