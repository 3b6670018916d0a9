//! Doubly periodic syndrome tables with unknown cells, and the windowed
//! discrepancy `f[U]_n = Σ f_m u_{m+n-LP(f)}`.

use crate::gf::{FieldElem, FieldTower, RootPair};
use crate::lattice::{in_s_t, IndexPair, MonomialOrder};
use crate::poly::BiPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cell {
    Known(FieldElem),
    Unknown,
}

/// An `r1 x r2` table indexed modulo the periods.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyndromeTable {
    r1: u32,
    r2: u32,
    tau: IndexPair,
    cells: Vec<Cell>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Discrepancy {
    Value(FieldElem),
    /// `n` lies outside `Σ_LP(f)`; the relation holds trivially.
    ByConvention,
    /// The window references this unknown cell (wrapped into the period grid).
    NeedsUnknown(IndexPair),
    /// The window reaches an unknown cell outside `S(t)`; a member of a
    /// normalized minimal set is then a recurrence at `n`.
    OutsideRange,
}

impl Discrepancy {
    /// Zero or by convention.
    pub fn vanishes(self) -> bool {
        matches!(self, Discrepancy::ByConvention | Discrepancy::OutsideRange | Discrepancy::Value(FieldElem::Zero))
    }
}

impl SyndromeTable {
    /// A table with every cell unknown.
    pub fn unknown(periods: (u32, u32), tau: IndexPair) -> Self {
        SyndromeTable {
            r1: periods.0,
            r2: periods.1,
            tau,
            cells: vec![Cell::Unknown; (periods.0 * periods.1) as usize],
        }
    }

    /// Syndromes of `word` at `alpha^(tau+n)`, known exactly where `tau + n`
    /// lies in `defset`.
    pub fn from_word(
        word: &BiPoly,
        defset: impl Fn(IndexPair) -> bool,
        tau: IndexPair,
        alpha: &RootPair,
        field: &FieldTower,
    ) -> Self {
        let periods = field.periods();
        let mut t = SyndromeTable::unknown(periods, tau);
        for i in 0..periods.0 as i32 {
            for j in 0..periods.1 as i32 {
                let n = IndexPair { n1: i, n2: j };
                let m = (tau + n).wrap(periods.0, periods.1);
                if defset(m) {
                    t.set(n, Cell::Known(word.evaluate(field, alpha, m)));
                }
            }
        }
        t
    }

    /// Every cell known: the full syndrome table of `word`.
    pub fn complete(word: &BiPoly, tau: IndexPair, alpha: &RootPair, field: &FieldTower) -> Self {
        SyndromeTable::from_word(word, |_| true, tau, alpha, field)
    }

    pub fn periods(&self) -> (u32, u32) {
        (self.r1, self.r2)
    }

    pub fn tau(&self) -> IndexPair {
        self.tau
    }

    fn slot(&self, n: IndexPair) -> usize {
        let w = n.wrap(self.r1, self.r2);
        (w.n1 as u32 * self.r2 + w.n2 as u32) as usize
    }

    pub fn get(&self, n: IndexPair) -> Cell {
        self.cells[self.slot(n)]
    }

    pub fn known(&self, n: IndexPair) -> Option<FieldElem> {
        match self.get(n) {
            Cell::Known(v) => Some(v),
            Cell::Unknown => None,
        }
    }

    pub fn set(&mut self, n: IndexPair, c: Cell) {
        let i = self.slot(n);
        self.cells[i] = c;
    }

    /// A copy with `n` filled in.
    pub fn filled(&self, n: IndexPair, v: FieldElem) -> Self {
        let mut t = self.clone();
        t.set(n, Cell::Known(v));
        t
    }

    /// A copy with `n` marked unknown.
    pub fn masked(&self, n: IndexPair) -> Self {
        let mut t = self.clone();
        t.set(n, Cell::Unknown);
        t
    }

    /// All grid points, row by row.
    pub fn grid(&self) -> impl Iterator<Item = IndexPair> {
        let r2 = self.r2 as i32;
        (0..self.r1 as i32).flat_map(move |i| (0..r2).map(move |j| IndexPair { n1: i, n2: j }))
    }

    pub fn unknown_cells(&self) -> Vec<IndexPair> {
        self.grid().filter(|&n| self.get(n) == Cell::Unknown).collect()
    }

    pub fn known_cells(&self) -> impl Iterator<Item = (IndexPair, FieldElem)> + '_ {
        self.grid().filter_map(|n| self.known(n).map(|v| (n, v)))
    }

    /// Whether every known cell is zero.
    pub fn all_known_zero(&self) -> bool {
        self.cells.iter().all(|c| matches!(c, Cell::Unknown | Cell::Known(FieldElem::Zero)))
    }

    /// `f[U]_n`, or the largest unknown cell in the window.
    pub fn discrepancy(&self, f: &BiPoly, n: IndexPair, order: MonomialOrder, field: &FieldTower) -> Discrepancy {
        self.window(f, n, order, field, None)
    }

    /// As [`Self::discrepancy`], for a run restricted to `S(t)`.
    pub fn discrepancy_within(
        &self,
        f: &BiPoly,
        n: IndexPair,
        order: MonomialOrder,
        field: &FieldTower,
        t: u32,
    ) -> Discrepancy {
        self.window(f, n, order, field, Some(t))
    }

    fn window(
        &self,
        f: &BiPoly,
        n: IndexPair,
        order: MonomialOrder,
        field: &FieldTower,
        t: Option<u32>,
    ) -> Discrepancy {
        let Ok(s) = f.lp(order) else {
            return Discrepancy::ByConvention;
        };
        if !s.precedes(n) {
            return Discrepancy::ByConvention;
        }
        let mut acc = FieldElem::Zero;
        let mut missing: Option<IndexPair> = None;
        for (m, c) in f.terms() {
            let k = m + n - s;
            match self.get(k) {
                Cell::Known(v) => acc = field.add(acc, field.mul(c, v)),
                Cell::Unknown if t.is_some_and(|t| !in_s_t(k, t)) => return Discrepancy::OutsideRange,
                Cell::Unknown => {
                    if missing.is_none_or(|x| order.lt(x, k)) {
                        missing = Some(k);
                    }
                }
            }
        }
        match missing {
            Some(k) => Discrepancy::NeedsUnknown(k.wrap(self.r1, self.r2)),
            None => Discrepancy::Value(acc),
        }
    }

    /// Whether `f` satisfies every relation at `k` with `LP(f) ⪯ k <_T upto`
    /// inside the first period. Fails with the cell on an unknown window.
    pub fn generates(
        &self,
        f: &BiPoly,
        upto: IndexPair,
        order: MonomialOrder,
        field: &FieldTower,
    ) -> Result<bool, IndexPair> {
        for k in self.grid() {
            if !order.lt(k, upto) {
                continue;
            }
            match self.discrepancy(f, k, order, field) {
                Discrepancy::NeedsUnknown(c) => return Err(c),
                d if !d.vanishes() => return Ok(false),
                _ => {}
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::lattice::ip;

    #[test]
    fn example_one_fixture() {
        let (field, table) = fixtures::example1_table();
        let a = |k| Cell::Known(field.pow_a(k));
        assert_eq!(table.get(ip(0, 0)), a(0));
        assert_eq!(table.get(ip(0, 5)), Cell::Known(FieldElem::Zero));
        assert_eq!(table.get(ip(2, 1)), a(8));
        assert_eq!(table.get(ip(5, 0)), a(5));
        assert_eq!(table.get(ip(1, 2)), Cell::Unknown);
        assert_eq!(table.get(ip(16, 17)), table.get(ip(1, 2)));
    }

    #[test]
    fn discrepancy_examples() {
        let (field, table) = fixtures::example1_table();
        let p = |t| BiPoly::parse(t, &field).unwrap();
        assert_eq!(
            table.discrepancy(&BiPoly::one(), ip(0, 0), MonomialOrder::Lex, &field),
            Discrepancy::Value(field.one())
        );
        assert_eq!(
            table.discrepancy(&p("X2^3 + a^6 X2^2 + a^5 X2 + a^6"), ip(1, 1), MonomialOrder::Lex, &field),
            Discrepancy::ByConvention
        );
        let f2 = p("X2 + a^7 X1 + a^12");
        assert_eq!(
            table.discrepancy(&f2, ip(1, 2), MonomialOrder::Graded, &field),
            Discrepancy::NeedsUnknown(ip(1, 2))
        );
        let filled = table.filled(ip(1, 2), FieldElem::Zero);
        assert_eq!(
            filled.discrepancy(&f2, ip(1, 2), MonomialOrder::Graded, &field),
            Discrepancy::Value(FieldElem::Zero)
        );
    }

    #[test]
    fn generates_examples() {
        let (field, table) = fixtures::example1_table();
        let zero = SyndromeTable::complete(&BiPoly::zero(), ip(0, 0), &field.primitive_pair(), &field);
        assert_eq!(zero.generates(&BiPoly::one(), ip(14, 14), MonomialOrder::Lex, &field), Ok(true));
        let x1 = BiPoly::parse("X1", &field).unwrap();
        assert_eq!(table.generates(&x1, ip(1, 1), MonomialOrder::Lex, &field), Ok(false));
    }
}
