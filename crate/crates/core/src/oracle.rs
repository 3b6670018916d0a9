//! Brute-force references for testing: footprints by exact linear algebra
//! and decoding by enumerating error patterns.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::codes::AbelianCode;
use crate::gf::{FieldElem, FieldTower};
use crate::lattice::{ip, Footprint, IndexPair, MonomialOrder};
use crate::linalg;
use crate::locator::ErrorEstimate;
use crate::poly::BiPoly;
use crate::syndrome::{Cell, SyndromeTable};

/// Largest search space [`brute_decode`] accepts.
pub const MAX_PATTERNS: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("no error of weight <= {0} matches the syndromes")]
    NoMatch(u32),
    #[error("{0} errors of weight <= t match the syndromes")]
    NonUnique(usize),
    #[error("{0} error patterns exceed the enumeration bound")]
    TooLarge(u128),
    #[error("cell {0} of the prefix is unknown")]
    UnknownCell(IndexPair),
}

/// Grid cells strictly before `l` in `order`.
pub fn prefix(table: &SyndromeTable, l: IndexPair, order: MonomialOrder) -> Vec<IndexPair> {
    table.grid().filter(|&n| order.lt(n, l)).collect()
}

/// Whether some monic `f` with `LP(f) = s` and support in `[0, bound]^2`
/// satisfies every relation over `cells`.
fn feasible(
    table: &SyndromeTable,
    cells: &[IndexPair],
    s: IndexPair,
    order: MonomialOrder,
    bound: i32,
    field: &FieldTower,
) -> Result<bool, OracleError> {
    let support: Vec<IndexPair> =
        (0..=bound).flat_map(|i| (0..=bound).map(move |j| ip(i, j))).filter(|&m| order.lt(m, s)).collect();
    let value = |k: IndexPair| match table.get(k) {
        Cell::Known(v) => Ok(v),
        Cell::Unknown => Err(OracleError::UnknownCell(k)),
    };
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for &n in cells.iter().filter(|&&n| s.precedes(n)) {
        let row = support.iter().map(|&m| value(m + n - s)).collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
        rhs.push(field.neg(value(n)?));
    }
    if support.is_empty() {
        return Ok(rhs.iter().all(|v| v.is_zero()));
    }
    Ok(linalg::consistent(&rows, &rhs, field))
}

/// `Δ(u^l)` for the prefix of `table` before `l`, searching leading power
/// products in `[0, t]^2` with supports in `[0, 2t]^2`.
pub fn brute_footprint(
    table: &SyndromeTable,
    l: IndexPair,
    order: MonomialOrder,
    t: u32,
    field: &FieldTower,
) -> Result<Footprint, OracleError> {
    let cells = prefix(table, l, order);
    let (box_, bound) = (t as i32, 2 * t as i32);
    let mut out = Footprint::new();
    // feasibility is upward closed, so each column is an initial segment
    let mut cap = box_;
    for i in 0..=box_ {
        let mut j = 0;
        while j <= cap && !feasible(table, &cells, ip(i, j), order, bound, field)? {
            out.insert(ip(i, j));
            j += 1;
        }
        if j == 0 {
            break;
        }
        cap = j - 1;
    }
    Ok(out)
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of error patterns of weight at most `t` on `n` positions.
pub fn pattern_count(n: u32, t: u32, q: u64) -> u128 {
    (0..=t as u128).map(|w| binomial(n as u128, w) * (q as u128 - 1).pow(w as u32)).sum()
}

type Combo = Vec<(usize, FieldElem)>;

/// Every combination of at most `w` positions with nonzero base-field values,
/// positions increasing.
fn combos(n: usize, w: usize, units: &[FieldElem]) -> Vec<Combo> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..w {
        let mut next = Vec::new();
        for c in &frontier {
            let start = c.last().map_or(0, |&(p, _)| p + 1);
            for p in start..n {
                for &u in units {
                    let mut d = c.clone();
                    d.push((p, u));
                    next.push(d);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// The unique error of weight at most `t` whose syndromes on the defining set
/// match those of `received`, by meet-in-the-middle over all patterns.
pub fn brute_decode(code: &AbelianCode, received: &BiPoly) -> Result<ErrorEstimate, OracleError> {
    let field = &code.field;
    let (r1, r2) = code.periods();
    let n = (r1 * r2) as usize;
    let total = pattern_count(n as u32, code.t, field.q());
    if total > MAX_PATTERNS {
        return Err(OracleError::TooLarge(total));
    }
    let rows: Vec<IndexPair> = code.defining_set.iter().copied().collect();
    let positions: Vec<IndexPair> = (0..r1 as i32).flat_map(|i| (0..r2 as i32).map(move |j| ip(i, j))).collect();
    let column =
        |p: IndexPair| -> Vec<FieldElem> { rows.iter().map(|&m| field.monomial_at(&code.alpha, p, m)).collect() };
    let columns: Vec<Vec<FieldElem>> = positions.iter().map(|&p| column(p)).collect();
    let target: Vec<FieldElem> = rows.iter().map(|&m| received.evaluate(field, &code.alpha, m)).collect();
    let syndrome = |c: &Combo| -> Vec<FieldElem> {
        let mut acc = vec![FieldElem::Zero; rows.len()];
        for &(p, u) in c {
            for (a, &v) in acc.iter_mut().zip(&columns[p]) {
                *a = field.add(*a, field.mul(u, v));
            }
        }
        acc
    };
    let units = field.base_field_units();
    let t = code.t as usize;
    let (left_w, right_w) = (t.div_ceil(2), t / 2);
    let mut right: HashMap<Vec<FieldElem>, Vec<Combo>> = HashMap::new();
    for c in combos(n, right_w, &units) {
        right.entry(syndrome(&c)).or_default().push(c);
    }
    let mut found: BTreeSet<Vec<(usize, FieldElem)>> = BTreeSet::new();
    for l in combos(n, left_w, &units) {
        let rest: Vec<FieldElem> = syndrome(&l).iter().zip(&target).map(|(&a, &b)| field.sub(b, a)).collect();
        let Some(cands) = right.get(&rest) else { continue };
        let after = l.last().map(|&(p, _)| p);
        for r in cands {
            if r.first().is_some_and(|&(p, _)| after.is_some_and(|a| p <= a)) {
                continue;
            }
            // right-hand halves only extend left halves that are full
            if !r.is_empty() && l.len() < left_w {
                continue;
            }
            let mut c = l.clone();
            c.extend(r.iter().copied());
            found.insert(c);
        }
    }
    match found.len() {
        0 => Err(OracleError::NoMatch(code.t)),
        1 => {
            let c = found.into_iter().next().expect("one");
            Ok(ErrorEstimate { coeffs: c.into_iter().map(|(p, u)| (positions[p], u)).collect() })
        }
        k => Err(OracleError::NonUnique(k)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn counts() {
        assert_eq!(pattern_count(225, 3, 2), 1 + 225 + 25_200 + 1_873_200);
        assert_eq!(combos(4, 2, &[FieldElem::Log(0)]).len(), 1 + 4 + 6);
    }

    #[test]
    fn lex_prefix_footprint() {
        let (f, table) = fixtures::example1_table();
        let fp = brute_footprint(&table, ip(0, 4), MonomialOrder::Lex, 3, &f).unwrap();
        assert_eq!(fp, [ip(0, 0), ip(0, 1), ip(0, 2)].into_iter().collect());
    }

    #[test]
    fn zero_table_has_empty_footprint() {
        let f = fixtures::gf16();
        let table = SyndromeTable::complete(&BiPoly::zero(), ip(0, 0), &f.primitive_pair(), &f);
        assert!(brute_footprint(&table, ip(3, 3), MonomialOrder::Graded, 3, &f).unwrap().is_empty());
    }
}
