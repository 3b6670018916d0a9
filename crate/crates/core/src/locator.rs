//! From a basis of the recurrence ideal to an error polynomial: the defining
//! set by exhaustive root search, coefficients by a linear solve over `L`,
//! and verification against the known syndromes.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::gf::{FieldElem, FieldTower, RootPair};
use crate::lattice::{IndexPair, MonomialOrder};
use crate::linalg::{self, Solve};
use crate::poly::BiPoly;
use crate::syndrome::SyndromeTable;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocatorError {
    #[error("the evaluation system is singular")]
    SingularSystem,
    #[error("no error with this support matches the known syndromes")]
    Inconsistent,
    #[error("error value at {0} lies outside the base field")]
    NonBaseFieldSolution(IndexPair),
}

/// An error polynomial given by its support and coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ErrorEstimate {
    pub coeffs: BTreeMap<IndexPair, FieldElem>,
}

impl ErrorEstimate {
    pub fn zero() -> Self {
        ErrorEstimate::default()
    }

    pub fn from_poly(p: &BiPoly) -> Self {
        ErrorEstimate { coeffs: p.terms().collect() }
    }

    pub fn to_poly(&self) -> BiPoly {
        let mut p = BiPoly::zero();
        for (&m, &c) in &self.coeffs {
            p.set(m, c);
        }
        p
    }

    pub fn support(&self) -> BTreeSet<IndexPair> {
        self.coeffs.keys().copied().collect()
    }

    /// Hamming weight `ω(e)`.
    pub fn weight(&self) -> usize {
        self.coeffs.len()
    }

    /// `e(α^(τ+n))`.
    pub fn syndrome(&self, n: IndexPair, tau: IndexPair, alpha: &RootPair, field: &FieldTower) -> FieldElem {
        self.coeffs
            .iter()
            .fold(FieldElem::Zero, |acc, (&p, &c)| field.add(acc, field.mul(c, field.monomial_at(alpha, p, tau + n))))
    }
}

/// `{n : g(α^n) = 0 for every g in basis}` over the period grid.
pub fn defining_set(basis: &[BiPoly], alpha: &RootPair, field: &FieldTower) -> BTreeSet<IndexPair> {
    let (r1, r2) = (alpha.r1 as i32, alpha.r2 as i32);
    (0..r1)
        .flat_map(|i| (0..r2).map(move |j| IndexPair { n1: i, n2: j }))
        .filter(|&n| basis.iter().all(|g| g.evaluate(field, alpha, n).is_zero()))
        .collect()
}

/// Solves `Σ_p x_p (α^(τ+n))^p = u_n` over every known cell, requiring the
/// solution to be unique and to lie in the base field.
pub fn error_values(
    support: &BTreeSet<IndexPair>,
    table: &SyndromeTable,
    alpha: &RootPair,
    field: &FieldTower,
) -> Result<ErrorEstimate, LocatorError> {
    let cols: Vec<IndexPair> = support.iter().copied().collect();
    let tau = table.tau();
    let (rows, rhs): (Vec<Vec<FieldElem>>, Vec<FieldElem>) = table
        .known_cells()
        .map(|(n, v)| (cols.iter().map(|&p| field.monomial_at(alpha, p, tau + n)).collect(), v))
        .unzip();
    let x = linalg::solve(&rows, &rhs, field).map_err(|e| match e {
        Solve::Inconsistent => LocatorError::Inconsistent,
        Solve::Underdetermined => LocatorError::SingularSystem,
    })?;
    let mut coeffs = BTreeMap::new();
    for (p, v) in cols.into_iter().zip(x) {
        if !field.in_base_field(v) {
            return Err(LocatorError::NonBaseFieldSolution(p));
        }
        if !v.is_zero() {
            coeffs.insert(p, v);
        }
    }
    Ok(ErrorEstimate { coeffs })
}

/// First known cell, in `order` over `cells`, where the estimate disagrees,
/// with the estimate's value there.
pub fn first_mismatch(
    est: &ErrorEstimate,
    table: &SyndromeTable,
    cells: impl IntoIterator<Item = IndexPair>,
    alpha: &RootPair,
    field: &FieldTower,
) -> Option<(IndexPair, FieldElem)> {
    cells.into_iter().find_map(|n| {
        let want = table.known(n)?;
        let got = est.syndrome(n, table.tau(), alpha, field);
        (got != want).then_some((n, got))
    })
}

/// Whether `e(α^(τ+n)) = u_n` at every known cell.
pub fn verify(est: &ErrorEstimate, table: &SyndromeTable, alpha: &RootPair, field: &FieldTower) -> bool {
    first_mismatch(est, table, table.grid(), alpha, field).is_none()
}

/// Known cells of `S(t)` first (in `order`), then every other known cell.
pub fn check_sequence(table: &SyndromeTable, t: u32, order: MonomialOrder) -> Vec<IndexPair> {
    let mut first: Vec<IndexPair> = table.grid().filter(|&n| crate::lattice::in_s_t(n, t)).collect();
    order.sort(&mut first);
    let rest = table.grid().filter(|&n| !crate::lattice::in_s_t(n, t));
    first.into_iter().chain(rest).collect()
}
