//! Sparse bivariate polynomials over `L`.
//!
//! Only nonzero coefficients are stored. Leading terms depend on the active
//! [`MonomialOrder`], so every order-sensitive operation takes it explicitly.
//! The text form is `a^k X1^i X2^j` terms joined by ` + `, highest term first,
//! with unit coefficients and unit exponents omitted.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::gf::{parse_elem, FieldElem, FieldTower, RootPair};
use crate::lattice::{ip, IndexPair, MonomialOrder};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("the zero polynomial has no leading power product")]
    ZeroPolynomial,
    #[error("monomial {0} is outside the footprint but no family member divides it")]
    NonReducible(IndexPair),
    #[error("cannot parse polynomial term `{0}`")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct BiPoly {
    terms: BTreeMap<IndexPair, FieldElem>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::monomial(IndexPair::ZERO, FieldElem::Log(0))
    }

    pub fn monomial(m: IndexPair, c: FieldElem) -> Self {
        let mut p = BiPoly::zero();
        p.set(m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (IndexPair, FieldElem)>, field: &FieldTower) -> Self {
        let mut p = BiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c, field);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: IndexPair) -> FieldElem {
        self.terms.get(&m).copied().unwrap_or(FieldElem::Zero)
    }

    pub fn set(&mut self, m: IndexPair, c: FieldElem) {
        if c.is_zero() {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, c);
        }
    }

    pub fn add_term(&mut self, m: IndexPair, c: FieldElem, field: &FieldTower) {
        let v = field.add(self.coeff(m), c);
        self.set(m, v);
    }

    pub fn terms(&self) -> impl Iterator<Item = (IndexPair, FieldElem)> + '_ {
        self.terms.iter().map(|(&m, &c)| (m, c))
    }

    pub fn support(&self) -> impl Iterator<Item = IndexPair> + '_ {
        self.terms.keys().copied()
    }

    /// Number of nonzero terms.
    pub fn weight(&self) -> usize {
        self.terms.len()
    }

    pub fn lp(&self, order: MonomialOrder) -> Result<IndexPair, PolyError> {
        self.support().max_by(|&a, &b| order.cmp(a, b)).ok_or(PolyError::ZeroPolynomial)
    }

    pub fn leading_coeff(&self, order: MonomialOrder) -> Result<FieldElem, PolyError> {
        Ok(self.coeff(self.lp(order)?))
    }

    pub fn add(&self, other: &BiPoly, field: &FieldTower) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m, c, field);
        }
        out
    }

    pub fn scale(&self, c: FieldElem, field: &FieldTower) -> BiPoly {
        let mut out = BiPoly::zero();
        for (m, v) in self.terms() {
            out.set(m, field.mul(v, c));
        }
        out
    }

    /// `self - c * X^e * g`.
    pub fn sub_scaled_shift(&self, c: FieldElem, e: IndexPair, g: &BiPoly, field: &FieldTower) -> BiPoly {
        let mut out = self.clone();
        let nc = field.neg(c);
        for (m, v) in g.terms() {
            out.add_term(m + e, field.mul(v, nc), field);
        }
        out
    }

    /// `X^e * self`.
    pub fn shift_mul(&self, e: IndexPair) -> BiPoly {
        BiPoly { terms: self.terms.iter().map(|(&m, &c)| (m + e, c)).collect() }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, order: MonomialOrder, field: &FieldTower) -> Result<BiPoly, PolyError> {
        let lc = self.leading_coeff(order)?;
        let inv = field.inv(lc).map_err(|_| PolyError::ZeroPolynomial)?;
        Ok(self.scale(inv, field))
    }

    /// Value at the point `alpha^n`.
    pub fn evaluate(&self, field: &FieldTower, alpha: &RootPair, n: IndexPair) -> FieldElem {
        self.terms().fold(FieldElem::Zero, |acc, (m, c)| field.add(acc, field.mul(c, field.monomial_at(alpha, m, n))))
    }

    /// Reduces every non-leading monomial that some family member's leading
    /// power product divides. The largest offending monomial goes first and
    /// uses the divisor with the largest leading power product.
    pub fn normal_form(
        &self,
        family: &[BiPoly],
        order: MonomialOrder,
        field: &FieldTower,
    ) -> Result<BiPoly, PolyError> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let lp = self.lp(order)?;
        let mut leads = Vec::with_capacity(family.len());
        for g in family {
            let s = g.lp(order)?;
            leads.push((s, g.coeff(s), g));
        }
        leads.sort_by(|a, b| order.cmp(b.0, a.0));
        let mut f = self.clone();
        loop {
            let mut tail: Vec<IndexPair> = f.support().filter(|&m| m != lp).collect();
            order.sort(&mut tail);
            let target = tail
                .into_iter()
                .rev()
                .find_map(|m| leads.iter().find(|(s, _, _)| s.precedes(m)).map(|&(s, c, g)| (m, s, c, g)));
            let Some((m, s, c, g)) = target else {
                return Ok(f);
            };
            let factor = field.div(f.coeff(m), c).map_err(|_| PolyError::NonReducible(m))?;
            f = f.sub_scaled_shift(factor, m - s, g, field);
        }
    }

    /// Parses the text form produced by [`BiPoly::render`]. Terms may also be
    /// glued (`a^6X2^2`), as long as factors appear in the order coefficient, X1, X2.
    pub fn parse(text: &str, field: &FieldTower) -> Result<BiPoly, PolyError> {
        let mut p = BiPoly::zero();
        if text.trim() == "0" {
            return Ok(p);
        }
        for raw in text.split('+') {
            let term: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
            if term.is_empty() {
                return Err(PolyError::Parse(raw.to_string()));
            }
            let err = || PolyError::Parse(raw.trim().to_string());
            let split = |t: &str, var: &str| -> Result<(String, i32), PolyError> {
                match t.find(var) {
                    None => Ok((t.to_string(), 0)),
                    Some(i) => {
                        let rest = &t[i + var.len()..];
                        let (e, after) = match rest.strip_prefix('^') {
                            Some(r) => {
                                let end = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
                                (r[..end].parse::<i32>().map_err(|_| err())?, &r[end..])
                            }
                            None => (1, rest),
                        };
                        Ok((format!("{}{}", &t[..i], after), e))
                    }
                }
            };
            let (rest, e2) = split(&term, "X2")?;
            let (coef, e1) = split(&rest, "X1")?;
            let c =
                if coef.is_empty() { FieldElem::Log(0) } else { parse_elem(&coef, field.order()).ok_or_else(err)? };
            p.add_term(ip(e1, e2), c, field);
        }
        Ok(p)
    }

    pub fn render(&self, order: MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut support: Vec<IndexPair> = self.support().collect();
        order.sort(&mut support);
        support.iter().rev().map(|&m| render_term(m, self.coeff(m))).collect::<Vec<_>>().join(" + ")
    }
}

fn render_term(m: IndexPair, c: FieldElem) -> String {
    let mut parts = Vec::new();
    if c != FieldElem::Log(0) || m == IndexPair::ZERO {
        parts.push(c.to_string());
    }
    for (name, e) in [("X1", m.n1), ("X2", m.n2)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join(" ")
}
