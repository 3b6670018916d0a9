//! Bivariate abelian codes: q-orbits, defining sets, the choice of the
//! offset `τ`, codeword generation, error injection and the decoder front end.

use std::collections::BTreeSet;

use rand::seq::index::sample;
use rand::Rng;
use thiserror::Error;

use crate::gf::{FieldElem, FieldTower, RootPair};
use crate::inference::{resolve, Resolution, ResolveOptions};
use crate::lattice::{ip, max_capability, s_t_set, IndexPair, LatticeError, MonomialOrder};
use crate::linalg;
use crate::locator::ErrorEstimate;
use crate::poly::BiPoly;
use crate::syndrome::SyndromeTable;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("every offset leaves at least {0} indexes of S(t) outside the defining set")]
    TooManyMissing(usize),
    #[error("the only missing index {0} is not a border index")]
    NonBorderMissing(IndexPair),
    #[error("defining set is not closed under q-orbits: {0} is missing")]
    NotOrbitClosed(IndexPair),
    #[error("codeword basis has a coefficient outside the base field")]
    NotOverBaseField,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// The q-orbit `{(q^k i mod r1, q^k j mod r2)}` of `rep`.
pub fn q_orbit(rep: IndexPair, q: u64, periods: (u32, u32)) -> BTreeSet<IndexPair> {
    let (r1, r2) = (periods.0 as u64, periods.1 as u64);
    let mut out = BTreeSet::new();
    let (mut i, mut j) = (rep.n1.rem_euclid(r1 as i32) as u64, rep.n2.rem_euclid(r2 as i32) as u64);
    while out.insert(ip(i as i32, j as i32)) {
        i = i * q % r1;
        j = j * q % r2;
    }
    out
}

/// An abelian code given by its defining set with respect to `alpha`.
#[derive(Debug, Clone)]
pub struct AbelianCode {
    pub field: FieldTower,
    pub defining_set: BTreeSet<IndexPair>,
    pub t: u32,
    pub alpha: RootPair,
}

/// The offset chosen for a code and the indexes of `S(t)` it leaves unknown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauChoice {
    pub tau: IndexPair,
    pub missing: Vec<IndexPair>,
    /// Other offsets with the same number of missing indexes.
    pub alternatives: Vec<IndexPair>,
}

/// Indexes at which a single missing syndrome may be inferable.
fn potential_border(n: IndexPair, t: u32) -> bool {
    let t = t as i32;
    if n.n1 > 0 && n.n2 > 0 {
        n.degree() == t
    } else {
        n.degree() >= t - 1
    }
}

impl AbelianCode {
    pub fn new(
        field: FieldTower,
        defining_set: BTreeSet<IndexPair>,
        t: u32,
        alpha: RootPair,
    ) -> Result<Self, CodeError> {
        let periods = field.periods();
        let max = max_capability(periods);
        if t == 0 || t > max {
            return Err(LatticeError::CapabilityOutOfRange { t, max }.into());
        }
        for &n in &defining_set {
            if let Some(&m) = q_orbit(n, field.q(), periods).iter().find(|m| !defining_set.contains(m)) {
                return Err(CodeError::NotOrbitClosed(m));
            }
        }
        Ok(AbelianCode { field, defining_set, t, alpha })
    }

    pub fn from_orbit_reps(field: FieldTower, reps: &[IndexPair], t: u32, alpha: RootPair) -> Result<Self, CodeError> {
        let set = reps.iter().flat_map(|&r| q_orbit(r, field.q(), field.periods())).collect();
        AbelianCode::new(field, set, t, alpha)
    }

    pub fn periods(&self) -> (u32, u32) {
        self.field.periods()
    }

    pub fn contains_index(&self, n: IndexPair) -> bool {
        let (r1, r2) = self.periods();
        self.defining_set.contains(&n.wrap(r1, r2))
    }

    /// Scans every offset and keeps those with the fewest missing indexes,
    /// preferring a missing index that can be inferred; ties go to the
    /// lexicographically smallest offset.
    pub fn choose_tau(&self) -> Result<TauChoice, CodeError> {
        let (r1, r2) = self.periods();
        let st = s_t_set(self.t, MonomialOrder::Lex, (r1, r2))?;
        let mut best: Option<(usize, IndexPair, Vec<IndexPair>)> = None;
        let mut ties = Vec::new();
        for i in 0..r1 as i32 {
            for j in 0..r2 as i32 {
                let tau = ip(i, j);
                let missing: Vec<IndexPair> = st.iter().copied().filter(|&n| !self.contains_index(tau + n)).collect();
                let rank = match missing.as_slice() {
                    [] => 0,
                    [n] if potential_border(*n, self.t) => 1,
                    [_] => 2,
                    m => m.len() + 1,
                };
                match &best {
                    Some((r, _, _)) if *r < rank => {}
                    Some((r, _, _)) if *r == rank => ties.push(tau),
                    _ => {
                        best = Some((rank, tau, missing));
                        ties.clear();
                    }
                }
            }
        }
        let (rank, tau, missing) = best.expect("the grid is nonempty");
        match rank {
            0 | 1 => Ok(TauChoice { tau, missing, alternatives: ties }),
            2 => Err(CodeError::NonBorderMissing(missing[0])),
            _ => Err(CodeError::TooManyMissing(missing.len())),
        }
    }

    /// The syndrome table of `received` at offset `tau`; cells outside the
    /// defining set are unknown.
    pub fn syndrome_table(&self, received: &BiPoly, tau: IndexPair) -> SyndromeTable {
        SyndromeTable::from_word(received, |m| self.defining_set.contains(&m), tau, &self.alpha, &self.field)
    }

    /// A basis over the base field of the code, from the nullspace of the
    /// evaluation map at the defining set (reduced echelon form).
    pub fn codeword_basis(&self) -> Result<Vec<BiPoly>, CodeError> {
        let (r1, r2) = self.periods();
        let cols: Vec<IndexPair> = (0..r1 as i32).flat_map(|i| (0..r2 as i32).map(move |j| ip(i, j))).collect();
        let rows: Vec<Vec<FieldElem>> = self
            .defining_set
            .iter()
            .map(|&m| cols.iter().map(|&p| self.field.monomial_at(&self.alpha, p, m)).collect())
            .collect();
        let mut out = Vec::new();
        for v in linalg::nullspace(&rows, cols.len(), &self.field) {
            if v.iter().any(|&x| !self.field.in_base_field(x)) {
                return Err(CodeError::NotOverBaseField);
            }
            out.push(BiPoly::from_terms(cols.iter().copied().zip(v), &self.field));
        }
        Ok(out)
    }

    /// A random base-field combination of `basis`.
    pub fn random_codeword(&self, basis: &[BiPoly], rng: &mut impl Rng) -> BiPoly {
        let units = self.field.base_field_units();
        let mut word = BiPoly::zero();
        for b in basis {
            let k = rng.gen_range(0..=units.len());
            if k < units.len() {
                word = word.add(&b.scale(units[k], &self.field), &self.field);
            }
        }
        word
    }
}

/// Result of decoding one received word.
#[derive(Debug, Clone)]
pub enum DecodeOutcome {
    Corrected { codeword: BiPoly, error: ErrorEstimate, resolution: Box<Resolution> },
    Undecodable(String),
}

impl DecodeOutcome {
    pub fn error(&self) -> Option<&ErrorEstimate> {
        match self {
            DecodeOutcome::Corrected { error, .. } => Some(error),
            DecodeOutcome::Undecodable(_) => None,
        }
    }
}

impl AbelianCode {
    /// Decodes `received` at offset `tau`.
    pub fn decode(&self, received: &BiPoly, tau: IndexPair, opts: &ResolveOptions) -> DecodeOutcome {
        let table = self.syndrome_table(received, tau);
        match resolve(&table, self.t, &self.alpha, &self.field, opts) {
            Ok(r) => DecodeOutcome::Corrected {
                codeword: received.add(&r.error.to_poly(), &self.field),
                error: r.error.clone(),
                resolution: Box::new(r),
            },
            Err(e) => DecodeOutcome::Undecodable(e.to_string()),
        }
    }
}

/// Adds `w` errors at uniformly random positions with uniformly random
/// nonzero base-field values.
pub fn inject_error(word: &BiPoly, w: usize, field: &FieldTower, rng: &mut impl Rng) -> (BiPoly, ErrorEstimate) {
    let (r1, r2) = field.periods();
    let units = field.base_field_units();
    let mut e = BiPoly::zero();
    for k in sample(rng, (r1 * r2) as usize, w) {
        let p = ip((k as u32 / r2) as i32, (k as u32 % r2) as i32);
        e.set(p, units[rng.gen_range(0..units.len())]);
    }
    (word.add(&e, field), ErrorEstimate::from_poly(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn orbit_examples() {
        assert_eq!(q_orbit(ip(0, 0), 2, (15, 15)).len(), 1);
        assert_eq!(q_orbit(ip(1, 1), 2, (15, 15)), [ip(1, 1), ip(2, 2), ip(4, 4), ip(8, 8)].into_iter().collect());
        assert_eq!(q_orbit(ip(0, 1), 2, (15, 15)).len(), 4);
        assert_eq!(q_orbit(ip(0, 5), 2, (15, 15)).len(), 2);
    }

    #[test]
    fn example_one_offset() {
        let code = fixtures::example1_code();
        let choice = code.choose_tau().unwrap();
        assert_eq!(choice.tau, ip(0, 0));
        assert_eq!(choice.missing, vec![ip(1, 2)]);
    }

    #[test]
    fn full_defining_set_needs_no_inference() {
        let f = fixtures::gf16();
        let all = (0..15).flat_map(|i| (0..15).map(move |j| ip(i, j))).collect();
        let alpha = f.primitive_pair();
        let code = AbelianCode::new(f, all, 3, alpha).unwrap();
        assert!(code.choose_tau().unwrap().missing.is_empty());
        assert!(code.codeword_basis().unwrap().is_empty());
    }

    #[test]
    fn rejects_unclosed_sets() {
        let f = fixtures::gf16();
        let alpha = f.primitive_pair();
        let set = [ip(1, 1)].into_iter().collect();
        assert_eq!(AbelianCode::new(f, set, 3, alpha).unwrap_err(), CodeError::NotOrbitClosed(ip(2, 2)));
    }

    #[test]
    fn too_many_missing() {
        let f = fixtures::gf16();
        let alpha = f.primitive_pair();
        let code = AbelianCode::from_orbit_reps(f, &[ip(0, 0)], 3, alpha).unwrap();
        assert!(matches!(code.choose_tau(), Err(CodeError::TooManyMissing(_))));
    }

    #[test]
    fn injection_is_seeded() {
        let f = fixtures::gf16();
        let word = BiPoly::zero();
        let (a, ea) = inject_error(&word, 3, &f, &mut ChaCha8Rng::seed_from_u64(7));
        let (b, _) = inject_error(&word, 3, &f, &mut ChaCha8Rng::seed_from_u64(7));
        assert_eq!(a, b);
        assert_eq!(ea.weight(), 3);
        let (c, _) = inject_error(&word, 0, &f, &mut ChaCha8Rng::seed_from_u64(7));
        assert_eq!(c, word);
    }
}
