//! Index pairs, the two monomial orders, and staircase combinatorics.
//!
//! Points of `Z x Z` double as exponents of monomials `X1^n1 X2^n2`. The
//! partial order `⪯` is componentwise; the total orders are lexicographic
//! (`X1 > X2`) and graded with `X2 > X1` inside each degree.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct IndexPair {
    pub n1: i32,
    pub n2: i32,
}

/// Shorthand constructor.
pub const fn ip(n1: i32, n2: i32) -> IndexPair {
    IndexPair { n1, n2 }
}

impl IndexPair {
    pub const ZERO: IndexPair = ip(0, 0);

    /// Componentwise `self ⪯ other`.
    pub fn precedes(self, other: IndexPair) -> bool {
        self.n1 <= other.n1 && self.n2 <= other.n2
    }

    pub fn is_nonnegative(self) -> bool {
        self.n1 >= 0 && self.n2 >= 0
    }

    pub fn degree(self) -> i32 {
        self.n1 + self.n2
    }

    /// Componentwise maximum.
    pub fn join(self, other: IndexPair) -> IndexPair {
        ip(self.n1.max(other.n1), self.n2.max(other.n2))
    }

    /// Reduction into `[0, r1) x [0, r2)`.
    pub fn wrap(self, r1: u32, r2: u32) -> IndexPair {
        ip(self.n1.rem_euclid(r1 as i32), self.n2.rem_euclid(r2 as i32))
    }
}

impl Add for IndexPair {
    type Output = IndexPair;
    fn add(self, o: IndexPair) -> IndexPair {
        ip(self.n1 + o.n1, self.n2 + o.n2)
    }
}

impl Sub for IndexPair {
    type Output = IndexPair;
    fn sub(self, o: IndexPair) -> IndexPair {
        ip(self.n1 - o.n1, self.n2 - o.n2)
    }
}

impl fmt::Display for IndexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.n1, self.n2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    /// Lexicographic with `X1 > X2`.
    Lex,
    /// Total degree first, then `X2 > X1`.
    Graded,
}

impl MonomialOrder {
    pub fn cmp(self, m: IndexPair, n: IndexPair) -> Ordering {
        match self {
            MonomialOrder::Lex => (m.n1, m.n2).cmp(&(n.n1, n.n2)),
            MonomialOrder::Graded => m.degree().cmp(&n.degree()).then(m.n2.cmp(&n.n2)),
        }
    }

    pub fn lt(self, m: IndexPair, n: IndexPair) -> bool {
        self.cmp(m, n) == Ordering::Less
    }

    /// The next index in the traversal of the first period.
    pub fn successor(self, l: IndexPair, periods: (u32, u32)) -> IndexPair {
        match self {
            MonomialOrder::Graded if l.n1 > 0 => ip(l.n1 - 1, l.n2 + 1),
            MonomialOrder::Graded => ip(l.n2 + 1, 0),
            MonomialOrder::Lex if l.n2 < periods.1 as i32 - 1 => ip(l.n1, l.n2 + 1),
            MonomialOrder::Lex => ip(l.n1 + 1, 0),
        }
    }

    /// Sorts points ascending under this order.
    pub fn sort(self, points: &mut [IndexPair]) {
        points.sort_by(|&a, &b| self.cmp(a, b));
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::Graded => "graded",
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("capability t = {t} outside 1..={max}")]
    CapabilityOutOfRange { t: u32, max: u32 },
    #[error("malformed defining sequence: {0}")]
    MalformedDefiningSequence(String),
}

/// Largest admissible capability for the given periods.
pub fn max_capability(periods: (u32, u32)) -> u32 {
    periods.0.min(periods.1) / 2
}

/// Membership test for `S(t)`.
pub fn in_s_t(n: IndexPair, t: u32) -> bool {
    let t = t as i32;
    if !n.is_nonnegative() {
        return false;
    }
    if n.n1 == 0 || n.n2 == 0 {
        n.n1.max(n.n2) < 2 * t
    } else {
        n.degree() <= t
    }
}

/// The index set `S(t)` sorted ascending under `order`.
pub fn s_t_set(t: u32, order: MonomialOrder, periods: (u32, u32)) -> Result<Vec<IndexPair>, LatticeError> {
    let max = max_capability(periods);
    if t == 0 || t > max {
        return Err(LatticeError::CapabilityOutOfRange { t, max });
    }
    let ti = t as i32;
    let mut pts: Vec<IndexPair> =
        (0..2 * ti).flat_map(|i| (0..2 * ti).map(move |j| ip(i, j))).filter(|&n| in_s_t(n, t)).collect();
    order.sort(&mut pts);
    Ok(pts)
}

/// `|S(t)|`.
pub fn s_t_len(t: u32) -> usize {
    let t = t as usize;
    4 * t - 1 + t * (t - 1) / 2
}

/// A finite downward closed set of exponents.
pub type Footprint = BTreeSet<IndexPair>;

/// The rectangle `{n : 0 ⪯ n ⪯ s}`; empty when `s` has a negative coordinate.
pub fn delta_rect(s: IndexPair) -> Footprint {
    (0..=s.n1).flat_map(|i| (0..=s.n2).map(move |j| ip(i, j))).collect()
}

pub fn is_downward_closed(points: &Footprint) -> bool {
    points.iter().all(|p| {
        p.is_nonnegative()
            && (p.n1 == 0 || points.contains(&ip(p.n1 - 1, p.n2)))
            && (p.n2 == 0 || points.contains(&ip(p.n1, p.n2 - 1)))
    })
}

/// Checks the staircase shape of a defining point list.
pub fn validate_defining_points(s: &[IndexPair]) -> Result<(), LatticeError> {
    let bad = |msg: &str| Err(LatticeError::MalformedDefiningSequence(msg.to_string()));
    let (Some(first), Some(last)) = (s.first(), s.last()) else {
        return bad("empty");
    };
    if first.n2 != 0 || last.n1 != 0 {
        return bad("must start on the X1 axis and end on the X2 axis");
    }
    if s.iter().any(|p| !p.is_nonnegative()) {
        return bad("negative coordinate");
    }
    for w in s.windows(2) {
        if !(w[0].n1 > w[1].n1 && w[0].n2 < w[1].n2) {
            return bad("first coordinates must decrease and second coordinates increase");
        }
    }
    Ok(())
}

/// The external corners `(s_1^(i) - 1, s_2^(i+1) - 1)`.
pub fn corners(s: &[IndexPair]) -> Vec<IndexPair> {
    s.windows(2).map(|w| ip(w[0].n1 - 1, w[1].n2 - 1)).collect()
}

pub fn footprint_from_defining_points(s: &[IndexPair]) -> Result<Footprint, LatticeError> {
    validate_defining_points(s)?;
    Ok(corners(s).into_iter().flat_map(delta_rect).collect())
}

/// Minimal points of the complement of a downward closed set, ordered with
/// decreasing first coordinate.
pub fn defining_points_of(footprint: &Footprint) -> Vec<IndexPair> {
    let height = |j: i32| footprint.iter().filter(|p| p.n2 == j).count() as i32;
    let mut out = Vec::new();
    let mut prev = i32::MAX;
    let mut j = 0;
    loop {
        let h = height(j);
        if h < prev {
            out.push(ip(h, j));
        }
        if h == 0 {
            break;
        }
        prev = h;
        j += 1;
    }
    out
}

/// Smallest downward closed set containing `points`.
pub fn downset(points: impl IntoIterator<Item = IndexPair>) -> Footprint {
    points.into_iter().filter(|p| p.is_nonnegative()).flat_map(delta_rect).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn successor_examples() {
        let per = (15, 15);
        assert_eq!(MonomialOrder::Graded.successor(ip(0, 0), per), ip(1, 0));
        assert_eq!(MonomialOrder::Graded.successor(ip(2, 1), per), ip(1, 2));
        assert_eq!(MonomialOrder::Lex.successor(ip(0, 14), per), ip(1, 0));
    }

    #[test]
    fn cmp_examples() {
        use std::cmp::Ordering::*;
        assert_eq!(MonomialOrder::Lex.cmp(ip(0, 5), ip(1, 0)), Less);
        assert_eq!(MonomialOrder::Graded.cmp(ip(3, 0), ip(0, 4)), Less);
        assert_eq!(MonomialOrder::Graded.cmp(ip(2, 1), ip(1, 2)), Less);
    }

    #[test]
    fn graded_chain_prefix() {
        let mut l = IndexPair::ZERO;
        let mut chain = vec![l];
        for _ in 0..8 {
            l = MonomialOrder::Graded.successor(l, (15, 15));
            chain.push(l);
        }
        let expect = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2), (3, 0), (2, 1), (1, 2)];
        assert_eq!(chain, expect.iter().map(|&(a, b)| ip(a, b)).collect::<Vec<_>>());
    }

    #[test]
    fn s_t_sizes() {
        let s1 = s_t_set(1, MonomialOrder::Lex, (15, 15)).unwrap();
        assert_eq!(s1, vec![ip(0, 0), ip(0, 1), ip(1, 0)]);
        let s3 = s_t_set(3, MonomialOrder::Lex, (15, 15)).unwrap();
        assert_eq!(s3.len(), 14);
        assert_eq!(s_t_len(3), 14);
        for p in [ip(0, 5), ip(5, 0), ip(1, 1), ip(1, 2), ip(2, 1)] {
            assert!(s3.contains(&p));
        }
        assert_eq!(s_t_set(4, MonomialOrder::Graded, (15, 15)).unwrap().len(), 21);
        assert_eq!(s_t_set(8, MonomialOrder::Lex, (15, 15)), Err(LatticeError::CapabilityOutOfRange { t: 8, max: 7 }));
    }

    #[test]
    fn rectangles() {
        assert_eq!(delta_rect(ip(0, 0)).len(), 1);
        assert_eq!(delta_rect(ip(2, 0)), [ip(0, 0), ip(1, 0), ip(2, 0)].into_iter().collect());
        assert!(delta_rect(ip(-1, 3)).is_empty());
    }

    #[test]
    fn footprints_and_corners() {
        let fp = footprint_from_defining_points(&[ip(1, 0), ip(0, 1)]).unwrap();
        assert_eq!(fp, [ip(0, 0)].into_iter().collect());
        let fp = footprint_from_defining_points(&[ip(1, 0), ip(0, 3)]).unwrap();
        assert_eq!(fp, [ip(0, 0), ip(0, 1), ip(0, 2)].into_iter().collect());
        assert_eq!(corners(&[ip(1, 0), ip(0, 3)]), vec![ip(0, 2)]);
        let s = [ip(2, 0), ip(1, 1), ip(0, 2)];
        assert_eq!(corners(&s), vec![ip(1, 0), ip(0, 1)]);
        assert_eq!(footprint_from_defining_points(&s).unwrap(), [ip(0, 0), ip(1, 0), ip(0, 1)].into_iter().collect());
        assert!(footprint_from_defining_points(&[ip(0, 1), ip(1, 0)]).is_err());
        assert!(footprint_from_defining_points(&[ip(2, 0), ip(2, 1), ip(0, 2)]).is_err());
    }

    #[test]
    fn empty_footprint_has_single_defining_point() {
        assert_eq!(defining_points_of(&Footprint::new()), vec![ip(0, 0)]);
        assert!(footprint_from_defining_points(&[ip(0, 0)]).unwrap().is_empty());
    }
}
