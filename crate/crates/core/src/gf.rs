//! Finite field arithmetic for the decoder.
//!
//! A [`FieldTower`] realizes the extension `L = GF(q^s)` of the base field
//! `F = GF(q)`, `q = p^m`, from a monic primitive polynomial of degree `m*s`
//! over `GF(p)`. Elements are kept in logarithmic form relative to the
//! primitive root `a` (the class of `x`), so multiplication is exponent
//! addition and addition goes through the power-basis digits.
//!
//! ```
//! use bmsa::gf::{FieldSpec, FieldTower};
//!
//! let gf16 = FieldTower::new(&FieldSpec::binary(4, 15, 15)).unwrap();
//! let a = |k| gf16.pow_a(k);
//! assert_eq!(gf16.add(a(9), a(3)), a(1));
//! assert_eq!(gf16.mul(a(7), a(8)), gf16.one());
//! ```

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::IndexPair;

/// Largest supported extension field size.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("p = {0} is not prime")]
    NotPrime(u32),
    #[error("gcd(q = {q}, r1*r2 = {r}) != 1")]
    GcdViolation { q: u64, r: u64 },
    #[error("period {r} does not divide q^s - 1 = {order}")]
    PeriodNotDividingGroupOrder { r: u32, order: u64 },
    #[error("modulus is not primitive: its root has order {order}, expected {expected}")]
    NonPrimitiveModulus { order: u64, expected: u64 },
    #[error("malformed modulus: {0}")]
    MalformedModulus(String),
    #[error("field of size {0} exceeds the table limit")]
    TooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("alpha override a^{e} does not have order {r}")]
    BadAlpha { e: u64, r: u32 },
}

/// Parameters of the field tower and the array periods.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub m: u32,
    pub s: u32,
    /// Coefficients over `GF(p)`, lowest degree first. When absent the
    /// smallest primitive polynomial is searched for.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
    pub r1: u32,
    pub r2: u32,
}

impl FieldSpec {
    /// `GF(2^s)` over `GF(2)` with the default modulus.
    pub fn binary(s: u32, r1: u32, r2: u32) -> Self {
        let modulus = if s == 4 { Some(vec![1, 1, 0, 0, 1]) } else { None };
        FieldSpec { p: 2, m: 1, s, modulus, r1, r2 }
    }
}

/// An element of `L`: zero or a power of the primitive root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum FieldElem {
    #[default]
    Zero,
    Log(u32),
}

impl FieldElem {
    pub fn is_zero(self) -> bool {
        self == FieldElem::Zero
    }

    pub fn log(self) -> Option<u32> {
        match self {
            FieldElem::Zero => None,
            FieldElem::Log(k) => Some(k),
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Zero => write!(f, "0"),
            FieldElem::Log(0) => write!(f, "1"),
            FieldElem::Log(1) => write!(f, "a"),
            FieldElem::Log(k) => write!(f, "a^{k}"),
        }
    }
}

impl Serialize for FieldElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parses `0`, `1`, `a` or `a^k`; exponents are reduced modulo `order`.
pub fn parse_elem(text: &str, order: u32) -> Option<FieldElem> {
    let t = text.trim();
    match t {
        "0" => Some(FieldElem::Zero),
        "1" => Some(FieldElem::Log(0)),
        "a" => Some(FieldElem::Log(1 % order)),
        _ => {
            let k: u64 = t.strip_prefix("a^")?.trim().parse().ok()?;
            Some(FieldElem::Log((k % order as u64) as u32))
        }
    }
}

/// The exponents `(e1, e2)` of `alpha = (a^e1, a^e2)` and the periods.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootPair {
    pub e1: u32,
    pub e2: u32,
    pub r1: u32,
    pub r2: u32,
}

/// Immutable arithmetic context for `L = GF(q^s)`.
#[derive(Debug, Clone)]
pub struct FieldTower {
    spec: FieldSpec,
    modulus: Vec<u32>,
    q: u64,
    size: u64,
    order: u32,
    degree: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Builds the antilog table of `x` modulo `modulus`, stopping when `x^k = 1`.
/// Elements are encoded as base-`p` integers of their power-basis digits.
fn powers_of_x(p: u32, modulus: &[u32], limit: u64) -> Vec<u32> {
    let n = modulus.len() - 1;
    let mut digits = vec![0u32; n];
    digits[0] = 1;
    let encode = |d: &[u32]| d.iter().rev().fold(0u64, |acc, &c| acc * p as u64 + c as u64) as u32;
    let mut out = Vec::new();
    loop {
        out.push(encode(&digits));
        if out.len() as u64 > limit {
            break;
        }
        // multiply by x and reduce by the monic modulus
        let top = digits[n - 1];
        for i in (1..n).rev() {
            digits[i] = digits[i - 1];
        }
        digits[0] = 0;
        if top != 0 {
            for (i, d) in digits.iter_mut().enumerate() {
                *d = (*d + p - (top * modulus[i]) % p) % p;
            }
        }
        if digits[0] == 1 && digits[1..].iter().all(|&d| d == 0) {
            break;
        }
        if digits.iter().all(|&d| d == 0) {
            break;
        }
    }
    out
}

/// Returns the smallest monic primitive polynomial of degree `n` over `GF(p)`.
pub fn find_primitive(p: u32, n: u32) -> Option<Vec<u32>> {
    let size = (p as u64).checked_pow(n)?;
    for code in 0..size {
        let mut coeffs = Vec::with_capacity(n as usize + 1);
        let mut c = code;
        for _ in 0..n {
            coeffs.push((c % p as u64) as u32);
            c /= p as u64;
        }
        if coeffs[0] == 0 {
            continue;
        }
        coeffs.push(1);
        if powers_of_x(p, &coeffs, size).len() as u64 == size - 1 {
            return Some(coeffs);
        }
    }
    None
}

impl FieldTower {
    pub fn new(spec: &FieldSpec) -> Result<Self, FieldError> {
        if !is_prime(spec.p) {
            return Err(FieldError::NotPrime(spec.p));
        }
        if spec.m == 0 || spec.s == 0 || spec.r1 == 0 || spec.r2 == 0 {
            return Err(FieldError::MalformedModulus("m, s, r1 and r2 must be positive".into()));
        }
        let degree = spec.m * spec.s;
        let size = (spec.p as u64)
            .checked_pow(degree)
            .filter(|&n| n <= MAX_FIELD_SIZE)
            .ok_or(FieldError::TooLarge(u64::MAX))?;
        let q = (spec.p as u64).pow(spec.m);
        let rr = spec.r1 as u64 * spec.r2 as u64;
        if gcd(q, rr) != 1 {
            return Err(FieldError::GcdViolation { q, r: rr });
        }
        let order = size - 1;
        for r in [spec.r1, spec.r2] {
            if order % r as u64 != 0 {
                return Err(FieldError::PeriodNotDividingGroupOrder { r, order });
            }
        }
        let modulus = match &spec.modulus {
            Some(m) => m.clone(),
            None => find_primitive(spec.p, degree)
                .ok_or_else(|| FieldError::MalformedModulus("no primitive polynomial found".into()))?,
        };
        if modulus.len() != degree as usize + 1 {
            return Err(FieldError::MalformedModulus(format!(
                "expected {} coefficients, got {}",
                degree + 1,
                modulus.len()
            )));
        }
        if modulus.iter().any(|&c| c >= spec.p) || modulus[degree as usize] != 1 {
            return Err(FieldError::MalformedModulus("coefficients must be monic and reduced mod p".into()));
        }
        let exp = powers_of_x(spec.p, &modulus, size);
        if exp.len() as u64 != order {
            return Err(FieldError::NonPrimitiveModulus { order: exp.len() as u64, expected: order });
        }
        let mut log = vec![u32::MAX; size as usize];
        for (k, &v) in exp.iter().enumerate() {
            log[v as usize] = k as u32;
        }
        Ok(FieldTower { spec: spec.clone(), modulus, q, size, order: order as u32, degree, exp, log })
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn characteristic(&self) -> u32 {
        self.spec.p
    }

    /// Size of the base field `F`.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// Size of `L`.
    pub fn size(&self) -> u64 {
        self.size
    }

    /// Order of the multiplicative group of `L`.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn periods(&self) -> (u32, u32) {
        (self.spec.r1, self.spec.r2)
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem::Zero
    }

    pub fn one(&self) -> FieldElem {
        FieldElem::Log(0)
    }

    /// `a^k` for any integer `k`.
    pub fn pow_a(&self, k: i64) -> FieldElem {
        FieldElem::Log(k.rem_euclid(self.order as i64) as u32)
    }

    /// Every element of `L`: zero first, then `a^0, a^1, ...`.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        std::iter::once(FieldElem::Zero).chain((0..self.order).map(FieldElem::Log))
    }

    fn to_code(&self, x: FieldElem) -> u32 {
        match x {
            FieldElem::Zero => 0,
            FieldElem::Log(k) => self.exp[k as usize],
        }
    }

    fn decode(&self, c: u32) -> FieldElem {
        if c == 0 {
            FieldElem::Zero
        } else {
            FieldElem::Log(self.log[c as usize])
        }
    }

    pub fn add(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        match (x, y) {
            (FieldElem::Zero, _) => y,
            (_, FieldElem::Zero) => x,
            _ => {
                let (cx, cy) = (self.to_code(x), self.to_code(y));
                let p = self.spec.p;
                if p == 2 {
                    return self.decode(cx ^ cy);
                }
                let (mut a, mut b, mut out, mut place) = (cx, cy, 0u32, 1u32);
                for _ in 0..self.degree {
                    out += ((a % p + b % p) % p) * place;
                    a /= p;
                    b /= p;
                    place *= p;
                }
                self.decode(out)
            }
        }
    }

    pub fn neg(&self, x: FieldElem) -> FieldElem {
        match x {
            FieldElem::Zero => x,
            FieldElem::Log(k) if self.spec.p == 2 => FieldElem::Log(k),
            FieldElem::Log(k) => FieldElem::Log((k + self.order / 2) % self.order),
        }
    }

    pub fn sub(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: FieldElem, y: FieldElem) -> FieldElem {
        match (x, y) {
            (FieldElem::Log(i), FieldElem::Log(j)) => {
                FieldElem::Log(((i as u64 + j as u64) % self.order as u64) as u32)
            }
            _ => FieldElem::Zero,
        }
    }

    pub fn inv(&self, x: FieldElem) -> Result<FieldElem, FieldError> {
        match x {
            FieldElem::Zero => Err(FieldError::DivisionByZero),
            FieldElem::Log(k) => Ok(FieldElem::Log((self.order - k) % self.order)),
        }
    }

    pub fn div(&self, x: FieldElem, y: FieldElem) -> Result<FieldElem, FieldError> {
        Ok(self.mul(x, self.inv(y)?))
    }

    /// `x^e` for any integer exponent; `0^0 = 1`, negative powers of zero fail.
    pub fn pow(&self, x: FieldElem, e: i64) -> Result<FieldElem, FieldError> {
        match x {
            FieldElem::Zero if e == 0 => Ok(self.one()),
            FieldElem::Zero if e < 0 => Err(FieldError::DivisionByZero),
            FieldElem::Zero => Ok(FieldElem::Zero),
            FieldElem::Log(k) => Ok(self.pow_a(k as i64 * e.rem_euclid(self.order as i64))),
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn elem_order(&self, x: FieldElem) -> Option<u64> {
        let k = x.log()? as u64;
        Some(self.order as u64 / gcd(k, self.order as u64))
    }

    /// The Frobenius map `x -> x^q` fixing `F`.
    pub fn frobenius(&self, x: FieldElem) -> FieldElem {
        match x {
            FieldElem::Zero => x,
            FieldElem::Log(k) => FieldElem::Log(((k as u64 * self.q) % self.order as u64) as u32),
        }
    }

    /// Whether `x` lies in the base field `F`.
    pub fn in_base_field(&self, x: FieldElem) -> bool {
        self.frobenius(x) == x
    }

    /// The nonzero elements of `F`, in increasing exponent order.
    pub fn base_field_units(&self) -> Vec<FieldElem> {
        let step = self.order as u64 / (self.q - 1);
        (0..self.q - 1).map(|i| FieldElem::Log((i * step) as u32)).collect()
    }

    /// The default root pair `a^((q^s-1)/r_i)`.
    pub fn primitive_pair(&self) -> RootPair {
        let (r1, r2) = self.periods();
        RootPair { e1: self.order / r1, e2: self.order / r2, r1, r2 }
    }

    /// A root pair from explicit exponents, checked to have orders `(r1, r2)`.
    pub fn root_pair(&self, e1: u32, e2: u32) -> Result<RootPair, FieldError> {
        let (r1, r2) = self.periods();
        for (e, r) in [(e1, r1), (e2, r2)] {
            if self.elem_order(FieldElem::Log(e % self.order)) != Some(r as u64) {
                return Err(FieldError::BadAlpha { e: e as u64, r });
            }
        }
        Ok(RootPair { e1: e1 % self.order, e2: e2 % self.order, r1, r2 })
    }

    /// `alpha^n = (alpha1^n1, alpha2^n2)` raised to the monomial `m`, i.e.
    /// the value of `X^m` at the point `alpha^n`.
    pub fn monomial_at(&self, alpha: &RootPair, m: IndexPair, n: IndexPair) -> FieldElem {
        let o = self.order as i64;
        let k = (alpha.e1 as i64 * m.n1 as i64 % o) * (n.n1 as i64 % o)
            + (alpha.e2 as i64 * m.n2 as i64 % o) * (n.n2 as i64 % o);
        self.pow_a(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf16() -> FieldTower {
        FieldTower::new(&FieldSpec::binary(4, 15, 15)).unwrap()
    }

    /// Power-basis oracle: a^k as a bit vector, computed by shifting with a^4 = a + 1.
    fn bits(k: u32) -> u32 {
        let mut v = 1u32;
        for _ in 0..k {
            v <<= 1;
            if v & 0x10 != 0 {
                v ^= 0x13;
            }
        }
        v
    }

    fn relog(v: u32) -> FieldElem {
        if v == 0 {
            return FieldElem::Zero;
        }
        FieldElem::Log((0..15).find(|&k| bits(k) == v).unwrap())
    }

    #[test]
    fn derived_sums_match_bit_oracle() {
        let f = gf16();
        assert_eq!(relog(bits(9) ^ bits(3)), FieldElem::Log(1));
        assert_eq!(relog(bits(6) ^ bits(4)), FieldElem::Log(12));
        assert_eq!(f.add(f.pow_a(9), f.pow_a(3)), f.pow_a(1));
        assert_eq!(f.add(f.pow_a(6), f.pow_a(4)), f.pow_a(12));
        assert_eq!(f.mul(f.pow_a(7), f.pow_a(8)), f.one());
    }

    #[test]
    fn addition_table_agrees_with_oracle() {
        let f = gf16();
        for i in 0..15 {
            for j in 0..15 {
                assert_eq!(f.add(f.pow_a(i), f.pow_a(j)), relog(bits(i as u32) ^ bits(j as u32)));
            }
        }
    }

    #[test]
    fn rejects_bad_specs() {
        let mut spec = FieldSpec::binary(4, 6, 15);
        assert!(matches!(FieldTower::new(&spec), Err(FieldError::GcdViolation { .. })));
        spec = FieldSpec::binary(4, 7, 15);
        assert!(matches!(FieldTower::new(&spec), Err(FieldError::PeriodNotDividingGroupOrder { r: 7, .. })));
        spec = FieldSpec::binary(4, 15, 15);
        spec.modulus = Some(vec![1, 1, 1, 1, 1]);
        assert_eq!(FieldTower::new(&spec).unwrap_err(), FieldError::NonPrimitiveModulus { order: 5, expected: 15 });
        assert_eq!(gf16().inv(FieldElem::Zero), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn default_modulus_search_finds_x4_x_1() {
        assert_eq!(find_primitive(2, 4), Some(vec![1, 1, 0, 0, 1]));
    }

    #[test]
    fn primitive_pairs() {
        let f = gf16();
        let ap = f.primitive_pair();
        assert_eq!((ap.e1, ap.e2), (1, 1));
        let g = FieldTower::new(&FieldSpec::binary(4, 15, 5)).unwrap();
        let ap = g.primitive_pair();
        assert_eq!((ap.e1, ap.e2), (1, 3));
        let ord = (1..=15).find(|&k| g.pow(g.pow_a(3), k).unwrap() == g.one()).unwrap();
        assert_eq!(ord, 5);
        assert!(g.root_pair(1, 6).is_ok());
        assert!(g.root_pair(1, 5).is_err());
    }

    #[test]
    fn frobenius_fixes_exactly_base_field() {
        let f = gf16();
        let fixed: Vec<_> = f.elements().filter(|&x| f.in_base_field(x)).collect();
        assert_eq!(fixed, vec![FieldElem::Zero, f.one()]);
        // GF(16) over GF(4): m = 2, s = 2
        let g = FieldTower::new(&FieldSpec { p: 2, m: 2, s: 2, modulus: None, r1: 5, r2: 15 }).unwrap();
        assert_eq!(g.elements().filter(|&x| g.in_base_field(x)).count(), 4);
        assert_eq!(g.base_field_units(), vec![g.pow_a(0), g.pow_a(5), g.pow_a(10)]);
    }

    #[test]
    fn odd_characteristic() {
        let f = FieldTower::new(&FieldSpec { p: 3, m: 1, s: 2, modulus: None, r1: 4, r2: 8 }).unwrap();
        assert_eq!(f.size(), 9);
        for x in f.elements() {
            assert_eq!(f.add(x, f.neg(x)), FieldElem::Zero);
            let three = f.add(f.add(x, x), x);
            assert_eq!(three, FieldElem::Zero);
        }
    }

    #[test]
    fn parse_and_display() {
        for k in [0u32, 1, 7, 14] {
            let e = FieldElem::Log(k);
            assert_eq!(parse_elem(&e.to_string(), 15), Some(e));
        }
        assert_eq!(parse_elem("0", 15), Some(FieldElem::Zero));
        assert_eq!(parse_elem("a^17", 15), Some(FieldElem::Log(2)));
        assert_eq!(parse_elem("b", 15), None);
    }
}
