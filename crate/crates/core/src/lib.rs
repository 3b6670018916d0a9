//! Locator decoding of bivariate abelian codes with the
//! Berlekamp-Massey-Sakata algorithm (BMSa), for syndrome tables with a
//! missing value.
//!
//! The pipeline is: syndrome table ([`syndrome`]) → BMSa over the index set
//! `S(t)` ([`bmsa`]) → inference of a blocked cell or a parametrized family
//! ([`inference`], [`family`]) → common roots and error values ([`locator`]).
//! [`codes`] wraps it for whole received words, and [`oracle`] holds
//! brute-force references (feature `slow`, on by default).
//!
//! ```
//! use bmsa::fixtures;
//! use bmsa::inference::{resolve, ResolveOptions};
//!
//! let (field, table) = fixtures::example1_table();
//! let r = resolve(&table, 3, &field.primitive_pair(), &field, &ResolveOptions::default()).unwrap();
//! assert_eq!(r.error.to_poly().render(bmsa::lattice::MonomialOrder::Lex), "X1^14 X2^4 + X1^2 X2^8 + X1 X2^9");
//! ```

pub mod bmsa;
pub mod cli;
pub mod codes;
pub mod demo;
pub mod family;
pub mod fixtures;
pub mod gf;
pub mod inference;
pub mod io;
pub mod lattice;
mod linalg;
pub mod locator;
#[cfg(feature = "slow")]
pub mod oracle;
pub mod poly;
pub mod syndrome;
