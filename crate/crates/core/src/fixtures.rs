//! Syndrome tables and codes used by the demos, examples and tests.
//!
//! All fixtures live in `GF(16)` with modulus `x^4 + x + 1` and periods
//! `15 x 15`.

use crate::codes::AbelianCode;
use crate::gf::{parse_elem, FieldSpec, FieldTower};
use crate::lattice::{ip, IndexPair};
use crate::poly::BiPoly;
use crate::syndrome::{Cell, SyndromeTable};

pub fn gf16() -> FieldTower {
    FieldTower::new(&FieldSpec::binary(4, 15, 15)).expect("GF(16) is valid")
}

fn table_from_rows(field: &FieldTower, tau: IndexPair, rows: &[&[&str]]) -> SyndromeTable {
    let mut t = SyndromeTable::unknown(field.periods(), tau);
    for (i, row) in rows.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if *v == "?" {
                continue;
            }
            let e = parse_elem(v, field.order()).expect("fixture values parse");
            t.set(ip(i as i32, j as i32), Cell::Known(e));
        }
    }
    t
}

/// The first worked table: `t = 3`, `tau = (0,0)`, cell `(1,2)` unknown.
pub fn example1_table() -> (FieldTower, SyndromeTable) {
    let f = gf16();
    let t = table_from_rows(
        &f,
        ip(0, 0),
        &[
            &["1", "a^6", "a^12", "a^9", "a^9", "0"],
            &["a^12", "a^3", "?"],
            &["a^9", "a^8"],
            &["a^7"],
            &["a^3"],
            &["a^5"],
        ],
    );
    (f, t)
}

/// The error word behind the first worked table (with `alpha = (a, a)`).
pub fn example1_error(field: &FieldTower) -> BiPoly {
    BiPoly::parse("X1^14 X2^4 + X1^2 X2^8 + X1 X2^9", field).expect("valid")
}

pub const EXAMPLE1_T: u32 = 3;

/// Orbit representatives of the first worked code's defining set.
pub const EXAMPLE1_ORBIT_REPS: [(i32, i32); 9] =
    [(0, 0), (0, 1), (0, 3), (0, 5), (1, 0), (3, 0), (5, 0), (1, 1), (2, 1)];

/// The binary `15 x 15` code with the defining set above and `t = 3`.
pub fn example1_code() -> AbelianCode {
    let field = gf16();
    let reps: Vec<IndexPair> = EXAMPLE1_ORBIT_REPS.iter().map(|&(a, b)| ip(a, b)).collect();
    let alpha = field.primitive_pair();
    AbelianCode::from_orbit_reps(field, &reps, EXAMPLE1_T, alpha).expect("valid code")
}

/// Binary `S(4)` table at `tau = (1,0)`; the cell `(3,1)` is the one treated as missing.
pub fn caso2b_table() -> (FieldTower, SyndromeTable) {
    let f = gf16();
    let t = table_from_rows(
        &f,
        ip(1, 0),
        &[
            &["1", "1", "0", "1", "1", "0", "1", "1"],
            &["1", "0", "1", "1"],
            &["1", "0", "1"],
            &["1", "1"],
            &["0"],
            &["1"],
            &["1"],
            &["1"],
        ],
    );
    (f, t)
}

pub const CASO2B_T: u32 = 4;
pub const CASO2B_MISSING: IndexPair = ip(3, 1);

/// Fully known `S(3)` table exhibiting the three-point exceptions.
pub fn casos1c2c_table() -> (FieldTower, SyndromeTable) {
    let f = gf16();
    let t = table_from_rows(
        &f,
        ip(0, 0),
        &[
            &["1", "a^2", "a^4", "a^6", "a^8", "a^10"],
            &["a^12", "a^2", "1"],
            &["a^9", "a^3"],
            &["a^14"],
            &["a^3"],
            &["0"],
        ],
    );
    (f, t)
}

pub const CASOS1C2C_T: u32 = 3;
