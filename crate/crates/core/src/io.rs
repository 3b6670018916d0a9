//! JSON file formats: code specs, words and syndrome tables.
//!
//! Field elements are written `0`, `1`, `a` or `a^k`.
//!
//! ```json
//! {"field": {"p": 2, "m": 1, "s": 4, "modulus": [1, 1, 0, 0, 1], "r1": 15, "r2": 15},
//!  "defining_set_orbit_reps": [[0, 0], [0, 1]], "t": 3, "alpha": [1, 1]}
//! {"terms": [[14, 4, "1"], [2, 8, "1"]]}
//! {"tau": [0, 0], "cells": [[0, 0, "1"], [0, 1, "a^6"]]}
//! ```

use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codes::{AbelianCode, CodeError};
use crate::gf::{parse_elem, FieldElem, FieldError, FieldSpec, FieldTower};
use crate::lattice::{ip, IndexPair};
use crate::poly::BiPoly;
use crate::syndrome::{Cell, SyndromeTable};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("{path}:{line}:{column}: {msg}")]
    Parse { path: String, line: usize, column: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Code(#[from] CodeError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeSpecFile {
    pub field: FieldSpec,
    pub defining_set_orbit_reps: Vec<[i32; 2]>,
    pub t: u32,
    /// Exponents `(e1, e2)` with `alpha = (a^e1, a^e2)`; defaults to
    /// `a^((q^s-1)/r_i)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<[u32; 2]>,
}

impl CodeSpecFile {
    pub fn build(&self) -> Result<AbelianCode, IoError> {
        let field = FieldTower::new(&self.field)?;
        let alpha = match self.alpha {
            Some([e1, e2]) => field.root_pair(e1, e2)?,
            None => field.primitive_pair(),
        };
        let reps: Vec<IndexPair> = self.defining_set_orbit_reps.iter().map(|&[i, j]| ip(i, j)).collect();
        Ok(AbelianCode::from_orbit_reps(field, &reps, self.t, alpha)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WordFile {
    pub terms: Vec<(i32, i32, String)>,
}

impl WordFile {
    pub fn from_poly(p: &BiPoly) -> Self {
        WordFile { terms: p.terms().map(|(m, c)| (m.n1, m.n2, c.to_string())).collect() }
    }

    pub fn to_poly(&self, field: &FieldTower) -> Result<BiPoly, IoError> {
        let mut out = BiPoly::zero();
        for (i, j, c) in &self.terms {
            out.add_term(ip(*i, *j), elem(c, field)?, field);
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableFile {
    pub tau: [i32; 2],
    /// Known cells; absent cells are unknown.
    pub cells: Vec<(i32, i32, String)>,
}

impl TableFile {
    pub fn from_table(table: &SyndromeTable) -> Self {
        let tau = table.tau();
        TableFile {
            tau: [tau.n1, tau.n2],
            cells: table.known_cells().map(|(n, v)| (n.n1, n.n2, v.to_string())).collect(),
        }
    }

    pub fn to_table(&self, field: &FieldTower) -> Result<SyndromeTable, IoError> {
        let (r1, r2) = field.periods();
        let mut out = SyndromeTable::unknown((r1, r2), ip(self.tau[0], self.tau[1]));
        for (i, j, c) in &self.cells {
            if !(0..r1 as i32).contains(i) || !(0..r2 as i32).contains(j) {
                return Err(IoError::Invalid(format!("cell ({i},{j}) is outside the {r1}x{r2} grid")));
            }
            out.set(ip(*i, *j), Cell::Known(elem(c, field)?));
        }
        Ok(out)
    }
}

/// Either input accepted by the decoder.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum DecodeInput {
    Word(WordFile),
    Table(TableFile),
}

fn elem(text: &str, field: &FieldTower) -> Result<FieldElem, IoError> {
    parse_elem(text, field.order()).ok_or_else(|| IoError::Invalid(format!("bad field element {text:?}")))
}

pub fn parse_json<T: DeserializeOwned>(text: &str, path: &str) -> Result<T, IoError> {
    serde_json::from_str(text).map_err(|e| IoError::Parse {
        path: path.to_string(),
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, IoError> {
    let name = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| IoError::Read { path: name.clone(), source })?;
    parse_json(&text, &name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn code_spec_round_trip() {
        let text = r#"{"field": {"p": 2, "m": 1, "s": 4, "modulus": [1, 1, 0, 0, 1], "r1": 15, "r2": 15},
            "defining_set_orbit_reps": [[0,0],[0,1],[0,3],[0,5],[1,0],[3,0],[5,0],[1,1],[2,1]], "t": 3}"#;
        let spec: CodeSpecFile = parse_json(text, "spec").unwrap();
        let code = spec.build().unwrap();
        assert_eq!(code.defining_set, fixtures::example1_code().defining_set);
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = parse_json::<CodeSpecFile>("{\n  \"t\": 3,\n  oops\n}", "bad.json").unwrap_err();
        match err {
            IoError::Parse { line, .. } => assert_eq!(line, 3),
            e => panic!("{e}"),
        }
    }

    #[test]
    fn tables_and_words_round_trip() {
        let (f, table) = fixtures::example1_table();
        let file = TableFile::from_table(&table);
        assert_eq!(file.to_table(&f).unwrap(), table);
        let e = fixtures::example1_error(&f);
        assert_eq!(WordFile::from_poly(&e).to_poly(&f).unwrap(), e);
        let input: DecodeInput = parse_json(&serde_json::to_string(&file).unwrap(), "t").unwrap();
        assert!(matches!(input, DecodeInput::Table(_)));
    }
}
