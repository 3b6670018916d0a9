//! Dense Gaussian elimination over `L`.

use crate::gf::{FieldElem, FieldTower};

/// Row-reduces `m` in place; returns the pivot column of each nonzero row.
pub fn rref(m: &mut [Vec<FieldElem>], field: &FieldTower) -> Vec<usize> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = field.inv(m[row][col]).expect("pivot is nonzero");
        for x in m[row].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let c = other[col];
            for (x, &y) in other.iter_mut().zip(&pivot_row) {
                *x = field.sub(*x, field.mul(c, y));
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Solve {
    Inconsistent,
    Underdetermined,
}

/// Unique solution of `a x = b`.
pub fn solve(a: &[Vec<FieldElem>], b: &[FieldElem], field: &FieldTower) -> Result<Vec<FieldElem>, Solve> {
    let n = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<FieldElem>> = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| {
            let mut r = row.clone();
            r.push(rhs);
            r
        })
        .collect();
    let pivots = rref(&mut m, field);
    if pivots.contains(&n) {
        return Err(Solve::Inconsistent);
    }
    if pivots.len() < n {
        return Err(Solve::Underdetermined);
    }
    Ok((0..n).map(|i| m[i][n]).collect())
}

/// Whether `a x = b` has any solution.
#[cfg(feature = "slow")]
pub fn consistent(a: &[Vec<FieldElem>], b: &[FieldElem], field: &FieldTower) -> bool {
    !matches!(solve(a, b, field), Err(Solve::Inconsistent))
}

/// A basis of the right nullspace, one vector per free column.
pub fn nullspace(a: &[Vec<FieldElem>], cols: usize, field: &FieldTower) -> Vec<Vec<FieldElem>> {
    let mut m = a.to_vec();
    let pivots = rref(&mut m, field);
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![FieldElem::Zero; cols];
        v[free] = field.one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = field.neg(m[r][free]);
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::gf16;

    #[test]
    fn solves_small_system() {
        let f = gf16();
        let a = |k| f.pow_a(k);
        // x + a y = a^4, a^2 x + y = a^9
        let m = vec![vec![f.one(), a(1)], vec![a(2), f.one()]];
        let (x, y) = (a(3), a(7));
        let rhs = vec![f.add(x, f.mul(a(1), y)), f.add(f.mul(a(2), x), y)];
        assert_eq!(solve(&m, &rhs, &f), Ok(vec![x, y]));
    }

    #[test]
    fn nullspace_vectors_are_annihilated() {
        let f = gf16();
        let a = |k| f.pow_a(k);
        let m = vec![vec![f.one(), a(1), a(2), FieldElem::Zero], vec![a(5), a(5), FieldElem::Zero, a(3)]];
        let ns = nullspace(&m, 4, &f);
        assert_eq!(ns.len(), 2);
        for v in ns {
            for row in &m {
                let s = row.iter().zip(&v).fold(FieldElem::Zero, |acc, (&x, &y)| f.add(acc, f.mul(x, y)));
                assert!(s.is_zero());
            }
        }
    }
}
