use crate::error::{Error, Result};

use super::MultiPoly;

/// Determinant by cofactor expansion along the first row. Intended for the
/// small (≤ 4×4) matrices of linear forms that occur here.
pub fn poly_det(m: &[Vec<MultiPoly>]) -> Result<MultiPoly> {
    let n = m.len();
    if n == 0 {
        return Err(Error::Shape("determinant of an empty matrix".into()));
    }
    if let Some(row) = m.iter().find(|r| r.len() != n) {
        return Err(Error::Shape(format!(
            "determinant needs a square matrix, found a row of length {} in a {n}-row matrix",
            row.len()
        )));
    }
    let nvars = m[0][0].nvars();
    if let Some(bad) = m.iter().flatten().find(|p| p.nvars() != nvars) {
        return Err(Error::ArityMismatch {
            expected: nvars,
            found: bad.nvars(),
        });
    }
    let cols: Vec<usize> = (0..n).collect();
    Ok(cofactor(m, 0, &cols, nvars))
}

fn cofactor(m: &[Vec<MultiPoly>], row: usize, cols: &[usize], nvars: usize) -> MultiPoly {
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let mut acc = MultiPoly::zero(nvars);
    for (k, &c) in cols.iter().enumerate() {
        let entry = &m[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&j| j != c).collect();
        let term = entry * &cofactor(m, row + 1, &rest, nvars);
        acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Determinant of the submatrix on the given rows and columns.
pub fn minor(m: &[Vec<MultiPoly>], rows: &[usize], cols: &[usize]) -> Result<MultiPoly> {
    let sub: Vec<Vec<MultiPoly>> = rows
        .iter()
        .map(|&i| cols.iter().map(|&j| m[i][j].clone()).collect())
        .collect();
    poly_det(&sub)
}

/// For a 3×4 matrix, `f_i` is the determinant after deleting column `i`.
pub fn maximal_minors(m: &[Vec<MultiPoly>]) -> Result<[MultiPoly; 4]> {
    if m.len() != 3 || m.iter().any(|r| r.len() != 4) {
        return Err(Error::Shape(format!(
            "maximal minors need a 3x4 matrix, found {}x{}",
            m.len(),
            m.first().map_or(0, Vec::len)
        )));
    }
    let rows = [0, 1, 2];
    let mut out = Vec::with_capacity(4);
    for i in 0..4 {
        let cols: Vec<usize> = (0..4).filter(|&j| j != i).collect();
        out.push(minor(m, &rows, &cols)?);
    }
    Ok(out.try_into().expect("four minors"))
}

/// All `k×k` minors, rows and columns taken in lexicographic order.
pub fn all_minors(m: &[Vec<MultiPoly>], k: usize) -> Result<Vec<MultiPoly>> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for rows in subsets(nrows, k) {
        for cols in subsets(ncols, k) {
            out.push(minor(m, &rows, &cols)?);
        }
    }
    Ok(out)
}

/// `k`-element subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}
