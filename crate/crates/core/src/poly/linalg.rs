//! Row reduction over an exact field.

use super::Field;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(rows: &mut Vec<Vec<F>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv();
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = x.clone() - &(f.clone() * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Rank of a list of vectors of length `ncols`.
pub fn rank<F: Field>(mut rows: Vec<Vec<F>>, ncols: usize) -> usize {
    rref(&mut rows, ncols).len()
}

/// Outcome of `A x = b`: a solution with free variables set to zero, if any, and the
/// nullity of `A`.
#[derive(Clone, Debug, PartialEq)]
pub struct Solution<F> {
    pub x: Option<Vec<F>>,
    pub nullity: usize,
}

/// Solves `A x = b` given as columns of `A`.
pub fn solve<F: Field>(cols: &[Vec<F>], b: &[F]) -> Solution<F> {
    let n = cols.len();
    let m = b.len();
    let mut rows: Vec<Vec<F>> = (0..m)
        .map(|r| {
            let mut row: Vec<F> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(b[r].clone());
            row
        })
        .collect();
    let pivots = rref(&mut rows, n + 1);
    let nullity = n - pivots.iter().filter(|&&c| c < n).count();
    if pivots.last() == Some(&n) {
        return Solution { x: None, nullity };
    }
    let mut x = vec![F::zero(); n];
    for (row, &c) in rows.iter().zip(&pivots) {
        x[c] = row[n].clone();
    }
    Solution { x: Some(x), nullity }
}
