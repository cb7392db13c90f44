//! Exact linear algebra over Q (dense Gaussian elimination).

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::rat::Rational;

/// Row-reduce `m` (in place) to row echelon form; returns the pivot columns.
fn echelon(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational::from_integer(1.into()) / m[r][c].clone();
        for j in c..cols {
            let v = m[r][j].clone() * &inv;
            m[r][j] = v;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let delta = &m[r][j] * &f;
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

/// Rank over Q of the given row vectors.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    echelon(&mut m).len()
}

/// Solve `A x = b` where `columns` are the columns of `A`.
///
/// Returns `None` when the system is inconsistent. When the solution space is
/// positive-dimensional, free variables are set to zero (callers in this crate
/// only use it where uniqueness is guaranteed by independence).
pub fn solve_columns(columns: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let ncols = columns.len();
    let nrows = b.len();
    debug_assert!(columns.iter().all(|c| c.len() == nrows));
    // augmented matrix [A | b]
    let mut m: Vec<Vec<Rational>> = (0..nrows)
        .map(|i| {
            let mut row: Vec<Rational> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    let pivots = echelon(&mut m);
    // inconsistent iff a pivot lands in the augmented column
    if pivots.contains(&ncols) {
        return None;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][ncols].clone();
    }
    Some(x)
}
