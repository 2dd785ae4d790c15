//! Gaussian elimination over Q.

use num_traits::{One, Zero};

use crate::scalar::Rational;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<Rational>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for x in rows[r].iter_mut().skip(col) {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let factor = rows[i][col].clone();
            let pivot_row = rows[r].clone();
            for (x, p) in rows[i].iter_mut().zip(&pivot_row).take(ncols).skip(col) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vec<Rational>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Basis of { x : rows · x = 0 }.
///
/// Free columns are parameterized in increasing index order; each basis
/// vector is scaled so that its first nonzero coordinate is 1.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut m: Vec<Vec<Rational>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let pivots = rref(&mut m, ncols);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (row, &pc) in m.iter().zip(&pivots) {
            v[pc] = -row[free].clone();
        }
        let lead = v.iter().find(|x| !x.is_zero()).expect("free coordinate is 1").clone();
        if !lead.is_one() {
            for x in v.iter_mut() {
                *x /= &lead;
            }
        }
        basis.push(v);
    }
    basis
}

/// Inverse of a row-major `dim`×`dim` matrix, or `None` when singular.
pub fn inverse(dim: usize, entries: &[Rational]) -> Option<Vec<Rational>> {
    let mut aug: Vec<Vec<Rational>> = (0..dim)
        .map(|i| {
            let mut row = entries[i * dim..(i + 1) * dim].to_vec();
            row.extend((0..dim).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    let pivots = rref(&mut aug, 2 * dim);
    if pivots.len() < dim || pivots[dim - 1] != dim - 1 {
        return None;
    }
    Some(aug.into_iter().flat_map(|row| row.into_iter().skip(dim)).collect())
}

/// Whether `v` lies in the span of `basis`.
pub fn span_contains(basis: &[Vec<Rational>], v: &[Rational]) -> bool {
    let n = v.len();
    let r = rank(basis, n);
    let mut with = basis.to_vec();
    with.push(v.to_vec());
    rank(&with, n) == r
}
