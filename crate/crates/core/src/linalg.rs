//! Exact Gaussian elimination over a [`Field`].

use crate::scalar::{Field, Scalar};

/// Row-reduces `rows` in place and returns the rank.
pub fn row_reduce(rows: &mut [Vec<Scalar>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    row_reduce_left(rows, ncols)
}

pub fn rank(vectors: &[Vec<Scalar>]) -> usize {
    let mut rows = vectors.to_vec();
    row_reduce(&mut rows)
}

/// Whether `v` lies in the span of `basis` (assumed linearly independent).
pub fn in_span(basis: &[Vec<Scalar>], v: &[Scalar]) -> bool {
    let mut rows = basis.to_vec();
    rows.push(v.to_vec());
    rank(&rows) == basis.len()
}

/// Inverts a square matrix given as rows; `None` when singular.
pub fn invert(field: Field, rows: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let n = rows.len();
    let mut aug: Vec<Vec<Scalar>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            row
        })
        .collect();
    let r = row_reduce_left(&mut aug, n);
    if r < n {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Solves `rows · x = rhs`, returning one solution (free variables set to zero).
pub fn solve(field: Field, rows: &[Vec<Scalar>], rhs: &[Scalar]) -> Option<Vec<Scalar>> {
    let n = rows.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Scalar>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let r = row_reduce_left(&mut aug, n);
    if aug[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut x = vec![field.zero(); n];
    for row in &aug[..r] {
        let pivot = row.iter().position(|s| !s.is_zero()).expect("pivot row");
        x[pivot] = row[n].clone();
    }
    Some(x)
}

/// Row-reduces using only the first `ncols` columns as pivot candidates.
fn row_reduce_left(rows: &mut [Vec<Scalar>], ncols: usize) -> usize {
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inverse().expect("nonzero pivot");
        let pivot_row: Vec<Scalar> = rows[rank].iter().map(|x| x * &inv).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x = &*x - &(&factor * p);
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}
