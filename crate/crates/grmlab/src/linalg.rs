//! Small shared linear-algebra helpers: exact rational matrix products,
//! floating-point symmetric eigensolves, and row reduction over 𝔽_q.

use crate::gf::{Elem, FieldSpec};
use crate::rat::{rat_to_f64, Rat};
use nalgebra::DMatrix;
use num::Zero;

/// `A · B` for exact rational matrices.
pub fn mat_mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![Rat::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                let t = &a[i][l] * &b[l][j];
                out[i][j] += t;
            }
        }
    }
    out
}

/// Trace of a square rational matrix.
pub fn trace(a: &[Vec<Rat>]) -> Rat {
    a.iter().enumerate().map(|(i, row)| row[i].clone()).sum()
}

/// Eigenvalues of a symmetric rational matrix, descending, computed in floats.
pub fn sym_eigenvalues_desc(a: &[Vec<Rat>]) -> Vec<f64> {
    let n = a.len();
    let m = DMatrix::from_fn(n, n, |i, j| rat_to_f64(&a[i][j]));
    let mut ev: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(|x, y| y.partial_cmp(x).unwrap());
    ev
}

/// Reduced row-echelon form over 𝔽_q. Returns the nonzero reduced rows and
/// their pivot columns; the row space is unchanged, so two matrices have equal
/// row space iff their outputs here are identical.
pub fn gf_rref(field: &FieldSpec, rows: &[Vec<Elem>]) -> (Vec<Vec<Elem>>, Vec<usize>) {
    let mut m: Vec<Vec<Elem>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = vec![];
    let mut rank = 0;
    for col in 0..ncols {
        let Some(sel) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, sel);
        let inv = field.inv(m[rank][col]).unwrap();
        for x in m[rank].iter_mut() {
            *x = field.mul(inv, *x);
        }
        for r in 0..m.len() {
            if r != rank && m[r][col] != 0 {
                let factor = m[r][col];
                for c in 0..ncols {
                    let sub = field.mul(factor, m[rank][c]);
                    m[r][c] = field.sub(m[r][c], sub);
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    m.truncate(rank);
    (m, pivots)
}

/// Rank over 𝔽_q.
pub fn gf_rank(field: &FieldSpec, rows: &[Vec<Elem>]) -> usize {
    gf_rref(field, rows).1.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::field_make;
    use crate::rat::{rat, rat_int};

    #[test]
    fn mat_mul_and_trace() {
        let a = vec![vec![rat(1, 2), rat(1, 2)], vec![rat_int(0), rat_int(1)]];
        let b = vec![vec![rat_int(2), rat_int(0)], vec![rat_int(0), rat_int(2)]];
        let c = mat_mul(&a, &b);
        assert_eq!(c[0][0], rat_int(1));
        assert_eq!(c[0][1], rat_int(1));
        assert_eq!(trace(&c), rat_int(3));
    }

    #[test]
    fn eigenvalues_of_diagonal() {
        let a = vec![
            vec![rat_int(3), rat_int(0)],
            vec![rat_int(0), rat_int(1)],
        ];
        let ev = sym_eigenvalues_desc(&a);
        assert!((ev[0] - 3.0).abs() < 1e-12);
        assert!((ev[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn rref_over_f2() {
        let f = field_make(2, 1).unwrap();
        let rows = vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]];
        let (red, pivots) = gf_rref(&f, &rows);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(red, vec![vec![1, 0, 1], vec![0, 1, 1]]);
        assert_eq!(gf_rank(&f, &rows), 2);
    }

    #[test]
    fn rref_is_row_space_canonical() {
        let f = field_make(3, 1).unwrap();
        let a = vec![vec![1, 2, 0], vec![0, 1, 1]];
        let b = vec![vec![1, 0, 1], vec![0, 2, 2]];
        let (ra, _) = gf_rref(&f, &a);
        let (rb, _) = gf_rref(&f, &b);
        assert_eq!(ra, rb);
    }
}
