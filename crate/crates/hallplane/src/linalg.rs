//! Tiny dense linear algebra over a [`Field`], just enough to solve the
//! homogeneous systems that appear when fitting conics through point sets.

use crate::field::{Field, FieldElement};

/// Basis of the null space of the given matrix (rows of equal length),
/// computed by reduction to reduced row echelon form. Each basis vector has
/// a 1 in one free column and zeros in the others, so the basis is
/// independent by construction and the result is deterministic.
pub(crate) fn kernel_basis(f: &Field, rows: &[Vec<FieldElement>]) -> Vec<Vec<FieldElement>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    debug_assert!(rows.iter().all(|r| r.len() == ncols));
    let mut m: Vec<Vec<FieldElement>> = rows.to_vec();
    let mut pivots: Vec<usize> = Vec::new();

    for col in 0..ncols {
        let rank = pivots.len();
        let Some(pr) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pr);
        let inv = f.inv(m[rank][col]);
        for c in col..ncols {
            m[rank][c] = f.mul(m[rank][c], inv);
        }
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let factor = m[r][col];
                for c in col..ncols {
                    let sub = f.mul(factor, m[rank][c]);
                    m[r][c] = f.sub(m[r][c], sub);
                }
            }
        }
        pivots.push(col);
    }

    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![f.zero(); ncols];
        v[free] = f.one();
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(m[ri][free]);
        }
        basis.push(v);
    }
    basis
}
