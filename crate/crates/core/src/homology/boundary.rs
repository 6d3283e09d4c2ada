use std::collections::HashMap;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

/// Signed incidence matrix ∂_k : C_k → C_{k-1}, stored by column.
///
/// Rows index the (k−1)-faces and columns the k-faces, both in the complex's
/// face order. At `k = 0` the single row is the empty face (augmentation).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    rows: usize,
    columns: Vec<Vec<(u32, i8)>>,
}

impl BoundaryMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    /// Nonzero entries of column `c`, sorted by row.
    pub fn column(&self, c: usize) -> &[(u32, i8)] {
        &self.columns[c]
    }

    pub fn columns(&self) -> &[Vec<(u32, i8)>] {
        &self.columns
    }

    pub fn entry(&self, r: usize, c: usize) -> i8 {
        self.columns[c]
            .iter()
            .find(|(row, _)| *row as usize == r)
            .map(|&(_, v)| v)
            .unwrap_or(0)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.cols()]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                m[r as usize][c] = v as i64;
            }
        }
        m
    }

    #[cfg(test)]
    pub(crate) fn from_columns(rows: usize, columns: Vec<Vec<(u32, i8)>>) -> Self {
        BoundaryMatrix { rows, columns }
    }
}

/// ∂_k for `0 ≤ k ≤ dim Δ + 1`.
pub fn boundary_matrix(c: &SimplicialComplex, k: isize) -> Result<BoundaryMatrix> {
    if c.is_void() {
        return Err(Error::domain("boundary matrix of the void complex"));
    }
    if k < 0 || k > c.dim() + 1 {
        return Err(Error::domain(format!(
            "boundary index {k} outside 0..={}",
            c.dim() + 1
        )));
    }
    let lower: Vec<&Face> = c.faces_of_dim(k - 1).collect();
    let index: HashMap<&Face, u32> = lower.iter().enumerate().map(|(i, f)| (*f, i as u32)).collect();
    let columns = c
        .faces_of_dim(k)
        .map(|f| {
            let mut col: Vec<(u32, i8)> = (0..f.len())
                .map(|j| {
                    let g = f.without_index(j);
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    (index[&g], sign)
                })
                .collect();
            col.sort_unstable_by_key(|&(r, _)| r);
            col
        })
        .collect();
    Ok(BoundaryMatrix {
        rows: lower.len(),
        columns,
    })
}
