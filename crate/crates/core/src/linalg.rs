//! Dense row-reduction over GF(p): incremental row spans, ranks and kernels.
//!
//! Pivoting is by position (first nonzero column of the reduced vector), so
//! every reduction is deterministic and reproducible byte-for-byte.

use crate::field::PrimeField;

/// An incrementally built echelon row span. Stored rows are normalized to
/// pivot coefficient 1 and fully reduced against all earlier rows.
#[derive(Debug, Clone)]
pub struct RowEchelon {
    field: PrimeField,
    width: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl RowEchelon {
    pub fn new(field: PrimeField, width: usize) -> Self {
        RowEchelon {
            field,
            width,
            rows: vec![],
            pivots: vec![],
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Eliminate all pivot positions from `v`.
    pub fn reduce_in_place(&self, v: &mut [u64]) {
        debug_assert_eq!(v.len(), self.width);
        let f = self.field;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c != 0 {
                let nc = f.neg(c);
                for (vi, ri) in v.iter_mut().zip(row.iter()) {
                    if *ri != 0 {
                        *vi = f.mul_add(*vi, nc, *ri);
                    }
                }
            }
        }
    }

    /// Reduce and, if independent, insert. Returns true when the vector
    /// enlarged the span.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        self.reduce_in_place(&mut v);
        match v.iter().position(|&c| c != 0) {
            None => false,
            Some(p) => {
                let inv = self.field.inv(v[p]);
                for c in v.iter_mut() {
                    if *c != 0 {
                        *c = self.field.mul(*c, inv);
                    }
                }
                self.rows.push(v);
                self.pivots.push(p);
                true
            }
        }
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        w.iter().all(|&c| c == 0)
    }

    /// Column indices without a pivot, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.width];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.width).filter(|&c| !is_pivot[c]).collect()
    }
}

pub fn rank_of_rows(field: PrimeField, width: usize, rows: impl IntoIterator<Item = Vec<u64>>) -> usize {
    let mut ech = RowEchelon::new(field, width);
    for r in rows {
        ech.insert(r);
    }
    ech.rank()
}

/// Kernel of the linear map sending source basis vector `i` to `rows[i]`.
/// Returns a deterministic basis of combination vectors: the `k`-th basis
/// vector has coefficient 1 on the highest source index it involves.
pub fn kernel_basis(field: PrimeField, width: usize, rows: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let mut ech = RowEchelon::new(field, width);
    let mut companions: Vec<Vec<u64>> = vec![];
    let mut kernel = vec![];
    for (i, r) in rows.iter().enumerate() {
        let mut v = r.clone();
        let mut comp = vec![0u64; rows.len()];
        comp[i] = 1;
        // reduce v against the echelon, mirroring operations on comp
        for ((row, &p), crow) in ech.rows.iter().zip(&ech.pivots).zip(&companions) {
            let c = v[p];
            if c != 0 {
                let nc = field.neg(c);
                for (vi, ri) in v.iter_mut().zip(row.iter()) {
                    if *ri != 0 {
                        *vi = field.mul_add(*vi, nc, *ri);
                    }
                }
                for (ci, ri) in comp.iter_mut().zip(crow.iter()) {
                    if *ri != 0 {
                        *ci = field.mul_add(*ci, nc, *ri);
                    }
                }
            }
        }
        match v.iter().position(|&c| c != 0) {
            None => kernel.push(comp),
            Some(p) => {
                let inv = field.inv(v[p]);
                for c in v.iter_mut() {
                    if *c != 0 {
                        *c = field.mul(*c, inv);
                    }
                }
                for c in comp.iter_mut() {
                    if *c != 0 {
                        *c = field.mul(*c, inv);
                    }
                }
                ech.rows.push(v);
                ech.pivots.push(p);
                companions.push(comp);
            }
        }
    }
    kernel
}
