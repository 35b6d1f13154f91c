//! Dense matrices over a prime field: rank, kernel, solve, inverse.
//!
//! Zero-by-n and n-by-zero matrices are first-class citizens; they show up
//! constantly as vertex components of modules.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::PrimeField;

/// Row-major dense matrix over `F_p`. Entries are canonical residues.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        FMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows of signed integers, reducing mod p.
    pub fn from_rows(field: PrimeField, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&x| field.reduce_i64(x)));
        }
        FMatrix {
            field,
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_fn(
        field: PrimeField,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> u32,
    ) -> Self {
        let mut m = Self::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j) % field.modulus());
            }
        }
        m
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        debug_assert!(i < self.rows && j < self.cols);
        debug_assert!(v < self.field.modulus());
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> FMatrix {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, rhs: &FMatrix) -> FMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let f = self.field;
        let p = f.modulus() as u64;
        let mut out = Self::zeros(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * rhs.cols + j;
                    let v = (out.data[idx] as u64 + a * rhs.get(k, j) as u64) % p;
                    out.data[idx] = v as u32;
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &FMatrix) -> FMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, &b) in out.data.iter_mut().zip(rhs.data.iter()) {
            *a = self.field.add(*a, b);
        }
        out
    }

    pub fn sub(&self, rhs: &FMatrix) -> FMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, &b) in out.data.iter_mut().zip(rhs.data.iter()) {
            *a = self.field.sub(*a, b);
        }
        out
    }

    pub fn scale(&self, c: u32) -> FMatrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = self.field.mul(*a, c);
        }
        out
    }

    pub fn neg(&self) -> FMatrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = self.field.neg(*a);
        }
        out
    }

    /// `self^k` for a square matrix, by repeated squaring.
    pub fn pow(&self, mut k: usize) -> FMatrix {
        assert_eq!(self.rows, self.cols, "pow of a non-square matrix");
        let mut acc = Self::identity(self.field, self.rows);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &FMatrix) -> FMatrix {
        assert_eq!(self.rows, rhs.rows);
        let mut out = Self::zeros(self.field, self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
            for j in 0..rhs.cols {
                out.set(i, self.cols + j, rhs.get(i, j));
            }
        }
        out
    }

    /// Vertical concatenation.
    pub fn vstack(&self, rhs: &FMatrix) -> FMatrix {
        assert_eq!(self.cols, rhs.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        FMatrix {
            field: self.field,
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn block_diag(field: PrimeField, blocks: &[&FMatrix]) -> FMatrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j));
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn column(&self, j: usize) -> FMatrix {
        let mut out = Self::zeros(self.field, self.rows, 1);
        for i in 0..self.rows {
            out.set(i, 0, self.get(i, j));
        }
        out
    }

    /// Copies the listed columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> FMatrix {
        let mut out = Self::zeros(self.field, self.rows, cols.len());
        for (k, &j) in cols.iter().enumerate() {
            for i in 0..self.rows {
                out.set(i, k, self.get(i, j));
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns the pivot column indices.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut r = 0;
        for j in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, j) != 0) else {
                continue;
            };
            if pr != r {
                for c in 0..self.cols {
                    let tmp = self.get(pr, c);
                    self.set(pr, c, self.get(r, c));
                    self.set(r, c, tmp);
                }
            }
            let inv = f.inv(self.get(r, j));
            for c in j..self.cols {
                let v = f.mul(self.get(r, c), inv);
                self.set(r, c, v);
            }
            for i in 0..self.rows {
                if i != r && self.get(i, j) != 0 {
                    let factor = self.get(i, j);
                    for c in j..self.cols {
                        let v = f.sub(self.get(i, c), f.mul(factor, self.get(r, c)));
                        self.set(i, c, v);
                    }
                }
            }
            pivots.push(j);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Basis of the right null space, returned as the columns of a
    /// `cols x (cols - rank)` matrix.
    pub fn kernel_basis(&self) -> FMatrix {
        let f = self.field;
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let free: Vec<usize> = (0..self.cols).filter(|j| !pivots.contains(j)).collect();
        let mut k = Self::zeros(f, self.cols, free.len());
        for (idx, &fc) in free.iter().enumerate() {
            k.set(fc, idx, 1);
            for (r, &pc) in pivots.iter().enumerate() {
                // x_pc = -sum over free columns of rref entries
                k.set(pc, idx, f.neg(m.get(r, fc)));
            }
        }
        // Normalize each column to leading coefficient 1.
        for j in 0..k.cols {
            let lead = (0..k.rows).find(|&i| k.get(i, j) != 0).unwrap();
            let inv = f.inv(k.get(lead, j));
            for i in 0..k.rows {
                k.set(i, j, f.mul(k.get(i, j), inv));
            }
        }
        k
    }

    /// Solves `self * X = b` for `X`, if consistent.
    pub fn solve(&self, b: &FMatrix) -> Option<FMatrix> {
        assert_eq!(self.rows, b.rows, "dimension mismatch in solve");
        let f = self.field;
        let mut aug = self.hstack(b);
        let pivots = aug.rref_in_place();
        // Any pivot inside the b-block means b is outside the column space.
        if pivots.iter().any(|&j| j >= self.cols) {
            return None;
        }
        let mut x = Self::zeros(f, self.cols, b.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, aug.get(r, self.cols + j));
            }
        }
        debug_assert_eq!(&self.mul(&x), b);
        Some(x)
    }

    /// Indices of a deterministic set of columns forming a basis of the
    /// column space (the rank profile).
    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut m = self.clone();
        m.rref_in_place()
    }

    /// A basis of the column space: the pivot columns of `self`, unchanged.
    pub fn column_space_basis(&self) -> FMatrix {
        self.select_columns(&self.pivot_columns())
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<FMatrix> {
        if self.rows != self.cols {
            return None;
        }
        self.solve(&Self::identity(self.field, self.rows))
    }

    /// Flattens to a row-major coefficient vector.
    pub fn flatten(&self) -> Vec<u32> {
        self.data.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rank_identity_and_repeats() {
        let f2 = f(2);
        assert_eq!(FMatrix::identity(f2, 2).rank(), 2);
        let m = FMatrix::from_rows(f2, &[&[1, 1], &[1, 1]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn rank_of_empty_matrices() {
        let f2 = f(2);
        assert_eq!(FMatrix::zeros(f2, 0, 3).rank(), 0);
        assert_eq!(FMatrix::zeros(f2, 3, 0).rank(), 0);
        assert_eq!(FMatrix::zeros(f2, 0, 0).rank(), 0);
    }

    #[test]
    fn kernel_of_single_row() {
        let f2 = f(2);
        let m = FMatrix::from_rows(f2, &[&[1, 0]]);
        let k = m.kernel_basis();
        assert_eq!((k.rows(), k.cols()), (2, 1));
        assert_eq!((k.get(0, 0), k.get(1, 0)), (0, 1));
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let f2 = f(2);
        let k = FMatrix::identity(f2, 3).kernel_basis();
        assert_eq!((k.rows(), k.cols()), (3, 0));
    }

    #[test]
    fn kernel_over_f3_matches_exhaustive_search() {
        // Oracle: enumerate all 9 vectors over F_3 and keep those killed by [1 1].
        let f3 = f(3);
        let m = FMatrix::from_rows(f3, &[&[1, 1]]);
        let mut null_vectors = std::vec::Vec::new();
        for a in 0..3i64 {
            for b in 0..3i64 {
                if (a + b) % 3 == 0 && (a, b) != (0, 0) {
                    null_vectors.push((a as u32, b as u32));
                }
            }
        }
        assert_eq!(null_vectors, std::vec![(1, 2), (2, 1)]);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 1);
        let col = (k.get(0, 0), k.get(1, 0));
        assert!(null_vectors.contains(&col));
        // (1,2) is the representative the echelon form produces.
        assert_eq!(col, (1, 2));
    }

    #[test]
    fn rank_plus_nullity() {
        let f5 = f(5);
        let m = FMatrix::from_rows(f5, &[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(m.rank() + m.kernel_basis().cols(), m.cols());
    }

    #[test]
    fn solve_identity_and_inconsistent() {
        let f2 = f(2);
        let id = FMatrix::identity(f2, 2);
        let b = FMatrix::from_rows(f2, &[&[1], &[0]]);
        assert_eq!(id.solve(&b).unwrap(), b);

        let a = FMatrix::from_rows(f2, &[&[1], &[0]]);
        let bad = FMatrix::from_rows(f2, &[&[0], &[1]]);
        assert!(a.solve(&bad).is_none());
    }

    #[test]
    fn solve_underdetermined_verifies() {
        let f2 = f(2);
        let a = FMatrix::from_rows(f2, &[&[1, 1]]);
        let b = FMatrix::from_rows(f2, &[&[1]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul(&x), b);
    }

    #[test]
    fn inverse_round_trip() {
        let f7 = f(7);
        let m = FMatrix::from_rows(f7, &[&[1, 2], &[3, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), FMatrix::identity(f7, 2));
    }

    #[test]
    fn column_space_basis_spans() {
        let f3 = f(3);
        let m = FMatrix::from_rows(f3, &[&[1, 2, 0], &[2, 4, 1]]);
        let b = m.column_space_basis();
        assert_eq!(b.cols(), m.rank());
        // every column of m solvable in terms of the basis
        assert!(b.solve(&m).is_some());
    }

    #[test]
    fn empty_products() {
        let f2 = f(2);
        let a = FMatrix::zeros(f2, 3, 0);
        let b = FMatrix::zeros(f2, 0, 2);
        let prod = a.mul(&b);
        assert_eq!((prod.rows(), prod.cols()), (3, 2));
        assert!(prod.is_zero());
    }
}
