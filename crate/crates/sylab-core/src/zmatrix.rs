//! Integer matrices and exact rank by fraction-free (Bareiss) elimination.
//!
//! Ranks of subgroups of the free abelian group K are ranks of integer
//! generator matrices over the rationals. Reducing mod p can undercount, so
//! the computation stays in arbitrary-precision integers.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl ZMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ZMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&x| BigInt::from(x)));
        }
        ZMatrix { rows: r, cols: c, data }
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
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, rhs: &ZMatrix) -> ZMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = ZMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * rhs.cols + j;
                    let add = a * rhs.get(k, j);
                    out.data[idx] += add;
                }
            }
        }
        out
    }

    /// Rank over the rationals by one-step Bareiss elimination. All divisions
    /// are exact, so no fractions appear.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut prev = BigInt::one();
        let mut row = 0;
        for col in 0..a.cols {
            if row == a.rows {
                break;
            }
            let Some(pr) = (row..a.rows).find(|&i| !a.get(i, col).is_zero()) else {
                continue;
            };
            if pr != row {
                for c in 0..a.cols {
                    a.data.swap(pr * a.cols + c, row * a.cols + c);
                }
            }
            let pivot = a.get(row, col).clone();
            for i in row + 1..a.rows {
                let lead = a.get(i, col).clone();
                for c in col + 1..a.cols {
                    let v = (&pivot * a.get(i, c) - &lead * a.get(row, c)) / &prev;
                    a.set(i, c, v);
                }
                a.set(i, col, BigInt::zero());
            }
            prev = pivot;
            row += 1;
        }
        row
    }

    pub fn max_abs(&self) -> BigInt {
        self.data
            .iter()
            .map(|x| x.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_and_proportional() {
        assert_eq!(ZMatrix::from_rows(&[&[2, 0], &[0, 3]]).rank(), 2);
        assert_eq!(ZMatrix::from_rows(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn empty_matrices() {
        assert_eq!(ZMatrix::zeros(0, 5).rank(), 0);
        assert_eq!(ZMatrix::zeros(5, 0).rank(), 0);
        assert_eq!(ZMatrix::zeros(0, 0).rank(), 0);
    }

    #[test]
    fn rank_sees_rational_dependence_not_modular() {
        // Over F_2 this matrix has rank 1, over Q it has rank 2.
        let m = ZMatrix::from_rows(&[&[1, 1], &[1, 3]]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn wilkinson_style_growth_is_exact() {
        // Entries picked so naive integer elimination would need fractions.
        let m = ZMatrix::from_rows(&[&[3, 1, 4], &[1, 5, 9], &[2, 6, 5]]);
        assert_eq!(m.rank(), 3);
        let singular = ZMatrix::from_rows(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(singular.rank(), 2);
    }

    #[test]
    fn mul_matches_hand_computation() {
        let a = ZMatrix::from_rows(&[&[1, 2], &[3, 4]]);
        let b = ZMatrix::from_rows(&[&[0, 1], &[1, 1]]);
        let c = a.mul(&b);
        assert_eq!(c, ZMatrix::from_rows(&[&[2, 3], &[4, 7]]));
    }
}
