//! Dense matrices of [`Scalar`]s with deterministic exact row reduction.
//!
//! Vectors are rows; a linear map acts on the right of a row vector, so the
//! matrix of `f` has row `i` equal to the coordinates of `f(e_i)`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::exactla::scalar::{FieldSpec, Scalar};

/// Row-major flattening of a tensor index: `(i, j) -> i*d + j`.
pub fn tensor_index(d: usize, i: usize, j: usize) -> usize {
    assert!(i < d && j < d, "tensor index ({i},{j}) out of range for d={d}");
    i * d + j
}

/// Inverse of [`tensor_index`]: `k -> (k / d, k % d)`.
pub fn tensor_index_inv(d: usize, k: usize) -> (usize, usize) {
    assert!(k < d * d, "flattened index {k} out of range for d={d}");
    (k / d, k % d)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    entries: Vec<Scalar>,
}

impl Mat {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Mat { rows, cols, field, entries: vec![Scalar::zero(field); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one(field));
        }
        m
    }

    pub fn from_entries(field: FieldSpec, rows: usize, cols: usize, entries: Vec<Scalar>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        assert!(entries.iter().all(|e| e.field() == field), "mixed fields in matrix");
        Mat { rows, cols, field, entries }
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let s = f(i, j);
                assert_eq!(s.field(), field, "mixed fields in matrix");
                entries.push(s);
            }
        }
        Mat { rows, cols, field, entries }
    }

    /// Convenience constructor from integer literals.
    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        Mat::from_fn(field, r, c, |i, j| Scalar::from_i64(field, rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert_eq!(v.field(), self.field);
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mat(&self, i: usize) -> Mat {
        Mat { rows: 1, cols: self.cols, field: self.field, entries: self.row(i).to_vec() }
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: &[Mat]) -> Self {
        let mut entries = Vec::new();
        for r in rows {
            assert_eq!(r.cols(), cols);
            assert_eq!(r.rows(), 1);
            entries.extend_from_slice(&r.entries);
        }
        Mat { rows: rows.len(), cols, field, entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        Mat::from_fn(self.field, self.rows, self.cols, |i, j| self.get(i, j) * s)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        assert_eq!(self.field, other.field);
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Mat { rows: self.rows + other.rows, cols: self.cols, field: self.field, entries }
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.field, other.field);
        Mat::from_fn(self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn submatrix_cols(&self, from: usize, to: usize) -> Mat {
        Mat::from_fn(self.field, self.rows, to - from, |i, j| self.get(i, j + from).clone())
    }

    /// Kronecker product; `(u tensor v)(A kron B) = uA tensor vB` for row
    /// vectors. Keep the operands desk-small.
    pub fn kron(&self, other: &Mat) -> Mat {
        assert_eq!(self.field, other.field);
        let r = self.rows * other.rows;
        let c = self.cols * other.cols;
        Mat::from_fn(self.field, r, c, |i, j| {
            let (i1, i2) = (i / other.rows, i % other.rows);
            let (j1, j2) = (j / other.cols, j % other.cols);
            self.get(i1, j1) * other.get(i2, j2)
        })
    }

    pub fn mul_mat(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        assert_eq!(self.field, other.field);
        let mut out = Mat::zero(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j) + &(a * b);
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let mut t = Scalar::zero(self.field);
        for i in 0..self.rows {
            t = &t + self.get(i, i);
        }
        t
    }

    /// Reduced row echelon form with zero rows removed, together with the
    /// pivot columns. Deterministic: pivots scan columns left to right and
    /// pick the smallest remaining row index. The result is the unique RREF
    /// of the row space, so equal row spaces give identical outputs.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut work = self.clone();
        let pivots = rref_in_place(&mut work, self.cols);
        let rank = pivots.len();
        let mut entries = Vec::with_capacity(rank * self.cols);
        for i in 0..rank {
            entries.extend_from_slice(work.row(i));
        }
        (Mat { rows: rank, cols: self.cols, field: self.field, entries }, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis (RREF rows) of the left kernel `{ x : x * self = 0 }`.
    pub fn left_kernel(&self) -> Mat {
        // Row reduce the transpose and read off the free columns.
        let at = self.transpose();
        let mut work = at.clone();
        let pivots = rref_in_place(&mut work, at.cols());
        let n = self.rows;
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis_rows: Vec<Mat> = Vec::new();
        for free in 0..n {
            if is_pivot[free] {
                continue;
            }
            let mut v = Mat::zero(self.field, 1, n);
            v.set(0, free, Scalar::one(self.field));
            for (r, &p) in pivots.iter().enumerate() {
                let c = work.get(r, free).clone();
                if !c.is_zero() {
                    v.set(0, p, -&c);
                }
            }
            basis_rows.push(v);
        }
        let stacked = Mat::from_rows(self.field, n, &basis_rows);
        stacked.rref().0
    }

    /// Solves `X * A = B` for `X`, returning `None` when some row of `B` is
    /// not in the row space of `A`. Free variables are set to zero.
    pub fn solve_xa_eq_b(a: &Mat, b: &Mat) -> Option<Mat> {
        assert_eq!(a.cols(), b.cols(), "solve shape mismatch");
        assert_eq!(a.field(), b.field());
        // Transposed system: A^T X^T = B^T; eliminate on [A^T | B^T].
        let at = a.transpose();
        let bt = b.transpose();
        let mut aug = at.hstack(&bt);
        let pivots = rref_in_place(&mut aug, at.cols());
        // Consistency: rows with zero A-part must have zero B-part.
        for i in pivots.len()..aug.rows() {
            for j in at.cols()..aug.cols() {
                if !aug.get(i, j).is_zero() {
                    return None;
                }
            }
        }
        let mut xt = Mat::zero(a.field(), a.rows(), b.rows());
        for (r, &p) in pivots.iter().enumerate() {
            for j in 0..b.rows() {
                xt.set(p, j, aug.get(r, at.cols() + j).clone());
            }
        }
        Some(xt.transpose())
    }

    /// Inverse of a square matrix.
    pub fn inverse(&self) -> Result<Mat> {
        assert_eq!(self.rows, self.cols);
        let id = Mat::identity(self.field, self.rows);
        Mat::solve_xa_eq_b(self, &id).ok_or(Error::NotInvertible)
    }

    /// Tensor (Kronecker) product of two row vectors.
    pub fn row_tensor(u: &Mat, v: &Mat) -> Mat {
        assert_eq!(u.rows(), 1);
        assert_eq!(v.rows(), 1);
        u.kron(v)
    }
}

/// In-place RREF restricted to the first `lead_cols` columns (row operations
/// apply to the full width, so extra columns act as an augmented block).
/// Returns the pivot columns.
pub(crate) fn rref_in_place(m: &mut Mat, lead_cols: usize) -> Vec<usize> {
    let rows = m.rows();
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for col in 0..lead_cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !m.get(i, col).is_zero()) else {
            continue;
        };
        if pr != r {
            for j in 0..m.cols() {
                let a = m.get(r, j).clone();
                let b = m.get(pr, j).clone();
                m.set(r, j, b);
                m.set(pr, j, a);
            }
        }
        let inv = m.get(r, col).inv().expect("pivot is nonzero");
        if !m.get(r, col).is_one() {
            for j in 0..m.cols() {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
        }
        for i in 0..rows {
            if i == r || m.get(i, col).is_zero() {
                continue;
            }
            let f = m.get(i, col).clone();
            for j in 0..m.cols() {
                let v = m.get(i, j) - &(&f * m.get(r, j));
                m.set(i, j, v);
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

impl Add for &Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat::from_fn(self.field, self.rows, self.cols, |i, j| self.get(i, j) + rhs.get(i, j))
    }
}

impl Sub for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat::from_fn(self.field, self.rows, self.cols, |i, j| self.get(i, j) - rhs.get(i, j))
    }
}

impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        self.mul_mat(rhs)
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rational;

    #[test]
    fn tensor_index_law() {
        assert_eq!(tensor_index(3, 0, 0), 0);
        assert_eq!(tensor_index(3, 1, 2), 5);
        assert_eq!(tensor_index_inv(3, 7), (2, 1));
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(tensor_index_inv(4, tensor_index(4, i, j)), (i, j));
            }
        }
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = Mat::identity(Q, 3);
        let (r, p) = id.rref();
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1, 2]);
    }

    #[test]
    fn rref_dependent_rows() {
        let m = Mat::from_i64(Q, &[&[2, 4], &[1, 2]]);
        let (r, p) = m.rref();
        assert_eq!(r, Mat::from_i64(Q, &[&[1, 2]]));
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn rref_gf2_full_rank() {
        // Oracle: brute-force Gaussian elimination over GF(2) of
        // [[1,1],[1,2]] = [[1,1],[1,0]]: R2 -= R1 -> [[1,1],[0,1]];
        // R1 -= R2 -> [[1,0],[0,1]].
        let f = FieldSpec::prime(2).unwrap();
        let m = Mat::from_i64(f, &[&[1, 1], &[1, 2]]);
        let (r, _) = m.rref();
        assert_eq!(r, Mat::identity(f, 2));
    }

    #[test]
    fn solve_and_inverse() {
        let a = Mat::from_i64(Q, &[&[1, 2], &[3, 5]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul_mat(&inv), Mat::identity(Q, 2));
        assert_eq!(inv.mul_mat(&a), Mat::identity(Q, 2));

        let b = Mat::from_i64(Q, &[&[1, 2]]);
        let x = Mat::solve_xa_eq_b(&a, &b).unwrap();
        assert_eq!(x.mul_mat(&a), b);
    }

    #[test]
    fn left_kernel_of_rank_one() {
        let m = Mat::from_i64(Q, &[&[1, 2], &[2, 4], &[3, 6]]);
        let k = m.left_kernel();
        assert_eq!(k.rows(), 2);
        assert!(k.mul_mat(&m).is_zero());
    }
}
