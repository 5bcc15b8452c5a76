//! Subspaces of `k^d` as canonical RREF bases.
//!
//! Two subspaces are equal iff their basis matrices are identical, which
//! makes filtration stabilization and cross-checks plain `==` tests.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactla::mat::{rref_in_place, Mat};
use crate::exactla::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Mat, // RREF, no zero rows
    pivots: Vec<usize>,
}

impl Subspace {
    /// Span of the rows of `m` inside `k^(m.cols())`.
    pub fn from_rows(m: &Mat) -> Subspace {
        let (basis, pivots) = m.rref();
        Subspace { ambient: m.cols(), basis, pivots }
    }

    pub fn zero(field: FieldSpec, ambient: usize) -> Subspace {
        Subspace { ambient, basis: Mat::zero(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Subspace {
        Subspace::from_rows(&Mat::identity(field, ambient))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Membership test by reduction against the RREF basis.
    pub fn contains_row(&self, v: &Mat) -> bool {
        assert_eq!(v.cols(), self.ambient);
        assert_eq!(v.rows(), 1);
        let mut w = v.clone();
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = w.get(0, p).clone();
            if c.is_zero() {
                continue;
            }
            for j in 0..self.ambient {
                let t = w.get(0, j) - &(&c * self.basis.get(r, j));
                w.set(0, j, t);
            }
        }
        w.is_zero()
    }

    /// Coordinates of `v` in this basis, if `v` lies in the subspace.
    pub fn coords_of(&self, v: &Mat) -> Option<Mat> {
        assert_eq!(v.cols(), self.ambient);
        let mut coords = Mat::zero(self.field(), v.rows(), self.dim());
        for i in 0..v.rows() {
            let mut w = v.row_mat(i);
            for (r, &p) in self.pivots.iter().enumerate() {
                let c = w.get(0, p).clone();
                if c.is_zero() {
                    continue;
                }
                coords.set(i, r, c.clone());
                for j in 0..self.ambient {
                    let t = w.get(0, j) - &(&c * self.basis.get(r, j));
                    w.set(0, j, t);
                }
            }
            if !w.is_zero() {
                return None;
            }
        }
        Some(coords)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|i| self.contains_row(&other.basis.row_mat(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        Ok(Subspace::from_rows(&self.basis.vstack(&other.basis)))
    }

    /// Intersection via the Zassenhaus block trick.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let f = self.field();
        let d = self.ambient;
        let p = self.dim();
        let q = other.dim();
        if p == 0 || q == 0 {
            return Ok(Subspace::zero(f, d));
        }
        // [[U, U], [V, 0]]; rows with zero left half carry the intersection.
        let top = self.basis.hstack(&self.basis);
        let bottom = other.basis.hstack(&Mat::zero(f, q, d));
        let mut work = top.vstack(&bottom);
        rref_in_place(&mut work, 2 * d);
        let mut rows: Vec<Mat> = Vec::new();
        for i in 0..p + q {
            let left_zero = (0..d).all(|j| work.get(i, j).is_zero());
            if left_zero {
                let right = Mat::from_fn(f, 1, d, |_, j| work.get(i, d + j).clone());
                if !right.is_zero() {
                    rows.push(right);
                }
            }
        }
        Ok(Subspace::from_rows(&Mat::from_rows(f, d, &rows)))
    }

    /// Annihilator `{ f in the dual : f(U) = 0 }`, written in dual
    /// coordinates of the same dimension.
    pub fn annihilator(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.field(), self.ambient);
        }
        Subspace::from_rows(&self.basis.transpose().left_kernel())
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, got: other.ambient });
        }
        Ok(())
    }
}

/// Image (row space) of a matrix, as a subspace of `k^cols`.
pub fn image(m: &Mat) -> Subspace {
    Subspace::from_rows(m)
}

/// Kernel `{ x : x * m = 0 }`, as a subspace of `k^rows`.
pub fn kernel(m: &Mat) -> Subspace {
    Subspace::from_rows(&m.left_kernel())
}

/// Section and projection realizing the quotient `W / U`.
///
/// Returns `(lift, project)`: `lift` is a `q x d` matrix whose rows are coset
/// representatives (they extend a basis of `U` to one of `W`), and `project`
/// is `d x q` with `x * project` the quotient coordinates of any `x` in `W`.
/// `lift * project = I_q` and `U * project = 0`; on a complement of `W` in
/// the ambient space, `project` vanishes.
pub fn quotient_basis(w: &Subspace, u: &Subspace) -> Result<(Mat, Mat)> {
    if !w.contains(u) {
        return Err(Error::NotASubspace);
    }
    let f = w.field();
    let d = w.ambient_dim();
    // Pivot columns of U are a subset of the pivot columns of W, so the rows
    // of W whose pivots are new form a complement of U inside W.
    let mut lift_rows: Vec<Mat> = Vec::new();
    for (r, &p) in w.pivots().iter().enumerate() {
        if !u.pivots().contains(&p) {
            lift_rows.push(w.basis().row_mat(r));
        }
    }
    let q = lift_rows.len();
    assert_eq!(q, w.dim() - u.dim());
    let lift = Mat::from_rows(f, d, &lift_rows);
    // Combined basis M of W; a right inverse R (with free variables zero)
    // yields the projection as the columns of R matching the lift rows.
    let combined = u.basis().vstack(&lift);
    let id = Mat::identity(f, combined.rows());
    // R^T M^T = I  <=>  M R = I.
    let rt = Mat::solve_xa_eq_b(&combined.transpose(), &id).expect("basis has full row rank");
    let r = rt.transpose();
    let project = r.submatrix_cols(u.dim(), u.dim() + q);
    Ok((lift, project))
}

/// Tensor product of two subspaces inside `k^(d1*d2)`.
pub fn tensor_subspace(a: &Subspace, b: &Subspace) -> Subspace {
    if a.dim() == 0 || b.dim() == 0 {
        return Subspace::zero(a.field(), a.ambient_dim() * b.ambient_dim());
    }
    Subspace::from_rows(&a.basis().kron(b.basis()))
}

/// `U tensor k^d` as a subspace of `k^(u_amb * d)`.
pub fn tensor_with_full_right(u: &Subspace, d: usize) -> Subspace {
    if u.dim() == 0 {
        return Subspace::zero(u.field(), u.ambient_dim() * d);
    }
    Subspace::from_rows(&u.basis().kron(&Mat::identity(u.field(), d)))
}

/// `k^d tensor U` as a subspace of `k^(d * u_amb)`.
pub fn tensor_with_full_left(d: usize, u: &Subspace) -> Subspace {
    if u.dim() == 0 {
        return Subspace::zero(u.field(), u.ambient_dim() * d);
    }
    Subspace::from_rows(&Mat::identity(u.field(), d).kron(u.basis()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rational;

    #[test]
    fn annihilator_of_full_space_is_zero() {
        let full = Subspace::full(Q, 3);
        assert!(full.annihilator().is_zero());
        assert!(Subspace::zero(Q, 3).annihilator().is_full());
    }

    #[test]
    fn annihilator_dims_and_involution() {
        // dim U = 1 spanned by e1 + e2 in ambient 4; oracle: direct solve of
        // y1 + y2 = 0 gives a 3-dimensional annihilator.
        let u = Subspace::from_rows(&Mat::from_i64(Q, &[&[1, 1, 0, 0]]));
        let perp = u.annihilator();
        assert_eq!(perp.dim(), 3);
        assert_eq!(perp.annihilator(), u);
    }

    #[test]
    fn intersect_idempotent() {
        let u = Subspace::from_rows(&Mat::from_i64(Q, &[&[1, 0, 2], &[0, 1, 1]]));
        assert_eq!(u.intersect(&u).unwrap(), u);
    }

    #[test]
    fn sum_intersect_dimension_law() {
        let u = Subspace::from_rows(&Mat::from_i64(Q, &[&[1, 0, 0, 1], &[0, 1, 0, 0]]));
        let v = Subspace::from_rows(&Mat::from_i64(Q, &[&[0, 1, 0, 0], &[0, 0, 1, 5]]));
        let s = u.sum(&v).unwrap();
        let i = u.intersect(&v).unwrap();
        assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
        assert!(s.contains(&u) && s.contains(&v));
        assert!(u.contains(&i) && v.contains(&i));
    }

    #[test]
    fn quotient_basis_trivial_cases() {
        let w = Subspace::from_rows(&Mat::from_i64(Q, &[&[1, 0, 0], &[0, 1, 0]]));
        let zero = Subspace::zero(Q, 3);
        let (lift, project) = quotient_basis(&w, &zero).unwrap();
        assert_eq!(lift.mul_mat(&project), Mat::identity(Q, 2));

        let (lift2, project2) = quotient_basis(&w, &w).unwrap();
        assert_eq!(lift2.rows(), 0);
        assert_eq!(project2.cols(), 0);
    }

    #[test]
    fn quotient_basis_posts() {
        // W = span{e1, e2, e3} in ambient 4, U = span{e1, e2}.
        let w = Subspace::from_rows(&Mat::from_i64(Q, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]]));
        let u = Subspace::from_rows(&Mat::from_i64(Q, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]));
        let (lift, project) = quotient_basis(&w, &u).unwrap();
        assert_eq!(lift.rows(), 1);
        assert_eq!(lift.mul_mat(&project), Mat::identity(Q, 1));
        assert!(u.basis().mul_mat(&project).is_zero());
        assert!(w.contains(&Subspace::from_rows(&lift)));
    }
}
