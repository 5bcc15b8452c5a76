//! Jacobson radical of a finite-dimensional algebra, exactly.
//!
//! In characteristic zero the radical is the kernel of the trace form
//! `(x, y) -> tr(L_x L_y)` of the regular representation. Over GF(p) that
//! form can degenerate (for p <= dim), so we run the iterated p-th-power
//! trace chain of Friedl and Ronyai: integer-lift the regular representation
//! and use the divided traces `f_i(z) = (tr(Z^(p^i)) mod p^(i+1)) / p^i`,
//! shrinking the candidate space once per `i` while `p^i <= dim`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::scalar::lift_residue;
use crate::exactla::{FieldSpec, Mat, Scalar, Subspace};
use crate::structures::types::AlgebraData;

impl AlgebraData {
    /// Span of all pairwise products of basis vectors of `d` and `e`.
    pub fn subspace_product(&self, d: &Subspace, e: &Subspace) -> Subspace {
        let f = self.field;
        if d.dim() == 0 || e.dim() == 0 {
            return Subspace::zero(f, self.dim);
        }
        let mut rows = Vec::with_capacity(d.dim() * e.dim());
        for i in 0..d.dim() {
            let u = d.basis().row_mat(i);
            for j in 0..e.dim() {
                let v = e.basis().row_mat(j);
                rows.push(self.mul_vec(&u, &v));
            }
        }
        Subspace::from_rows(&Mat::from_rows(f, self.dim, &rows))
    }
}

/// The Jacobson radical as a canonical subspace.
pub fn jacobson_radical(a: &AlgebraData) -> Result<Subspace> {
    match a.field {
        FieldSpec::Rational | FieldSpec::Cyclotomic(_) => Ok(trace_form_radical(a)),
        FieldSpec::PrimeField(p) => modular_radical(a, p),
    }
}

fn left_mult_matrices(a: &AlgebraData) -> Vec<Mat> {
    (0..a.dim)
        .map(|i| {
            let mut v = Mat::zero(a.field, 1, a.dim);
            v.set(0, i, Scalar::one(a.field));
            a.left_mult_matrix(&v)
        })
        .collect()
}

fn trace_form_radical(a: &AlgebraData) -> Subspace {
    let d = a.dim;
    let ls = left_mult_matrices(a);
    let mut gram = Mat::zero(a.field, d, d);
    for x in 0..d {
        for y in 0..d {
            let mut t = Scalar::zero(a.field);
            for i in 0..d {
                for j in 0..d {
                    let u = ls[x].get(i, j);
                    if u.is_zero() {
                        continue;
                    }
                    t = &t + &(u * ls[y].get(j, i));
                }
            }
            gram.set(x, y, t);
        }
    }
    Subspace::from_rows(&gram.left_kernel())
}

// Integer matrix helpers for the modular chain.

fn int_matmul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[k][j].is_zero() {
                    continue;
                }
                let t = &a[i][k] * &b[k][j];
                out[i][j] += t;
            }
        }
    }
    out
}

fn int_matpow(m: &[Vec<BigInt>], mut e: u64) -> Vec<Vec<BigInt>> {
    let n = m.len();
    let mut acc: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::from(1) } else { BigInt::zero() }).collect())
        .collect();
    let mut base = m.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = int_matmul(&acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = int_matmul(&base, &base);
        }
    }
    acc
}

fn int_trace(m: &[Vec<BigInt>]) -> BigInt {
    let mut t = BigInt::zero();
    for (i, row) in m.iter().enumerate() {
        t += &row[i];
    }
    t
}

// Divided p-power trace: (tr(Z^(p^i)) mod p^(i+1)) / p^i reduced mod p.
// Divisibility by p^i on the current chain member is part of the
// Friedl-Ronyai theorem; a failure here means the chain was misused.
fn divided_trace(z_int: &[Vec<BigInt>], p: u64, i: u32) -> Result<u64> {
    use num_integer::Integer;
    let pi = BigInt::from(p).pow(i);
    let pi1 = BigInt::from(p).pow(i + 1);
    let e = p.checked_pow(i).expect("p^i fits in u64 at desk scale");
    let t = int_trace(&int_matpow(z_int, e));
    let t_red = t.mod_floor(&pi1);
    let (q, r) = t_red.div_rem(&pi);
    if !r.is_zero() {
        return Err(Error::CrossCheckFailed(format!(
            "divided trace not divisible by {p}^{i} on the radical chain"
        )));
    }
    let q = q.mod_floor(&BigInt::from(p));
    Ok(u64::try_from(&q).expect("residue fits u64"))
}

fn modular_radical(a: &AlgebraData, p: u64) -> Result<Subspace> {
    let d = a.dim;
    let f = a.field;
    // Current candidate space, initially all of A.
    let mut space = Subspace::full(f, d);
    let mut i = 0u32;
    while p.checked_pow(i).map_or(false, |pi| pi as usize <= d) {
        let r = space.dim();
        if r == 0 {
            break;
        }
        // M[s][t] = f_i(u_s * u_t) over the current basis.
        let mut m = Mat::zero(f, r, r);
        for s in 0..r {
            let us = space.basis().row_mat(s);
            for t in 0..r {
                let ut = space.basis().row_mat(t);
                let z = a.mul_vec(&us, &ut);
                let lz = a.left_mult_matrix(&z);
                let lz_int: Vec<Vec<BigInt>> = (0..d)
                    .map(|x| (0..d).map(|y| lift_residue(lz.get(x, y))).collect())
                    .collect();
                let v = divided_trace(&lz_int, p, i)?;
                m.set(s, t, Scalar::from_i64(f, v as i64));
            }
        }
        let coeffs = m.left_kernel();
        let new_basis = coeffs.mul_mat(space.basis());
        space = Subspace::from_rows(&new_basis);
        i += 1;
    }
    Ok(space)
}

/// Certifies a computed radical: it must be a two-sided ideal, nilpotent,
/// and the quotient algebra must have zero radical.
pub fn radical_certificate(a: &AlgebraData, rad: &Subspace) -> Result<()> {
    let full = Subspace::full(a.field, a.dim);
    let left = a.subspace_product(&full, rad);
    let right = a.subspace_product(rad, &full);
    if !rad.contains(&left) || !rad.contains(&right) {
        return Err(Error::CrossCheckFailed("radical is not a two-sided ideal".into()));
    }
    // Nilpotency: powers strictly decrease to zero.
    let mut power = rad.clone();
    for _ in 0..=a.dim {
        if power.is_zero() {
            break;
        }
        let next = a.subspace_product(&power, rad);
        if next.dim() >= power.dim() {
            return Err(Error::CrossCheckFailed("radical power chain does not shrink".into()));
        }
        power = next;
    }
    if !power.is_zero() {
        return Err(Error::CrossCheckFailed("radical is not nilpotent".into()));
    }
    let (quotient, _, _) = quotient_algebra(a, rad)?;
    let qr = jacobson_radical(&quotient)?;
    if !qr.is_zero() {
        return Err(Error::CrossCheckFailed("quotient by radical is not semisimple".into()));
    }
    Ok(())
}

/// Quotient of an algebra by a two-sided ideal; returns the quotient
/// together with the section (`lift`) and projection matrices.
pub fn quotient_algebra(a: &AlgebraData, ideal: &Subspace) -> Result<(AlgebraData, Mat, Mat)> {
    let f = a.field;
    let d = a.dim;
    let full = Subspace::full(f, d);
    let left = a.subspace_product(&full, ideal);
    let right = a.subspace_product(ideal, &full);
    if !ideal.contains(&left) || !ideal.contains(&right) {
        return Err(Error::InvalidStructure("quotient by a non-ideal".into()));
    }
    let (lift, project) = crate::exactla::quotient_basis(&full, ideal)?;
    let q = lift.rows();
    let mut mult = Mat::zero(f, q * q, q);
    for i in 0..q {
        let u = lift.row_mat(i);
        for j in 0..q {
            let v = lift.row_mat(j);
            let prod = a.mul_vec(&u, &v).mul_mat(&project);
            for k in 0..q {
                mult.set(i * q + j, k, prod.get(0, k).clone());
            }
        }
    }
    let unit = a.unit.mul_mat(&project);
    let names = (0..q).map(|i| format!("q{i}")).collect();
    Ok((AlgebraData { field: f, dim: q, names, mult, unit }, lift, project))
}
