//! The largest Hopf ideal inside the Jacobson radical, and the duality
//! between its power filtration and the standard filtration of the dual.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactla::subspace::tensor_subspace;
use crate::exactla::{quotient_basis, Mat, Subspace};
use crate::structures::dual::dual_hopf;
use crate::structures::filtration::{hopf_coradical, standard_filtration};
use crate::structures::radical::jacobson_radical;
use crate::structures::types::HopfAlgebra;

/// `J_omega`: the largest Hopf ideal contained in the Jacobson radical.
///
/// Computed as the greatest fixed point of alternately intersecting with
/// the largest coideal (with `S`-stability and `eps = 0`) and the largest
/// two-sided ideal contained in the current subspace, starting from `J`.
/// Cross-checked against the dual description
/// `J_omega = (Hopf coradical of H^*)^perp`; disagreement is a hard error.
pub fn j_omega(h: &HopfAlgebra) -> Result<Subspace> {
    let mut current = jacobson_radical(&h.algebra)?;
    loop {
        let coideal = coideal_core(h, &current)?;
        let ideal = ideal_core(h, &coideal);
        if ideal == current {
            break;
        }
        current = ideal;
    }

    let dual = dual_hopf(h);
    let expected = hopf_coradical(&dual)?.subspace.annihilator();
    if expected != current {
        return Err(Error::CrossCheckFailed(format!(
            "J_omega: fixed point has dim {}, dual Hopf coradical perp has dim {}",
            current.dim(),
            expected.dim()
        )));
    }
    Ok(current)
}

// Largest subspace of `v` with Delta(x) in v tensor H + H tensor v,
// S(x) in v, and eps(x) = 0; computed by iterating the one-step core.
fn coideal_core(h: &HopfAlgebra, v: &Subspace) -> Result<Subspace> {
    let mut current = v.clone();
    loop {
        let r = current.dim();
        if r == 0 {
            return Ok(current);
        }
        let perp = current.annihilator();
        // (v tensor H + H tensor v)^perp = v^perp tensor v^perp.
        let perp_pairs = perp.basis().kron(perp.basis());
        let delta_images = current.basis().mul_mat(&h.coalgebra.delta);
        let cond_delta = delta_images.mul_mat(&perp_pairs.transpose());
        let s_images = current.basis().mul_mat(&h.antipode);
        let cond_s = s_images.mul_mat(&perp.basis().transpose());
        let cond_eps = current.basis().mul_mat(&h.coalgebra.counit.transpose());
        let conditions = cond_delta.hstack(&cond_s).hstack(&cond_eps);
        let coeffs = conditions.left_kernel();
        let next = Subspace::from_rows(&coeffs.mul_mat(current.basis()));
        if next == current {
            return Ok(next);
        }
        current = next;
    }
}

// Largest two-sided ideal contained in `v`: iterate the one-sided closure
// conditions `x e_a in v` and `e_a x in v` until stable.
fn ideal_core(h: &HopfAlgebra, v: &Subspace) -> Subspace {
    let d = h.dim();
    let mut current = v.clone();
    loop {
        let r = current.dim();
        if r == 0 {
            return current;
        }
        let perp = current.annihilator();
        let mut condition_cols: Vec<Mat> = Vec::new();
        for a in 0..d {
            let ea = h.basis_row(a);
            let mut left_rows = Vec::with_capacity(r);
            let mut right_rows = Vec::with_capacity(r);
            for t in 0..r {
                let x = current.basis().row_mat(t);
                left_rows.push(h.algebra.mul_vec(&ea, &x));
                right_rows.push(h.algebra.mul_vec(&x, &ea));
            }
            let left = Mat::from_rows(h.field(), d, &left_rows);
            let right = Mat::from_rows(h.field(), d, &right_rows);
            condition_cols.push(left.mul_mat(&perp.basis().transpose()));
            condition_cols.push(right.mul_mat(&perp.basis().transpose()));
        }
        let mut conditions = condition_cols[0].clone();
        for c in &condition_cols[1..] {
            conditions = conditions.hstack(c);
        }
        let coeffs = conditions.left_kernel();
        let next = Subspace::from_rows(&coeffs.mul_mat(current.basis()));
        if next == current {
            return next;
        }
        current = next;
    }
}

/// Report of the `gr`-duality check: the layer dimensions of the
/// `J_omega`-power filtration against the standard-filtration layers of the
/// dual, with nondegeneracy of the induced pairings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrDualCompat {
    pub ideal_layer_dims: Vec<usize>,
    pub dual_standard_layer_dims: Vec<usize>,
    pub dims_match: bool,
    pub pairings_nondegenerate: bool,
}

pub fn gr_dual_compat(h: &HopfAlgebra) -> Result<GrDualCompat> {
    let f = h.field();
    let d = h.dim();
    let jw = j_omega(h)?;

    // Powers J_omega^0 = H, J_omega, J_omega^2, ... down to zero.
    let mut powers = Vec::new();
    powers.push(Subspace::full(f, d));
    let mut cur = jw.clone();
    while !cur.is_zero() {
        powers.push(cur.clone());
        let next = h.algebra.subspace_product(&cur, &jw);
        if next.dim() >= cur.dim() {
            return Err(Error::CrossCheckFailed("J_omega powers do not shrink to zero".into()));
        }
        cur = next;
    }
    powers.push(Subspace::zero(f, d));

    let ideal_layer_dims: Vec<usize> =
        powers.windows(2).map(|w| w[0].dim() - w[1].dim()).collect();

    let dual = dual_hopf(h);
    let dual_filtration = standard_filtration(&dual)?;
    let dual_standard_layer_dims = dual_filtration.layer_dims();
    let dims_match = ideal_layer_dims == dual_standard_layer_dims;

    // Pairing of J^n / J^{n+1} with F_n / F_{n-1}: representatives from the
    // two quotients pair by evaluation; each pairing matrix must have full
    // rank equal to the layer dimension.
    let mut pairings_nondegenerate = dims_match;
    if dims_match {
        for n in 0..ideal_layer_dims.len() {
            let (reps_primal, _) = quotient_basis(&powers[n], &powers[n + 1])?;
            let prev = if n == 0 {
                Subspace::zero(f, d)
            } else {
                dual_filtration.term(n - 1).clone()
            };
            let (reps_dual, _) = quotient_basis(dual_filtration.term(n), &prev)?;
            let pairing = reps_primal.mul_mat(&reps_dual.transpose());
            if pairing.rank() != ideal_layer_dims[n] {
                pairings_nondegenerate = false;
            }
        }
    }

    Ok(GrDualCompat {
        ideal_layer_dims,
        dual_standard_layer_dims,
        dims_match,
        pairings_nondegenerate,
    })
}
