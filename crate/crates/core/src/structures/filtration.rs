//! Coradical, wedge calculus, Hopf coradical, and the standard filtration.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactla::subspace::{tensor_subspace, tensor_with_full_left, tensor_with_full_right};
use crate::exactla::{Mat, Subspace};
use crate::structures::dual::{dual_coalgebra, dual_hopf};
use crate::structures::radical::jacobson_radical;
use crate::structures::types::{Coalgebra, Filtration, HopfAlgebra, HopfCoradicalResult};

/// The coradical `H_0 = J^perp`, where `J` is the Jacobson radical of the
/// dual algebra. The result is verified to be a subcoalgebra.
pub fn coradical(c: &Coalgebra) -> Result<Subspace> {
    let dual = dual_coalgebra(c);
    let j = jacobson_radical(&dual)?;
    let h0 = j.annihilator();
    let square = tensor_subspace(&h0, &h0);
    for i in 0..h0.dim() {
        let img = c.delta_apply(&h0.basis().row_mat(i));
        if !square.contains_row(&img) {
            return Err(Error::CrossCheckFailed(
                "coradical is not a subcoalgebra (radical computation is wrong)".into(),
            ));
        }
    }
    Ok(h0)
}

/// Wedge of two subspaces, computed in the dual: `(D^perp E^perp)^perp`.
pub fn wedge(c: &Coalgebra, d: &Subspace, e: &Subspace) -> Result<Subspace> {
    check_ambient(c, d)?;
    check_ambient(c, e)?;
    let dual = dual_coalgebra(c);
    let prod = dual.subspace_product(&d.annihilator(), &e.annihilator());
    Ok(prod.annihilator())
}

/// Wedge by the kernel characterization
/// `{x : Delta x in D tensor C + C tensor E}`; independent of [`wedge`]
/// because it never touches the dual multiplication. Used as a cross-check.
pub fn wedge_via_kernel(c: &Coalgebra, d: &Subspace, e: &Subspace) -> Result<Subspace> {
    check_ambient(c, d)?;
    check_ambient(c, e)?;
    // (D tensor C + C tensor E)^perp = D^perp tensor E^perp.
    let dp = d.annihilator();
    let ep = e.annihilator();
    if dp.dim() == 0 || ep.dim() == 0 {
        return Ok(Subspace::full(c.field, c.dim));
    }
    let perp_basis = dp.basis().kron(ep.basis());
    let constraints = c.delta.mul_mat(&perp_basis.transpose());
    Ok(crate::exactla::kernel(&constraints))
}

fn check_ambient(c: &Coalgebra, s: &Subspace) -> Result<()> {
    if s.ambient_dim() != c.dim {
        return Err(Error::DimensionMismatch { expected: c.dim, got: s.ambient_dim() });
    }
    Ok(())
}

/// The coradical filtration `H_n = wedge^{n+1} H_0`, cross-checked term by
/// term against the dual description `H_n = (J^{n+1})^perp`.
pub fn coradical_filtration(c: &Coalgebra) -> Result<Filtration> {
    let h0 = coradical(c)?;
    let dual = dual_coalgebra(c);
    let j = jacobson_radical(&dual)?;

    let mut chain = Vec::new();
    let mut current = h0.clone();
    let mut j_power = j.clone();
    for n in 0..=c.dim {
        // Dual route: (J^{n+1})^perp.
        let by_radical = j_power.annihilator();
        if by_radical != current {
            return Err(Error::CrossCheckFailed(format!(
                "coradical filtration: wedge and radical-power routes differ at term {n}"
            )));
        }
        chain.push(current.clone());
        if current.is_full() {
            break;
        }
        let next = wedge(c, &current, &h0)?;
        if next.dim() <= current.dim() {
            return Err(Error::CrossCheckFailed(
                "coradical filtration stalled below the full space".into(),
            ));
        }
        current = next;
        j_power = dual.subspace_product(&j_power, &j);
    }
    Filtration::new(chain)
}

/// Iterated product generation: `S_0 = span{1}`, `S_{r+1} = S_r + S_r * D`,
/// stopping at the first repeat. Returns the stable subspace and the degree
/// `m` at which it stabilized.
pub fn subalgebra_generated(
    a: &crate::structures::types::AlgebraData,
    d: &Subspace,
) -> HopfCoradicalResult {
    let mut current = Subspace::from_rows(&a.unit);
    let mut m = 0usize;
    loop {
        let grown = current
            .sum(&a.subspace_product(&current, d))
            .expect("ambient dimensions agree");
        if grown == current {
            return HopfCoradicalResult { subspace: current, generation_degree: m };
        }
        current = grown;
        m += 1;
    }
}

/// The Hopf coradical `H_[0]`: the subalgebra generated by the coradical.
///
/// Requires `S(H_0)` inside `H_0` (the paper's standing assumption); the
/// result is checked to be closed under multiplication, comultiplication,
/// and the antipode.
pub fn hopf_coradical(h: &HopfAlgebra) -> Result<HopfCoradicalResult> {
    let h0 = coradical(&h.coalgebra)?;
    let s_image = Subspace::from_rows(&h0.basis().mul_mat(&h.antipode));
    if !h0.contains(&s_image) {
        return Err(Error::CoradicalNotStable);
    }
    let result = subalgebra_generated(&h.algebra, &h0);
    let sub = &result.subspace;
    let prod = h.algebra.subspace_product(sub, sub);
    if !sub.contains(&prod) {
        return Err(Error::CrossCheckFailed("Hopf coradical not closed under product".into()));
    }
    let square = tensor_subspace(sub, sub);
    for i in 0..sub.dim() {
        let img = h.coalgebra.delta_apply(&sub.basis().row_mat(i));
        if !square.contains_row(&img) {
            return Err(Error::CrossCheckFailed("Hopf coradical is not a subcoalgebra".into()));
        }
    }
    let s_sub = Subspace::from_rows(&sub.basis().mul_mat(&h.antipode));
    if !sub.contains(&s_sub) {
        return Err(Error::CrossCheckFailed("Hopf coradical not antipode-stable".into()));
    }
    Ok(result)
}

/// The standard filtration `H_[n] = wedge^{n+1} H_[0]`.
pub fn standard_filtration(h: &HopfAlgebra) -> Result<Filtration> {
    let base = hopf_coradical(h)?.subspace;
    let mut chain = Vec::new();
    let mut current = base.clone();
    loop {
        chain.push(current.clone());
        if current.is_full() {
            break;
        }
        let next = wedge(&h.coalgebra, &current, &base)?;
        if next.dim() <= current.dim() {
            return Err(Error::CrossCheckFailed(
                "standard filtration stalled below the full space".into(),
            ));
        }
        current = next;
    }
    Filtration::new(chain)
}

/// One failed Hopf-filtration law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationFailure {
    pub law: &'static str,
    pub at: String,
}

/// Checks that a chain is a Hopf algebra filtration:
/// `Delta(F_n) <= sum F_i tensor F_{n-i}`, `F_n F_m <= F_{n+m}`, and
/// `S(F_n) = F_n`. Returns all failures (empty for valid filtrations).
pub fn verify_hopf_filtration(h: &HopfAlgebra, f: &Filtration) -> Vec<FiltrationFailure> {
    let mut failures = Vec::new();
    let t = f.terminal_index();
    let d = h.dim();

    for n in 0..=t {
        // Sum of F_i tensor F_{n-i}; for i or n-i above the terminal index
        // the factor is the whole space.
        let mut sum: Option<Subspace> = None;
        for i in 0..=n {
            let part = if n - i > t {
                tensor_with_full_right(f.term(i), d)
            } else if i > t {
                tensor_with_full_left(d, f.term(n - i))
            } else {
                tensor_subspace(f.term(i), f.term(n - i))
            };
            sum = Some(match sum {
                None => part,
                Some(acc) => acc.sum(&part).expect("same ambient"),
            });
        }
        let sum = sum.expect("nonempty");
        let fn_term = f.term(n);
        let ok = (0..fn_term.dim())
            .all(|r| sum.contains_row(&h.coalgebra.delta_apply(&fn_term.basis().row_mat(r))));
        if !ok {
            failures.push(FiltrationFailure { law: "delta-compatibility", at: format!("n={n}") });
        }
    }

    for n in 0..=t {
        for m in 0..=t {
            if n + m > t {
                continue; // F_{n+m} is the whole space
            }
            let prod = h.algebra.subspace_product(f.term(n), f.term(m));
            if !f.term(n + m).contains(&prod) {
                failures.push(FiltrationFailure {
                    law: "multiplicativity",
                    at: format!("n={n},m={m}"),
                });
            }
        }
    }

    for n in 0..=t {
        let img = Subspace::from_rows(&f.term(n).basis().mul_mat(&h.antipode));
        if &img != f.term(n) {
            failures.push(FiltrationFailure { law: "antipode-stability", at: format!("n={n}") });
        }
    }

    failures
}

/// Restriction of a Hopf algebra to a Hopf subalgebra given as a subspace.
///
/// The subspace must contain the unit and be closed under multiplication,
/// comultiplication, and the antipode; the result carries structure
/// constants in the canonical (RREF) basis of the subspace.
pub fn sub_hopf_algebra(h: &HopfAlgebra, sub: &Subspace) -> Result<HopfAlgebra> {
    let f = h.field();
    let n = sub.dim();
    let basis = sub.basis();

    let unit = sub
        .coords_of(&h.algebra.unit)
        .ok_or_else(|| Error::InvalidStructure("subspace does not contain the unit".into()))?;

    let mut mult = Mat::zero(f, n * n, n);
    for i in 0..n {
        let u = basis.row_mat(i);
        for j in 0..n {
            let v = basis.row_mat(j);
            let prod = h.algebra.mul_vec(&u, &v);
            let coords = sub.coords_of(&prod).ok_or_else(|| {
                Error::InvalidStructure("subspace not closed under multiplication".into())
            })?;
            for k in 0..n {
                mult.set(i * n + j, k, coords.get(0, k).clone());
            }
        }
    }

    // Coordinates in the tensor square are taken against the explicit
    // Kronecker basis, which lists b_j tensor b_k in row-major order.
    let kron_basis = basis.kron(basis);
    let mut delta = Mat::zero(f, n, n * n);
    for i in 0..n {
        let img = h.coalgebra.delta_apply(&basis.row_mat(i));
        let coords = Mat::solve_xa_eq_b(&kron_basis, &img).ok_or_else(|| {
            Error::InvalidStructure("subspace not closed under comultiplication".into())
        })?;
        for k in 0..n * n {
            delta.set(i, k, coords.get(0, k).clone());
        }
    }

    let counit = Mat::from_fn(f, 1, n, |_, i| h.coalgebra.counit_apply(&basis.row_mat(i)));

    let mut antipode = Mat::zero(f, n, n);
    for i in 0..n {
        let img = h.antipode_apply(&basis.row_mat(i));
        let coords = sub
            .coords_of(&img)
            .ok_or_else(|| Error::InvalidStructure("subspace not antipode-stable".into()))?;
        for k in 0..n {
            antipode.set(i, k, coords.get(0, k).clone());
        }
    }

    let names: Vec<String> = (0..n).map(|i| format!("b{i}")).collect();
    let coalgebra = Coalgebra::new(f, names.clone(), delta, counit)?;
    let algebra = crate::structures::types::AlgebraData::new(
        f,
        names,
        mult,
        Mat::from_fn(f, 1, n, |_, k| unit.get(0, k).clone()),
    )?;
    HopfAlgebra::new(coalgebra, algebra, antipode)
}
