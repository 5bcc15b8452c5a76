//! Axiom validation as exact tensor identities.
//!
//! All checks run elementwise over the structure tensors (never forming
//! `d^2 x d^2` Kronecker products), so dimension-27 corpus members stay
//! cheap. An empty violation list means every axiom holds exactly.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::exactla::{tensor_index, Mat, Scalar};
use crate::structures::types::{AlgebraData, Coalgebra, HopfAlgebra};

/// A single failed axiom, with the basis indices that witnessed it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub law: &'static str,
    pub at: String,
}

impl core::fmt::Display for Violation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{} at {}", self.law, self.at)
    }
}

fn push(violations: &mut Vec<Violation>, law: &'static str, at: String) {
    violations.push(Violation { law, at });
}

/// Coassociativity and both counit laws.
pub fn validate_coalgebra(c: &Coalgebra) -> Vec<Violation> {
    let d = c.dim;
    let f = c.field;
    let mut out = Vec::new();

    for i in 0..d {
        // (Delta tensor id) Delta == (id tensor Delta) Delta on e_i, in k^(d^3).
        let mut lhs = vec![Scalar::zero(f); d * d * d];
        let mut rhs = vec![Scalar::zero(f); d * d * d];
        for (j, k, cjk) in c.delta_terms(i) {
            for (a, b, cab) in c.delta_terms(j) {
                let idx = (a * d + b) * d + k;
                lhs[idx] = &lhs[idx] + &(cjk * cab);
            }
            for (p, q, cpq) in c.delta_terms(k) {
                let idx = (j * d + p) * d + q;
                rhs[idx] = &rhs[idx] + &(cjk * cpq);
            }
        }
        if lhs != rhs {
            push(&mut out, "coassociativity", format!("e_{i}"));
        }

        // (eps tensor id) Delta == id == (id tensor eps) Delta on e_i.
        let mut left = vec![Scalar::zero(f); d];
        let mut right = vec![Scalar::zero(f); d];
        for (j, k, cjk) in c.delta_terms(i) {
            left[k] = &left[k] + &(cjk * c.counit.get(0, j));
            right[j] = &right[j] + &(cjk * c.counit.get(0, k));
        }
        let expected: Vec<Scalar> =
            (0..d).map(|t| if t == i { Scalar::one(f) } else { Scalar::zero(f) }).collect();
        if left != expected {
            push(&mut out, "counit-left", format!("e_{i}"));
        }
        if right != expected {
            push(&mut out, "counit-right", format!("e_{i}"));
        }
    }
    out
}

/// Associativity and the two-sided unit law.
pub fn validate_algebra(a: &AlgebraData) -> Vec<Violation> {
    let d = a.dim;
    let mut out = Vec::new();

    for i in 0..d {
        let ei = basis_row(a, i);
        for j in 0..d {
            let pij = a.mult.row_mat(tensor_index(d, i, j));
            for l in 0..d {
                let el = basis_row(a, l);
                let left = a.mul_vec(&pij, &el);
                let pjl = a.mult.row_mat(tensor_index(d, j, l));
                let right = a.mul_vec(&ei, &pjl);
                if left != right {
                    push(&mut out, "associativity", format!("e_{i},e_{j},e_{l}"));
                }
            }
        }
    }

    for j in 0..d {
        let ej = basis_row(a, j);
        if a.mul_vec(&a.unit, &ej) != ej {
            push(&mut out, "unit-left", format!("e_{j}"));
        }
        if a.mul_vec(&ej, &a.unit) != ej {
            push(&mut out, "unit-right", format!("e_{j}"));
        }
    }
    out
}

fn basis_row(a: &AlgebraData, i: usize) -> Mat {
    let mut v = Mat::zero(a.field, 1, a.dim);
    v.set(0, i, Scalar::one(a.field));
    v
}

/// Full Hopf algebra validation: both substructures, the bialgebra
/// compatibilities, the antipode axiom on both sides, and bijectivity of the
/// antipode.
pub fn validate_hopf(h: &HopfAlgebra) -> Vec<Violation> {
    let c = &h.coalgebra;
    let a = &h.algebra;
    let d = h.dim();
    let f = h.field();
    let mut out = validate_coalgebra(c);
    out.extend(validate_algebra(a));

    // Delta is an algebra map: Delta(e_i e_j) = Delta(e_i) Delta(e_j).
    for i in 0..d {
        for j in 0..d {
            let prod = a.mult.row_mat(tensor_index(d, i, j));
            let lhs = c.delta_apply(&prod);
            let mut rhs = vec![Scalar::zero(f); d * d];
            for (p, q, cpq) in c.delta_terms(i) {
                for (r, s, crs) in c.delta_terms(j) {
                    let coeff = cpq * crs;
                    let left = a.mult.row(tensor_index(d, p, r));
                    let right = a.mult.row(tensor_index(d, q, s));
                    for (k1, m1) in left.iter().enumerate() {
                        if m1.is_zero() {
                            continue;
                        }
                        let cm = &coeff * m1;
                        for (k2, m2) in right.iter().enumerate() {
                            if m2.is_zero() {
                                continue;
                            }
                            let idx = k1 * d + k2;
                            rhs[idx] = &rhs[idx] + &(&cm * m2);
                        }
                    }
                }
            }
            let rhs = Mat::from_entries(f, 1, d * d, rhs);
            if lhs != rhs {
                push(&mut out, "delta-multiplicative", format!("e_{i},e_{j}"));
            }

            // eps is an algebra map: eps(e_i e_j) = eps(e_i) eps(e_j).
            let eps_prod = c.counit_apply(&prod);
            let eps_sep = c.counit.get(0, i) * c.counit.get(0, j);
            if eps_prod != eps_sep {
                push(&mut out, "counit-multiplicative", format!("e_{i},e_{j}"));
            }
        }
    }

    // Delta(1) = 1 tensor 1 and eps(1) = 1.
    let delta_unit = c.delta_apply(&a.unit);
    let unit_tensor = Mat::row_tensor(&a.unit, &a.unit);
    if delta_unit != unit_tensor {
        push(&mut out, "delta-unit", String::from("1"));
    }
    if !c.counit_apply(&a.unit).is_one() {
        push(&mut out, "counit-unit", String::from("1"));
    }

    // Antipode axiom: m(S tensor id)Delta = u eps = m(id tensor S)Delta.
    for i in 0..d {
        let mut left = Mat::zero(f, 1, d);
        let mut right = Mat::zero(f, 1, d);
        for (j, k, cjk) in c.delta_terms(i) {
            let sj = h.antipode.row_mat(j);
            let ek = basis_row(a, k);
            left = &left + &a.mul_vec(&sj, &ek).scale(cjk);
            let ej = basis_row(a, j);
            let sk = h.antipode.row_mat(k);
            right = &right + &a.mul_vec(&ej, &sk).scale(cjk);
        }
        let expected = a.unit.scale(c.counit.get(0, i));
        if left != expected {
            push(&mut out, "antipode-left", format!("e_{i}"));
        }
        if right != expected {
            push(&mut out, "antipode-right", format!("e_{i}"));
        }
    }

    if h.antipode.rank() != d {
        push(&mut out, "antipode-bijective", String::from("rank"));
    }

    out
}
