//! Duality between algebras and coalgebras by tensor transposition.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::structures::types::{AlgebraData, Coalgebra, HopfAlgebra};

fn dual_names(names: &[String]) -> Vec<String> {
    names.iter().map(|n| format!("{n}^")).collect()
}

/// The dual algebra `C^*`: multiplication is the transpose of `Delta`, the
/// unit is the counit.
pub fn dual_coalgebra(c: &Coalgebra) -> AlgebraData {
    AlgebraData {
        field: c.field,
        dim: c.dim,
        names: dual_names(&c.names),
        mult: c.delta.transpose(),
        unit: c.counit.clone(),
    }
}

/// The dual coalgebra of a finite-dimensional algebra: comultiplication is
/// the transpose of `mult`, the counit is evaluation at 1.
pub fn dual_algebra(a: &AlgebraData) -> Coalgebra {
    Coalgebra {
        field: a.field,
        dim: a.dim,
        names: dual_names(&a.names),
        delta: a.mult.transpose(),
        counit: a.unit.clone(),
    }
}

/// The dual Hopf algebra; the antipode dualizes to its transpose.
pub fn dual_hopf(h: &HopfAlgebra) -> HopfAlgebra {
    HopfAlgebra {
        coalgebra: dual_algebra(&h.algebra),
        algebra: dual_coalgebra(&h.coalgebra),
        antipode: h.antipode.transpose(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_dual_is_identity_on_tensors() {
        let h = crate::corpus::sweedler4();
        let dd = dual_hopf(&dual_hopf(&h));
        assert_eq!(dd.coalgebra.delta, h.coalgebra.delta);
        assert_eq!(dd.coalgebra.counit, h.coalgebra.counit);
        assert_eq!(dd.algebra.mult, h.algebra.mult);
        assert_eq!(dd.algebra.unit, h.algebra.unit);
        assert_eq!(dd.antipode, h.antipode);
    }
}
