//! Structure-constant representations of coalgebras, algebras, and Hopf
//! algebras, plus filtration containers.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactla::{tensor_index, FieldSpec, Mat, Scalar, Subspace};

/// A coalgebra given by its comultiplication tensor and counit.
///
/// `delta` is `d x d^2` with row `i` the coordinates of `Delta(e_i)` in the
/// basis `e_j tensor e_k` flattened as `j*d + k`; `counit` is `1 x d`.
#[derive(Debug, Clone, PartialEq)]
pub struct Coalgebra {
    pub field: FieldSpec,
    pub dim: usize,
    pub names: Vec<String>,
    pub delta: Mat,
    pub counit: Mat,
}

impl Coalgebra {
    pub fn new(
        field: FieldSpec,
        names: Vec<String>,
        delta: Mat,
        counit: Mat,
    ) -> Result<Coalgebra> {
        let dim = names.len();
        if delta.rows() != dim || delta.cols() != dim * dim {
            return Err(Error::InvalidStructure("delta tensor has wrong shape".into()));
        }
        if counit.rows() != 1 || counit.cols() != dim {
            return Err(Error::InvalidStructure("counit has wrong shape".into()));
        }
        if delta.field() != field || counit.field() != field {
            return Err(Error::FieldMismatch);
        }
        Ok(Coalgebra { field, dim, names, delta, counit })
    }

    /// Nonzero terms `(j, k, coeff)` of `Delta(e_i)`.
    pub fn delta_terms(&self, i: usize) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        let d = self.dim;
        self.delta.row(i).iter().enumerate().filter_map(move |(c, s)| {
            if s.is_zero() {
                None
            } else {
                Some((c / d, c % d, s))
            }
        })
    }

    /// `Delta` applied to a row vector, landing in `k^(d^2)`.
    pub fn delta_apply(&self, v: &Mat) -> Mat {
        v.mul_mat(&self.delta)
    }

    pub fn counit_apply(&self, v: &Mat) -> Scalar {
        v.mul_mat(&self.counit.transpose()).get(0, 0).clone()
    }
}

/// An algebra given by its multiplication tensor and unit vector.
///
/// `mult` is `d^2 x d` with row `i*d + j` the coordinates of `e_i * e_j`;
/// `unit` is `1 x d`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraData {
    pub field: FieldSpec,
    pub dim: usize,
    pub names: Vec<String>,
    pub mult: Mat,
    pub unit: Mat,
}

impl AlgebraData {
    pub fn new(field: FieldSpec, names: Vec<String>, mult: Mat, unit: Mat) -> Result<AlgebraData> {
        let dim = names.len();
        if mult.rows() != dim * dim || mult.cols() != dim {
            return Err(Error::InvalidStructure("mult tensor has wrong shape".into()));
        }
        if unit.rows() != 1 || unit.cols() != dim {
            return Err(Error::InvalidStructure("unit has wrong shape".into()));
        }
        if mult.field() != field || unit.field() != field {
            return Err(Error::FieldMismatch);
        }
        Ok(AlgebraData { field, dim, names, mult, unit })
    }

    /// Product of two row vectors.
    pub fn mul_vec(&self, u: &Mat, v: &Mat) -> Mat {
        let d = self.dim;
        let mut out = Mat::zero(self.field, 1, d);
        for i in 0..d {
            let a = u.get(0, i);
            if a.is_zero() {
                continue;
            }
            for j in 0..d {
                let b = v.get(0, j);
                if b.is_zero() {
                    continue;
                }
                let c = a * b;
                let row = tensor_index(d, i, j);
                for k in 0..d {
                    let m = self.mult.get(row, k);
                    if m.is_zero() {
                        continue;
                    }
                    let cur = out.get(0, k) + &(&c * m);
                    out.set(0, k, cur);
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `x` (row `j` is `x * e_j`).
    pub fn left_mult_matrix(&self, x: &Mat) -> Mat {
        let d = self.dim;
        let mut out = Mat::zero(self.field, d, d);
        for i in 0..d {
            let c = x.get(0, i);
            if c.is_zero() {
                continue;
            }
            for j in 0..d {
                let row = tensor_index(d, i, j);
                for k in 0..d {
                    let m = self.mult.get(row, k);
                    if m.is_zero() {
                        continue;
                    }
                    let cur = out.get(j, k) + &(c * m);
                    out.set(j, k, cur);
                }
            }
        }
        out
    }

    /// Matrix of right multiplication by `x` (row `j` is `e_j * x`).
    pub fn right_mult_matrix(&self, x: &Mat) -> Mat {
        let d = self.dim;
        let mut out = Mat::zero(self.field, d, d);
        for i in 0..d {
            let c = x.get(0, i);
            if c.is_zero() {
                continue;
            }
            for j in 0..d {
                let row = tensor_index(d, j, i);
                for k in 0..d {
                    let m = self.mult.get(row, k);
                    if m.is_zero() {
                        continue;
                    }
                    let cur = out.get(j, k) + &(c * m);
                    out.set(j, k, cur);
                }
            }
        }
        out
    }

    pub fn unit_row(&self) -> Mat {
        self.unit.clone()
    }

    /// Product in the tensor-square algebra `A tensor A`:
    /// `(x tensor y)(z tensor w) = xz tensor yw`, on flattened row vectors.
    pub fn tensor_square_mul(&self, u: &Mat, v: &Mat) -> Mat {
        let d = self.dim;
        assert_eq!(u.cols(), d * d);
        assert_eq!(v.cols(), d * d);
        let mut out = Mat::zero(self.field, 1, d * d);
        for a in 0..d * d {
            let cu = u.get(0, a);
            if cu.is_zero() {
                continue;
            }
            let (a1, a2) = (a / d, a % d);
            for b in 0..d * d {
                let cv = v.get(0, b);
                if cv.is_zero() {
                    continue;
                }
                let (b1, b2) = (b / d, b % d);
                let coeff = cu * cv;
                let left = self.mult.row(tensor_index(d, a1, b1));
                let right = self.mult.row(tensor_index(d, a2, b2));
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
                        let cur = out.get(0, idx) + &(&cm * m2);
                        out.set(0, idx, cur);
                    }
                }
            }
        }
        out
    }
}

/// A Hopf algebra: compatible coalgebra and algebra data on one basis,
/// together with the antipode matrix (row `i` is `S(e_i)`).
#[derive(Debug, Clone, PartialEq)]
pub struct HopfAlgebra {
    pub coalgebra: Coalgebra,
    pub algebra: AlgebraData,
    pub antipode: Mat,
}

impl HopfAlgebra {
    pub fn new(coalgebra: Coalgebra, algebra: AlgebraData, antipode: Mat) -> Result<HopfAlgebra> {
        if coalgebra.field != algebra.field || coalgebra.dim != algebra.dim {
            return Err(Error::InvalidStructure(
                "coalgebra and algebra live on different spaces".into(),
            ));
        }
        if coalgebra.names != algebra.names {
            return Err(Error::InvalidStructure("basis names disagree".into()));
        }
        if antipode.rows() != coalgebra.dim || antipode.cols() != coalgebra.dim {
            return Err(Error::InvalidStructure("antipode has wrong shape".into()));
        }
        if antipode.field() != coalgebra.field {
            return Err(Error::FieldMismatch);
        }
        Ok(HopfAlgebra { coalgebra, algebra, antipode })
    }

    pub fn dim(&self) -> usize {
        self.coalgebra.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.coalgebra.field
    }

    pub fn names(&self) -> &[String] {
        &self.coalgebra.names
    }

    pub fn antipode_apply(&self, v: &Mat) -> Mat {
        v.mul_mat(&self.antipode)
    }

    /// Basis vector as a row matrix.
    pub fn basis_row(&self, i: usize) -> Mat {
        let mut v = Mat::zero(self.field(), 1, self.dim());
        v.set(0, i, Scalar::one(self.field()));
        v
    }
}

/// An increasing chain of subspaces `F_0 < F_1 < ... < F_T = full`.
#[derive(Debug, Clone, PartialEq)]
pub struct Filtration {
    chain: Vec<Subspace>,
}

impl Filtration {
    pub fn new(chain: Vec<Subspace>) -> Result<Filtration> {
        if chain.is_empty() {
            return Err(Error::InvalidStructure("empty filtration".into()));
        }
        for w in chain.windows(2) {
            if !w[1].contains(&w[0]) || w[1].dim() <= w[0].dim() {
                return Err(Error::InvalidStructure("filtration is not strictly increasing".into()));
            }
        }
        if !chain.last().unwrap().is_full() {
            return Err(Error::InvalidStructure("filtration does not end at the full space".into()));
        }
        Ok(Filtration { chain })
    }

    pub fn terminal_index(&self) -> usize {
        self.chain.len() - 1
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `F_n`, clamped at the top term for `n > T`.
    pub fn term(&self, n: usize) -> &Subspace {
        &self.chain[n.min(self.chain.len() - 1)]
    }

    pub fn terms(&self) -> &[Subspace] {
        &self.chain
    }

    pub fn dims(&self) -> Vec<usize> {
        self.chain.iter().map(Subspace::dim).collect()
    }

    /// Dimensions of the successive quotients `F_n / F_{n-1}`.
    pub fn layer_dims(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.chain.len());
        let mut prev = 0usize;
        for s in &self.chain {
            out.push(s.dim() - prev);
            prev = s.dim();
        }
        out
    }
}

/// Result of generating a subalgebra from a subspace: the subspace reached
/// and the first power `m` at which the chain stabilizes.
#[derive(Debug, Clone, PartialEq)]
pub struct HopfCoradicalResult {
    pub subspace: Subspace,
    pub generation_degree: usize,
}
