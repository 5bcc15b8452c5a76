//! Exact field elements: rationals, prime fields, cyclotomic fields.
//!
//! Every value is kept in a canonical form (reduced fraction, residue in
//! `[0, p)`, coefficient vector of length `phi(n)` reduced modulo the n-th
//! cyclotomic polynomial), so `==` on representations decides equality of
//! mathematical values.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The ground field of a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    /// The rational numbers.
    Rational,
    /// The prime field GF(p), p prime.
    PrimeField(u64),
    /// The cyclotomic field Q(zeta_n), elements reduced mod the n-th
    /// cyclotomic polynomial to degree < phi(n).
    Cyclotomic(u32),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(Error::InvalidParameter(alloc::format!("{p} is not prime")))
        }
    }

    pub fn cyclotomic(n: u32) -> Result<Self> {
        if n == 0 {
            Err(Error::InvalidParameter("cyclotomic order must be positive".into()))
        } else {
            Ok(FieldSpec::Cyclotomic(n))
        }
    }

    /// Characteristic of the field.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::PrimeField(p) => *p,
            _ => 0,
        }
    }

    /// Degree over the prime field / over Q: 1, 1, or phi(n).
    pub fn degree(&self) -> usize {
        match self {
            FieldSpec::Cyclotomic(n) => euler_phi(*n) as usize,
            _ => 1,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
            FieldSpec::Cyclotomic(n) => write!(f, "Q(zeta_{n})"),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.checked_mul(d).map_or(false, |sq| sq <= p) {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn euler_phi(n: u32) -> u32 {
    let mut n = n as u64;
    let mut result = n;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            while n % d == 0 {
                n /= d;
            }
            result -= result / d;
        }
        d += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as u32
}

/// Dense coefficients (index = degree) of the n-th cyclotomic polynomial.
///
/// Computed by exact division: Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n > 0);
    // x^n - 1
    let mut num: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            num = int_poly_div_exact(&num, &phi_d);
        }
    }
    num
}

// Exact division of integer polynomials (remainder known to be zero,
// divisor monic).
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(den[dd].is_one());
    let mut rem: Vec<BigInt> = num.to_vec();
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = rem[k + dd].clone();
        if !c.is_zero() {
            for j in 0..=dd {
                let t = &den[j] * &c;
                rem[k + j] -= t;
            }
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "division was not exact");
    quot
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Rat(BigRational),
    Mod(u64),
    Cyc(Vec<BigRational>),
}

/// An exact element of a [`FieldSpec`], stored in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    field: FieldSpec,
    repr: Repr,
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn zero(field: FieldSpec) -> Self {
        match field {
            FieldSpec::Rational => Scalar { field, repr: Repr::Rat(BigRational::zero()) },
            FieldSpec::PrimeField(_) => Scalar { field, repr: Repr::Mod(0) },
            FieldSpec::Cyclotomic(_) => {
                Scalar { field, repr: Repr::Cyc(vec![BigRational::zero(); field.degree()]) }
            }
        }
    }

    pub fn one(field: FieldSpec) -> Self {
        Scalar::from_i64(field, 1)
    }

    pub fn from_i64(field: FieldSpec, v: i64) -> Self {
        match field {
            FieldSpec::Rational => {
                Scalar { field, repr: Repr::Rat(BigRational::from(BigInt::from(v))) }
            }
            FieldSpec::PrimeField(p) => {
                let r = v.rem_euclid(p as i64) as u64;
                Scalar { field, repr: Repr::Mod(r) }
            }
            FieldSpec::Cyclotomic(_) => {
                let mut c = vec![BigRational::zero(); field.degree()];
                c[0] = BigRational::from(BigInt::from(v));
                Scalar { field, repr: Repr::Cyc(c) }
            }
        }
    }

    /// a/b in the given field (b coprime to the characteristic).
    pub fn from_ratio(field: FieldSpec, a: i64, b: i64) -> Result<Self> {
        if b == 0 {
            return Err(Error::NotInvertible);
        }
        let num = Scalar::from_i64(field, a);
        let den = Scalar::from_i64(field, b);
        num.div(&den)
    }

    pub fn from_rational(field: FieldSpec, q: BigRational) -> Result<Self> {
        match field {
            FieldSpec::Rational => Ok(Scalar { field, repr: Repr::Rat(q) }),
            FieldSpec::Cyclotomic(_) => {
                let mut c = vec![BigRational::zero(); field.degree()];
                c[0] = q;
                Ok(Scalar { field, repr: Repr::Cyc(c) })
            }
            FieldSpec::PrimeField(p) => {
                let num = mod_from_bigint(q.numer(), p);
                let den = mod_from_bigint(q.denom(), p);
                if den == 0 {
                    return Err(Error::NotInvertible);
                }
                let r = mod_mul(num, mod_inv(den, p)?, p);
                Ok(Scalar { field, repr: Repr::Mod(r) })
            }
        }
    }

    /// The canonical primitive n-th root of unity in `Cyclotomic(n)`.
    pub fn zeta(n: u32) -> Self {
        let field = FieldSpec::Cyclotomic(n);
        let deg = field.degree();
        if deg == 1 {
            // phi(n) = 1 means n = 1 or 2; zeta is 1 or -1.
            let v = if n == 1 { 1 } else { -1 };
            return Scalar::from_i64(field, v);
        }
        let mut c = vec![BigRational::zero(); deg];
        c[1] = BigRational::one();
        Scalar { field, repr: Repr::Cyc(c) }
    }

    /// zeta_n^k, for any integer k.
    pub fn zeta_pow(n: u32, k: i64) -> Self {
        let e = k.rem_euclid(n as i64) as u32;
        Scalar::zeta(n).pow(e as u64)
    }

    /// Coefficients over Q of a cyclotomic element (length phi(n)).
    pub fn cyclotomic_coeffs(&self) -> Option<&[BigRational]> {
        match &self.repr {
            Repr::Cyc(c) => Some(c),
            _ => None,
        }
    }

    pub fn rational_value(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rat(q) => Some(q),
            _ => None,
        }
    }

    pub fn residue(&self) -> Option<u64> {
        match &self.repr {
            Repr::Mod(r) => Some(*r),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rat(q) => q.is_zero(),
            Repr::Mod(r) => *r == 0,
            Repr::Cyc(c) => c.iter().all(Zero::is_zero),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Scalar::one(self.field)
    }

    fn assert_same_field(&self, other: &Scalar) {
        assert_eq!(self.field, other.field, "scalars from different fields");
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::NotInvertible);
        }
        let repr = match &self.repr {
            Repr::Rat(q) => Repr::Rat(q.recip()),
            Repr::Mod(r) => {
                let FieldSpec::PrimeField(p) = self.field else { unreachable!() };
                Repr::Mod(mod_inv(*r, p)?)
            }
            Repr::Cyc(c) => {
                let FieldSpec::Cyclotomic(n) = self.field else { unreachable!() };
                Repr::Cyc(cyc_inv(c, n)?)
            }
        };
        Ok(Scalar { field: self.field, repr })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one(self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Canonical text form: `a` or `a/b` for rationals, a decimal residue for
    /// GF(p), and `[c0,c1,...]` (rational coefficients, length phi(n)) for
    /// cyclotomic elements.
    pub fn to_text(&self) -> String {
        match &self.repr {
            Repr::Rat(q) => rat_text(q),
            Repr::Mod(r) => r.to_string(),
            Repr::Cyc(c) => {
                let mut s = String::from("[");
                for (i, q) in c.iter().enumerate() {
                    if i > 0 {
                        s.push(',');
                    }
                    s.push_str(&rat_text(q));
                }
                s.push(']');
                s
            }
        }
    }

    /// Parses the canonical text form back into a scalar of `field`.
    pub fn parse(field: FieldSpec, text: &str) -> Result<Scalar> {
        let text = text.trim();
        match field {
            FieldSpec::Rational => Ok(Scalar { field, repr: Repr::Rat(parse_rat(text)?) }),
            FieldSpec::PrimeField(p) => {
                let v: u64 = text
                    .parse()
                    .map_err(|_| Error::InvalidStructure(alloc::format!("bad residue `{text}`")))?;
                if v >= p {
                    return Err(Error::InvalidStructure(alloc::format!(
                        "residue {v} out of range for GF({p})"
                    )));
                }
                Ok(Scalar { field, repr: Repr::Mod(v) })
            }
            FieldSpec::Cyclotomic(_) => {
                let deg = field.degree();
                let inner = text
                    .strip_prefix('[')
                    .and_then(|t| t.strip_suffix(']'))
                    .ok_or_else(|| {
                        Error::InvalidStructure(alloc::format!("bad cyclotomic `{text}`"))
                    })?;
                let parts: Vec<&str> = if inner.trim().is_empty() {
                    Vec::new()
                } else {
                    inner.split(',').collect()
                };
                if parts.len() != deg {
                    return Err(Error::InvalidStructure(alloc::format!(
                        "cyclotomic element needs {deg} coefficients, got {}",
                        parts.len()
                    )));
                }
                let mut c = Vec::with_capacity(deg);
                for p in parts {
                    c.push(parse_rat(p)?);
                }
                Ok(Scalar { field, repr: Repr::Cyc(c) })
            }
        }
    }
}

fn rat_text(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        alloc::format!("{}/{}", q.numer(), q.denom())
    }
}

fn parse_rat(text: &str) -> Result<BigRational> {
    let bad = || Error::InvalidStructure(alloc::format!("bad rational `{text}`"));
    let text = text.trim();
    if let Some((n, d)) = text.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::NotInvertible);
        }
        Ok(BigRational::new(n, d))
    } else {
        let n: BigInt = text.parse().map_err(|_| bad())?;
        Ok(BigRational::from(n))
    }
}

fn mod_from_bigint(v: &BigInt, p: u64) -> u64 {
    use num_integer::Integer;
    let r = v.mod_floor(&BigInt::from(p));
    u64::try_from(&r).expect("mod_floor result fits u64")
}

fn mod_add(a: u64, b: u64, p: u64) -> u64 {
    let s = (a as u128 + b as u128) % p as u128;
    s as u64
}

fn mod_sub(a: u64, b: u64, p: u64) -> u64 {
    let s = (a as u128 + p as u128 - b as u128) % p as u128;
    s as u64
}

fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_inv(a: u64, p: u64) -> Result<u64> {
    if a == 0 {
        return Err(Error::NotInvertible);
    }
    // Fermat: a^(p-2) mod p.
    let mut e = p - 2;
    let mut base = a % p;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mod_mul(acc, base, p);
        }
        base = mod_mul(base, base, p);
        e >>= 1;
    }
    Ok(acc)
}

// Polynomial helpers over Q used by cyclotomic arithmetic. Vectors are dense,
// index = degree, no trailing-zero guarantees.

fn poly_trim(p: &mut Vec<BigRational>) {
    while p.len() > 1 && p.last().map_or(false, Zero::is_zero) {
        p.pop();
    }
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] += x * y;
        }
    }
    out
}

// Remainder of a modulo the monic-after-scaling divisor m.
fn poly_rem(a: &[BigRational], m: &[BigRational]) -> Vec<BigRational> {
    let mut r: Vec<BigRational> = a.to_vec();
    poly_trim(&mut r);
    let dm = m.len() - 1;
    let lead = m[dm].clone();
    while r.len() - 1 >= dm && !(r.len() == 1 && r[0].is_zero()) {
        let dr = r.len() - 1;
        if dr < dm {
            break;
        }
        let c = &r[dr] / &lead;
        if !c.is_zero() {
            for j in 0..=dm {
                let t = &m[j] * &c;
                r[dr - dm + j] -= t;
            }
        }
        r.pop();
        poly_trim(&mut r);
        if r.len() == 1 && r[0].is_zero() {
            break;
        }
    }
    r
}

// Extended gcd over Q[x]: returns (g, s) with s*a = g mod m, g constant when
// a and m are coprime.
fn poly_half_ext_gcd(a: &[BigRational], m: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r0: Vec<BigRational> = m.to_vec();
    let mut r1: Vec<BigRational> = a.to_vec();
    poly_trim(&mut r0);
    poly_trim(&mut r1);
    let mut s0: Vec<BigRational> = vec![BigRational::zero()];
    let mut s1: Vec<BigRational> = vec![BigRational::one()];
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = poly_divmod(&r0, &r1);
        let qs1 = poly_mul(&q, &s1);
        let mut s_new = s0.clone();
        if s_new.len() < qs1.len() {
            s_new.resize(qs1.len(), BigRational::zero());
        }
        for (i, c) in qs1.iter().enumerate() {
            s_new[i] -= c;
        }
        poly_trim(&mut s_new);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s_new;
    }
    (r0, s0)
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r: Vec<BigRational> = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() - 1 < db || (r.len() == 1 && r[0].is_zero()) {
        return (vec![BigRational::zero()], r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while r.len() - 1 >= db && !(r.len() == 1 && r[0].is_zero()) {
        let dr = r.len() - 1;
        if dr < db {
            break;
        }
        let c = &r[dr] / &lead;
        q[dr - db] = c.clone();
        for j in 0..=db {
            let t = &b[j] * &c;
            r[dr - db + j] -= t;
        }
        poly_trim(&mut r);
        if r.iter().all(Zero::is_zero) {
            r = vec![BigRational::zero()];
            break;
        }
    }
    poly_trim(&mut q);
    (q, r)
}

fn phi_poly_rat(n: u32) -> Vec<BigRational> {
    cyclotomic_polynomial(n).into_iter().map(BigRational::from).collect()
}

fn cyc_reduce(raw: Vec<BigRational>, n: u32) -> Vec<BigRational> {
    let phi = phi_poly_rat(n);
    let deg = phi.len() - 1;
    let mut r = poly_rem(&raw, &phi);
    r.resize(deg.max(1), BigRational::zero());
    r.truncate(deg.max(1));
    r
}

fn cyc_mul(a: &[BigRational], b: &[BigRational], n: u32) -> Vec<BigRational> {
    cyc_reduce(poly_mul(a, b), n)
}

fn cyc_inv(a: &[BigRational], n: u32) -> Result<Vec<BigRational>> {
    let phi = phi_poly_rat(n);
    let deg = phi.len() - 1;
    let (g, s) = poly_half_ext_gcd(a, &phi);
    // Phi_n is irreducible over Q, so the gcd with a nonzero element is a
    // nonzero constant.
    if g.len() != 1 || g[0].is_zero() {
        return Err(Error::NotInvertible);
    }
    let ginv = g[0].recip();
    let mut out: Vec<BigRational> = s.iter().map(|c| c * &ginv).collect();
    out.resize(deg.max(1), BigRational::zero());
    let mut out = cyc_reduce(out, n);
    out.resize(deg.max(1), BigRational::zero());
    Ok(out)
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.assert_same_field(rhs);
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a + b),
            (Repr::Mod(a), Repr::Mod(b)) => {
                let FieldSpec::PrimeField(p) = self.field else { unreachable!() };
                Repr::Mod(mod_add(*a, *b, p))
            }
            (Repr::Cyc(a), Repr::Cyc(b)) => {
                Repr::Cyc(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            _ => unreachable!(),
        };
        Scalar { field: self.field, repr }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.assert_same_field(rhs);
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a - b),
            (Repr::Mod(a), Repr::Mod(b)) => {
                let FieldSpec::PrimeField(p) = self.field else { unreachable!() };
                Repr::Mod(mod_sub(*a, *b, p))
            }
            (Repr::Cyc(a), Repr::Cyc(b)) => {
                Repr::Cyc(a.iter().zip(b).map(|(x, y)| x - y).collect())
            }
            _ => unreachable!(),
        };
        Scalar { field: self.field, repr }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.assert_same_field(rhs);
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a * b),
            (Repr::Mod(a), Repr::Mod(b)) => {
                let FieldSpec::PrimeField(p) = self.field else { unreachable!() };
                Repr::Mod(mod_mul(*a, *b, p))
            }
            (Repr::Cyc(a), Repr::Cyc(b)) => {
                let FieldSpec::Cyclotomic(n) = self.field else { unreachable!() };
                Repr::Cyc(cyc_mul(a, b, n))
            }
            _ => unreachable!(),
        };
        Scalar { field: self.field, repr }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let repr = match &self.repr {
            Repr::Rat(a) => Repr::Rat(-a),
            Repr::Mod(a) => {
                let FieldSpec::PrimeField(p) = self.field else { unreachable!() };
                Repr::Mod(mod_sub(0, *a, p))
            }
            Repr::Cyc(a) => Repr::Cyc(a.iter().map(|x| -x).collect()),
        };
        Scalar { field: self.field, repr }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// Lift a GF(p) residue to a `BigInt` in `[0, p)`; used by the modular
/// radical algorithm.
pub fn lift_residue(s: &Scalar) -> BigInt {
    match &s.repr {
        Repr::Mod(r) => BigInt::from(*r),
        _ => panic!("lift_residue on a non-prime-field scalar"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials_small() {
        // Phi_1 = x - 1, Phi_2 = x + 1, Phi_3 = x^2 + x + 1, Phi_4 = x^2 + 1,
        // Phi_6 = x^2 - x + 1, Phi_12 = x^4 - x^2 + 1.
        let as_i64 = |v: Vec<BigInt>| -> Vec<i64> {
            v.into_iter().map(|b| i64::try_from(&b).unwrap()).collect()
        };
        assert_eq!(as_i64(cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(3)), vec![1, 1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(as_i64(cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn zeta_orders() {
        for n in [2u32, 3, 4, 5, 6, 8, 12] {
            let z = Scalar::zeta(n);
            assert!(z.pow(n as u64).is_one(), "zeta_{n}^{n} != 1");
            for k in 1..n {
                assert!(!z.pow(k as u64).is_one(), "zeta_{n}^{k} == 1");
            }
        }
    }

    #[test]
    fn cyclotomic_inverse() {
        let f = FieldSpec::Cyclotomic(3);
        let z = Scalar::zeta(3);
        let x = &(&z + &Scalar::from_i64(f, 2)) * &z; // (2 + z) z
        let xi = x.inv().unwrap();
        assert!((&x * &xi).is_one());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = FieldSpec::prime(7).unwrap();
        let a = Scalar::from_i64(f, 3);
        let b = Scalar::from_i64(f, 5);
        assert_eq!(&a * &b, Scalar::from_i64(f, 15));
        assert!((&a * &a.inv().unwrap()).is_one());
        assert_eq!(Scalar::from_i64(f, -1), Scalar::from_i64(f, 6));
    }

    #[test]
    fn text_round_trip() {
        let cases = [
            (FieldSpec::Rational, Scalar::from_ratio(FieldSpec::Rational, -3, 4).unwrap()),
            (FieldSpec::prime(5).unwrap(), Scalar::from_i64(FieldSpec::PrimeField(5), 3)),
            (FieldSpec::Cyclotomic(3), Scalar::zeta(3)),
            (FieldSpec::Cyclotomic(4), &Scalar::zeta(4) + &Scalar::one(FieldSpec::Cyclotomic(4))),
        ];
        for (f, s) in cases {
            let t = s.to_text();
            assert_eq!(Scalar::parse(f, &t).unwrap(), s, "round trip failed for {t}");
        }
    }
}
