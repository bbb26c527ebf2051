//! Exact arithmetic in cyclotomic fields ℚ(ζ_N).
//!
//! An element is stored in the power basis `1, ζ, …, ζ^{φ(N)-1}` reduced
//! modulo the N-th cyclotomic polynomial, so equality inside one field is
//! plain coefficient equality. Binary operations on elements of different
//! conductors lift both operands into ℚ(ζ_lcm) first.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::upoly::QPoly;
use super::Rational;
use crate::error::{Error, Result};

/// Returns Φ_N, computed as `(x^N - 1) / Π_{d | N, d < N} Φ_d`.
pub fn cyclotomic_polynomial(n: u64) -> QPoly {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    // Φ_d for every divisor, smallest first, so each quotient only needs the
    // previously computed factors.
    let divisors: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let mut table: Vec<(u64, QPoly)> = Vec::with_capacity(divisors.len());
    for &d in &divisors {
        let mut num = QPoly::monomial(d as usize);
        num = &num - &QPoly::one();
        for (e, phi) in &table {
            if d % e == 0 {
                let (q, r) = num.div_rem(phi);
                debug_assert!(r.is_zero());
                num = q;
            }
        }
        table.push((d, num));
    }
    table.pop().map(|(_, p)| p).expect("n has at least one divisor")
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut m = n;
    let mut out = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out
}

/// The field ℚ(ζ_N) together with its defining modulus.
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    conductor: u64,
    /// Φ_N with integer coefficients, lowest degree first, monic.
    modulus: Vec<BigInt>,
}

impl CyclotomicField {
    pub fn new(conductor: u64) -> Arc<Self> {
        assert!(conductor >= 1, "conductor must be positive");
        let phi = cyclotomic_polynomial(conductor);
        let modulus = phi
            .coeffs()
            .iter()
            .map(|c| {
                debug_assert!(c.is_integer());
                c.to_integer()
            })
            .collect();
        Arc::new(CyclotomicField { conductor, modulus })
    }

    pub fn try_new(conductor: i64) -> Result<Arc<Self>> {
        if conductor < 1 {
            return Err(Error::InvalidConductor(conductor));
        }
        Ok(Self::new(conductor as u64))
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// φ(N), the dimension over ℚ.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn zero(self: &Arc<Self>) -> Cyclotomic {
        Cyclotomic {
            field: Arc::clone(self),
            coeffs: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(self: &Arc<Self>) -> Cyclotomic {
        self.rational(Rational::one())
    }

    pub fn int(self: &Arc<Self>, k: i64) -> Cyclotomic {
        self.rational(Rational::from_integer(k.into()))
    }

    pub fn rational(self: &Arc<Self>, q: Rational) -> Cyclotomic {
        let mut out = self.zero();
        out.coeffs[0] = q;
        out
    }

    /// ζ_N^k for any integer k.
    pub fn root_of_unity(self: &Arc<Self>, k: i64) -> Cyclotomic {
        let e = k.rem_euclid(self.conductor as i64) as usize;
        let mut raw = vec![Rational::zero(); e + 1];
        raw[e] = Rational::one();
        Cyclotomic::from_raw(self, raw)
    }

    fn reduce(&self, mut raw: Vec<Rational>) -> Vec<Rational> {
        let d = self.degree();
        if raw.len() > d {
            for k in (d..raw.len()).rev() {
                if raw[k].is_zero() {
                    continue;
                }
                let c = std::mem::replace(&mut raw[k], Rational::zero());
                for (i, m) in self.modulus[..d].iter().enumerate() {
                    if !m.is_zero() {
                        raw[k - d + i] -= &c * m;
                    }
                }
            }
        }
        raw.resize(d, Rational::zero());
        raw
    }

    fn modulus_poly(&self) -> QPoly {
        QPoly::new(
            self.modulus
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }
}

/// ζ_N^k in ℚ(ζ_N).
pub fn root_of_unity(n: u64, k: i64) -> Cyclotomic {
    CyclotomicField::new(n).root_of_unity(k)
}

#[derive(Clone, Debug)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    /// Builds `Σ raw[i] ζ^i`, reducing modulo Φ_N.
    pub fn from_raw(field: &Arc<CyclotomicField>, raw: Vec<Rational>) -> Self {
        Cyclotomic {
            field: Arc::clone(field),
            coeffs: field.reduce(raw),
        }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn conductor(&self) -> u64 {
        self.field.conductor
    }

    /// Coefficients in the reduced power basis.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in ℚ.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn zero_like(&self) -> Self {
        self.field.zero()
    }

    pub fn one_like(&self) -> Self {
        self.field.one()
    }

    /// Embeds into ℚ(ζ_M) via ζ_N = ζ_M^{M/N}. Requires N | M.
    pub fn lift(&self, target: &Arc<CyclotomicField>) -> Self {
        let n = self.field.conductor;
        let m = target.conductor;
        assert!(m.is_multiple_of(n), "cannot lift conductor {n} into {m}");
        if Arc::ptr_eq(&self.field, target) || n == m {
            return Cyclotomic {
                field: Arc::clone(target),
                coeffs: self.coeffs.clone(),
            };
        }
        let step = (m / n) as usize;
        let mut raw = vec![Rational::zero(); (self.coeffs.len().max(1) - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            raw[i * step] = c.clone();
        }
        Self::from_raw(target, raw)
    }

    /// Brings two operands into a common field.
    fn unify(a: &Self, b: &Self) -> (Arc<CyclotomicField>, Option<Self>, Option<Self>) {
        if Arc::ptr_eq(&a.field, &b.field) || a.field.conductor == b.field.conductor {
            return (Arc::clone(&a.field), None, None);
        }
        let l = a.field.conductor.lcm(&b.field.conductor);
        let field = if l == a.field.conductor {
            Arc::clone(&a.field)
        } else if l == b.field.conductor {
            Arc::clone(&b.field)
        } else {
            CyclotomicField::new(l)
        };
        let la = (a.field.conductor != l).then(|| a.lift(&field));
        let lb = (b.field.conductor != l).then(|| b.lift(&field));
        (field, la, lb)
    }

    fn binary(&self, rhs: &Self, op: impl Fn(&Arc<CyclotomicField>, &[Rational], &[Rational]) -> Vec<Rational>) -> Self {
        let (field, la, lb) = Self::unify(self, rhs);
        let a = la.as_ref().map_or(&self.coeffs, |x| &x.coeffs);
        let b = lb.as_ref().map_or(&rhs.coeffs, |x| &x.coeffs);
        let coeffs = op(&field, a, b);
        Cyclotomic { field, coeffs }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(self.field.rational(q.recip()));
        }
        let a = QPoly::new(self.coeffs.clone());
        let (g, s) = a.ext_gcd_left(&self.field.modulus_poly());
        debug_assert!(g == QPoly::one(), "Φ_N is irreducible");
        Ok(Self::from_raw(&self.field, s.coeffs().to_vec()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = self.one_like();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            k >>= 1;
            if k > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Cyclotomic {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Returns `k` with `self = ζ_n^k`, if there is one.
    pub fn as_power_of_root(&self, n: u64) -> Option<u64> {
        let l = self.field.conductor.lcm(&n);
        let field = if l == self.field.conductor {
            Arc::clone(&self.field)
        } else {
            CyclotomicField::new(l)
        };
        let me = self.lift(&field);
        let step = (l / n) as i64;
        (0..n).find(|&k| field.root_of_unity(k as i64 * step) == me)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.field.conductor == other.field.conductor {
            return self.coeffs == other.coeffs;
        }
        let (_, la, lb) = Self::unify(self, other);
        let a = la.as_ref().map_or(&self.coeffs, |x| &x.coeffs);
        let b = lb.as_ref().map_or(&other.coeffs, |x| &x.coeffs);
        a == b
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    /// Literal syntax: `1/2*z^3 - 2`, highest power first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let abs = c.abs();
            if k == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            f.write_str("z")?;
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

fn add_coeffs(_: &Arc<CyclotomicField>, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub_coeffs(_: &Arc<CyclotomicField>, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn mul_coeffs(field: &Arc<CyclotomicField>, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.len() == 1 {
        return vec![&a[0] * &b[0]];
    }
    let mut raw = vec![Rational::zero(); 2 * a.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                raw[i + j] += x * y;
            }
        }
    }
    field.reduce(raw)
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.binary(rhs, add_coeffs)
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.binary(rhs, sub_coeffs)
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.binary(rhs, mul_coeffs)
    }
}

/// Panics on division by zero; use [`Cyclotomic::checked_div`] to handle it.
impl Div for &Cyclotomic {
    type Output = Cyclotomic;
    fn div(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.checked_div(rhs).expect("cyclotomic division by zero")
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(mut self) -> Cyclotomic {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        if self.field.conductor == rhs.field.conductor {
            for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *a += b;
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        if self.field.conductor == rhs.field.conductor {
            for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *a -= b;
            }
        } else {
            *self = &*self - rhs;
        }
    }
}

impl MulAssign<&Cyclotomic> for Cyclotomic {
    fn mul_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self * rhs;
    }
}
