//! Exact scalar fields: prime fields GF(p) with small modulus and the rationals.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest prime modulus accepted unless a caller raises the cap.
pub const DEFAULT_MODULUS_CAP: u32 = 97;

/// Arithmetic in an exact field.
///
/// Elements are plain values; the field object carries the context (the
/// modulus for prime fields) and performs every operation.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// All elements, for finite fields.
    fn elements(&self) -> Option<Vec<Self::Elem>>;
    /// A square root if one exists in the field.
    fn sqrt(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn characteristic(&self) -> u32;
    fn spec(&self) -> FieldSpec;

    /// Canonical printable form used in JSON output.
    fn render(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Result<Self::Elem>;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// Serializable description of a field, as it appears in input files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
pub enum FieldSpec {
    #[serde(rename = "gfp")]
    Prime { p: u32 },
    #[serde(rename = "rational")]
    Rational,
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime { p } => write!(f, "GF({p})"),
            FieldSpec::Rational => write!(f, "Q"),
        }
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        Self::with_cap(p, DEFAULT_MODULUS_CAP)
    }

    pub fn with_cap(p: u32, cap: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Input(format!("modulus {p} is not prime")));
        }
        if p > cap {
            return Err(Error::Input(format!("modulus {p} exceeds the cap {cap}")));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Projective line over GF(p): affine points `(a, 1)` then `(1, 0)`.
    pub fn projective_line(&self) -> Vec<[u32; 2]> {
        let mut pts: Vec<[u32; 2]> = (0..self.p).map(|a| [a, 1]).collect();
        pts.push([1, 0]);
        pts
    }

    #[inline]
    fn reduce(&self, v: u64) -> u32 {
        (v % self.p as u64) as u32
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        self.reduce(*a as u64 * *b as u64)
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        Some(self.pow(a, (self.p - 2) as u64))
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn elements(&self) -> Option<Vec<u32>> {
        Some((0..self.p).collect())
    }
    fn sqrt(&self, a: &u32) -> Option<u32> {
        (0..self.p).find(|x| self.mul(x, x) == *a)
    }
    fn characteristic(&self) -> u32 {
        self.p
    }
    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime { p: self.p }
    }
    fn render(&self, a: &u32) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<u32> {
        let v: i64 = s
            .trim()
            .parse()
            .map_err(|_| Error::Input(format!("not an integer: {s:?}")))?;
        Ok(self.from_i64(v))
    }
}

/// The rational numbers, with arbitrary-precision numerators and denominators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn elements(&self) -> Option<Vec<BigRational>> {
        None
    }
    fn sqrt(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_negative() {
            return None;
        }
        let n = a.numer().sqrt();
        let d = a.denom().sqrt();
        if &(&n * &n) == a.numer() && &(&d * &d) == a.denom() {
            Some(BigRational::new(n, d))
        } else {
            None
        }
    }
    fn characteristic(&self) -> u32 {
        0
    }
    fn spec(&self) -> FieldSpec {
        FieldSpec::Rational
    }
    fn render(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn parse(&self, s: &str) -> Result<BigRational> {
        let bad = || Error::Input(format!("not a rational number: {s:?}"));
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(BigRational::new(n, d))
            }
            None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
        }
    }
}

/// Small helper for tests and fixtures: an element as an `i64` when it is a
/// small integer.
pub fn rational_to_i64(a: &BigRational) -> Option<i64> {
    if a.is_integer() {
        a.numer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverses() {
        let f = PrimeField::new(97).unwrap();
        for a in 1..97u32 {
            let ia = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &ia), 1);
        }
        assert_eq!(f.inv(&0), None);
    }

    #[test]
    fn modulus_checks() {
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(101).is_err());
        assert!(PrimeField::with_cap(101, 101).is_ok());
        assert!(PrimeField::new(2).is_ok());
    }

    #[test]
    fn rationals_lowest_terms() {
        let q = Rationals;
        let a = q.parse("6/-4").unwrap();
        assert_eq!(q.render(&a), "-3/2");
        assert_eq!(
            q.sqrt(&q.parse("9/4").unwrap()),
            Some(q.parse("3/2").unwrap())
        );
        assert_eq!(q.sqrt(&q.from_i64(2)), None);
    }

    #[test]
    fn field_spec_json() {
        let s: FieldSpec = serde_json::from_str(r#"{"kind":"gfp","p":7}"#).unwrap();
        assert_eq!(s, FieldSpec::Prime { p: 7 });
        assert!(serde_json::from_str::<FieldSpec>(r#"{"kind":"gfp","p":7,"q":1}"#).is_err());
        let r: FieldSpec = serde_json::from_str(r#"{"kind":"rational"}"#).unwrap();
        assert_eq!(r, FieldSpec::Rational);
    }
}
