//! Exact scalar fields: the rationals and prime fields.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Debug;
use core::hash::Hash;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A field whose elements are canonical values of `Scalar`.
///
/// Operations take `&self` so that the modulus of a prime field lives in
/// the field object rather than in every scalar.
pub trait Field: Clone + Debug + PartialEq + Eq + Send + Sync {
    type Scalar: Clone + Eq + Ord + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Scalar;
    fn one(&self) -> Self::Scalar;
    fn add(&self, a: &Self::Scalar, b: &Self::Scalar) -> Self::Scalar;
    fn neg(&self, a: &Self::Scalar) -> Self::Scalar;
    fn mul(&self, a: &Self::Scalar, b: &Self::Scalar) -> Self::Scalar;
    fn inv(&self, a: &Self::Scalar) -> Option<Self::Scalar>;
    fn from_i64(&self, v: i64) -> Self::Scalar;
    /// All scalars in canonical order, or `None` for an infinite field.
    fn elements(&self) -> Option<Vec<Self::Scalar>>;
    fn render(&self, a: &Self::Scalar) -> String;
    fn parse(&self, s: &str) -> Result<Self::Scalar>;
    fn spec(&self) -> ScalarSpec;

    fn sub(&self, a: &Self::Scalar, b: &Self::Scalar) -> Self::Scalar {
        self.add(a, &self.neg(b))
    }
    fn is_zero(&self, a: &Self::Scalar) -> bool {
        *a == self.zero()
    }
}

/// Which scalar field a matrix ring is built over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ScalarSpec {
    Rationals,
    PrimeField(u64),
}

/// The field Q with arbitrary-precision rationals.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Scalar = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn elements(&self) -> Option<Vec<BigRational>> {
        None
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn render(&self, a: &BigRational) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<BigRational> {
        let t = s.trim();
        let bad = || Error::Parse(format!("not a rational: {s:?}"));
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n = BigInt::from_str(num).map_err(|_| bad())?;
        let d = BigInt::from_str(den).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(BigRational::new(n, d))
    }
    fn spec(&self) -> ScalarSpec {
        ScalarSpec::Rationals
    }
}

/// The prime field F_p, scalars stored as residues in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

/// Largest accepted prime; keeps products inside `u64`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidSpec(format!("{p} is not prime")));
        }
        if p > MAX_PRIME {
            return Err(Error::InvalidSpec(format!("prime {p} exceeds {MAX_PRIME}")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % self.p;
            }
            b = b * b % self.p;
            e >>= 1;
        }
        r
    }
}

impl Field for PrimeField {
    type Scalar = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(*a, self.p - 2))
        }
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn elements(&self) -> Option<Vec<u64>> {
        Some((0..self.p).collect())
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<u64> {
        let v: u64 = s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("not a residue: {s:?}")))?;
        if v >= self.p {
            return Err(Error::Parse(format!("residue {v} not in [0, {})", self.p)));
        }
        Ok(v)
    }
    fn spec(&self) -> ScalarSpec {
        ScalarSpec::PrimeField(self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parse_render() {
        let q = Rationals;
        let x = q.parse("-2/8").unwrap();
        assert_eq!(q.render(&x), "-1/4");
        assert_eq!(q.render(&q.parse("6/3").unwrap()), "2");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("abc").is_err());
    }

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::new(5).unwrap();
        for a in 1..5 {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
        assert!(PrimeField::new(6).is_err());
        assert!(f.parse("5").is_err());
    }
}
