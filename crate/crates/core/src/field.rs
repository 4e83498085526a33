//! Coefficient fields for exact linear algebra: the rationals and prime fields.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest admissible prime modulus; products of two residues must fit in u64.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

/// Coefficient field over which homology ranks are computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if p > MAX_PRIME {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p))
    }

    /// Short label used in JSON output: `Q` or `Fp:<p>`.
    pub fn label(&self) -> String {
        match self {
            FieldSpec::Rationals => "Q".to_string(),
            FieldSpec::Prime(p) => format!("Fp:{p}"),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        if lower == "q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(rest) = lower.strip_prefix("fp:") {
            let p: u64 = rest.parse().map_err(|_| Error::NotPrime(0))?;
            return FieldSpec::prime(p);
        }
        Err(Error::NotPrime(0))
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Arithmetic context for one field; elimination code is generic over this.
pub trait FieldOps: Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// a - b * c
    fn sub_mul(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Self::Elem;
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
}

pub struct RationalField;

impl FieldOps for RationalField {
    type Elem = BigRational;

    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn sub_mul(&self, a: &BigRational, b: &BigRational, c: &BigRational) -> BigRational {
        a - b * c
    }

    fn div(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a / b
    }
}

pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p > MAX_PRIME {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    fn inv(&self, a: u64) -> u64 {
        // extended Euclid; a is nonzero mod p
        let (mut r0, mut r1) = (self.p as i128, a as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1, "inverse of a unit");
        s0.rem_euclid(self.p as i128) as u64
    }
}

impl FieldOps for PrimeField {
    type Elem = u64;

    fn from_i64(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.p as i128) as u64
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn sub_mul(&self, a: &u64, b: &u64, c: &u64) -> u64 {
        let prod = (*b as u128 * *c as u128 % self.p as u128) as u64;
        (*a + self.p - prod) % self.p
    }

    fn div(&self, a: &u64, b: &u64) -> u64 {
        (*a as u128 * self.inv(*b) as u128 % self.p as u128) as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_field_labels() {
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!(
            "fp:32003".parse::<FieldSpec>().unwrap(),
            FieldSpec::Prime(32003)
        );
        assert_eq!("fp:32004".parse::<FieldSpec>(), Err(Error::NotPrime(32004)));
        assert_eq!(FieldSpec::Prime(7).label(), "Fp:7");
    }

    #[test]
    fn rejects_oversized_modulus() {
        assert!(matches!(
            FieldSpec::prime(4294967311),
            Err(Error::ModulusTooLarge(_))
        ));
    }

    #[test]
    fn prime_field_inverts() {
        let f = PrimeField::new(32003).unwrap();
        for a in [1u64, 2, 5, 31999] {
            let inv = f.inv(a);
            assert_eq!(a as u128 * inv as u128 % 32003, 1);
        }
    }
}
