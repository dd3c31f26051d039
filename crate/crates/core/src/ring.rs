//! Coefficient rings: the integers and the prime fields Z/p.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Deterministic primality test by trial division; moduli here are small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Coefficient ring descriptor of a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    Integers,
    /// Z/p for a prime p.
    Mod(u64),
}

impl Ring {
    pub fn modular(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Ring::Mod(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            Ring::Integers => None,
            Ring::Mod(p) => Some(*p),
        }
    }

    /// Brings an integer into canonical form: unchanged over Z, in `0..p` over Z/p.
    pub fn normalize(&self, c: BigInt) -> BigInt {
        match self {
            Ring::Integers => c,
            Ring::Mod(p) => c.mod_floor(&BigInt::from(*p)),
        }
    }

    pub fn from_i64(&self, c: i64) -> BigInt {
        self.normalize(BigInt::from(c))
    }

    /// Multiplicative inverse of a canonical element, if it exists.
    pub fn inverse(&self, c: &BigInt) -> Option<BigInt> {
        match self {
            Ring::Integers => {
                if c.abs().is_one() {
                    Some(c.clone())
                } else {
                    None
                }
            }
            Ring::Mod(p) => {
                let p = BigInt::from(*p);
                if c.mod_floor(&p).is_zero() {
                    return None;
                }
                let e = p.extended_gcd(c);
                Some(e.y.mod_floor(&p))
            }
        }
    }

    pub(crate) fn check_same(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::MixedRing(self.to_string(), other.to_string()))
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::Mod(p) => write!(f, "Z/{p}"),
        }
    }
}

/// A single coefficient: an integer, or a fully reduced residue tagged with its modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Int(BigInt),
    Residue { value: u64, modulus: u64 },
}

impl Coeff {
    pub fn residue(value: i64, modulus: u64) -> Result<Self> {
        if !is_prime(modulus) {
            return Err(Error::NotPrime(modulus));
        }
        let value = value.rem_euclid(modulus as i64) as u64;
        Ok(Coeff::Residue { value, modulus })
    }

    pub fn ring(&self) -> Ring {
        match self {
            Coeff::Int(_) => Ring::Integers,
            Coeff::Residue { modulus, .. } => Ring::Mod(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Int(c) => c.is_zero(),
            Coeff::Residue { value, .. } => *value == 0,
        }
    }

    pub(crate) fn from_canonical(ring: Ring, c: &BigInt) -> Self {
        match ring {
            Ring::Integers => Coeff::Int(c.clone()),
            Ring::Mod(p) => Coeff::Residue {
                value: u64::try_from(c).expect("canonical residue fits u64"),
                modulus: p,
            },
        }
    }

    fn to_bigint(&self) -> BigInt {
        match self {
            Coeff::Int(c) => c.clone(),
            Coeff::Residue { value, .. } => BigInt::from(*value),
        }
    }

    pub fn checked_add(&self, other: &Coeff) -> Result<Coeff> {
        let ring = self.ring();
        ring.check_same(&other.ring())?;
        let sum = ring.normalize(self.to_bigint() + other.to_bigint());
        Ok(Coeff::from_canonical(ring, &sum))
    }

    pub fn checked_mul(&self, other: &Coeff) -> Result<Coeff> {
        let ring = self.ring();
        ring.check_same(&other.ring())?;
        let prod = ring.normalize(self.to_bigint() * other.to_bigint());
        Ok(Coeff::from_canonical(ring, &prod))
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Int(c) => write!(f, "{c}"),
            Coeff::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

/// `base^exp mod p` on machine words.
pub(crate) fn pow_mod(base: u64, mut exp: u64, p: u64) -> u64 {
    let p128 = p as u128;
    let mut acc = 1u128 % p128;
    let mut b = (base % p) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p128;
        }
        b = b * b % p128;
        exp >>= 1;
    }
    acc as u64
}

/// Inverse of a nonzero residue modulo a prime.
pub(crate) fn inv_mod(x: u64, p: u64) -> Option<u64> {
    if x.is_multiple_of(p) {
        None
    } else {
        Some(pow_mod(x, p - 2, p))
    }
}
