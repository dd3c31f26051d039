//! Sparse Laurent polynomials with exact coefficients.
//!
//! A polynomial is a coefficient ring plus a map from exponent to nonzero
//! coefficient. Coefficients are canonical for the ring (residues in
//! `0..p`), so structural equality is polynomial equality.

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{is_prime, Coeff, Ring};

/// Exponent monoid of a Laurent polynomial ring.
pub trait Exponent: Copy + Ord + Hash + Debug + Add<Output = Self> + Neg<Output = Self> {
    fn origin() -> Self;
}

impl Exponent for i64 {
    fn origin() -> Self {
        0
    }
}

/// Exponent pair `a^a * z^z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Exp2 {
    pub a: i64,
    pub z: i64,
}

impl Exp2 {
    pub const fn new(a: i64, z: i64) -> Self {
        Exp2 { a, z }
    }
}

impl Add for Exp2 {
    type Output = Exp2;
    fn add(self, rhs: Exp2) -> Exp2 {
        Exp2::new(self.a + rhs.a, self.z + rhs.z)
    }
}

impl Neg for Exp2 {
    type Output = Exp2;
    fn neg(self) -> Exp2 {
        Exp2::new(-self.a, -self.z)
    }
}

impl Exponent for Exp2 {
    fn origin() -> Self {
        Exp2::default()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<E: Exponent> {
    ring: Ring,
    terms: BTreeMap<E, BigInt>,
}

/// Polynomial in `a^{±1}`.
pub type LPoly1 = LaurentPoly<i64>;
/// Polynomial in `a^{±1}, z^{±1}`.
pub type LPoly2 = LaurentPoly<Exp2>;

impl<E: Exponent> LaurentPoly<E> {
    pub fn zero(ring: Ring) -> Self {
        LaurentPoly {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: Ring) -> Self {
        Self::monomial(ring, E::origin(), 1)
    }

    pub fn monomial(ring: Ring, exp: E, coeff: impl Into<BigInt>) -> Self {
        Self::from_terms(ring, [(exp, coeff.into())])
    }

    /// Builds a polynomial from terms; repeated exponents are summed.
    pub fn from_terms<C, I>(ring: Ring, terms: I) -> Self
    where
        C: Into<BigInt>,
        I: IntoIterator<Item = (E, C)>,
    {
        let mut p = Self::zero(ring);
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, exp: E, c: BigInt) {
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        let updated = self.ring.normalize(std::mem::take(entry) + c);
        if updated.is_zero() {
            self.terms.remove(&exp);
        } else {
            *entry = updated;
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&E::origin()).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (E, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: E) -> Coeff {
        match self.terms.get(&exp) {
            Some(c) => Coeff::from_canonical(self.ring, c),
            None => Coeff::from_canonical(self.ring, &BigInt::zero()),
        }
    }

    /// Raw canonical coefficient, zero when absent.
    pub fn coeff_int(&self, exp: E) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        let mut out = Self::zero(self.ring);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(*e1 + *e2, c1 * c2);
            }
        }
        Ok(out)
    }

    fn neg_ref(&self) -> Self {
        Self::from_terms(self.ring, self.terms.iter().map(|(e, c)| (*e, -c)))
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        Self::from_terms(self.ring, self.terms.iter().map(|(e, x)| (*e, x * &c)))
    }

    /// Multiplies by the monomial with exponent `by`.
    pub fn shift(&self, by: E) -> Self {
        LaurentPoly {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e + by, c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.ring);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Reduces integer coefficients modulo a prime, dropping vanished terms.
    pub fn reduce_mod(&self, prime: u64) -> Result<Self> {
        let target = Ring::modular(prime)?;
        match self.ring {
            Ring::Integers => Ok(Self::from_terms(target, self.terms.clone())),
            r if r == target => Ok(self.clone()),
            r => Err(Error::MixedRing(r.to_string(), target.to_string())),
        }
    }

    /// Reinterprets the coefficients in another ring.
    pub fn change_ring(&self, ring: Ring) -> Self {
        Self::from_terms(ring, self.terms.clone())
    }

    pub fn map_exponents(&self, f: impl Fn(E) -> E) -> Self {
        Self::from_terms(
            self.ring,
            self.terms.iter().map(|(e, c)| (f(*e), c.clone())),
        )
    }
}

impl<E: Exponent> Neg for &LaurentPoly<E> {
    type Output = LaurentPoly<E>;
    fn neg(self) -> LaurentPoly<E> {
        self.neg_ref()
    }
}

impl<E: Exponent> Neg for LaurentPoly<E> {
    type Output = LaurentPoly<E>;
    fn neg(self) -> LaurentPoly<E> {
        self.neg_ref()
    }
}

// Operator forms panic on mixed rings; use the `checked_*` methods when the
// rings are not known to agree.
macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<E: Exponent> $tr<&LaurentPoly<E>> for &LaurentPoly<E> {
            type Output = LaurentPoly<E>;
            fn $method(self, rhs: &LaurentPoly<E>) -> LaurentPoly<E> {
                self.$checked(rhs)
                    .expect("operands share a coefficient ring")
            }
        }
        impl<E: Exponent> $tr<LaurentPoly<E>> for LaurentPoly<E> {
            type Output = LaurentPoly<E>;
            fn $method(self, rhs: LaurentPoly<E>) -> LaurentPoly<E> {
                (&self).$method(&rhs)
            }
        }
        impl<E: Exponent> $tr<&LaurentPoly<E>> for LaurentPoly<E> {
            type Output = LaurentPoly<E>;
            fn $method(self, rhs: &LaurentPoly<E>) -> LaurentPoly<E> {
                (&self).$method(rhs)
            }
        }
        impl<E: Exponent> $tr<LaurentPoly<E>> for &LaurentPoly<E> {
            type Output = LaurentPoly<E>;
            fn $method(self, rhs: LaurentPoly<E>) -> LaurentPoly<E> {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

/// Checks primality for public entry points taking a raw modulus.
pub(crate) fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}
