//! Two-variable operations on HOMFLY values: evaluation at `z = N`, the
//! substitution `z = a⁻¹ − a`, and division by `z² − (a⁻¹ − a)²`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::poly::{Exp2, LPoly1, LPoly2};
use crate::ring::{inv_mod, pow_mod, Ring};

impl LPoly2 {
    /// `a^a z^z` with coefficient `c`.
    pub fn term(ring: Ring, a: i64, z: i64, c: impl Into<BigInt>) -> Self {
        Self::monomial(ring, Exp2::new(a, z), c)
    }

    /// Value of the two-component unlink, `(a⁻¹ − a)·z⁻¹`.
    pub fn delta() -> Self {
        Self::from_terms(
            Ring::Integers,
            [(Exp2::new(-1, -1), 1), (Exp2::new(1, -1), -1)],
        )
    }

    /// `z² − (a⁻¹ − a)²`, the common factor of differences of knot polynomials.
    pub fn annihilator() -> Self {
        Self::from_terms(
            Ring::Integers,
            [
                (Exp2::new(0, 2), 1),
                (Exp2::new(-2, 0), -1),
                (Exp2::new(0, 0), 2),
                (Exp2::new(2, 0), -1),
            ],
        )
    }

    /// `a ↦ a⁻¹`; the mirror image for knot polynomials.
    pub fn mirror_a(&self) -> Self {
        self.map_exponents(|e| Exp2::new(-e.a, e.z))
    }

    /// `a ↦ a⁻¹, z ↦ −z`; the mirror image for arbitrary links.
    pub fn mirror_link(&self) -> Self {
        Self::from_terms(
            self.ring(),
            self.terms().map(|(e, c)| {
                let c = if e.z % 2 != 0 { -c } else { c.clone() };
                (Exp2::new(-e.a, e.z), c)
            }),
        )
    }

    pub fn min_z_degree(&self) -> Option<i64> {
        self.terms().map(|(e, _)| e.z).min()
    }

    pub fn max_z_degree(&self) -> Option<i64> {
        self.terms().map(|(e, _)| e.z).max()
    }

    pub fn has_negative_z(&self) -> bool {
        self.min_z_degree().is_some_and(|z| z < 0)
    }

    /// Coefficient of `z^j` as a polynomial in `a`.
    pub fn z_coefficient(&self, j: i64) -> LPoly1 {
        LPoly1::from_terms(
            self.ring(),
            self.terms()
                .filter(|(e, _)| e.z == j)
                .map(|(e, c)| (e.a, c.clone())),
        )
    }

    /// Substitutes `z := n` and collects in `a`, optionally reducing mod `prime`.
    pub fn eval_z(&self, n: i64, prime: Option<u64>) -> Result<LPoly1> {
        let src = match prime {
            Some(p) => self.reduce_mod(p)?,
            None => self.clone(),
        };
        let ring = src.ring();
        let negative = src.has_negative_z();
        let power: Box<dyn Fn(i64) -> BigInt> = match ring {
            Ring::Mod(p) => {
                let base = n.rem_euclid(p as i64) as u64;
                if negative && base == 0 {
                    return Err(Error::ZSingular);
                }
                let inv = inv_mod(base, p).unwrap_or(0);
                Box::new(move |j: i64| {
                    let b = if j < 0 { inv } else { base };
                    BigInt::from(pow_mod(b, j.unsigned_abs(), p))
                })
            }
            Ring::Integers => {
                if negative && n == 0 {
                    return Err(Error::ZSingular);
                }
                if negative && n.abs() != 1 {
                    return Err(Error::NotInvertible(n));
                }
                let base = BigInt::from(n);
                Box::new(move |j: i64| num_traits::pow(base.clone(), j.unsigned_abs() as usize))
            }
        };
        Ok(LPoly1::from_terms(
            ring,
            src.terms().map(|(e, c)| (e.a, c * power(e.z))),
        ))
    }

    /// Substitutes `z := a⁻¹ − a` and expands exactly.
    pub fn subst_z_delta(&self) -> Result<LPoly1> {
        if self.has_negative_z() {
            return Err(Error::NegativeZPower);
        }
        let ring = self.ring();
        let delta = LPoly1::from_terms(ring, [(-1, 1), (1, -1)]);
        let top = self.max_z_degree().unwrap_or(0);
        let mut powers = vec![LPoly1::one(ring)];
        for j in 1..=top {
            powers.push(&powers[j as usize - 1] * &delta);
        }
        let mut out = LPoly1::zero(ring);
        for (e, c) in self.terms() {
            out = &out + &powers[e.z as usize].shift(e.a).scale(c.clone());
        }
        Ok(out)
    }

    /// Long division in `z` by the monic `z² − (a⁻¹ − a)²`.
    ///
    /// Returns the quotient when the remainder vanishes, `None` otherwise.
    pub fn div_by_annihilator(&self) -> Result<(bool, Option<LPoly2>)> {
        if self.has_negative_z() {
            return Err(Error::NegativeZPower);
        }
        let ring = self.ring();
        let d0 = LPoly1::from_terms(ring, [(-2, -1), (0, 2), (2, -1)]);
        // Work on the coefficient vector in z.
        let mut coeffs: BTreeMap<i64, LPoly1> = BTreeMap::new();
        for (e, c) in self.terms() {
            let slot = coeffs.entry(e.z).or_insert_with(|| LPoly1::zero(ring));
            *slot = &*slot + &LPoly1::monomial(ring, e.a, c.clone());
        }
        let mut quotient = LPoly2::zero(ring);
        while let Some((&top, _)) = coeffs.iter().next_back() {
            if top < 2 {
                break;
            }
            let lead = coeffs.remove(&top).expect("present");
            for (a, c) in lead.terms() {
                quotient = &quotient + &LPoly2::term(ring, a, top - 2, c.clone());
            }
            let low = coeffs.entry(top - 2).or_insert_with(|| LPoly1::zero(ring));
            *low = &*low - &(&lead * &d0);
            if low.is_zero() {
                coeffs.remove(&(top - 2));
            }
        }
        if coeffs.values().all(LPoly1::is_zero) {
            Ok((true, Some(quotient)))
        } else {
            Ok((false, None))
        }
    }
}

fn write_z_monomial(f: &mut fmt::Formatter<'_>, mag: &BigInt, z: i64) -> fmt::Result {
    match (mag.is_one(), z) {
        (_, 0) => write!(f, "{mag}"),
        (true, _) => write!(f, "z^{z}"),
        (false, _) => write!(f, "{mag}*z^{z}"),
    }
}

impl fmt::Display for LPoly2 {
    /// Groups terms by power of `a`, e.g. `(2 + z^2)*a^2 - a^4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut groups: BTreeMap<i64, Vec<(i64, &BigInt)>> = BTreeMap::new();
        for (e, c) in self.terms() {
            groups.entry(e.a).or_default().push((e.z, c));
        }
        for (i, (a, zs)) in groups.into_iter().enumerate() {
            let suffix = if a == 0 {
                String::new()
            } else {
                format!("a^{a}")
            };
            if let [(z, c)] = zs[..] {
                let neg = c.is_negative();
                match (i, neg) {
                    (0, true) => write!(f, "-")?,
                    (0, false) => {}
                    (_, true) => write!(f, " - ")?,
                    (_, false) => write!(f, " + ")?,
                }
                let mag = c.abs();
                if z == 0 && a != 0 && mag.is_one() {
                    write!(f, "{suffix}")?;
                } else {
                    write_z_monomial(f, &mag, z)?;
                    if a != 0 {
                        write!(f, "*{suffix}")?;
                    }
                }
            } else {
                if i > 0 {
                    write!(f, " + ")?;
                }
                write!(f, "(")?;
                for (k, (z, c)) in zs.iter().enumerate() {
                    match (k, c.is_negative()) {
                        (0, true) => write!(f, "-")?,
                        (0, false) => {}
                        (_, true) => write!(f, " - ")?,
                        (_, false) => write!(f, " + ")?,
                    }
                    write_z_monomial(f, &c.abs(), *z)?;
                }
                write!(f, ")")?;
                if a != 0 {
                    write!(f, "*{suffix}")?;
                }
            }
        }
        Ok(())
    }
}

/// Builds an integer `LPoly2` from `(a, z, coeff)` triples.
pub fn lpoly2(terms: &[(i64, i64, i64)]) -> LPoly2 {
    LPoly2::from_terms(
        Ring::Integers,
        terms.iter().map(|&(a, z, c)| (Exp2::new(a, z), c)),
    )
}

impl LPoly2 {
    /// Whether the value has the shape of a knot polynomial: nonnegative,
    /// even z-powers and even a-powers.
    pub fn is_knot_shaped(&self) -> bool {
        self.terms()
            .all(|(e, _)| e.z >= 0 && e.z % 2 == 0 && e.a % 2 == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z: Ring = Ring::Integers;

    fn trefoil() -> LPoly2 {
        // (2 + z²)a² − a⁴
        lpoly2(&[(2, 0, 2), (2, 2, 1), (4, 0, -1)])
    }

    #[test]
    fn eval_examples() {
        let p = trefoil();
        assert_eq!(
            p.eval_z(1, None).unwrap(),
            LPoly1::from_terms(Z, [(2, 3), (4, -1)])
        );
        assert_eq!(
            p.eval_z(1, Some(2)).unwrap(),
            LPoly1::from_exponents(Ring::Mod(2), &[2, 4])
        );
        assert_eq!(LPoly2::one(Z).eval_z(17, None).unwrap(), LPoly1::one(Z));
        let t5 = lpoly2(&[(4, 0, 3), (4, 2, 4), (4, 4, 1), (6, 0, -2), (6, 2, -1)]);
        assert_eq!(
            t5.eval_z(1, None).unwrap(),
            LPoly1::from_terms(Z, [(4, 8), (6, -3)])
        );
    }

    #[test]
    fn eval_singular_cases() {
        let d = LPoly2::delta();
        assert_eq!(d.eval_z(0, None), Err(Error::ZSingular));
        assert_eq!(d.eval_z(3, Some(3)), Err(Error::ZSingular));
        assert_eq!(d.eval_z(2, None), Err(Error::NotInvertible(2)));
        // 1/2 = 2 mod 3
        assert_eq!(
            d.eval_z(2, Some(3)).unwrap(),
            LPoly1::from_terms(Ring::Mod(3), [(-1, 2), (1, 1)])
        );
        assert_eq!(
            d.eval_z(-1, None).unwrap(),
            LPoly1::from_terms(Z, [(-1, -1), (1, 1)])
        );
    }

    #[test]
    fn reduce_example() {
        let r = trefoil().reduce_mod(2).unwrap();
        assert_eq!(r, lpoly2(&[(2, 2, 1), (4, 0, 1)]).change_ring(Ring::Mod(2)));
    }

    #[test]
    fn subst_delta_examples() {
        assert_eq!(LPoly2::one(Z).subst_z_delta().unwrap(), LPoly1::one(Z));
        assert_eq!(trefoil().subst_z_delta().unwrap(), LPoly1::one(Z));
        assert_eq!(LPoly2::delta().subst_z_delta(), Err(Error::NegativeZPower));
    }

    #[test]
    fn annihilator_division() {
        let (ok, q) = LPoly2::zero(Z).div_by_annihilator().unwrap();
        assert!(ok);
        assert!(q.unwrap().is_zero());

        let (ok, q) = LPoly2::annihilator().div_by_annihilator().unwrap();
        assert!(ok);
        assert_eq!(q.unwrap(), LPoly2::one(Z));

        let diff = &trefoil() - &LPoly2::one(Z);
        let (ok, q) = diff.div_by_annihilator().unwrap();
        assert!(ok);
        assert_eq!(q.unwrap(), LPoly2::term(Z, 2, 0, 1));

        let (ok, q) = trefoil().div_by_annihilator().unwrap();
        assert!(!ok && q.is_none());
        assert_eq!(
            LPoly2::delta().div_by_annihilator(),
            Err(Error::NegativeZPower)
        );
    }

    #[test]
    fn link_mirror_flips_odd_z() {
        let d = LPoly2::delta();
        assert_eq!(d.mirror_link(), d);
        assert_ne!(d.mirror_a(), d);
    }

    #[test]
    fn display() {
        assert_eq!(trefoil().to_string(), "(2 + z^2)*a^2 - a^4");
        assert_eq!(LPoly2::delta().to_string(), "z^-1*a^-1 - z^-1*a^1");
        assert_eq!(LPoly2::one(Z).to_string(), "1");
        assert_eq!(lpoly2(&[(0, 0, -1), (0, 2, -1)]).to_string(), "(-1 - z^2)");
    }
}
