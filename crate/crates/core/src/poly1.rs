//! One-variable operations: mirror, degree statistics, Laurent division and
//! the canonical text form.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::LPoly1;
use crate::ring::Ring;

/// Minimal degree, maximal degree and span of a nonzero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeStats {
    pub min: i64,
    pub max: i64,
    pub span: u64,
}

impl LPoly1 {
    /// Sum of `a^e` over the given exponents; convenient for F₂ values.
    pub fn from_exponents(ring: Ring, exps: &[i64]) -> Self {
        Self::from_terms(ring, exps.iter().map(|&e| (e, 1)))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms().next().map(|(e, _)| e)
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms().next_back().map(|(e, _)| e)
    }

    pub fn degree_stats(&self) -> Result<DegreeStats> {
        match (self.min_degree(), self.max_degree()) {
            (Some(min), Some(max)) => Ok(DegreeStats {
                min,
                max,
                span: (max - min) as u64,
            }),
            _ => Err(Error::ZeroPolynomial),
        }
    }

    /// `a ↦ a⁻¹`.
    pub fn mirror(&self) -> Self {
        self.map_exponents(|e| -e)
    }

    pub fn exponents(&self) -> impl Iterator<Item = i64> + '_ {
        self.terms().map(|(e, _)| e)
    }

    pub fn all_even(&self) -> bool {
        self.exponents().all(|e| e % 2 == 0)
    }

    /// Laurent division with remainder.
    ///
    /// Both operands are shifted to minimal degree 0, divided as ordinary
    /// polynomials, and the shifts restored, so that `self = q·d + r` holds
    /// exactly and the normalized remainder has degree below that of the
    /// normalized divisor.
    pub fn divrem(&self, d: &LPoly1) -> Result<(LPoly1, LPoly1)> {
        self.ring().check_same(&d.ring())?;
        let ring = self.ring();
        let (Some(d_shift), Some(d_max)) = (d.min_degree(), d.max_degree()) else {
            return Err(Error::ZeroDivisor);
        };
        let lead = d.coeff_int(d_max);
        let lead_inv = ring
            .inverse(&lead)
            .ok_or_else(|| Error::NonInvertibleLead(lead.to_string()))?;
        let Some(p_shift) = self.min_degree() else {
            return Ok((LPoly1::zero(ring), LPoly1::zero(ring)));
        };

        let divisor = d.shift(-d_shift);
        let d_deg = d_max - d_shift;
        let mut rem = self.shift(-p_shift);
        let mut quot = LPoly1::zero(ring);
        while let Some(top) = rem.max_degree() {
            if top < d_deg {
                break;
            }
            let c = ring.normalize(rem.coeff_int(top) * &lead_inv);
            let step = LPoly1::monomial(ring, top - d_deg, c);
            rem = &rem - &(&step * &divisor);
            quot = &quot + &step;
        }
        Ok((quot.shift(p_shift - d_shift), rem.shift(p_shift)))
    }

    pub fn is_divisible_by(&self, d: &LPoly1) -> Result<bool> {
        Ok(self.divrem(d)?.1.is_zero())
    }

    /// Parses the canonical text form.
    ///
    /// Terms are `1`, `a^<int>`, `<coeff>*a^<int>` or a bare constant, in
    /// strictly ascending exponent order, joined by ` + ` or ` - `.
    pub fn parse(s: &str, ring: Ring) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Syntax("empty polynomial".into()));
        }
        if s == "0" {
            return Ok(LPoly1::zero(ring));
        }
        let mut out = LPoly1::zero(ring);
        let mut last: Option<i64> = None;
        for (negative, term) in split_signed(s)? {
            let (coeff, exp) = parse_term(term)?;
            if coeff.is_zero() {
                return Err(Error::Syntax(format!("zero coefficient in `{term}`")));
            }
            if let Some(prev) = last {
                if exp == prev {
                    return Err(Error::Syntax(format!("duplicate exponent {exp}")));
                }
                if exp < prev {
                    return Err(Error::NonAscendingExponents(term.to_string()));
                }
            }
            last = Some(exp);
            let coeff = if negative { -coeff } else { coeff };
            let before = out.len();
            out = &out + &LPoly1::monomial(ring, exp, coeff);
            if out.len() == before {
                return Err(Error::Syntax(format!("term `{term}` vanishes in {ring}")));
            }
        }
        Ok(out)
    }
}

/// Splits `t1 + t2 - t3` into sign-tagged terms.
fn split_signed(s: &str) -> Result<Vec<(bool, &str)>> {
    let mut out = Vec::new();
    let (mut negative, mut rest) = match s.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, s),
    };
    loop {
        let plus = rest.find(" + ");
        let minus = rest.find(" - ");
        let next = match (plus, minus) {
            (Some(p), Some(m)) => Some((p.min(m), m < p)),
            (Some(p), None) => Some((p, false)),
            (None, Some(m)) => Some((m, true)),
            (None, None) => None,
        };
        match next {
            Some((at, neg_next)) => {
                out.push((negative, &rest[..at]));
                negative = neg_next;
                rest = &rest[at + 3..];
            }
            None => {
                out.push((negative, rest));
                break;
            }
        }
    }
    if out.iter().any(|(_, t)| t.is_empty() || t.trim() != *t) {
        return Err(Error::Syntax(format!("malformed separators in `{s}`")));
    }
    Ok(out)
}

fn parse_int<T: std::str::FromStr>(s: &str, what: &str) -> Result<T> {
    if s.is_empty() || s.starts_with('+') {
        return Err(Error::Syntax(format!("bad {what} `{s}`")));
    }
    s.parse()
        .map_err(|_| Error::Syntax(format!("bad {what} `{s}`")))
}

fn parse_term(term: &str) -> Result<(BigInt, i64)> {
    let (coeff, power) = match term.split_once('*') {
        Some((c, p)) => (parse_int::<BigInt>(c, "coefficient")?, p),
        None if term.starts_with('a') => (BigInt::one(), term),
        None => {
            if term.starts_with('-') {
                return Err(Error::Syntax(format!("bad coefficient `{term}`")));
            }
            return Ok((parse_int::<BigInt>(term, "coefficient")?, 0));
        }
    };
    if coeff.is_negative() {
        return Err(Error::Syntax(format!("signed coefficient in `{term}`")));
    }
    let exp = power
        .strip_prefix("a^")
        .ok_or_else(|| Error::Syntax(format!("expected `a^<int>` in `{term}`")))?;
    Ok((coeff, parse_int::<i64>(exp, "exponent")?))
}

impl fmt::Display for LPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "a^{e}")?;
            } else {
                write!(f, "{mag}*a^{e}")?;
            }
        }
        Ok(())
    }
}
