//! Formal connected sums of two-strand torus knots and named table knots.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};
use crate::poly::LPoly1;
use crate::ring::Ring;
use crate::table::KnotTable;
use crate::torus::{torus_eval_mod, trivializing_exponent};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    /// A table knot, possibly mirrored.
    Named { id: String, mirrored: bool },
    /// `T(2,n)` with `n` odd.
    Torus(i64),
}

impl Factor {
    pub fn named(id: impl Into<String>) -> Self {
        Factor::Named {
            id: id.into(),
            mirrored: false,
        }
    }

    pub fn torus(n: i64) -> Result<Self> {
        if n % 2 == 0 {
            return Err(Error::Syntax(format!("T(2,{n}) is a link, not a knot")));
        }
        Ok(Factor::Torus(n))
    }

    pub fn mirror(&self) -> Self {
        match self {
            Factor::Named { id, mirrored } => Factor::Named {
                id: id.clone(),
                mirrored: !mirrored,
            },
            Factor::Torus(n) => Factor::Torus(-n),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Named {
                id,
                mirrored: false,
            } => write!(f, "{id}"),
            Factor::Named { id, mirrored: true } => write!(f, "{id}*"),
            Factor::Torus(n) => write!(f, "T(2,{n})"),
        }
    }
}

/// A connected sum of factors. Equality is multiset equality; the empty
/// sum is the unknot `O`. Factor order is kept for display and braid words.
#[derive(Debug, Clone, Default)]
pub struct KnotExpr {
    factors: Vec<Factor>,
}

impl KnotExpr {
    pub fn unknot() -> Self {
        KnotExpr::default()
    }

    pub fn from_factors(factors: Vec<Factor>) -> Self {
        KnotExpr { factors }
    }

    pub fn torus(n: i64) -> Result<Self> {
        Ok(KnotExpr {
            factors: vec![Factor::torus(n)?],
        })
    }

    pub fn named(id: impl Into<String>) -> Self {
        KnotExpr {
            factors: vec![Factor::named(id)],
        }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn is_unknot(&self) -> bool {
        self.factors.is_empty()
    }

    fn sorted(&self) -> Vec<&Factor> {
        let mut v: Vec<&Factor> = self.factors.iter().collect();
        v.sort();
        v
    }

    pub fn mirror(&self) -> Self {
        KnotExpr {
            factors: self.factors.iter().map(Factor::mirror).collect(),
        }
    }

    pub fn connect(&self, other: &KnotExpr) -> Self {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        KnotExpr { factors }
    }

    /// `P(a, N) mod p` as the product of the factor values.
    ///
    /// Table knots only carry their value at `z = 1` mod 2, which also
    /// covers every odd `N` at `p = 2`.
    pub fn eval_mod(&self, p: u64, eval: i64, table: &KnotTable) -> Result<LPoly1> {
        let ring = Ring::modular(p)?;
        let mut acc = LPoly1::one(ring);
        for f in &self.factors {
            let value = match f {
                Factor::Torus(n) => torus_eval_mod(*n, p, eval)?,
                Factor::Named { id, mirrored } => {
                    let rec = table
                        .get(id)
                        .ok_or_else(|| Error::UnknownKnot(id.clone()))?;
                    if p != 2 || eval.rem_euclid(2) != 1 {
                        return Err(Error::UnsupportedEvaluation {
                            name: id.clone(),
                            prime: p,
                            eval,
                        });
                    }
                    if *mirrored {
                        rec.poly.mirror()
                    } else {
                        rec.poly.clone()
                    }
                }
            };
            acc = &acc * &value;
        }
        Ok(acc)
    }

    /// Braid `σ₁^{n₁} σ₂^{n₂} … σ_k^{n_k}` on `k + 1` strands whose closure
    /// is the connected sum of the torus factors.
    pub fn braid_word(&self) -> Result<BraidWord> {
        let mut letters = Vec::new();
        for (i, f) in self.factors.iter().enumerate() {
            match f {
                Factor::Torus(n) => {
                    let l = Letter::new(i as u16 + 1, *n > 0);
                    letters.extend(std::iter::repeat_n(l, n.unsigned_abs() as usize));
                }
                Factor::Named { .. } => return Err(Error::NamedFactorPresent(f.to_string())),
            }
        }
        BraidWord::new(self.factors.len() as u16 + 1, letters)
    }

    /// Upper bound for the braid index from `b(K₁#K₂) = b(K₁) + b(K₂) − 1`.
    pub fn braid_index_bound(&self, table: &KnotTable) -> Result<u32> {
        let mut total = 1u32;
        for f in &self.factors {
            let b = match f {
                Factor::Torus(n) if n.abs() >= 3 => 2,
                Factor::Torus(_) => 1,
                Factor::Named { id, .. } => {
                    table
                        .get(id)
                        .ok_or_else(|| Error::UnknownKnot(id.clone()))?
                        .braid_index
                }
            };
            total += b - 1;
        }
        Ok(total)
    }
}

impl PartialEq for KnotExpr {
    fn eq(&self, other: &Self) -> bool {
        self.sorted() == other.sorted()
    }
}

impl Eq for KnotExpr {}

impl Hash for KnotExpr {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.sorted().hash(state);
    }
}

impl fmt::Display for KnotExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "O");
        }
        for (i, x) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "#")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for KnotExpr {
    type Err = Error;

    /// `3_1*#T(2,-7)`; `O` is the unknot.
    fn from_str(s: &str) -> Result<Self> {
        let mut factors = Vec::new();
        for part in s.split('#') {
            let part = part.trim();
            if part == "O" {
                continue;
            }
            if let Some(inner) = part.strip_prefix("T(2,").and_then(|r| r.strip_suffix(')')) {
                let n: i64 = inner
                    .trim()
                    .parse()
                    .map_err(|_| Error::Syntax(format!("bad torus factor `{part}`")))?;
                factors.push(Factor::torus(n)?);
                continue;
            }
            let (id, mirrored) = match part.strip_suffix('*') {
                Some(id) => (id, true),
                None => (part, false),
            };
            if id.is_empty() || !id.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::Syntax(format!("bad knot name `{part}`")));
            }
            factors.push(Factor::Named {
                id: id.to_string(),
                mirrored,
            });
        }
        Ok(KnotExpr { factors })
    }
}

/// `T(2,M+1) # T(2,−(M+1))`, whose value at `z = N` is `1 mod p`.
pub fn trivial_knot(p: u64, eval: i64) -> Result<KnotExpr> {
    let m = trivializing_exponent(p, eval)? as i64;
    let expr = KnotExpr::from_factors(vec![Factor::Torus(m + 1), Factor::Torus(-(m + 1))]);
    let value = expr.eval_mod(p, eval, &KnotTable::default())?;
    assert!(value.is_one(), "{expr} evaluates to {value} mod {p}");
    Ok(expr)
}

/// Result of moving a polynomial's minimal degree into `[0, 2m−1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftNormalization {
    pub l: u64,
    pub sign: i8,
    pub shifted: LPoly1,
    period: u64,
}

impl ShiftNormalization {
    /// The torus summand `T(2, sign·(2lm+1))` realizing the shift, if any.
    pub fn addend(&self) -> Option<KnotExpr> {
        (self.l > 0).then(|| {
            let n = (2 * self.l * self.period + 1) as i64;
            KnotExpr::from_factors(vec![Factor::Torus(i64::from(self.sign) * n)])
        })
    }
}

/// Multiplies `q` by `a^{±2lm}` with minimal `l` so that its minimal degree
/// lands in `[0, 2m−1]`.
pub fn normalize_shift(q: &LPoly1, m: u64) -> Result<ShiftNormalization> {
    assert!(m >= 1, "period must be positive");
    let min = q.min_degree().ok_or(Error::ZeroPolynomial)?;
    let width = 2 * m as i64;
    let shift = -min.div_euclid(width) * width;
    let sign = if shift < 0 { -1 } else { 1 };
    Ok(ShiftNormalization {
        l: (shift.unsigned_abs()) / (2 * m),
        sign,
        shifted: q.shift(shift),
        period: m,
    })
}
