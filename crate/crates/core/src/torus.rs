//! HOMFLY polynomials of the two-strand torus links `T(2,n)`.
//!
//! Writing
//!
//! ```text
//! P(T(2,2k))   = a_k(z)·a^{2k-1} + b_k(z)·a^{2k+1}
//! P(T(2,2k+1)) = c_k(z)·a^{2k}   + d_k(z)·a^{2k+2}
//! ```
//!
//! the skein relation `P(n+2) = a²·P(n) + a·z·P(n+1)` becomes a linear
//! recurrence on the quadruple `(a_k, b_k, c_k, d_k)` starting from
//! `(z⁻¹, −z⁻¹, 1, 0)`. After `z = N` and reduction mod `p` the quadruple
//! lives in a finite set and the step map is invertible, so the orbit is
//! purely periodic. At the period `m`, `P(T(2,2m+1))(a,N) ≡ a^{2m}`.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::fib::FibCache;
use crate::poly::{require_prime, LPoly1, LPoly2};
use crate::ring::{inv_mod, Ring};

#[derive(Default)]
struct TorusMemo {
    // nonneg[k] = P(T(2,k)), neg[k] = P(T(2,-k))
    nonneg: Vec<LPoly2>,
    neg: Vec<LPoly2>,
}

fn memo() -> &'static Mutex<TorusMemo> {
    static MEMO: OnceLock<Mutex<TorusMemo>> = OnceLock::new();
    MEMO.get_or_init(|| {
        Mutex::new(TorusMemo {
            nonneg: vec![LPoly2::delta(), LPoly2::one(Ring::Integers)],
            neg: vec![LPoly2::delta(), LPoly2::one(Ring::Integers)],
        })
    })
}

/// Exact HOMFLY polynomial of the closure of `σ₁ⁿ` in `B₂`.
///
/// Nonnegative `n` ascend with `P(n+2) = a²P(n) + azP(n+1)`; negative `n`
/// descend with the same relation solved for the lowest term,
/// `P(n) = a⁻²P(n+2) − a⁻¹zP(n+1)`.
pub fn torus_poly(n: i64) -> LPoly2 {
    let ring = Ring::Integers;
    let a2 = LPoly2::term(ring, 2, 0, 1);
    let az = LPoly2::term(ring, 1, 1, 1);
    let a_inv2 = LPoly2::term(ring, -2, 0, 1);
    let a_inv_z = LPoly2::term(ring, -1, 1, 1);

    let mut memo = memo().lock().expect("torus memo poisoned");
    let idx = n.unsigned_abs() as usize;
    if n >= 0 {
        while memo.nonneg.len() <= idx {
            let k = memo.nonneg.len();
            let next = &(&a2 * &memo.nonneg[k - 2]) + &(&az * &memo.nonneg[k - 1]);
            memo.nonneg.push(next);
        }
        memo.nonneg[idx].clone()
    } else {
        while memo.neg.len() <= idx {
            let k = memo.neg.len();
            // P(-k) from P(-k+2) and P(-k+1)
            let next = &(&a_inv2 * &memo.neg[k - 2]) - &(&a_inv_z * &memo.neg[k - 1]);
            memo.neg.push(next);
        }
        memo.neg[idx].clone()
    }
}

/// One step of the coefficient recurrence over the integers at `z`.
///
/// The updates are sequential: `c_k` uses the new `a_k` and `d_k` the new `b_k`.
pub fn integer_step(quad: &[BigInt; 4], z: &BigInt) -> [BigInt; 4] {
    let [a, b, c, d] = quad;
    let a1 = a + z * c;
    let b1 = b + z * d;
    let c1 = c + z * &a1;
    let d1 = d + z * &b1;
    [a1, b1, c1, d1]
}

/// The quadruple `(a_k, b_k, c_k, d_k)` over `Z/p` after `z = N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TorusState {
    p: u64,
    n: u64,
    k: u64,
    quad: [u64; 4],
}

impl TorusState {
    /// State at `k = 0`: `(N⁻¹, −N⁻¹, 1, 0)`.
    pub fn initial(p: u64, eval: i64) -> Result<Self> {
        require_prime(p)?;
        let n = eval.rem_euclid(p as i64) as u64;
        let inv = inv_mod(n, p).ok_or(Error::ZeroEvaluation(p))?;
        Ok(TorusState {
            p,
            n,
            k: 0,
            quad: [inv, (p - inv) % p, 1 % p, 0],
        })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// `N mod p`.
    pub fn eval_point(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn quad(&self) -> [u64; 4] {
        self.quad
    }

    pub fn step(&self) -> Self {
        let (p, z) = (self.p as u128, self.n as u128);
        let [a, b, c, d] = self.quad.map(u128::from);
        let a1 = (a + z * c) % p;
        let b1 = (b + z * d) % p;
        let c1 = (c + z * a1) % p;
        let d1 = (d + z * b1) % p;
        TorusState {
            k: self.k + 1,
            quad: [a1, b1, c1, d1].map(|x| x as u64),
            ..*self
        }
    }

    /// Advances `steps` times.
    pub fn advance(&self, steps: u64) -> Self {
        (0..steps).fold(*self, |s, _| s.step())
    }
}

/// Minimal `m ≥ 1` with `step^m(initial) = initial`.
pub fn torus_period(p: u64, eval: i64) -> Result<u64> {
    let start = TorusState::initial(p, eval)?;
    let cap = p.saturating_pow(4);
    let mut s = start.step();
    let mut m = 1;
    while s.quad != start.quad {
        assert!(m < cap, "orbit of the torus recurrence is not periodic");
        s = s.step();
        m += 1;
    }
    Ok(m)
}

/// `M` such that `P(T(2,M+1))(a,N) ≡ a^M (mod p)`.
///
/// `M = 2m` for the period `m` when `p ∤ N`; `M = 2p` when `p | N`.
pub fn trivializing_exponent(p: u64, eval: i64) -> Result<u64> {
    require_prime(p)?;
    if eval.rem_euclid(p as i64) == 0 {
        Ok(2 * p)
    } else {
        Ok(2 * torus_period(p, eval)?)
    }
}

/// `P(T(2,n))(a, N) mod p`, read off the modular recurrence.
///
/// Uses the period to shorten the walk; `p | N` goes through
/// [`closed_form_z0`] and is only defined for knots (odd `n`).
pub fn torus_eval_mod(n: i64, p: u64, eval: i64) -> Result<LPoly1> {
    require_prime(p)?;
    let ring = Ring::Mod(p);
    if n < 0 {
        // mirror: a ↦ a⁻¹, z ↦ −z
        return Ok(torus_eval_mod(-n, p, -eval)?.mirror());
    }
    if eval.rem_euclid(p as i64) == 0 {
        if n % 2 == 0 {
            return Err(Error::ZSingular);
        }
        let k = (n as u64).div_ceil(2);
        return closed_form_z0(k).reduce_mod(p);
    }
    let half = (n / 2) as u64;
    let period = torus_period(p, eval)?;
    let quad = TorusState::initial(p, eval)?.advance(half % period).quad();
    let k = half as i64;
    let terms = if n % 2 == 0 {
        [(2 * k - 1, quad[0]), (2 * k + 1, quad[1])]
    } else {
        [(2 * k, quad[2]), (2 * k + 2, quad[3])]
    };
    Ok(LPoly1::from_terms(ring, terms))
}

/// Coefficients of `a^{2k}` and `a^{2k+2}` in `P(T(2,2k+1))(a,1)`:
/// `(F_{2k+2}, −F_{2k})`.
pub fn closed_form_z1(k: u64, fib: &mut FibCache) -> (BigInt, BigInt) {
    let k = k as usize;
    (fib.get(2 * k + 2).clone(), -fib.get(2 * k).clone())
}

/// `P(T(2,2k−1))(a,0) = k·a^{2k−2} − (k−1)·a^{2k}` for `k ≥ 1`.
pub fn closed_form_z0(k: u64) -> LPoly1 {
    assert!(k >= 1, "closed form at z = 0 starts at k = 1");
    let e = 2 * k as i64;
    LPoly1::from_terms(
        Ring::Integers,
        [(e - 2, BigInt::from(k)), (e, -BigInt::from(k - 1))],
    )
}

/// `z`-free part of an integer torus value; used to compare with [`closed_form_z0`].
pub fn at_z_zero(p: &LPoly2) -> LPoly1 {
    LPoly1::from_terms(
        Ring::Integers,
        p.terms()
            .filter(|(e, _)| e.z == 0)
            .map(|(e, c)| (e.a, c.clone())),
    )
}
