//! Fibonacci numbers, Pisano periods and the Legendre symbol (p/5).

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::Result;
use crate::poly::require_prime;

/// Memoized Fibonacci sequence `F₀ = 0, F₁ = 1`.
#[derive(Debug, Clone)]
pub struct FibCache {
    values: Vec<BigInt>,
}

impl Default for FibCache {
    fn default() -> Self {
        Self::new()
    }
}

impl FibCache {
    pub fn new() -> Self {
        FibCache {
            values: vec![BigInt::zero(), BigInt::from(1)],
        }
    }

    pub fn get(&mut self, n: usize) -> &BigInt {
        while self.values.len() <= n {
            let k = self.values.len();
            let next = &self.values[k - 1] + &self.values[k - 2];
            self.values.push(next);
        }
        &self.values[n]
    }

    pub fn get_mod(&mut self, n: usize, m: u64) -> u64 {
        (self.get(n) % BigInt::from(m))
            .to_u64()
            .expect("residue fits")
    }
}

/// Period of the Fibonacci sequence modulo `m ≥ 2`.
pub fn pisano_period(m: u64, cache: &mut FibCache) -> usize {
    let mut n = 1;
    loop {
        if cache.get_mod(n, m) == 0 && cache.get_mod(n + 1, m) == 1 % m {
            return n;
        }
        n += 1;
    }
}

/// Legendre symbol `(p/5)` for a prime `p`.
pub fn legendre5(p: u64) -> Result<i8> {
    require_prime(p)?;
    Ok(match p % 5 {
        0 => 0,
        1 | 4 => 1,
        _ => -1,
    })
}

/// Returns `n = p − (p/5)` after asserting `F_n ≡ 0 (mod p)`.
///
/// # Panics
///
/// If the congruence fails, which would be an arithmetic bug.
pub fn fib_divisibility_check(p: u64) -> Result<u64> {
    let n = (p as i64 - i64::from(legendre5(p)?)) as u64;
    let (mut f0, mut f1) = (0u64, 1u64);
    for _ in 0..n {
        (f0, f1) = (f1, (f0 + f1) % p);
    }
    assert_eq!(f0, 0, "F_{n} is not divisible by {p}");
    Ok(n)
}
