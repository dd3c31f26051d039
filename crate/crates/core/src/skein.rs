//! Brute-force HOMFLY polynomials of braid closures.
//!
//! A word is first simplified inside its class under length-preserving
//! moves (cyclic rotation, far commutation, same-sign braid relation):
//! free cancellation, Markov destabilization at either end, and splitting
//! along an unused generator. What remains is resolved with the skein
//! relation, negative crossings first, then squares:
//!
//! ```text
//! P(u σᵢ⁻¹) = a⁻² P(u σᵢ) − a⁻¹ z P(u)
//! P(u σᵢ σᵢ) = a² P(u) + a z P(u σᵢ)
//! ```
//!
//! Every branch lowers (letter count, negative count) lexicographically.
//! Results are memoized on the least word of the class.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};
use crate::poly::LPoly2;
use crate::ring::Ring;

pub const DEFAULT_CLASS_CAP: usize = 100_000;

type Word = Vec<i16>;

enum Simplification {
    /// An equivalent shorter word (cancellation or destabilization).
    Shorter(u16, Word),
    /// The closure splits along the unused generator `g`.
    Split(u16, Word),
}

/// Skein resolver with a memo table; reuse one instance across calls.
#[derive(Debug, Clone)]
pub struct SkeinOracle {
    memo: HashMap<(u16, Word), LPoly2>,
    class_cap: usize,
}

impl Default for SkeinOracle {
    fn default() -> Self {
        Self::new()
    }
}

impl SkeinOracle {
    pub fn new() -> Self {
        Self::with_class_cap(DEFAULT_CLASS_CAP)
    }

    pub fn with_class_cap(class_cap: usize) -> Self {
        SkeinOracle {
            memo: HashMap::new(),
            class_cap,
        }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Lexicographically least word in the move class of `w`.
    pub fn canonicalize(&self, w: &BraidWord) -> Result<BraidWord> {
        let class = self.class_of(w.signed())?;
        let least = least_word(&class);
        Ok(to_braid(w.strands(), least))
    }

    /// Applies free cancellation and destabilization until none applies.
    ///
    /// Split closures are left alone. The result is the least word of its class.
    pub fn reduce(&self, w: &BraidWord) -> Result<BraidWord> {
        let (mut n, mut word) = (w.strands(), w.signed());
        loop {
            free_cancel_cyclic(&mut word);
            let found = self.explore(word.clone(), |m| match simplify(n, m) {
                Some(Simplification::Shorter(n2, w2)) => Some((n2, w2)),
                _ => None,
            })?;
            match found {
                Ok((n2, w2)) => {
                    n = n2;
                    word = w2;
                }
                Err(class) => return Ok(to_braid(n, least_word(&class))),
            }
        }
    }

    /// Exact HOMFLY polynomial of the closure of `w`.
    pub fn homfly_of_closure(&mut self, w: &BraidWord) -> Result<LPoly2> {
        self.resolve(w.strands(), w.signed())
    }

    fn resolve(&mut self, n: u16, mut word: Word) -> Result<LPoly2> {
        free_cancel_cyclic(&mut word);
        if word.is_empty() {
            return Ok(LPoly2::delta().pow(u32::from(n) - 1));
        }
        let raw_key = (n, word.clone());
        if let Some(p) = self.memo.get(&raw_key) {
            return Ok(p.clone());
        }
        let value = match self.explore(word.clone(), |m| simplify(n, m))? {
            Ok(Simplification::Shorter(n2, w2)) => self.resolve(n2, w2)?,
            Ok(Simplification::Split(g, member)) => {
                let (left, right) = split_at_generator(&member, g);
                let lp = self.resolve(g, left)?;
                let rp = self.resolve(n - g, right)?;
                &(&LPoly2::delta() * &lp) * &rp
            }
            Err(class) => {
                let least = least_word(&class).clone();
                let key = (n, least.clone());
                if let Some(p) = self.memo.get(&key) {
                    p.clone()
                } else {
                    let p = self.resolve_crossing(n, &least, &class)?;
                    self.memo.insert(key, p.clone());
                    p
                }
            }
        };
        self.memo.insert(raw_key, value.clone());
        Ok(value)
    }

    fn resolve_crossing(&mut self, n: u16, least: &Word, class: &[Word]) -> Result<LPoly2> {
        let ring = Ring::Integers;
        if let Some(i) = least.iter().position(|&x| x < 0) {
            let mut flipped = least.clone();
            flipped[i] = -flipped[i];
            let mut smoothed = least.clone();
            smoothed.remove(i);
            let plus = self.resolve(n, flipped)?;
            let zero = self.resolve(n, smoothed)?;
            return Ok(
                &(&LPoly2::term(ring, -2, 0, 1) * &plus) - &(&LPoly2::term(ring, -1, 1, 1) * &zero)
            );
        }
        let with_square = std::iter::once(least)
            .chain(class.iter())
            .find_map(|m| cyclic_square(m).map(|i| (m, i)));
        let Some((member, i)) = with_square else {
            return Err(Error::IrreducibleWord(to_braid(n, least).to_string()));
        };
        // Rotate so that the square sits at the end: u σ σ.
        let len = member.len();
        let mut rotated: Word = (0..len).map(|k| member[(i + 2 + k) % len]).collect();
        let sigma = rotated.pop().expect("square");
        rotated.pop();
        let u = rotated;
        let mut u_sigma = u.clone();
        u_sigma.push(sigma);
        let p_u = self.resolve(n, u)?;
        let p_us = self.resolve(n, u_sigma)?;
        Ok(&(&LPoly2::term(ring, 2, 0, 1) * &p_u) + &(&LPoly2::term(ring, 1, 1, 1) * &p_us))
    }

    fn class_of(&self, start: Word) -> Result<Vec<Word>> {
        match self.explore(start, |_| None::<()>)? {
            Ok(()) => unreachable!("visitor never stops early"),
            Err(class) => Ok(class),
        }
    }

    /// Breadth-first search over the move class of `start`.
    ///
    /// Stops early with `Ok(t)` when `visit` returns `Some(t)` on a member;
    /// otherwise returns the full class as `Err(class)`.
    fn explore<T>(
        &self,
        start: Word,
        mut visit: impl FnMut(&Word) -> Option<T>,
    ) -> Result<std::result::Result<T, Vec<Word>>> {
        let mut seen: HashSet<Word> = HashSet::new();
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        seen.insert(start.clone());
        queue.push_back(start);
        let mut next = Vec::new();
        while let Some(w) = queue.pop_front() {
            if let Some(t) = visit(&w) {
                return Ok(Ok(t));
            }
            next.clear();
            neighbours(&w, &mut next);
            for m in next.drain(..) {
                if !seen.contains(&m) {
                    if seen.len() >= self.class_cap {
                        return Err(Error::ClassSizeExceeded(self.class_cap));
                    }
                    seen.insert(m.clone());
                    queue.push_back(m);
                }
            }
            order.push(w);
        }
        Ok(Err(order))
    }
}

/// Canonical form with the default class cap.
pub fn canonicalize(w: &BraidWord) -> Result<BraidWord> {
    SkeinOracle::new().canonicalize(w)
}

/// Reduction with the default class cap.
pub fn reduce(w: &BraidWord) -> Result<BraidWord> {
    SkeinOracle::new().reduce(w)
}

/// HOMFLY polynomial with a fresh memo.
pub fn homfly_of_closure(w: &BraidWord) -> Result<LPoly2> {
    SkeinOracle::new().homfly_of_closure(w)
}

fn to_braid(n: u16, w: &Word) -> BraidWord {
    BraidWord::from_signed(n, w).expect("moves keep generators in range")
}

fn letter_key(x: i16) -> (u16, bool) {
    Letter::from_raw(x).key()
}

fn least_word(class: &[Word]) -> &Word {
    class
        .iter()
        .min_by(|a, b| {
            a.iter()
                .map(|&x| letter_key(x))
                .cmp(b.iter().map(|&x| letter_key(x)))
        })
        .expect("class is nonempty")
}

fn free_cancel_cyclic(w: &mut Word) {
    let mut out: Word = Vec::with_capacity(w.len());
    for &x in w.iter() {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    // cancel around the seam
    let mut lo = 0;
    let mut hi = out.len();
    while hi - lo >= 2 && out[lo] == -out[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    *w = out[lo..hi].to_vec();
}

fn neighbours(w: &Word, out: &mut Vec<Word>) {
    let len = w.len();
    if len < 2 {
        return;
    }
    let mut rot = w[1..].to_vec();
    rot.push(w[0]);
    out.push(rot);
    for i in 0..len - 1 {
        let (x, y) = (w[i], w[i + 1]);
        if (x.abs() - y.abs()).abs() >= 2 {
            let mut m = w.clone();
            m.swap(i, i + 1);
            out.push(m);
        }
    }
    for i in 0..len.saturating_sub(2) {
        let (x, y, z) = (w[i], w[i + 1], w[i + 2]);
        if x == z && (x > 0) == (y > 0) && (x.abs() - y.abs()).abs() == 1 {
            let mut m = w.clone();
            m[i] = y;
            m[i + 1] = x;
            m[i + 2] = y;
            out.push(m);
        }
    }
}

fn cyclic_square(w: &Word) -> Option<usize> {
    let len = w.len();
    if len < 2 {
        return None;
    }
    (0..len).find(|&i| w[i] == w[(i + 1) % len] && (len > 2 || i == 0))
}

fn simplify(n: u16, w: &Word) -> Option<Simplification> {
    let len = w.len();
    if len >= 2 {
        for i in 0..len {
            let j = (i + 1) % len;
            if w[i] == -w[j] {
                let shorter: Word = (0..len)
                    .filter(|&k| k != i && k != j)
                    .map(|k| w[k])
                    .collect();
                return Some(Simplification::Shorter(n, shorter));
            }
        }
    }
    if n < 2 {
        return None;
    }
    let top = (n - 1) as i16;
    let count = |g: i16| w.iter().filter(|x| x.abs() == g).count();
    if count(top) == 1 {
        let shorter = w.iter().copied().filter(|x| x.abs() != top).collect();
        return Some(Simplification::Shorter(n - 1, shorter));
    }
    if count(1) == 1 {
        let shorter = w
            .iter()
            .filter(|x| x.abs() != 1)
            .map(|&x| if x > 0 { x - 1 } else { x + 1 })
            .collect();
        return Some(Simplification::Shorter(n - 1, shorter));
    }
    (1..n as i16)
        .find(|&g| count(g) == 0)
        .map(|g| Simplification::Split(g as u16, w.clone()))
}

/// Splits a word not using `σ_g` into the braids on strands `1..=g` and `g+1..=n`.
fn split_at_generator(w: &Word, g: u16) -> (Word, Word) {
    let g = g as i16;
    let left = w.iter().copied().filter(|x| x.abs() < g).collect();
    let right = w
        .iter()
        .filter(|x| x.abs() > g)
        .map(|&x| if x > 0 { x - g } else { x + g })
        .collect();
    (left, right)
}
