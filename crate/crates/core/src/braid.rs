//! Braid words and their text form.

use std::fmt;

use crate::error::{Error, Result};

/// A braid generator `σᵢ^{±1}`, stored as `±i` with `i ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i16);

impl Letter {
    pub fn new(generator: u16, positive: bool) -> Self {
        assert!(generator >= 1, "generators are 1-based");
        let g = generator as i16;
        Letter(if positive { g } else { -g })
    }

    pub fn pos(generator: u16) -> Self {
        Letter::new(generator, true)
    }

    pub fn neg(generator: u16) -> Self {
        Letter::new(generator, false)
    }

    pub fn generator(self) -> u16 {
        self.0.unsigned_abs()
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }

    pub(crate) fn raw(self) -> i16 {
        self.0
    }

    pub(crate) fn from_raw(v: i16) -> Self {
        debug_assert!(v != 0);
        Letter(v)
    }

    /// Total order used for canonical forms: by generator, positive first.
    pub(crate) fn key(self) -> (u16, bool) {
        (self.generator(), !self.is_positive())
    }
}

/// A word in the braid group `B_n` with an explicit strand count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: u16,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: u16, letters: Vec<Letter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidBraid(
                "a braid needs at least one strand".into(),
            ));
        }
        if let Some(l) = letters.iter().find(|l| l.generator() >= strands) {
            return Err(Error::InvalidBraid(format!(
                "generator s{} out of range for {strands} strands",
                l.generator()
            )));
        }
        Ok(BraidWord { strands, letters })
    }

    /// Builds a word from signed generator indices, e.g. `[1, -2, 1, -2]`.
    pub fn from_signed(strands: u16, letters: &[i16]) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::InvalidBraid("generator index 0".into()));
        }
        Self::new(
            strands,
            letters.iter().map(|&v| Letter::from_raw(v)).collect(),
        )
    }

    pub fn empty(strands: u16) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn strands(&self) -> u16 {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn signed(&self) -> Vec<i16> {
        self.letters.iter().map(|l| l.raw()).collect()
    }

    /// Appends `σ_n^{±1}` on one extra strand (Markov stabilization).
    pub fn stabilize(&self, positive: bool) -> Self {
        let mut letters = self.letters.clone();
        letters.push(Letter::new(self.strands, positive));
        BraidWord {
            strands: self.strands + 1,
            letters,
        }
    }

    /// Concatenation on the larger of the two strand counts.
    pub fn concat(&self, other: &BraidWord) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord {
            strands: self.strands.max(other.strands),
            letters,
        }
    }

    /// Number of components of the closure: cycles of the induced permutation.
    pub fn closure_components(&self) -> usize {
        let n = self.strands as usize;
        let mut perm: Vec<usize> = (0..n).collect();
        for l in &self.letters {
            let i = l.generator() as usize - 1;
            perm.swap(i, i + 1);
        }
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = perm[j];
            }
        }
        cycles
    }

    /// Parses `s1^3 s2^-1 s1`: whitespace-separated letters with an
    /// optional integer exponent.
    pub fn parse(strands: u16, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let body = tok
                .strip_prefix('s')
                .ok_or_else(|| Error::Syntax(format!("expected `s<i>` in `{tok}`")))?;
            let (gen, exp) = match body.split_once('^') {
                Some((g, e)) => (g, e),
                None => (body, "1"),
            };
            let gen: u16 = gen
                .parse()
                .ok()
                .filter(|&g| g >= 1)
                .ok_or_else(|| Error::Syntax(format!("bad generator in `{tok}`")))?;
            let exp: i32 = exp
                .parse()
                .ok()
                .filter(|&e| e != 0)
                .ok_or_else(|| Error::Syntax(format!("bad exponent in `{tok}`")))?;
            let letter = Letter::new(gen, exp > 0);
            letters.extend(std::iter::repeat_n(letter, exp.unsigned_abs() as usize));
        }
        Self::new(strands, letters)
    }
}

impl fmt::Display for BraidWord {
    /// Runs of equal letters are written with an exponent: `s1^3 s2^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let run = self.letters[i..].iter().take_while(|&&x| x == l).count();
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let exp = if l.is_positive() {
                run as i64
            } else {
                -(run as i64)
            };
            if exp == 1 {
                write!(f, "s{}", l.generator())?;
            } else {
                write!(f, "s{}^{}", l.generator(), exp)?;
            }
            i += run;
        }
        Ok(())
    }
}
