//! Words over the generators `x_1, …, x_r` and their rotation orbits.
//!
//! The cyclic group of order `m` acts on words of length `m` by rotation; an
//! orbit is a cyclical word (a necklace). Each orbit is represented by its
//! lexicographically least rotation.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    letters: Vec<u32>,
}

impl Word {
    /// A word over `{x_1, …, x_r}` from 1-based letter indices.
    pub fn new(letters: Vec<u32>, r: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::EmptyAlphabet);
        }
        if let Some(&letter) = letters.iter().find(|&&l| l == 0 || l > r) {
            return Err(Error::LetterOutOfRange { letter, r });
        }
        Ok(Self { letters })
    }

    pub(crate) fn from_letters(letters: Vec<u32>) -> Self {
        Self { letters }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Parses the comma-separated form `"1,2,1"`. The empty string is the empty word.
    pub fn parse(s: &str, r: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::EmptyAlphabet);
        }
        if s.trim().is_empty() {
            return Ok(Self::empty());
        }
        let mut letters = Vec::new();
        let mut offset = 0;
        for token in s.split(',') {
            let trimmed = token.trim();
            let position = offset + token.find(trimmed).unwrap_or(0);
            let letter = trimmed
                .strip_prefix('x')
                .unwrap_or(trimmed)
                .parse::<u32>()
                .map_err(|_| Error::WordParse { position, token: trimmed.to_string() })?;
            if letter == 0 || letter > r {
                return Err(Error::WordParse {
                    position,
                    token: format!("{trimmed} (letters run from 1 to {r})"),
                });
            }
            letters.push(letter);
            offset += token.len() + 1;
        }
        Ok(Self { letters })
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The word with its last `k` letters moved to the front, matching the
    /// cyclic operator `t` applied `k` times to `x_{i_1} ⊗ … ⊗ x_{i_m}`.
    pub fn rotate(&self, k: usize) -> Word {
        if self.letters.is_empty() {
            return self.clone();
        }
        let mut letters = self.letters.clone();
        letters.rotate_right(k % self.letters.len());
        Word { letters }
    }

    /// Comma-separated form, the inverse of [`Word::parse`].
    pub fn to_csv(&self) -> String {
        self.letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| format!("x{l}")).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A rotation orbit of words, held as its least rotation together with the
/// orbit length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicalWord {
    representative: Word,
    period: usize,
}

impl CyclicalWord {
    pub fn representative(&self) -> &Word {
        &self.representative
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn len(&self) -> usize {
        self.representative.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representative.is_empty()
    }
}

impl fmt::Display for CyclicalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "[0]")
        } else {
            write!(f, "[{}]", self.representative)
        }
    }
}

/// Least rotation and period of `w`. The empty word has period 1.
pub fn canonicalize(w: &Word) -> CyclicalWord {
    let m = w.len();
    if m == 0 {
        return CyclicalWord { representative: Word::empty(), period: 1 };
    }
    let period = (1..=m).find(|&u| m % u == 0 && w.rotate(u) == *w).unwrap_or(m);
    let representative = (0..period).map(|u| w.rotate(u)).min().expect("nonempty orbit");
    CyclicalWord { representative, period }
}

/// The distinct rotations of `w`, starting at the canonical representative.
pub fn rotations(w: &Word) -> Result<Vec<Word>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let c = canonicalize(w);
    Ok((0..c.period).map(|u| c.representative.rotate(u)).collect())
}

/// Every cyclical word of length `m` over `r` letters, sorted by representative.
pub fn enumerate_necklaces(r: u32, m: usize) -> Vec<CyclicalWord> {
    assert!(r >= 1, "alphabet must be nonempty");
    if m == 0 {
        return vec![canonicalize(&Word::empty())];
    }
    let mut out = Vec::new();
    let mut letters = vec![1u32; m];
    loop {
        let w = Word::from_letters(letters.clone());
        let c = canonicalize(&w);
        // Each orbit is recorded once, at its least rotation.
        if c.representative == w {
            out.push(c);
        }
        // Odometer step in lexicographic order.
        let mut pos = m;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if letters[pos] < r {
                letters[pos] += 1;
                for l in &mut letters[pos + 1..] {
                    *l = 1;
                }
                break;
            }
        }
    }
}

/// Count of length-`m` necklaces over `r` letters from the totient formula.
pub fn necklace_count(r: u32, m: usize) -> u64 {
    if m == 0 {
        return 1;
    }
    let totient = |mut n: usize| {
        let mut result = n;
        let mut p = 2;
        while p * p <= n {
            if n % p == 0 {
                while n % p == 0 {
                    n /= p;
                }
                result -= result / p;
            }
            p += 1;
        }
        if n > 1 {
            result -= result / n;
        }
        result as u64
    };
    let total: u64 = (1..=m)
        .filter(|d| m % d == 0)
        .map(|d| totient(d) * (r as u64).pow((m / d) as u32))
        .sum();
    total / m as u64
}
