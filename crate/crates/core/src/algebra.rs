//! The square-zero algebra `A = κ[x_1, …, x_r]/(x_i x_j)` and its cyclic bar
//! construction.
//!
//! An `n`-simplex is an elementary tensor `a_0 ⊗ … ⊗ a_n` of basis elements
//! of `A`. Faces multiply neighbouring factors (the last face multiplies
//! `a_n` into `a_0`), degeneracies insert a `1`, and the cyclic operator moves
//! the last factor to the front.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{GroundRing, RingElement};
use crate::words::{canonicalize, CyclicalWord, Word};

/// A κ-basis element of `A`. The derived order is `1 < x_1 < … < x_r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisElement {
    One,
    X(u32),
}

impl BasisElement {
    /// Position in the order `1, x_1, …, x_r`.
    pub fn code(self) -> usize {
        match self {
            BasisElement::One => 0,
            BasisElement::X(i) => i as usize,
        }
    }

    pub fn from_code(code: usize) -> Self {
        if code == 0 {
            BasisElement::One
        } else {
            BasisElement::X(code as u32)
        }
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisElement::One => write!(f, "1"),
            BasisElement::X(i) => write!(f, "x{i}"),
        }
    }
}

/// Product in `A`; `None` is the zero element.
pub fn mul_basis(a: BasisElement, b: BasisElement) -> Option<BasisElement> {
    match (a, b) {
        (BasisElement::One, y) => Some(y),
        (x, BasisElement::One) => Some(x),
        (BasisElement::X(_), BasisElement::X(_)) => None,
    }
}

/// An elementary tensor of degree `factors.len() - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex {
    factors: Vec<BasisElement>,
}

impl Simplex {
    pub fn new(factors: Vec<BasisElement>) -> Self {
        assert!(!factors.is_empty(), "a simplex has at least one factor");
        Self { factors }
    }

    /// `1 ⊗ … ⊗ 1` in degree `n`.
    pub fn ones(n: usize) -> Self {
        Self { factors: vec![BasisElement::One; n + 1] }
    }

    /// `x_{w_1} ⊗ … ⊗ x_{w_m}`, a simplex of degree `m - 1`.
    pub fn from_word(w: &Word) -> Result<Self> {
        if w.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(Self { factors: w.letters().iter().map(|&l| BasisElement::X(l)).collect() })
    }

    /// `1 ⊗ x_{w_1} ⊗ … ⊗ x_{w_m}`, a simplex of degree `m`.
    pub fn one_then_word(w: &Word) -> Self {
        let mut factors = vec![BasisElement::One];
        factors.extend(w.letters().iter().map(|&l| BasisElement::X(l)));
        Self { factors }
    }

    /// Parses the text form `1⊗x1⊗x2` (ASCII `*` is accepted in place of `⊗`).
    pub fn parse(s: &str, r: u32) -> Result<Self> {
        let mut factors = Vec::new();
        let mut position = 0;
        for token in s.split(['⊗', '*']) {
            let t = token.trim();
            let factor = if t == "1" {
                BasisElement::One
            } else {
                let i = t
                    .strip_prefix('x')
                    .and_then(|d| d.parse::<u32>().ok())
                    .filter(|&i| i >= 1 && i <= r)
                    .ok_or_else(|| Error::WordParse { position, token: t.to_string() })?;
                BasisElement::X(i)
            };
            factors.push(factor);
            position += token.len() + '⊗'.len_utf8();
        }
        Ok(Self { factors })
    }

    pub fn degree(&self) -> usize {
        self.factors.len() - 1
    }

    pub fn factors(&self) -> &[BasisElement] {
        &self.factors
    }

    /// The X-letters in slot order, including slot 0.
    pub fn letters(&self) -> Vec<u32> {
        self.factors
            .iter()
            .filter_map(|f| match f {
                BasisElement::X(i) => Some(*i),
                BasisElement::One => None,
            })
            .collect()
    }

    /// `d_i`, or `None` when the product of the merged factors vanishes.
    pub fn face(&self, i: usize) -> Result<Option<Simplex>> {
        let n = self.degree();
        if n == 0 {
            return Err(Error::DegreeZero);
        }
        if i > n {
            return Err(Error::IndexOutOfRange { index: i, degree: n });
        }
        let mut factors = Vec::with_capacity(n);
        if i < n {
            let Some(p) = mul_basis(self.factors[i], self.factors[i + 1]) else {
                return Ok(None);
            };
            factors.extend_from_slice(&self.factors[..i]);
            factors.push(p);
            factors.extend_from_slice(&self.factors[i + 2..]);
        } else {
            let Some(p) = mul_basis(self.factors[n], self.factors[0]) else {
                return Ok(None);
            };
            factors.push(p);
            factors.extend_from_slice(&self.factors[1..n]);
        }
        Ok(Some(Simplex { factors }))
    }

    /// `s_i`: inserts `1` after slot `i`.
    pub fn degeneracy(&self, i: usize) -> Result<Simplex> {
        let n = self.degree();
        if i > n {
            return Err(Error::IndexOutOfRange { index: i, degree: n });
        }
        let mut factors = self.factors.clone();
        factors.insert(i + 1, BasisElement::One);
        Ok(Simplex { factors })
    }

    /// `t_n`: moves the last factor to the front, without sign.
    pub fn cyclic_op(&self) -> Simplex {
        let mut factors = self.factors.clone();
        factors.rotate_right(1);
        Simplex { factors }
    }

    /// True when an interior slot `1..=n` holds `1`, i.e. the simplex lies in
    /// the image of some `s_i`.
    pub fn is_degenerate(&self) -> bool {
        self.factors[1..].contains(&BasisElement::One)
    }

    /// The cyclical word spelled by the letters of the simplex.
    pub fn summand(&self) -> CyclicalWord {
        canonicalize(&Word::from_letters(self.letters()))
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|b| b.to_string()).collect();
        write!(f, "{}", parts.join("⊗"))
    }
}

pub fn is_degenerate(s: &Simplex) -> bool {
    s.is_degenerate()
}

pub fn summand_of(s: &Simplex) -> CyclicalWord {
    s.summand()
}

/// A κ-linear combination of simplices of one degree. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    ring: GroundRing,
    degree: usize,
    terms: BTreeMap<Simplex, RingElement>,
}

impl Chain {
    pub fn zero(ring: GroundRing, degree: usize) -> Self {
        Self { ring, degree, terms: BTreeMap::new() }
    }

    pub fn from_simplex(ring: GroundRing, s: Simplex) -> Self {
        let mut c = Self::zero(ring, s.degree());
        c.terms.insert(s, ring.one());
        c
    }

    /// Builds a chain from `(coefficient, simplex)` pairs; all simplices must
    /// have degree `degree`.
    pub fn from_terms(
        ring: GroundRing,
        degree: usize,
        terms: impl IntoIterator<Item = (RingElement, Simplex)>,
    ) -> Result<Self> {
        let mut c = Self::zero(ring, degree);
        for (coeff, s) in terms {
            ring.check(&coeff)?;
            c.add_term(&coeff, s)?;
        }
        Ok(c)
    }

    pub fn ring(&self) -> GroundRing {
        self.ring
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Simplex, &RingElement)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, s: &Simplex) -> RingElement {
        self.terms.get(s).cloned().unwrap_or_else(|| self.ring.zero())
    }

    /// Adds `coeff · s` in place.
    pub fn add_term(&mut self, coeff: &RingElement, s: Simplex) -> Result<()> {
        if s.degree() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: s.degree() });
        }
        if self.ring.is_zero(coeff) {
            return Ok(());
        }
        let ring = self.ring;
        match self.terms.get_mut(&s) {
            Some(existing) => {
                let updated = ring.add(existing, coeff);
                if ring.is_zero(&updated) {
                    self.terms.remove(&s);
                } else {
                    *existing = updated;
                }
            }
            None => {
                self.terms.insert(s, coeff.clone());
            }
        }
        Ok(())
    }

    fn check_compatible(&self, other: &Chain) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch { expected: self.ring, found: other.ring });
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: other.degree });
        }
        Ok(())
    }

    pub fn add(&self, other: &Chain) -> Result<Chain> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(c, s.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Chain) -> Result<Chain> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Chain {
        self.scale(&self.ring.from_i64(-1))
    }

    pub fn scale(&self, a: &RingElement) -> Chain {
        let mut out = Chain::zero(self.ring, self.degree);
        for (s, c) in &self.terms {
            let v = self.ring.mul(a, c);
            if !self.ring.is_zero(&v) {
                out.terms.insert(s.clone(), v);
            }
        }
        out
    }

    /// Applies a linear map defined on simplices. `f` returns the image
    /// simplex with a sign, or `None` for zero.
    pub(crate) fn map_simplices(
        &self,
        degree: usize,
        mut f: impl FnMut(&Simplex) -> Result<Option<(Simplex, bool)>>,
    ) -> Result<Chain> {
        let mut out = Chain::zero(self.ring, degree);
        let minus = self.ring.from_i64(-1);
        for (s, c) in &self.terms {
            if let Some((image, negate)) = f(s)? {
                let coeff = if negate { self.ring.mul(&minus, c) } else { c.clone() };
                out.add_term(&coeff, image)?;
            }
        }
        Ok(out)
    }

    /// Keeps the terms whose simplex satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Simplex) -> bool) -> Chain {
        Chain {
            ring: self.ring,
            degree: self.degree,
            terms: self.terms.iter().filter(|(s, _)| keep(s)).map(|(s, c)| (s.clone(), c.clone())).collect(),
        }
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let one = self.ring.one();
        let minus_one = self.ring.from_i64(-1);
        for (k, (s, c)) in self.terms.iter().enumerate() {
            let negative = (*c == minus_one && minus_one != one)
                || matches!(c, RingElement::Integer(v) if v < &0.into())
                || matches!(c, RingElement::Rational(v) if v < &num_rational::BigRational::from_integer(0.into()));
            let shown = if negative { self.ring.neg(c) } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if shown != one {
                write!(f, "{shown}·")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// `d_i` on a single simplex as a chain.
pub fn face(ring: GroundRing, s: &Simplex, i: usize) -> Result<Chain> {
    Ok(match s.face(i)? {
        Some(t) => Chain::from_simplex(ring, t),
        None => Chain::zero(ring, s.degree() - 1),
    })
}

pub fn degeneracy(s: &Simplex, i: usize) -> Result<Simplex> {
    s.degeneracy(i)
}

pub fn cyclic_op(s: &Simplex) -> Simplex {
    s.cyclic_op()
}

/// Hochschild boundary `b = Σ (-1)^i d_i`.
pub fn boundary(c: &Chain) -> Result<Chain> {
    let n = c.degree();
    if n == 0 {
        return Err(Error::DegreeZero);
    }
    let ring = c.ring();
    let mut out = Chain::zero(ring, n - 1);
    let minus = ring.from_i64(-1);
    for (s, coeff) in c.terms() {
        let negated = ring.mul(&minus, coeff);
        for i in 0..=n {
            if let Some(t) = s.face(i)? {
                out.add_term(if i % 2 == 0 { coeff } else { &negated }, t)?;
            }
        }
    }
    Ok(out)
}

/// Face, degeneracy and cyclic operator extended linearly to chains.
pub fn face_chain(c: &Chain, i: usize) -> Result<Chain> {
    if c.degree() == 0 {
        return Err(Error::DegreeZero);
    }
    c.map_simplices(c.degree() - 1, |s| Ok(s.face(i)?.map(|t| (t, false))))
}

pub fn degeneracy_chain(c: &Chain, i: usize) -> Result<Chain> {
    c.map_simplices(c.degree() + 1, |s| Ok(Some((s.degeneracy(i)?, false))))
}

pub fn cyclic_chain(c: &Chain) -> Result<Chain> {
    c.map_simplices(c.degree(), |s| Ok(Some((s.cyclic_op(), false))))
}
