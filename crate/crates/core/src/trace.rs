//! Trace images of Milnor symbols and their projection to one summand.
//!
//! The logarithmic differential of the unit `1 + x_i` is the Hochschild
//! 1-cycle `dlog(1 + x_i) = 1 ⊗ x_i - x_i ⊗ x_i`. The symbol
//! `{1 + x_1, …, 1 + x_q}` maps to the shuffle product of these cycles, and
//! its component in the summand of the word `(x_1, …, x_q)` is a generator
//! of `HH_q` there.

use crate::algebra::{boundary, mul_basis, BasisElement, Chain, Simplex};
use crate::error::{Error, Result};
use crate::lemma::{generator_high, LemmaCase};
use crate::ring::{GroundRing, RingElement};
use crate::summand::{build_summand_complex, project};
use crate::words::{canonicalize, CyclicalWord, Word};

/// `1 ⊗ x_i - x_i ⊗ x_i`.
pub fn dlog_cycle(i: u32, r: u32, ring: GroundRing) -> Result<Chain> {
    if r == 0 {
        return Err(Error::EmptyAlphabet);
    }
    if i == 0 || i > r {
        return Err(Error::LetterOutOfRange { letter: i, r });
    }
    Chain::from_terms(
        ring,
        1,
        [
            (ring.one(), Simplex::new(vec![BasisElement::One, BasisElement::X(i)])),
            (ring.from_i64(-1), Simplex::new(vec![BasisElement::X(i), BasisElement::X(i)])),
        ],
    )
}

/// Positions (among `p + q` slots) of the first chain's factors, for every
/// `(p, q)`-shuffle, in lexicographic order.
fn shuffles(p: usize, q: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, left: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for pos in start..=n - left {
            cur.push(pos);
            go(pos + 1, left - 1, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, p, p + q, &mut Vec::with_capacity(p), &mut out);
    out
}

/// Shuffle product: slot 0 entries multiply, the remaining factors are
/// interleaved in all order-preserving ways with the sign of the shuffle.
pub fn shuffle(u: &Chain, v: &Chain) -> Result<Chain> {
    let ring = u.ring();
    if v.ring() != ring {
        return Err(Error::RingMismatch { expected: ring, found: v.ring() });
    }
    let (p, q) = (u.degree(), v.degree());
    let patterns = shuffles(p, q);
    let mut out = Chain::zero(ring, p + q);
    for (a, alpha) in u.terms() {
        for (b, beta) in v.terms() {
            let Some(head) = mul_basis(a.factors()[0], b.factors()[0]) else {
                continue;
            };
            let coeff = ring.mul(alpha, beta);
            for pattern in &patterns {
                let mut factors = vec![head; p + q + 1];
                let mut is_a = vec![false; p + q];
                for (k, &pos) in pattern.iter().enumerate() {
                    factors[pos + 1] = a.factors()[k + 1];
                    is_a[pos] = true;
                }
                let mut next_b = 1;
                for (pos, &taken) in is_a.iter().enumerate() {
                    if !taken {
                        factors[pos + 1] = b.factors()[next_b];
                        next_b += 1;
                    }
                }
                let inversions: usize = pattern.iter().enumerate().map(|(k, &pos)| pos - k).sum();
                out.add_term(&ring.mul(&coeff, &ring.sign(inversions)), Simplex::new(factors))?;
            }
        }
    }
    Ok(out)
}

fn check_symbol(q: usize, r: u32) -> Result<()> {
    if r == 0 {
        return Err(Error::EmptyAlphabet);
    }
    if q == 0 {
        return Err(Error::EmptySymbol);
    }
    if q > r as usize {
        return Err(Error::SymbolTooLong { q, r });
    }
    Ok(())
}

/// `dlog(1 + x_1) ⋆ … ⋆ dlog(1 + x_q)`.
pub fn symbol_cycle(q: usize, r: u32, ring: GroundRing) -> Result<Chain> {
    check_symbol(q, r)?;
    let mut acc = dlog_cycle(1, r, ring)?;
    for i in 2..=q as u32 {
        acc = shuffle(&acc, &dlog_cycle(i, r, ring)?)?;
    }
    Ok(acc)
}

/// `(1 ⊗ x_1) ⋆ … ⋆ (1 ⊗ x_q)`: the symbol cycle with the `x_i ⊗ x_i` terms dropped.
pub fn plain_symbol_cycle(q: usize, r: u32, ring: GroundRing) -> Result<Chain> {
    check_symbol(q, r)?;
    let one_x = |i: u32| Chain::from_simplex(ring, Simplex::new(vec![BasisElement::One, BasisElement::X(i)]));
    let mut acc = one_x(1);
    for i in 2..=q as u32 {
        acc = shuffle(&acc, &one_x(i))?;
    }
    Ok(acc)
}

/// The cyclical word `(x_1, …, x_q)`.
pub fn symbol_word(q: usize, r: u32) -> Result<CyclicalWord> {
    check_symbol(q, r)?;
    Ok(canonicalize(&Word::new((1..=q as u32).collect(), r)?))
}

/// Component of the symbol cycle in the summand of `(x_1, …, x_q)`.
pub fn project_symbol(q: usize, r: u32, ring: GroundRing) -> Result<Chain> {
    Ok(project(&symbol_cycle(q, r, ring)?, &symbol_word(q, r)?))
}

/// `Σ_{0 <= u < q} (-1)^{(q-1)u} 1 ⊗ x_{1+u} ⊗ x_{2+u} ⊗ … ⊗ x_{q+u}`, indices mod `q`.
pub fn cyclic_permutation_sum(q: usize, ring: GroundRing) -> Result<Chain> {
    if q == 0 {
        return Err(Error::EmptySymbol);
    }
    let mut out = Chain::zero(ring, q);
    for u in 0..q {
        let mut factors = vec![BasisElement::One];
        factors.extend((0..q).map(|k| BasisElement::X(((u + k) % q + 1) as u32)));
        out.add_term(&ring.sign((q - 1) * u), Simplex::new(factors))?;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolReport {
    pub q: usize,
    pub r: u32,
    pub ring: GroundRing,
    /// The projected trace image.
    pub projected: Chain,
    /// The projection equals the signed sum of cyclic permutations.
    pub matches_permutation_sum: bool,
    /// Dropping the `x_i ⊗ x_i` terms does not change the projection.
    pub drops_diagonal_terms: bool,
    pub is_cycle: bool,
    /// Coordinates in the normalized summand complex, degree `q`.
    pub coordinates: Vec<RingElement>,
    /// The class is nonzero in `HH_q`.
    pub nontrivial: bool,
    /// The class equals the untwisted generator of the summand.
    pub equals_generator: bool,
}

impl SymbolReport {
    pub fn verified(&self) -> bool {
        self.matches_permutation_sum && self.drops_diagonal_terms && self.is_cycle && self.nontrivial && self.equals_generator
    }
}

/// Projects `{1 + x_1, …, 1 + x_q}` and checks that the result is a
/// nontrivial class, namely the degree-`q` generator of the summand.
pub fn verify_nontriviality(q: usize, r: u32, ring: GroundRing) -> Result<SymbolReport> {
    let word = symbol_word(q, r)?;
    let projected = project_symbol(q, r, ring)?;
    let matches_permutation_sum = projected == cyclic_permutation_sum(q, ring)?;
    let drops_diagonal_terms = projected == project(&plain_symbol_cycle(q, r, ring)?, &word);
    let is_cycle = boundary(&projected)?.is_zero();
    let d = build_summand_complex(&word, ring)?;
    let coordinates = d.coordinates(&projected)?;
    let nontrivial = d.complex().is_cycle(q, &coordinates)? && !d.complex().is_boundary(q, &coordinates)?;
    debug_assert_eq!(LemmaCase::of(&word), LemmaCase::Untwisted);
    let generator = d.coordinates(&generator_high(&word, ring, &ring.one())?)?;
    let equals_generator = d.complex().classes_equal(q, &coordinates, &generator)?;
    Ok(SymbolReport {
        q,
        r,
        ring,
        projected,
        matches_permutation_sum,
        drops_diagonal_terms,
        is_cycle,
        coordinates,
        nontrivial,
        equals_generator,
    })
}
