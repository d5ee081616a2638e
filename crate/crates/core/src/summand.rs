//! The direct-sum decomposition of the cyclic bar construction by cyclical
//! words, the normalized complex of each summand, and the unnormalized
//! complexes used as brute-force oracles.
//!
//! Every structure map preserves the cyclical word spelled by a simplex's
//! letters, so the bar construction splits as a sum of sub-cyclic modules,
//! one per cyclical word. For a word of length `m >= 1` and period `ℓ` the
//! non-degenerate simplices of its summand are the `ℓ` rotations
//! `x_{j_1} ⊗ … ⊗ x_{j_m}` in degree `m - 1` and the `ℓ` simplices
//! `1 ⊗ x_{j_1} ⊗ … ⊗ x_{j_m}` in degree `m`.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::{boundary, BasisElement, Chain, Simplex};
use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ring::{GroundRing, ModuleDescriptor, RingElement};
use crate::words::{enumerate_necklaces, rotations, CyclicalWord};

/// Default cap on the number of basis elements per degree for the unnormalized complexes.
pub const DEFAULT_BUDGET: usize = 20_000;

/// A chain complex whose degree-`q` basis is an ordered list of simplices.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    bases: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
    complex: ChainComplex,
}

impl SimplicialComplex {
    /// Builds the complex with differential `b` followed by `keep` on the
    /// resulting terms; every kept term must lie in the basis one degree down.
    fn build(
        ring: GroundRing,
        bases: Vec<Vec<Simplex>>,
        keep: impl Fn(&Simplex) -> bool,
    ) -> Result<Self> {
        let index: Vec<HashMap<Simplex, usize>> = bases
            .iter()
            .map(|b| b.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect())
            .collect();
        let mut differentials = Vec::new();
        for q in 1..bases.len() {
            let mut d = Matrix::zero(ring, bases[q - 1].len(), bases[q].len());
            for (j, s) in bases[q].iter().enumerate() {
                let image = boundary(&Chain::from_simplex(ring, s.clone()))?;
                for (t, c) in image.terms() {
                    if !keep(t) {
                        continue;
                    }
                    let i = *index[q - 1]
                        .get(t)
                        .unwrap_or_else(|| panic!("b({s}) has the term {t} outside the basis"));
                    d.add_to(i, j, c);
                }
            }
            differentials.push(d);
        }
        let labels = bases.iter().map(|b| b.iter().map(|s| s.to_string()).collect()).collect();
        let complex = ChainComplex::new(ring, labels, differentials)?;
        Ok(Self { bases, index, complex })
    }

    pub fn complex(&self) -> &ChainComplex {
        &self.complex
    }

    pub fn ring(&self) -> GroundRing {
        self.complex.ring()
    }

    pub fn basis(&self, q: usize) -> &[Simplex] {
        self.bases.get(q).map_or(&[], Vec::as_slice)
    }

    /// Coordinates of `c` in the degree-`c.degree()` basis. Terms outside the
    /// basis are an error.
    pub fn coordinates(&self, c: &Chain) -> Result<Vec<RingElement>> {
        let q = c.degree();
        let ring = self.ring();
        if c.ring() != ring {
            return Err(Error::RingMismatch { expected: ring, found: c.ring() });
        }
        let mut out = vec![ring.zero(); self.basis(q).len()];
        for (s, coeff) in c.terms() {
            let i = self
                .index
                .get(q)
                .and_then(|ix| ix.get(s))
                .ok_or_else(|| Error::OutsideBasis { simplex: s.to_string() })?;
            out[*i] = coeff.clone();
        }
        Ok(out)
    }

    pub fn chain(&self, q: usize, coords: &[RingElement]) -> Result<Chain> {
        let basis = self.basis(q);
        if coords.len() != basis.len() {
            return Err(Error::DimensionMismatch { expected: basis.len(), found: coords.len() });
        }
        Chain::from_terms(self.ring(), q, coords.iter().cloned().zip(basis.iter().cloned()))
    }
}

/// The normalized complex `D_*` of the summand indexed by one cyclical word.
#[derive(Clone, Debug)]
pub struct SummandComplex {
    word: CyclicalWord,
    inner: SimplicialComplex,
}

impl SummandComplex {
    pub fn word(&self) -> &CyclicalWord {
        &self.word
    }

    pub fn complex(&self) -> &ChainComplex {
        self.inner.complex()
    }

    pub fn basis(&self, q: usize) -> &[Simplex] {
        self.inner.basis(q)
    }

    /// Coordinates of a chain in `D_q`. Degenerate terms are zero in the
    /// quotient and are dropped; terms from other summands are an error.
    pub fn coordinates(&self, c: &Chain) -> Result<Vec<RingElement>> {
        self.inner.coordinates(&c.filter(|s| !s.is_degenerate()))
    }

    pub fn chain(&self, q: usize, coords: &[RingElement]) -> Result<Chain> {
        self.inner.chain(q, coords)
    }

    pub fn top_degree(&self) -> usize {
        self.complex().top_degree()
    }
}

/// Non-degenerate `q`-simplices in the summand of `w`, sorted.
pub fn summand_basis(w: &CyclicalWord, q: usize) -> Vec<Simplex> {
    let m = w.len();
    if m == 0 {
        return if q == 0 { vec![Simplex::ones(0)] } else { Vec::new() };
    }
    let rots = rotations(w.representative()).expect("nonempty word");
    let mut out: Vec<Simplex> = if q + 1 == m {
        rots.iter().map(|r| Simplex::from_word(r).expect("nonempty word")).collect()
    } else if q == m {
        rots.iter().map(Simplex::one_then_word).collect()
    } else {
        Vec::new()
    };
    out.sort();
    out
}

/// `D_*` for `w` in degrees `0..=m+2`, so homology is available through degree `m + 1`.
pub fn build_summand_complex(w: &CyclicalWord, ring: GroundRing) -> Result<SummandComplex> {
    let top = w.len() + 2;
    let bases = (0..=top).map(|q| summand_basis(w, q)).collect();
    let inner = SimplicialComplex::build(ring, bases, |s| !s.is_degenerate())?;
    Ok(SummandComplex { word: w.clone(), inner })
}

fn check_budget(degree: usize, dimension: usize, budget: usize) -> Result<()> {
    if dimension > budget {
        Err(Error::SizeBudgetExceeded { degree, dimension, budget })
    } else {
        Ok(())
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// All `n`-simplices, degenerate or not, whose letters spell a rotation of `w`.
fn unnormalized_summand_basis(w: &CyclicalWord, n: usize) -> Vec<Simplex> {
    let m = w.len();
    if m == 0 {
        return vec![Simplex::ones(n)];
    }
    if m > n + 1 {
        return Vec::new();
    }
    let rots = rotations(w.representative()).expect("nonempty word");
    let mut out = Vec::new();
    let mut positions: Vec<usize> = (0..m).collect();
    loop {
        for r in &rots {
            let mut factors = vec![BasisElement::One; n + 1];
            for (&p, &l) in positions.iter().zip(r.letters()) {
                factors[p] = BasisElement::X(l);
            }
            out.push(Simplex::new(factors));
        }
        // next m-subset of {0..=n} in lexicographic order
        let mut k = m;
        loop {
            if k == 0 {
                out.sort();
                return out;
            }
            k -= 1;
            if positions[k] < n + 1 - (m - k) {
                positions[k] += 1;
                for i in k + 1..m {
                    positions[i] = positions[i - 1] + 1;
                }
                break;
            }
        }
    }
}

/// The summand of `w` inside the unnormalized complex, degrees `0..=top`.
pub fn build_unnormalized_summand_complex(
    w: &CyclicalWord,
    ring: GroundRing,
    top: usize,
    budget: usize,
) -> Result<SimplicialComplex> {
    for n in 0..=top {
        let size = if w.is_empty() { 1 } else { binomial(n + 1, w.len()).saturating_mul(w.period()) };
        check_budget(n, size, budget)?;
    }
    let bases = (0..=top).map(|n| unnormalized_summand_basis(w, n)).collect();
    SimplicialComplex::build(ring, bases, |_| true)
}

/// All simplices of degree `n` over `r` generators, in lexicographic order.
fn all_simplices(r: u32, n: usize) -> Vec<Simplex> {
    let base = r as usize + 1;
    let count = base.pow(n as u32 + 1);
    (0..count)
        .map(|mut code| {
            let mut factors = vec![BasisElement::One; n + 1];
            for slot in (0..=n).rev() {
                factors[slot] = BasisElement::from_code(code % base);
                code /= base;
            }
            Simplex::new(factors)
        })
        .collect()
}

/// The whole unnormalized complex `A^{⊗(n+1)}` in degrees `0..=top + 1`.
pub fn build_full_complex(r: u32, ring: GroundRing, top: usize, budget: usize) -> Result<SimplicialComplex> {
    if r == 0 {
        return Err(Error::EmptyAlphabet);
    }
    for n in 0..=top + 1 {
        let size = (r as usize + 1).checked_pow(n as u32 + 1).unwrap_or(usize::MAX);
        check_budget(n, size, budget)?;
    }
    let bases = (0..=top + 1).map(|n| all_simplices(r, n)).collect();
    SimplicialComplex::build(ring, bases, |_| true)
}

/// Splits a chain into its components by cyclical word.
pub fn decompose_chain(c: &Chain) -> BTreeMap<CyclicalWord, Chain> {
    let mut out: BTreeMap<CyclicalWord, Chain> = BTreeMap::new();
    for (s, coeff) in c.terms() {
        out.entry(s.summand())
            .or_insert_with(|| Chain::zero(c.ring(), c.degree()))
            .add_term(coeff, s.clone())
            .expect("same degree");
    }
    out
}

/// The component of `c` in the summand of `w`.
pub fn project(c: &Chain, w: &CyclicalWord) -> Chain {
    c.filter(|s| s.summand() == *w)
}

/// Homology of one summand's normalized complex in degrees `0..=m+1`.
pub fn summand_homology(w: &CyclicalWord, ring: GroundRing) -> Result<Vec<ModuleDescriptor>> {
    let d = build_summand_complex(w, ring)?;
    (0..=w.len() + 1).map(|q| d.complex().homology_module_at(q)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummandContribution {
    pub word: CyclicalWord,
    pub module: ModuleDescriptor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AggregateHomology {
    pub degree: usize,
    pub module: ModuleDescriptor,
    /// One entry per cyclical word that can contribute in this degree.
    pub contributions: Vec<SummandContribution>,
}

/// `HH_q(A/κ)` as the sum of the summand homologies. Only words of length
/// `q` and `q + 1` (and the empty word when `q = 0`) have non-degenerate
/// simplices in degree `q`.
pub fn aggregate_homology(r: u32, ring: GroundRing, q: usize) -> Result<AggregateHomology> {
    if r == 0 {
        return Err(Error::EmptyAlphabet);
    }
    let lengths: Vec<usize> = if q == 0 { vec![0, 1] } else { vec![q, q + 1] };
    let words: Vec<CyclicalWord> = lengths.into_iter().flat_map(|m| enumerate_necklaces(r, m)).collect();
    let results: Vec<Result<ModuleDescriptor>> = std::thread::scope(|scope| {
        let handles: Vec<_> = words
            .iter()
            .map(|w| scope.spawn(move || build_summand_complex(w, ring)?.complex().homology_module_at(q)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("summand worker panicked")).collect()
    });
    let mut module = ModuleDescriptor::zero();
    let mut contributions = Vec::new();
    for (word, result) in words.into_iter().zip(results) {
        let m = result?;
        module = module.direct_sum(&m);
        contributions.push(SummandContribution { word, module: m });
    }
    Ok(AggregateHomology { degree: q, module, contributions })
}
