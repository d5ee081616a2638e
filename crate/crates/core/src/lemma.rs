//! Closed-form homology of a single summand and the machinery that explains it.
//!
//! For a cyclical word of length `m` and period `ℓ` there are three cases:
//!
//! 1. `m = 0`: the homology is `κ` in degree 0.
//! 2. `m` odd or `ℓ` even: `κ` in degrees `m - 1` and `m`.
//! 3. `m >= 2` even and `ℓ` odd: `κ/2κ` in degree `m - 1` and `κ[2]` in degree `m`.
//!
//! In cases 2 and 3 the normalized complex is isomorphic to a two-term
//! complex `κ[C_ℓ] -> κ[C_ℓ]` given by multiplication with `1 - τ` or
//! `1 + τ`; [`comparison_map`] builds that isomorphism explicitly and checks
//! it.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{Chain, Simplex};
use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ring::{is_two_torsion, mod_two_quotient, two_torsion, GroundRing, ModuleDescriptor, RingElement};
use crate::summand::build_summand_complex;
use crate::words::CyclicalWord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LemmaCase {
    /// The empty word.
    Empty,
    /// `m` odd or `ℓ` even; differential `1 - τ`.
    Untwisted,
    /// `m >= 2` even and `ℓ` odd; differential `1 + τ`.
    Twisted,
}

impl LemmaCase {
    pub fn classify(length: usize, period: usize) -> Self {
        if length == 0 {
            LemmaCase::Empty
        } else if length % 2 == 1 || period % 2 == 0 {
            LemmaCase::Untwisted
        } else {
            LemmaCase::Twisted
        }
    }

    pub fn of(w: &CyclicalWord) -> Self {
        Self::classify(w.len(), w.period())
    }

    /// 1, 2 or 3.
    pub fn number(self) -> u8 {
        match self {
            LemmaCase::Empty => 1,
            LemmaCase::Untwisted => 2,
            LemmaCase::Twisted => 3,
        }
    }

    /// Sign `ε` with `α(τ^u) = ε^u t^u(…)`: `(-1)^(m-1)` untwisted, `(-1)^m` twisted.
    fn sign_exponent(self, m: usize) -> usize {
        match self {
            LemmaCase::Twisted => m,
            _ => m + 1,
        }
    }
}

impl fmt::Display for LemmaCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// Symbolic answer in one degree, independent of the ground ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PredictedModule {
    Zero,
    FreeRankOne,
    /// `κ/2κ`
    QuotientByTwo,
    /// `κ[2]`
    TwoTorsion,
}

impl PredictedModule {
    pub fn concretize(self, ring: GroundRing) -> ModuleDescriptor {
        match self {
            PredictedModule::Zero => ModuleDescriptor::zero(),
            PredictedModule::FreeRankOne => ModuleDescriptor::free(1),
            PredictedModule::QuotientByTwo => mod_two_quotient(ring),
            PredictedModule::TwoTorsion => two_torsion(ring).module,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaPrediction {
    pub case: LemmaCase,
    pub length: usize,
    pub period: usize,
    nonzero: BTreeMap<usize, PredictedModule>,
}

impl LemmaPrediction {
    pub fn new(w: &CyclicalWord) -> Self {
        let case = LemmaCase::of(w);
        let m = w.len();
        let nonzero = match case {
            LemmaCase::Empty => BTreeMap::from([(0, PredictedModule::FreeRankOne)]),
            LemmaCase::Untwisted => {
                BTreeMap::from([(m - 1, PredictedModule::FreeRankOne), (m, PredictedModule::FreeRankOne)])
            }
            LemmaCase::Twisted => {
                BTreeMap::from([(m - 1, PredictedModule::QuotientByTwo), (m, PredictedModule::TwoTorsion)])
            }
        };
        Self { case, length: m, period: w.period(), nonzero }
    }

    pub fn at(&self, q: usize) -> PredictedModule {
        self.nonzero.get(&q).copied().unwrap_or(PredictedModule::Zero)
    }
}

/// Predicted homology in degrees `0..=m+1`; every other degree is zero.
pub fn predict(w: &CyclicalWord, ring: GroundRing) -> BTreeMap<usize, ModuleDescriptor> {
    let p = LemmaPrediction::new(w);
    (0..=w.len() + 1).map(|q| (q, p.at(q).concretize(ring))).collect()
}

/// The degree-0 cycle `1` generating the summand of the empty word.
pub fn unit_generator(ring: GroundRing) -> Chain {
    Chain::from_simplex(ring, Simplex::ones(0))
}

/// The cycle `x_{i_1} ⊗ … ⊗ x_{i_m}` of the representative word.
pub fn generator_low(w: &CyclicalWord, ring: GroundRing) -> Result<Chain> {
    Ok(Chain::from_simplex(ring, Simplex::from_word(w.representative())?))
}

/// `t_m s_{m-1} t_{m-1}^u` applied to the representative simplex.
fn lifted_rotation(w: &CyclicalWord, u: usize) -> Result<Simplex> {
    let mut s = Simplex::from_word(w.representative())?;
    for _ in 0..u {
        s = s.cyclic_op();
    }
    Ok(s.degeneracy(w.len() - 1)?.cyclic_op())
}

fn rotated(w: &CyclicalWord, u: usize) -> Result<Simplex> {
    let mut s = Simplex::from_word(w.representative())?;
    for _ in 0..u {
        s = s.cyclic_op();
    }
    Ok(s)
}

/// `a · Σ_{0 <= u < ℓ} ε^u t_m s_{m-1} t_{m-1}^u(x_{i_1} ⊗ … ⊗ x_{i_m})`.
///
/// In the twisted case `a` must be 2-torsion; pass `a = 1` in the untwisted case.
pub fn generator_high(w: &CyclicalWord, ring: GroundRing, a: &RingElement) -> Result<Chain> {
    ring.check(a)?;
    let case = LemmaCase::of(w);
    if case == LemmaCase::Empty {
        return Err(Error::EmptyWord);
    }
    if case == LemmaCase::Twisted && !is_two_torsion(ring, a) {
        return Err(Error::NotTwoTorsion { element: a.to_string(), ring });
    }
    let m = w.len();
    let e = case.sign_exponent(m);
    let mut out = Chain::zero(ring, m);
    for u in 0..w.period() {
        out.add_term(&ring.mul(a, &ring.sign(e * u)), lifted_rotation(w, u)?)?;
    }
    Ok(out)
}

/// The generator of the degree-`m` homology: `generator_high` with `a = 1`
/// in the untwisted case and `a` the generator of `κ[2]` (or zero) in the
/// twisted case.
pub fn canonical_generator_high(w: &CyclicalWord, ring: GroundRing) -> Result<Chain> {
    let a = match LemmaCase::of(w) {
        LemmaCase::Twisted => two_torsion(ring).generator.unwrap_or_else(|| ring.zero()),
        _ => ring.one(),
    };
    generator_high(w, ring, &a)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwistSign {
    /// multiplication by `1 - τ`
    Minus,
    /// multiplication by `1 + τ`
    Plus,
}

/// Matrix of multiplication by `Σ coeffs[k] τ^k` on `κ[C_ℓ]` in the basis
/// `τ^0, …, τ^{ℓ-1}`.
pub fn group_ring_multiplication(ring: GroundRing, period: usize, coeffs: &[i64]) -> Matrix {
    let mut m = Matrix::zero(ring, period, period);
    for u in 0..period {
        for (k, &c) in coeffs.iter().enumerate() {
            m.add_to((u + k) % period, u, &ring.from_i64(c));
        }
    }
    m
}

/// `κ[C_ℓ] -> κ[C_ℓ]` in degrees `m` and `m - 1`, zero elsewhere.
#[derive(Clone, Debug)]
pub struct ReferenceComplex {
    pub period: usize,
    pub sign: TwistSign,
    pub low_degree: usize,
    complex: ChainComplex,
}

impl ReferenceComplex {
    pub fn new(ring: GroundRing, period: usize, sign: TwistSign, low_degree: usize) -> Result<Self> {
        if period == 0 {
            return Err(Error::ZeroPeriod);
        }
        let top = low_degree + 3;
        let labels: Vec<Vec<String>> = (0..=top)
            .map(|q| {
                if q == low_degree || q == low_degree + 1 {
                    (0..period).map(|u| format!("τ^{u}")).collect()
                } else {
                    Vec::new()
                }
            })
            .collect();
        let differentials = (1..=top)
            .map(|q| {
                if q == low_degree + 1 {
                    self::differential(ring, period, sign)
                } else {
                    Matrix::zero(ring, labels[q - 1].len(), labels[q].len())
                }
            })
            .collect();
        let complex = ChainComplex::new(ring, labels, differentials)?;
        Ok(Self { period, sign, low_degree, complex })
    }

    pub fn complex(&self) -> &ChainComplex {
        &self.complex
    }

    pub fn differential(&self) -> Matrix {
        self.complex.differential(self.low_degree + 1)
    }
}

fn differential(ring: GroundRing, period: usize, sign: TwistSign) -> Matrix {
    match sign {
        TwistSign::Minus => group_ring_multiplication(ring, period, &[1, -1]),
        TwistSign::Plus => group_ring_multiplication(ring, period, &[1, 1]),
    }
}

/// `D'` (untwisted) or `D''` (twisted) for the word `w`.
pub fn reference_complex(w: &CyclicalWord, ring: GroundRing) -> Result<ReferenceComplex> {
    let sign = match LemmaCase::of(w) {
        LemmaCase::Empty => return Err(Error::EmptyWord),
        LemmaCase::Untwisted => TwistSign::Minus,
        LemmaCase::Twisted => TwistSign::Plus,
    };
    ReferenceComplex::new(ring, w.period(), sign, w.len() - 1)
}

/// The chain map from the reference complex to the normalized summand
/// complex, with the evidence that it is an isomorphism.
#[derive(Clone, Debug)]
pub struct ComparisonMap {
    pub case: LemmaCase,
    /// Column `u` holds the coordinates of the image of `τ^u` in degree `m - 1`.
    pub low: Matrix,
    /// Column `u` holds the coordinates of the image of `τ^u` in degree `m`.
    pub high: Matrix,
    /// `d_D ∘ high = low ∘ d_ref`.
    pub commutes: bool,
    /// Both components are signed permutation matrices.
    pub bijective: bool,
    /// Homology of the reference complex in degrees `m - 1` and `m`.
    pub reference_homology: [ModuleDescriptor; 2],
    /// Homology of the summand complex in degrees `m - 1` and `m`.
    pub summand_homology: [ModuleDescriptor; 2],
}

impl ComparisonMap {
    pub fn is_isomorphism(&self) -> bool {
        self.commutes && self.bijective && self.reference_homology == self.summand_homology
    }
}

fn is_signed_permutation(m: &Matrix) -> bool {
    if m.rows() != m.cols() {
        return false;
    }
    let ring = m.ring();
    let mut row_hits = vec![0usize; m.rows()];
    let mut col_hits = vec![0usize; m.cols()];
    for (i, j, v) in m.nonzeros() {
        if *v != ring.one() && *v != ring.from_i64(-1) {
            return false;
        }
        row_hits[i] += 1;
        col_hits[j] += 1;
    }
    row_hits.iter().chain(&col_hits).all(|&h| h == 1)
}

/// Builds `α` (untwisted) or `β` (twisted):
/// `τ^u ↦ ε^u t^u(x_{i_1} ⊗ … ⊗ x_{i_m})` in degree `m - 1` and
/// `τ^u ↦ ε^u t s t^u(x_{i_1} ⊗ … ⊗ x_{i_m})` in degree `m`.
pub fn comparison_map(w: &CyclicalWord, ring: GroundRing) -> Result<ComparisonMap> {
    let reference = reference_complex(w, ring)?;
    let case = LemmaCase::of(w);
    let d = build_summand_complex(w, ring)?;
    let m = w.len();
    let period = w.period();
    let e = case.sign_exponent(m);
    let mut low = Matrix::zero(ring, d.basis(m - 1).len(), period);
    let mut high = Matrix::zero(ring, d.basis(m).len(), period);
    for u in 0..period {
        let sign = ring.sign(e * u);
        let lo = d.coordinates(&Chain::from_simplex(ring, rotated(w, u)?).scale(&sign))?;
        let hi = d.coordinates(&Chain::from_simplex(ring, lifted_rotation(w, u)?).scale(&sign))?;
        for (i, x) in lo.into_iter().enumerate() {
            low.set(i, u, x);
        }
        for (i, x) in hi.into_iter().enumerate() {
            high.set(i, u, x);
        }
    }
    let lhs = d.complex().differential(m).mul(&high)?;
    let rhs = low.mul(&reference.differential())?;
    let commutes = lhs == rhs;
    let bijective = is_signed_permutation(&low) && is_signed_permutation(&high);
    let reference_homology = [
        reference.complex().homology_module_at(m - 1)?,
        reference.complex().homology_module_at(m)?,
    ];
    let summand_homology = [d.complex().homology_module_at(m - 1)?, d.complex().homology_module_at(m)?];
    Ok(ComparisonMap { case, low, high, commutes, bijective, reference_homology, summand_homology })
}

/// The norm element `1 + τ + … + τ^{ℓ-1}` as a coordinate vector.
pub fn norm_element(ring: GroundRing, period: usize) -> Vec<RingElement> {
    vec![ring.one(); period]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositionVerdict {
    pub position: &'static str,
    pub exact: bool,
}

/// Exactness of `0 -> κ[2] -N-> κ[C_ℓ] -(1+τ)-> κ[C_ℓ] -ε̄-> κ/2κ -> 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessReport {
    pub period: usize,
    pub ring: GroundRing,
    pub positions: Vec<PositionVerdict>,
    /// `ε(N)`, which equals `ℓ`.
    pub augmentation_of_norm: RingElement,
    /// `ε ∘ N` equals multiplication by `ℓ` and `ℓ` is odd.
    pub augmentation_of_norm_is_odd: bool,
}

impl ExactnessReport {
    pub fn is_exact(&self) -> bool {
        self.positions.iter().all(|p| p.exact) && self.augmentation_of_norm_is_odd
    }
}

fn column(ring: GroundRing, v: &[RingElement]) -> Matrix {
    let mut m = Matrix::zero(ring, v.len(), 1);
    for (i, x) in v.iter().enumerate() {
        m.set(i, 0, x.clone());
    }
    m
}

fn hstack(ring: GroundRing, rows: usize, columns: &[Vec<RingElement>]) -> Matrix {
    let mut m = Matrix::zero(ring, rows, columns.len());
    for (j, c) in columns.iter().enumerate() {
        for (i, x) in c.iter().enumerate() {
            m.set(i, j, x.clone());
        }
    }
    m
}

fn columns_of(m: &Matrix) -> Vec<Vec<RingElement>> {
    let dense = m.to_dense();
    (0..m.cols()).map(|j| dense.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Checks the four-term exact sequence for an odd period by computing every
/// kernel and image over the ring.
pub fn verify_exact_sequence(period: usize, ring: GroundRing) -> Result<ExactnessReport> {
    if period == 0 {
        return Err(Error::ZeroPeriod);
    }
    if period % 2 == 0 {
        return Err(Error::EvenPeriod(period));
    }
    let l = period;
    let two = Matrix::from_i64(ring, &[&[2]])?;
    let norm = column(ring, &norm_element(ring, l));
    let one_plus_tau = group_ring_multiplication(ring, l, &[1, 1]);
    let augmentation = hstack(ring, 1, &vec![vec![ring.one()]; l]);

    // κ[2] = ker(2), as generators inside κ.
    let torsion_gens = two.kernel();

    // At κ[2]: ker(2) ∩ ker(N) = 0.
    let mut stacked = Matrix::zero(ring, l + 1, 1);
    stacked.set(0, 0, ring.from_i64(2));
    for i in 0..l {
        stacked.set(i + 1, 0, ring.one());
    }
    let injective = stacked.kernel().iter().all(|v| v.iter().all(|x| ring.is_zero(x)));

    // At the first κ[C_ℓ]: ker(1 + τ) = N(κ[2]).
    let image_n = hstack(ring, l, &torsion_gens.iter().map(|g| norm.mul_vec(g)).collect::<Result<Vec<_>>>()?);
    let mut middle_left = one_plus_tau.mul(&image_n)?.is_zero();
    for k in one_plus_tau.kernel() {
        middle_left &= image_n.column_span_contains(&k)?;
    }

    // At the second κ[C_ℓ]: ker(ε̄) = im(1 + τ), with ker(ε̄) = {v : ε(v) ∈ 2κ}.
    let mut eps_minus_two = Matrix::zero(ring, 1, l + 1);
    for j in 0..l {
        eps_minus_two.set(0, j, ring.one());
    }
    eps_minus_two.set(0, l, ring.from_i64(-2));
    let ker_eps_bar: Vec<Vec<RingElement>> =
        eps_minus_two.kernel().into_iter().map(|v| v[..l].to_vec()).collect();
    let mut middle_right = true;
    for c in columns_of(&one_plus_tau) {
        let e = augmentation.mul_vec(&c)?;
        middle_right &= two.column_span_contains(&e)?;
    }
    for k in &ker_eps_bar {
        middle_right &= one_plus_tau.column_span_contains(k)?;
    }

    // At κ/2κ: ε̄ is onto, i.e. 1 ∈ ε(κ[C_ℓ]) + 2κ.
    let mut eps_and_two = augmentation.clone();
    eps_and_two = hstack(ring, 1, &[columns_of(&eps_and_two), vec![vec![ring.from_i64(2)]]].concat());
    let surjective = eps_and_two.column_span_contains(&[ring.one()])?;

    let en = augmentation.mul(&norm)?.get(0, 0);
    let odd = en == ring.from_i64(l as i64) && l % 2 == 1;

    Ok(ExactnessReport {
        period,
        ring,
        positions: vec![
            PositionVerdict { position: "κ[2]", exact: injective },
            PositionVerdict { position: "κ[C_ℓ] (source of 1+τ)", exact: middle_left },
            PositionVerdict { position: "κ[C_ℓ] (target of 1+τ)", exact: middle_right },
            PositionVerdict { position: "κ/2κ", exact: surjective },
        ],
        augmentation_of_norm: en,
        augmentation_of_norm_is_odd: odd,
    })
}
