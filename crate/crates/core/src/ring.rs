//! Coefficient rings and the finitely generated modules over them.
//!
//! Four kinds of ground ring are supported: the integers, the rationals,
//! prime fields and residue rings `Z/n` for arbitrary `n >= 2`. Elements are
//! kept in a canonical form so that structural equality is ring equality.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest modulus accepted for `F_p` and `Z/n`; sums of two residues must fit in a `u64`.
pub const MAX_MODULUS: u64 = 1 << 62;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroundRing {
    Integers,
    Rationals,
    PrimeField(u64),
    ResidueRing(u64),
}

/// An element of a [`GroundRing`] in canonical form.
///
/// Integers are arbitrary precision, rationals are reduced with a positive
/// denominator, residues lie in `[0, n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingElement {
    Integer(BigInt),
    Rational(BigRational),
    Residue(u64),
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElement::Integer(v) => write!(f, "{v}"),
            RingElement::Rational(v) => write!(f, "{v}"),
            RingElement::Residue(v) => write!(f, "{v}"),
        }
    }
}

/// Result of [`ring_arithmetic`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arithmetic {
    pub sum: RingElement,
    pub product: RingElement,
    pub negation_of_a: RingElement,
}

/// Sum, product and the negation of `a`, all canonical.
pub fn ring_arithmetic(ring: GroundRing, a: &RingElement, b: &RingElement) -> Result<Arithmetic> {
    ring.check(a)?;
    ring.check(b)?;
    Ok(Arithmetic { sum: ring.add(a, b), product: ring.mul(a, b), negation_of_a: ring.neg(a) })
}

impl GroundRing {
    pub fn prime_field(p: u64) -> Result<Self> {
        if !(2..MAX_MODULUS).contains(&p) {
            return Err(Error::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(GroundRing::PrimeField(p))
    }

    pub fn residue_ring(n: u64) -> Result<Self> {
        if !(2..MAX_MODULUS).contains(&n) {
            return Err(Error::ModulusOutOfRange(n));
        }
        Ok(GroundRing::ResidueRing(n))
    }

    /// The modulus of `F_p` or `Z/n`; `None` for `Z` and `Q`.
    pub fn modulus(&self) -> Option<u64> {
        match *self {
            GroundRing::PrimeField(p) => Some(p),
            GroundRing::ResidueRing(n) => Some(n),
            _ => None,
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(self, GroundRing::Rationals | GroundRing::PrimeField(_))
    }

    pub fn zero(&self) -> RingElement {
        self.from_i64(0)
    }

    pub fn one(&self) -> RingElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> RingElement {
        self.from_bigint(&BigInt::from(v))
    }

    /// Image of an integer under the unique ring map `Z -> κ`.
    pub fn from_bigint(&self, v: &BigInt) -> RingElement {
        match *self {
            GroundRing::Integers => RingElement::Integer(v.clone()),
            GroundRing::Rationals => RingElement::Rational(BigRational::from_integer(v.clone())),
            GroundRing::PrimeField(n) | GroundRing::ResidueRing(n) => {
                let r = v.mod_floor(&BigInt::from(n));
                RingElement::Residue(r.to_u64().expect("residue fits in u64"))
            }
        }
    }

    pub fn rational(&self, numer: i64, denom: i64) -> Result<RingElement> {
        match self {
            GroundRing::Rationals if denom != 0 => {
                Ok(RingElement::Rational(BigRational::new(numer.into(), denom.into())))
            }
            _ => Err(Error::UnsupportedRing("Q")),
        }
    }

    /// Whether `a` is a canonical element of this ring.
    pub fn contains(&self, a: &RingElement) -> bool {
        match (self, a) {
            (GroundRing::Integers, RingElement::Integer(_)) => true,
            (GroundRing::Rationals, RingElement::Rational(q)) => {
                q.denom().is_positive() && q.numer().gcd(q.denom()).is_one()
            }
            (GroundRing::PrimeField(n) | GroundRing::ResidueRing(n), RingElement::Residue(v)) => {
                v < n
            }
            _ => false,
        }
    }

    pub fn check(&self, a: &RingElement) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::NotInRing { element: a.to_string(), ring: *self })
        }
    }

    pub fn is_zero(&self, a: &RingElement) -> bool {
        match a {
            RingElement::Integer(v) => v.is_zero(),
            RingElement::Rational(v) => v.is_zero(),
            RingElement::Residue(v) => *v == 0,
        }
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        match (a, b) {
            (RingElement::Integer(x), RingElement::Integer(y)) => RingElement::Integer(x + y),
            (RingElement::Rational(x), RingElement::Rational(y)) => RingElement::Rational(x + y),
            (RingElement::Residue(x), RingElement::Residue(y)) => {
                let n = self.modulus().expect("residue ring");
                RingElement::Residue((x + y) % n)
            }
            _ => panic!("mixed ring elements {a:?} and {b:?} in {self}"),
        }
    }

    pub fn neg(&self, a: &RingElement) -> RingElement {
        match a {
            RingElement::Integer(x) => RingElement::Integer(-x),
            RingElement::Rational(x) => RingElement::Rational(-x),
            RingElement::Residue(x) => {
                let n = self.modulus().expect("residue ring");
                RingElement::Residue((n - x) % n)
            }
        }
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        match (a, b) {
            (RingElement::Integer(x), RingElement::Integer(y)) => RingElement::Integer(x * y),
            (RingElement::Rational(x), RingElement::Rational(y)) => RingElement::Rational(x * y),
            (RingElement::Residue(x), RingElement::Residue(y)) => {
                let n = self.modulus().expect("residue ring");
                RingElement::Residue(mul_mod(*x, *y, n))
            }
            _ => panic!("mixed ring elements {a:?} and {b:?} in {self}"),
        }
    }

    /// `(-1)^k` as a ring element.
    pub fn sign(&self, k: usize) -> RingElement {
        if k % 2 == 0 {
            self.one()
        } else {
            self.from_i64(-1)
        }
    }

    pub fn is_unit(&self, a: &RingElement) -> bool {
        match a {
            RingElement::Integer(x) => x.abs().is_one(),
            RingElement::Rational(x) => !x.is_zero(),
            RingElement::Residue(x) => {
                let n = self.modulus().expect("residue ring");
                x.gcd(&n) == 1
            }
        }
    }

    /// Whether 2 is invertible in the ring.
    pub fn two_is_unit(&self) -> bool {
        self.is_unit(&self.from_i64(2))
    }

    /// Every element of a finite ring, in increasing order.
    pub fn elements(&self) -> Option<Vec<RingElement>> {
        self.modulus().map(|n| (0..n).map(RingElement::Residue).collect())
    }
}

impl fmt::Display for GroundRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroundRing::Integers => write!(f, "Z"),
            GroundRing::Rationals => write!(f, "Q"),
            GroundRing::PrimeField(p) => write!(f, "F{p}"),
            GroundRing::ResidueRing(n) => write!(f, "Z/{n}"),
        }
    }
}

impl FromStr for GroundRing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidRing(s.to_string());
        let number = |digits: &str| -> Result<u64> {
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            digits.parse::<u64>().map_err(|_| bad())
        };
        match s {
            "Z" => Ok(GroundRing::Integers),
            "Q" => Ok(GroundRing::Rationals),
            _ => {
                if let Some(rest) = s.strip_prefix("Z/") {
                    GroundRing::residue_ring(number(rest)?)
                } else if let Some(rest) = s.strip_prefix('F') {
                    GroundRing::prime_field(number(rest)?)
                } else {
                    Err(bad())
                }
            }
        }
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, n: u64) -> u64 {
    let mut acc = 1 % n;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the witness set is exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A finitely generated module in invariant-factor form: `κ^free ⊕ ⨁ Z/d_i`
/// with `d_1 | d_2 | …` and every `d_i > 1`.
///
/// Over `Z/n` a cyclic summand of order `n` is a free summand, so torsion
/// entries there are proper divisors of `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ModuleDescriptor {
    pub free_rank: usize,
    pub torsion: Vec<BigUint>,
}

impl ModuleDescriptor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        Self { free_rank: rank, torsion: Vec::new() }
    }

    /// Builds the canonical form of `κ^free_rank ⊕ ⨁ Z/orders[i]`.
    ///
    /// Orders may come in any sequence; entries equal to 1 vanish.
    pub fn from_cyclic(free_rank: usize, orders: impl IntoIterator<Item = BigUint>) -> Self {
        let mut t: Vec<BigUint> = orders.into_iter().filter(|d| !d.is_one()).collect();
        assert!(t.iter().all(|d| !d.is_zero()), "cyclic orders must be positive");
        // (a, b) -> (gcd, lcm) sweeps leave each slot dividing every later one.
        for i in 0..t.len() {
            for j in i + 1..t.len() {
                let g = t[i].gcd(&t[j]);
                let l = t[i].lcm(&t[j]);
                t[i] = g;
                t[j] = l;
            }
        }
        t.retain(|d| !d.is_one());
        Self { free_rank, torsion: t }
    }

    /// A single cyclic module `Z/d` viewed over `ring`: free when `d` is the
    /// characteristic of a residue ring, zero when `d = 1`.
    pub fn cyclic(ring: GroundRing, order: u64) -> Self {
        match ring {
            GroundRing::PrimeField(n) | GroundRing::ResidueRing(n) if order == n => Self::free(1),
            _ => Self::from_cyclic(0, [BigUint::from(order)]),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::from_cyclic(
            self.free_rank + other.free_rank,
            self.torsion.iter().chain(&other.torsion).cloned(),
        )
    }

    /// Number of elements, for modules over a finite ring.
    pub fn order(&self, ring: GroundRing) -> Option<BigUint> {
        let n = ring.modulus()?;
        let mut acc = BigUint::from(n).pow(self.free_rank as u32);
        for d in &self.torsion {
            acc *= d;
        }
        Some(acc)
    }

    /// Human-readable form such as `Z^2 ⊕ Z/2`.
    pub fn render(&self, ring: GroundRing) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let base = match ring {
            GroundRing::ResidueRing(_) => format!("({ring})"),
            _ => ring.to_string(),
        };
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push(base),
            k => parts.push(format!("{base}^{k}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        parts.join(" ⊕ ")
    }
}

impl fmt::Display for ModuleDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t: Vec<String> = self.torsion.iter().map(|d| d.to_string()).collect();
        write!(f, "free={} torsion=[{}]", self.free_rank, t.join(","))
    }
}

/// The 2-torsion submodule `κ[2] = {a : 2a = 0}` with a generator when it is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoTorsion {
    pub module: ModuleDescriptor,
    pub generator: Option<RingElement>,
}

pub fn two_torsion(ring: GroundRing) -> TwoTorsion {
    match ring {
        GroundRing::Integers | GroundRing::Rationals => {
            TwoTorsion { module: ModuleDescriptor::zero(), generator: None }
        }
        GroundRing::PrimeField(n) | GroundRing::ResidueRing(n) => {
            if n % 2 == 1 {
                TwoTorsion { module: ModuleDescriptor::zero(), generator: None }
            } else {
                TwoTorsion {
                    module: ModuleDescriptor::cyclic(ring, 2),
                    generator: Some(RingElement::Residue(n / 2)),
                }
            }
        }
    }
}

/// The quotient `κ/2κ`.
pub fn mod_two_quotient(ring: GroundRing) -> ModuleDescriptor {
    match ring {
        GroundRing::Integers => ModuleDescriptor::cyclic(ring, 2),
        GroundRing::Rationals => ModuleDescriptor::zero(),
        GroundRing::PrimeField(n) | GroundRing::ResidueRing(n) => {
            if n % 2 == 1 {
                ModuleDescriptor::zero()
            } else {
                ModuleDescriptor::cyclic(ring, 2)
            }
        }
    }
}

/// Whether `2a = 0` in `ring`.
pub fn is_two_torsion(ring: GroundRing, a: &RingElement) -> bool {
    ring.is_zero(&ring.add(a, a))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn res(v: u64) -> RingElement {
        RingElement::Residue(v)
    }

    #[test]
    fn arithmetic_mod_four() {
        let z4 = GroundRing::residue_ring(4).unwrap();
        let out = ring_arithmetic(z4, &res(3), &res(3)).unwrap();
        assert_eq!(out.sum, res(2));
        assert_eq!(out.product, res(1));
        assert_eq!(out.negation_of_a, res(1));
    }

    #[test]
    fn arithmetic_rationals() {
        let q = GroundRing::Rationals;
        let half = q.rational(1, 2).unwrap();
        let out = ring_arithmetic(q, &half, &half).unwrap();
        assert_eq!(out.sum, q.one());
        assert_eq!(out.product, q.rational(1, 4).unwrap());
    }

    #[test]
    fn integer_identity_and_absorbing() {
        let z = GroundRing::Integers;
        let x = z.from_i64(-17);
        let out = ring_arithmetic(z, &z.zero(), &x).unwrap();
        assert_eq!(out.sum, x);
        assert_eq!(out.product, z.zero());
    }

    #[test]
    fn non_canonical_input_rejected() {
        let z4 = GroundRing::ResidueRing(4);
        assert!(ring_arithmetic(z4, &res(4), &res(0)).is_err());
        assert!(ring_arithmetic(z4, &RingElement::Integer(1.into()), &res(0)).is_err());
    }

    #[test]
    fn parse_rings() {
        assert_eq!("Z".parse::<GroundRing>().unwrap(), GroundRing::Integers);
        assert_eq!("Q".parse::<GroundRing>().unwrap(), GroundRing::Rationals);
        assert_eq!("F2".parse::<GroundRing>().unwrap(), GroundRing::PrimeField(2));
        assert_eq!("F3".parse::<GroundRing>().unwrap(), GroundRing::PrimeField(3));
        assert_eq!("Z/4".parse::<GroundRing>().unwrap(), GroundRing::ResidueRing(4));
        assert_eq!("Z/6".parse::<GroundRing>().unwrap(), GroundRing::ResidueRing(6));
        for bad in ["", "z", "F4", "F1", "F", "Z/", "Z/1", "Z/0", "Z/-3", "Q/2", "F+3", " Z"] {
            assert!(bad.parse::<GroundRing>().is_err(), "{bad:?} should be rejected");
        }
        for ring in ["Z", "Q", "F7", "Z/12"] {
            assert_eq!(ring.parse::<GroundRing>().unwrap().to_string(), ring);
        }
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime(2_305_843_009_213_693_951));
        assert!(!is_prime(3_215_031_751));
    }

    #[test]
    fn two_torsion_examples() {
        assert!(two_torsion(GroundRing::Integers).module.is_zero());
        let z4 = two_torsion(GroundRing::ResidueRing(4));
        assert_eq!(z4.module, ModuleDescriptor::from_cyclic(0, [BigUint::from(2u32)]));
        assert_eq!(z4.generator, Some(res(2)));
        assert_eq!(two_torsion(GroundRing::PrimeField(2)).module, ModuleDescriptor::free(1));
        assert_eq!(two_torsion(GroundRing::ResidueRing(6)).generator, Some(res(3)));
    }

    #[test]
    fn two_torsion_matches_enumeration() {
        for n in 2..40u64 {
            let ring = GroundRing::ResidueRing(n);
            let count = (0..n).filter(|&a| is_two_torsion(ring, &res(a))).count() as u64;
            let tt = two_torsion(ring);
            assert_eq!(tt.module.order(ring).unwrap(), BigUint::from(count), "n = {n}");
            if let Some(g) = tt.generator {
                assert!(is_two_torsion(ring, &g) && !ring.is_zero(&g));
            }
        }
    }

    #[test]
    fn mod_two_examples() {
        assert!(mod_two_quotient(GroundRing::Rationals).is_zero());
        assert_eq!(mod_two_quotient(GroundRing::Integers).torsion, vec![BigUint::from(2u32)]);
        assert_eq!(mod_two_quotient(GroundRing::ResidueRing(6)).torsion, vec![BigUint::from(2u32)]);
        assert_eq!(mod_two_quotient(GroundRing::PrimeField(2)), ModuleDescriptor::free(1));
    }

    #[test]
    fn two_parts_vanish_exactly_when_two_is_unit() {
        let rings = [
            GroundRing::Integers,
            GroundRing::Rationals,
            GroundRing::PrimeField(2),
            GroundRing::PrimeField(3),
            GroundRing::PrimeField(5),
            GroundRing::ResidueRing(4),
            GroundRing::ResidueRing(6),
            GroundRing::ResidueRing(9),
            GroundRing::ResidueRing(15),
        ];
        for ring in rings {
            let both_zero = two_torsion(ring).module.is_zero() && mod_two_quotient(ring).is_zero();
            assert_eq!(both_zero, ring.two_is_unit(), "{ring}");
        }
    }

    #[test]
    fn invariant_factor_normalisation() {
        let d = |v: &[u32]| ModuleDescriptor::from_cyclic(0, v.iter().map(|&x| BigUint::from(x)));
        assert_eq!(d(&[2, 3]).torsion, vec![BigUint::from(6u32)]);
        assert_eq!(d(&[4, 2, 1]).torsion, vec![BigUint::from(2u32), BigUint::from(4u32)]);
        assert_eq!(d(&[6, 10, 15]).torsion.len(), 2);
        assert!(d(&[1, 1]).is_zero());
    }
}
