use std::fmt::Debug;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::ring::{mul_mod, RingElement};

/// Arithmetic needed by the Smith-form elimination: a Euclidean domain with a
/// size function and a choice of normalized associate.
pub(crate) trait Euclidean {
    type Elem: Clone + PartialEq + Debug;
    type Size: Ord;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn size(&self, a: &Self::Elem) -> Self::Size;
    /// `(q, r)` with `a = q b + r` and `r = 0` or `size(r) < size(b)`.
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);
    fn is_unit(&self, a: &Self::Elem) -> bool;
    /// A unit `u` such that `u a` is the normalized associate of `a`.
    fn normalizer(&self, a: &Self::Elem) -> Self::Elem;
    fn unit_inverse(&self, u: &Self::Elem) -> Self::Elem;
    fn is_field(&self) -> bool;
    fn import(&self, e: &RingElement) -> Self::Elem;
    fn export(&self, a: &Self::Elem) -> RingElement;
    /// Order of the cyclic module `R/(a)` for a nonzero non-unit, when finite.
    fn magnitude(&self, a: &Self::Elem) -> BigUint;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
}

pub(crate) struct IntegerDomain;

impl Euclidean for IntegerDomain {
    type Elem = BigInt;
    type Size = BigUint;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn size(&self, a: &BigInt) -> BigUint {
        a.magnitude().clone()
    }
    fn div_rem(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        a.div_rem(b)
    }
    fn is_unit(&self, a: &BigInt) -> bool {
        a.magnitude().is_one()
    }
    fn normalizer(&self, a: &BigInt) -> BigInt {
        if a.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }
    fn unit_inverse(&self, u: &BigInt) -> BigInt {
        u.clone()
    }
    fn is_field(&self) -> bool {
        false
    }
    fn import(&self, e: &RingElement) -> BigInt {
        match e {
            RingElement::Integer(v) => v.clone(),
            other => panic!("expected an integer, found {other:?}"),
        }
    }
    fn export(&self, a: &BigInt) -> RingElement {
        RingElement::Integer(a.clone())
    }
    fn magnitude(&self, a: &BigInt) -> BigUint {
        a.magnitude().clone()
    }
}

pub(crate) struct RationalDomain;

impl Euclidean for RationalDomain {
    type Elem = BigRational;
    type Size = bool;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn size(&self, a: &BigRational) -> bool {
        !a.is_zero()
    }
    fn div_rem(&self, a: &BigRational, b: &BigRational) -> (BigRational, BigRational) {
        (a / b, BigRational::zero())
    }
    fn is_unit(&self, a: &BigRational) -> bool {
        !a.is_zero()
    }
    fn normalizer(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn unit_inverse(&self, u: &BigRational) -> BigRational {
        u.recip()
    }
    fn is_field(&self) -> bool {
        true
    }
    fn import(&self, e: &RingElement) -> BigRational {
        match e {
            RingElement::Rational(v) => v.clone(),
            other => panic!("expected a rational, found {other:?}"),
        }
    }
    fn export(&self, a: &BigRational) -> RingElement {
        RingElement::Rational(a.clone())
    }
    fn magnitude(&self, _: &BigRational) -> BigUint {
        BigUint::one()
    }
}

pub(crate) struct PrimeDomain {
    pub p: u64,
}

impl PrimeDomain {
    fn inverse(&self, a: u64) -> u64 {
        let (g, s) = ext_gcd_coeff(a, self.p);
        debug_assert_eq!(g, 1, "{a} is not invertible mod {}", self.p);
        s
    }
}

impl Euclidean for PrimeDomain {
    type Elem = u64;
    type Size = bool;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn size(&self, a: &u64) -> bool {
        *a != 0
    }
    fn div_rem(&self, a: &u64, b: &u64) -> (u64, u64) {
        (mul_mod(*a, self.inverse(*b), self.p), 0)
    }
    fn is_unit(&self, a: &u64) -> bool {
        *a != 0
    }
    fn normalizer(&self, a: &u64) -> u64 {
        self.inverse(*a)
    }
    fn unit_inverse(&self, u: &u64) -> u64 {
        self.inverse(*u)
    }
    fn is_field(&self) -> bool {
        true
    }
    fn import(&self, e: &RingElement) -> u64 {
        match e {
            RingElement::Residue(v) => *v,
            other => panic!("expected a residue, found {other:?}"),
        }
    }
    fn export(&self, a: &u64) -> RingElement {
        RingElement::Residue(*a)
    }
    fn magnitude(&self, _: &u64) -> BigUint {
        BigUint::one()
    }
}

/// `(g, s)` with `g = gcd(a, n)` and `s a ≡ g (mod n)`, `s` in `[0, n)`.
pub(crate) fn ext_gcd_coeff(a: u64, n: u64) -> (u64, u64) {
    let (g, s, _) = ext_gcd(a as i128, n as i128);
    (g as u64, s.rem_euclid(n as i128) as u64)
}

/// Extended Euclid on integers: `(g, s, t)` with `s a + t b = g >= 0`.
pub(crate) fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}
