#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sqz_hochschild::{BasisElement, Chain, GroundRing, Matrix, ModuleDescriptor, RingElement, Simplex};

pub const SEED: u64 = 0x5eed_2024;

pub fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

pub fn all_rings() -> Vec<GroundRing> {
    vec![
        GroundRing::Integers,
        GroundRing::Rationals,
        GroundRing::PrimeField(2),
        GroundRing::PrimeField(3),
        GroundRing::PrimeField(5),
        GroundRing::ResidueRing(4),
        GroundRing::ResidueRing(6),
    ]
}

pub fn random_element(ring: GroundRing, rng: &mut ChaCha8Rng) -> RingElement {
    match ring {
        GroundRing::Rationals => ring.rational(rng.gen_range(-9..=9), rng.gen_range(1..=6)).unwrap(),
        _ => ring.from_i64(rng.gen_range(-9..=9)),
    }
}

pub fn random_simplex(r: u32, n: usize, rng: &mut ChaCha8Rng) -> Simplex {
    Simplex::new((0..=n).map(|_| BasisElement::from_code(rng.gen_range(0..=r as usize))).collect())
}

pub fn random_chain(ring: GroundRing, r: u32, n: usize, terms: usize, rng: &mut ChaCha8Rng) -> Chain {
    let mut c = Chain::zero(ring, n);
    for _ in 0..terms {
        let coeff = random_element(ring, rng);
        c.add_term(&coeff, random_simplex(r, n, rng)).unwrap();
    }
    c
}

pub fn random_int_matrix(rows: usize, cols: usize, bound: i64, rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-bound..=bound)).collect()).collect()
}

pub fn matrix_from(ring: GroundRing, rows: &[Vec<i64>], cols: usize) -> Matrix {
    let mut m = Matrix::zero(ring, rows.len(), cols);
    for (i, row) in rows.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            m.set(i, j, ring.from_i64(x));
        }
    }
    m
}

pub fn to_ints(m: &Matrix) -> Vec<Vec<BigInt>> {
    m.to_dense()
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| match x {
                    RingElement::Integer(v) => v,
                    other => panic!("not an integer: {other:?}"),
                })
                .collect()
        })
        .collect()
}

/// Fraction-free Gaussian elimination.
pub fn bareiss_det(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

pub fn is_unimodular(m: &Matrix) -> bool {
    bareiss_det(&to_ints(m)).abs().is_one()
}

/// `dim_{F_p} H_q(C ⊗ F_p)` from the integral homology in degrees `q` and `q - 1`.
pub fn universal_coefficient_dimension(h_q: &ModuleDescriptor, h_prev: Option<&ModuleDescriptor>, p: u32) -> usize {
    let divisible = |m: &ModuleDescriptor| m.torsion.iter().filter(|d| (*d % p) == 0u32.into()).count();
    h_q.free_rank + divisible(h_q) + h_prev.map_or(0, divisible)
}

/// Reduces an integer matrix into another ring.
pub fn reduce(m: &Matrix, ring: GroundRing) -> Matrix {
    let mut out = Matrix::zero(ring, m.rows(), m.cols());
    for (i, j, x) in m.nonzeros() {
        match x {
            RingElement::Integer(v) => out.set(i, j, ring.from_bigint(v)),
            other => panic!("not an integer: {other:?}"),
        }
    }
    out
}

pub mod suites;

/// A random integral complex `C_2 -d2-> C_1 -d1-> C_0`: `d2` is random and
/// the rows of `d1` are scaled combinations of left-kernel vectors of `d2`.
pub fn random_integral_pair(rng: &mut ChaCha8Rng) -> (Matrix, Matrix) {
    let z = GroundRing::Integers;
    let n0 = rng.gen_range(1..=4);
    let n1 = rng.gen_range(1..=5);
    let n2 = rng.gen_range(1..=4);
    let rank_cap = rng.gen_range(0..=n2);
    let mut d2_rows = random_int_matrix(n1, n2, 3, rng);
    for row in &mut d2_rows {
        for x in row.iter_mut().skip(rank_cap) {
            *x = 0;
        }
    }
    let d2 = matrix_from(z, &d2_rows, n2);
    let left_kernel = d2.transpose().kernel();
    let mut d1 = Matrix::zero(z, n0, n1);
    for i in 0..n0 {
        for k in &left_kernel {
            let c = z.from_i64(rng.gen_range(-2..=2) * rng.gen_range(1..=3));
            for (j, x) in k.iter().enumerate() {
                d1.add_to(i, j, &z.mul(&c, x));
            }
        }
    }
    (d1, d2)
}
