//! Exact linear algebra over the supported ground rings.
//!
//! Matrices are stored sparsely with [`RingElement`] entries and converted to
//! dense working copies for elimination. The integers and the two kinds of
//! field go through Smith normal form; residue rings `Z/n` go through Howell
//! form.

mod domain;
mod howell;
mod snf;

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{GroundRing, ModuleDescriptor, RingElement};

use domain::{Euclidean, IntegerDomain, PrimeDomain, RationalDomain};
use snf::{snf, Dense, Track};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    ring: GroundRing,
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), RingElement>,
}

impl Matrix {
    pub fn zero(ring: GroundRing, rows: usize, cols: usize) -> Self {
        Self { ring, rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(ring: GroundRing, n: usize) -> Self {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            m.entries.insert((i, i), ring.one());
        }
        m
    }

    pub fn from_rows(ring: GroundRing, rows: Vec<Vec<RingElement>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zero(ring, rows.len(), cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
            }
            for (j, x) in row.into_iter().enumerate() {
                ring.check(&x)?;
                m.set(i, j, x);
            }
        }
        Ok(m)
    }

    /// Matrix with integer entries mapped into `ring`.
    pub fn from_i64(ring: GroundRing, rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(ring, rows.iter().map(|r| r.iter().map(|&x| ring.from_i64(x)).collect()).collect())
    }

    pub fn ring(&self) -> GroundRing {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> RingElement {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn set(&mut self, i: usize, j: usize, v: RingElement) {
        assert!(i < self.rows && j < self.cols, "({i}, {j}) outside {}x{}", self.rows, self.cols);
        if self.ring.is_zero(&v) {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &RingElement) {
        let sum = self.ring.add(&self.get(i, j), v);
        self.set(i, j, sum);
    }

    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &RingElement)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix {
            ring: self.ring,
            rows: self.cols,
            cols: self.rows,
            entries: self.entries.iter().map(|(&(i, j), v)| ((j, i), v.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch { expected: self.ring, found: other.ring });
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut by_row: Vec<Vec<(usize, &RingElement)>> = vec![Vec::new(); other.rows];
        for (&(k, j), v) in &other.entries {
            by_row[k].push((j, v));
        }
        let mut out = Matrix::zero(self.ring, self.rows, other.cols);
        for (&(i, k), a) in &self.entries {
            for &(j, b) in &by_row[k] {
                out.add_to(i, j, &self.ring.mul(a, b));
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[RingElement]) -> Result<Vec<RingElement>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        let mut out = vec![self.ring.zero(); self.rows];
        for (&(i, j), a) in &self.entries {
            out[i] = self.ring.add(&out[i], &self.ring.mul(a, &v[j]));
        }
        Ok(out)
    }

    pub fn to_dense(&self) -> Vec<Vec<RingElement>> {
        let mut out = vec![vec![self.ring.zero(); self.cols]; self.rows];
        for (&(i, j), v) in &self.entries {
            out[i][j] = v.clone();
        }
        out
    }

    fn dense_in<D: Euclidean>(&self, d: &D) -> Dense<D::Elem> {
        let mut out = vec![vec![d.zero(); self.cols]; self.rows];
        for (&(i, j), v) in &self.entries {
            out[i][j] = d.import(v);
        }
        out
    }

    fn dense_residues(&self) -> Vec<Vec<u64>> {
        let mut out = vec![vec![0; self.cols]; self.rows];
        for (&(i, j), v) in &self.entries {
            if let RingElement::Residue(x) = v {
                out[i][j] = *x;
            }
        }
        out
    }

    fn from_dense<D: Euclidean>(ring: GroundRing, d: &D, m: &Dense<D::Elem>, rows: usize, cols: usize) -> Matrix {
        let mut out = Matrix::zero(ring, rows, cols);
        for (i, row) in m.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if !d.is_zero(x) {
                    out.entries.insert((i, j), d.export(x));
                }
            }
        }
        out
    }

    /// Rank of a matrix over a field or the integers.
    pub fn rank(&self) -> Result<usize> {
        match self.ring {
            GroundRing::Integers => Ok(snf(&IntegerDomain, self.dense_in(&IntegerDomain), self.rows, self.cols, Track::NONE).rank()),
            GroundRing::Rationals => Ok(snf(&RationalDomain, self.dense_in(&RationalDomain), self.rows, self.cols, Track::NONE).rank()),
            GroundRing::PrimeField(p) => {
                let d = PrimeDomain { p };
                Ok(snf(&d, self.dense_in(&d), self.rows, self.cols, Track::NONE).rank())
            }
            GroundRing::ResidueRing(_) => Err(Error::UnsupportedRing("Z, Q or F_p")),
        }
    }

    /// Generators of `{x : M x = 0}`; a basis unless the ring is a residue ring.
    pub fn kernel(&self) -> Vec<Vec<RingElement>> {
        match self.ring {
            GroundRing::Integers => kernel_euclid(&IntegerDomain, self),
            GroundRing::Rationals => kernel_euclid(&RationalDomain, self),
            GroundRing::PrimeField(p) => kernel_euclid(&PrimeDomain { p }, self),
            GroundRing::ResidueRing(n) => howell::left_kernel(&self.transpose().dense_residues(), self.rows, n)
                .into_iter()
                .map(|v| v.into_iter().map(RingElement::Residue).collect())
                .collect(),
        }
    }

    /// Whether `v` lies in the column span, i.e. `M y = v` is solvable over the ring.
    pub fn column_span_contains(&self, v: &[RingElement]) -> Result<bool> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: v.len() });
        }
        for x in v {
            self.ring.check(x)?;
        }
        Ok(match self.ring {
            GroundRing::Integers => span_contains_euclid(&IntegerDomain, self, v),
            GroundRing::Rationals => span_contains_euclid(&RationalDomain, self, v),
            GroundRing::PrimeField(p) => span_contains_euclid(&PrimeDomain { p }, self, v),
            GroundRing::ResidueRing(n) => {
                let basis = howell::howell(self.transpose().dense_residues(), self.rows, n);
                let mut w: Vec<u64> = v.iter().map(residue).collect();
                howell::reduce(&basis, &mut w, n)
            }
        })
    }
}

fn residue(e: &RingElement) -> u64 {
    match e {
        RingElement::Residue(x) => *x,
        other => panic!("expected a residue, found {other:?}"),
    }
}

fn kernel_euclid<D: Euclidean>(d: &D, m: &Matrix) -> Vec<Vec<RingElement>> {
    let s = snf(d, m.dense_in(d), m.rows, m.cols, Track { v: true, ..Track::NONE });
    let rank = s.rank();
    let v = s.v.expect("tracked");
    (rank..m.cols).map(|j| (0..m.cols).map(|i| d.export(&v[i][j])).collect()).collect()
}

fn span_contains_euclid<D: Euclidean>(d: &D, m: &Matrix, v: &[RingElement]) -> bool {
    let s = snf(d, m.dense_in(d), m.rows, m.cols, Track { u: true, ..Track::NONE });
    let u = s.u.as_ref().expect("tracked");
    let w: Vec<D::Elem> = v.iter().map(|x| d.import(x)).collect();
    (0..m.rows).all(|i| {
        let mut acc = d.zero();
        for (k, x) in w.iter().enumerate() {
            if !d.is_zero(x) && !d.is_zero(&u[i][k]) {
                acc = d.add(&acc, &d.mul(&u[i][k], x));
            }
        }
        if i < s.rank() {
            d.is_zero(&d.div_rem(&acc, &s.diag[i]).1)
        } else {
            d.is_zero(&acc)
        }
    })
}

/// `U M V = S` over the integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: Matrix,
    pub s: Matrix,
    pub v: Matrix,
    /// The nonzero diagonal entries of `S`, each dividing the next.
    pub invariant_factors: Vec<BigInt>,
}

pub fn smith_normal_form(m: &Matrix) -> Result<SmithForm> {
    if m.ring != GroundRing::Integers {
        return Err(Error::UnsupportedRing("Z"));
    }
    let d = IntegerDomain;
    let out = snf(&d, m.dense_in(&d), m.rows, m.cols, Track { u: true, v: true, ..Track::NONE });
    let mut s = Matrix::zero(m.ring, m.rows, m.cols);
    for (i, x) in out.diag.iter().enumerate() {
        s.set(i, i, RingElement::Integer(x.clone()));
    }
    Ok(SmithForm {
        u: Matrix::from_dense(m.ring, &d, out.u.as_ref().expect("tracked"), m.rows, m.rows),
        v: Matrix::from_dense(m.ring, &d, out.v.as_ref().expect("tracked"), m.cols, m.cols),
        s,
        invariant_factors: out.diag,
    })
}

/// Howell form of the row span over `Z/n` (or `F_p`), as a matrix whose rows
/// are the nonzero Howell rows.
pub fn howell_form(m: &Matrix) -> Result<Matrix> {
    let n = match m.ring {
        GroundRing::ResidueRing(n) | GroundRing::PrimeField(n) => n,
        _ => return Err(Error::UnsupportedRing("Z/n")),
    };
    let rows = howell::howell(m.dense_residues(), m.cols, n);
    let mut out = Matrix::zero(m.ring, rows.len(), m.cols);
    for (i, row) in rows.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            out.set(i, j, RingElement::Residue(x));
        }
    }
    Ok(out)
}

/// A homology class representative: `order` is `None` for a free generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGenerator {
    pub order: Option<BigUint>,
    pub cycle: Vec<RingElement>,
}

/// `ker(outgoing) / im(incoming)` where `outgoing: C_q -> C_{q-1}` and
/// `incoming: C_{q+1} -> C_q`.
pub(crate) fn homology(
    outgoing: &Matrix,
    incoming: &Matrix,
    with_generators: bool,
) -> (ModuleDescriptor, Vec<HomologyGenerator>) {
    match outgoing.ring {
        GroundRing::Integers => homology_euclid(&IntegerDomain, outgoing, incoming, with_generators),
        GroundRing::Rationals => homology_euclid(&RationalDomain, outgoing, incoming, with_generators),
        GroundRing::PrimeField(p) => homology_euclid(&PrimeDomain { p }, outgoing, incoming, with_generators),
        GroundRing::ResidueRing(n) => homology_residue(n, outgoing, incoming),
    }
}

fn homology_euclid<D: Euclidean>(
    d: &D,
    outgoing: &Matrix,
    incoming: &Matrix,
    with_generators: bool,
) -> (ModuleDescriptor, Vec<HomologyGenerator>) {
    let nq = outgoing.cols;
    if !with_generators {
        let rank_out = snf(d, outgoing.dense_in(d), outgoing.rows, nq, Track::NONE).rank();
        let inc = snf(d, incoming.dense_in(d), nq, incoming.cols, Track::NONE);
        let torsion = inc.diag.iter().filter(|x| !d.is_unit(x)).map(|x| d.magnitude(x));
        return (ModuleDescriptor::from_cyclic(nq - rank_out - inc.rank(), torsion), Vec::new());
    }
    // Kernel basis K = trailing columns of V; the image re-expressed in that
    // basis is the tail of V^{-1} M.
    let out = snf(d, outgoing.dense_in(d), outgoing.rows, nq, Track { v: true, v_inv: true, ..Track::NONE });
    let rank_out = out.rank();
    let k = nq - rank_out;
    let v = out.v.as_ref().expect("tracked");
    let v_inv = out.v_inv.as_ref().expect("tracked");
    let y = snf::mat_mul(d, v_inv, &incoming.dense_in(d), nq, incoming.cols);
    let x: Dense<D::Elem> = y[rank_out..].to_vec();
    let rel = snf(d, x, k, incoming.cols, Track { u_inv: true, ..Track::NONE });
    let u_inv = rel.u_inv.as_ref().expect("tracked");
    let mut torsion = Vec::new();
    let mut generators = Vec::new();
    for i in 0..k {
        let order = match rel.diag.get(i) {
            Some(s) if d.is_unit(s) => continue,
            Some(s) => Some(d.magnitude(s)),
            None => None,
        };
        if let Some(o) = &order {
            torsion.push(o.clone());
        }
        let cycle = (0..nq)
            .map(|row| {
                let mut acc = d.zero();
                for j in 0..k {
                    let c = &u_inv[j][i];
                    if !d.is_zero(c) && !d.is_zero(&v[row][rank_out + j]) {
                        acc = d.add(&acc, &d.mul(&v[row][rank_out + j], c));
                    }
                }
                d.export(&acc)
            })
            .collect();
        generators.push(HomologyGenerator { order, cycle });
    }
    (ModuleDescriptor::from_cyclic(k - rel.rank(), torsion), generators)
}

fn homology_residue(n: u64, outgoing: &Matrix, incoming: &Matrix) -> (ModuleDescriptor, Vec<HomologyGenerator>) {
    let nq = outgoing.cols;
    let kernel = howell::left_kernel(&outgoing.transpose().dense_residues(), outgoing.rows, n);
    let s = kernel.len();
    // Relations among the kernel generators: c with Σ c_i k_i ∈ im(incoming).
    let mut stacked = kernel.clone();
    stacked.extend(incoming.transpose().dense_residues());
    let relations: Vec<Vec<u64>> = howell::left_kernel(&stacked, nq, n)
        .into_iter()
        .map(|row| row[..s].to_vec())
        .filter(|c| c.iter().any(|&x| x != 0))
        .collect();
    // Present the quotient as an abelian group: Z^s modulo the relations and n Z^s.
    let z = IntegerDomain;
    let t = relations.len() + s;
    let mut present: Dense<BigInt> = vec![vec![BigInt::zero(); t]; s];
    for (j, c) in relations.iter().enumerate() {
        for i in 0..s {
            present[i][j] = BigInt::from(c[i]);
        }
    }
    for i in 0..s {
        present[i][relations.len() + i] = BigInt::from(n);
    }
    let form = snf(&z, present, s, t, Track { u_inv: true, ..Track::NONE });
    let u_inv = form.u_inv.as_ref().expect("tracked");
    let nn = BigUint::from(n);
    let mut free = 0;
    let mut torsion = Vec::new();
    let mut generators = Vec::new();
    for (i, diag) in form.diag.iter().enumerate() {
        let order = diag.magnitude().clone();
        if order.is_one() {
            continue;
        }
        let cycle: Vec<RingElement> = (0..nq)
            .map(|row| {
                let mut acc = 0u64;
                for (j, kj) in kernel.iter().enumerate() {
                    let c = residue_of(&u_inv[j][i], n);
                    acc = (acc + crate::ring::mul_mod(c, kj[row], n)) % n;
                }
                RingElement::Residue(acc)
            })
            .collect();
        if order == nn {
            free += 1;
            generators.push(HomologyGenerator { order: None, cycle });
        } else {
            torsion.push(order.clone());
            generators.push(HomologyGenerator { order: Some(order), cycle });
        }
    }
    (ModuleDescriptor::from_cyclic(free, torsion), generators)
}

fn residue_of(x: &BigInt, n: u64) -> u64 {
    use num_integer::Integer;
    use num_traits::ToPrimitive;
    x.mod_floor(&BigInt::from(n)).to_u64().expect("fits")
}
