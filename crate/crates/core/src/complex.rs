//! Finite chain complexes of free modules and their homology.

use crate::error::{Error, Result};
use crate::linalg::{self, HomologyGenerator, Matrix};
use crate::ring::{GroundRing, ModuleDescriptor, RingElement};

/// Free modules `C_0, …, C_top` with differentials `d_q : C_q -> C_{q-1}`.
///
/// Homology is available in degrees `0..top`; the top degree only serves as
/// the source of the last incoming differential.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    ring: GroundRing,
    labels: Vec<Vec<String>>,
    /// `differentials[q]` is `d_q`; `d_0` is the `0 x n_0` map.
    differentials: Vec<Matrix>,
}

/// Homology in one degree together with representative cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyDescriptor {
    pub degree: usize,
    pub module: ModuleDescriptor,
    pub generators: Vec<HomologyGenerator>,
}

impl ChainComplex {
    /// `labels[q]` names the basis of `C_q`; `differentials` lists `d_1, …, d_top`.
    /// Shapes and `d_{q} d_{q+1} = 0` are checked.
    pub fn new(ring: GroundRing, labels: Vec<Vec<String>>, differentials: Vec<Matrix>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        if differentials.len() + 1 != labels.len() {
            return Err(Error::DimensionMismatch { expected: labels.len() - 1, found: differentials.len() });
        }
        let mut all = vec![Matrix::zero(ring, 0, labels[0].len())];
        for (k, d) in differentials.into_iter().enumerate() {
            let q = k + 1;
            if d.ring() != ring {
                return Err(Error::RingMismatch { expected: ring, found: d.ring() });
            }
            if d.rows() != labels[q - 1].len() {
                return Err(Error::DimensionMismatch { expected: labels[q - 1].len(), found: d.rows() });
            }
            if d.cols() != labels[q].len() {
                return Err(Error::DimensionMismatch { expected: labels[q].len(), found: d.cols() });
            }
            all.push(d);
        }
        for q in 1..all.len() {
            if !all[q - 1].mul(&all[q])?.is_zero() {
                return Err(Error::NotAComplex { degree: q });
            }
        }
        Ok(Self { ring, labels, differentials: all })
    }

    pub fn ring(&self) -> GroundRing {
        self.ring
    }

    pub fn top_degree(&self) -> usize {
        self.labels.len() - 1
    }

    pub fn rank(&self, q: usize) -> usize {
        self.labels.get(q).map_or(0, Vec::len)
    }

    pub fn labels(&self, q: usize) -> &[String] {
        self.labels.get(q).map_or(&[], Vec::as_slice)
    }

    /// `d_q`; zero maps outside the stored range.
    pub fn differential(&self, q: usize) -> Matrix {
        match self.differentials.get(q) {
            Some(d) => d.clone(),
            None => Matrix::zero(self.ring, self.rank(q.saturating_sub(1)), self.rank(q)),
        }
    }

    fn check_degree(&self, q: usize) -> Result<()> {
        if q + 1 > self.top_degree() {
            return Err(Error::MissingDifferential { degree: q, needed: q + 1 });
        }
        Ok(())
    }

    fn check_vector(&self, q: usize, z: &[RingElement]) -> Result<()> {
        if z.len() != self.rank(q) {
            return Err(Error::DimensionMismatch { expected: self.rank(q), found: z.len() });
        }
        z.iter().try_for_each(|x| self.ring.check(x))
    }

    /// `H_q` in invariant-factor form with verified generator cycles.
    pub fn homology_at(&self, q: usize) -> Result<HomologyDescriptor> {
        self.check_degree(q)?;
        let (module, generators) = linalg::homology(&self.differentials[q], &self.differentials[q + 1], true);
        for g in &generators {
            assert!(self.is_cycle(q, &g.cycle)?, "homology generator in degree {q} is not a cycle");
            assert!(!self.is_boundary(q, &g.cycle)?, "homology generator in degree {q} is a boundary");
        }
        Ok(HomologyDescriptor { degree: q, module, generators })
    }

    /// `H_q` without generators; cheaper on large complexes.
    pub fn homology_module_at(&self, q: usize) -> Result<ModuleDescriptor> {
        self.check_degree(q)?;
        Ok(linalg::homology(&self.differentials[q], &self.differentials[q + 1], false).0)
    }

    pub fn is_cycle(&self, q: usize, z: &[RingElement]) -> Result<bool> {
        self.check_vector(q, z)?;
        Ok(self.differentials[q].mul_vec(z)?.iter().all(|x| self.ring.is_zero(x)))
    }

    pub fn is_boundary(&self, q: usize, z: &[RingElement]) -> Result<bool> {
        self.check_vector(q, z)?;
        self.differential(q + 1).column_span_contains(z)
    }

    /// Whether `z1 - z2` is a boundary.
    pub fn classes_equal(&self, q: usize, z1: &[RingElement], z2: &[RingElement]) -> Result<bool> {
        self.check_vector(q, z1)?;
        self.check_vector(q, z2)?;
        let diff: Vec<RingElement> = z1.iter().zip(z2).map(|(a, b)| self.ring.sub(a, b)).collect();
        self.is_boundary(q, &diff)
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigUint;

    use super::*;

    fn labels(sizes: &[usize]) -> Vec<Vec<String>> {
        sizes.iter().map(|&n| (0..n).map(|i| format!("e{i}")).collect()).collect()
    }

    #[test]
    fn rejects_non_complexes() {
        let z = GroundRing::Integers;
        let d1 = Matrix::from_i64(z, &[&[1]]).unwrap();
        let d2 = Matrix::from_i64(z, &[&[1]]).unwrap();
        let err = ChainComplex::new(z, labels(&[1, 1, 1]), vec![d1, d2]).unwrap_err();
        assert_eq!(err, Error::NotAComplex { degree: 2 });
        let bad_shape = Matrix::from_i64(z, &[&[1, 1]]).unwrap();
        assert!(ChainComplex::new(z, labels(&[1, 1]), vec![bad_shape]).is_err());
    }

    #[test]
    fn circle_like_complex() {
        // Two vertices, two edges, both from v0 to v1: homology Z, Z.
        let z = GroundRing::Integers;
        let d1 = Matrix::from_i64(z, &[&[-1, -1], &[1, 1]]).unwrap();
        let c = ChainComplex::new(z, labels(&[2, 2, 0]), vec![d1, Matrix::zero(z, 2, 0)]).unwrap();
        assert_eq!(c.homology_at(0).unwrap().module, ModuleDescriptor::free(1));
        let h1 = c.homology_at(1).unwrap();
        assert_eq!(h1.module, ModuleDescriptor::free(1));
        assert!(c.is_cycle(1, &h1.generators[0].cycle).unwrap());
        assert!(c.homology_at(2).is_err());
    }

    #[test]
    fn torsion_and_classes() {
        let z = GroundRing::Integers;
        let two = Matrix::from_i64(z, &[&[2]]).unwrap();
        let c = ChainComplex::new(z, labels(&[1, 1]), vec![two]).unwrap();
        let h0 = c.homology_at(0).unwrap();
        assert_eq!(h0.module, ModuleDescriptor::from_cyclic(0, [BigUint::from(2u32)]));
        assert!(c.classes_equal(0, &[z.from_i64(1)], &[z.from_i64(3)]).unwrap());
        assert!(!c.classes_equal(0, &[z.from_i64(1)], &[z.from_i64(2)]).unwrap());
        assert!(c.classes_equal(0, &[z.zero()], &[z.zero()]).unwrap());
        assert!(c.is_cycle(0, &[z.zero()]).unwrap());
        assert!(c.is_cycle(0, &[z.zero(), z.zero()]).is_err());
    }
}
