//! Smith normal form over a Euclidean domain by pivoting on the entry of least size.

use super::domain::Euclidean;

pub(crate) type Dense<E> = Vec<Vec<E>>;

#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Track {
    pub u: bool,
    pub u_inv: bool,
    pub v: bool,
    pub v_inv: bool,
}

impl Track {
    pub const NONE: Track = Track { u: false, u_inv: false, v: false, v_inv: false };
    #[cfg(test)]
    pub const ALL: Track = Track { u: true, u_inv: true, v: true, v_inv: true };
}

/// `U A V = S` with `S = diag(diag[0], …, diag[rank-1], 0, …)`.
#[derive(Clone, Debug)]
pub(crate) struct Snf<E> {
    pub diag: Vec<E>,
    pub u: Option<Dense<E>>,
    pub u_inv: Option<Dense<E>>,
    pub v: Option<Dense<E>>,
    pub v_inv: Option<Dense<E>>,
}

impl<E> Snf<E> {
    pub fn rank(&self) -> usize {
        self.diag.len()
    }
}

pub(crate) fn identity<D: Euclidean>(d: &D, n: usize) -> Dense<D::Elem> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { d.one() } else { d.zero() }).collect())
        .collect()
}

struct Calc<'a, D: Euclidean> {
    d: &'a D,
    a: Dense<D::Elem>,
    rows: usize,
    cols: usize,
    u: Option<Dense<D::Elem>>,
    u_inv: Option<Dense<D::Elem>>,
    v: Option<Dense<D::Elem>>,
    v_inv: Option<Dense<D::Elem>>,
}

/// `row[target] -= q * row[source]` on a dense matrix.
fn axpy_row<D: Euclidean>(d: &D, m: &mut Dense<D::Elem>, target: usize, source: usize, q: &D::Elem) {
    let (t, s) = if target < source {
        let (lo, hi) = m.split_at_mut(source);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(target);
        (&mut hi[0], &lo[source])
    };
    for (x, y) in t.iter_mut().zip(s.iter()) {
        if !d.is_zero(y) {
            *x = d.sub(x, &d.mul(q, y));
        }
    }
}

/// `col[target] -= q * col[source]`.
fn axpy_col<D: Euclidean>(d: &D, m: &mut Dense<D::Elem>, target: usize, source: usize, q: &D::Elem) {
    for row in m.iter_mut() {
        if !d.is_zero(&row[source]) {
            let delta = d.mul(q, &row[source]);
            row[target] = d.sub(&row[target], &delta);
        }
    }
}

impl<D: Euclidean> Calc<'_, D> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        if let Some(u) = &mut self.u {
            u.swap(i, j);
        }
        if let Some(ui) = &mut self.u_inv {
            for row in ui.iter_mut() {
                row.swap(i, j);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in self.a.iter_mut() {
            row.swap(i, j);
        }
        if let Some(v) = &mut self.v {
            for row in v.iter_mut() {
                row.swap(i, j);
            }
        }
        if let Some(vi) = &mut self.v_inv {
            vi.swap(i, j);
        }
    }

    /// `row_i -= q row_t`.
    fn row_op(&mut self, i: usize, t: usize, q: &D::Elem) {
        let d = self.d;
        axpy_row(d, &mut self.a, i, t, q);
        if let Some(u) = &mut self.u {
            axpy_row(d, u, i, t, q);
        }
        if let Some(ui) = &mut self.u_inv {
            axpy_col(d, ui, t, i, &d.neg(q));
        }
    }

    /// `col_j -= q col_t`.
    fn col_op(&mut self, j: usize, t: usize, q: &D::Elem) {
        let d = self.d;
        axpy_col(d, &mut self.a, j, t, q);
        if let Some(v) = &mut self.v {
            axpy_col(d, v, j, t, q);
        }
        if let Some(vi) = &mut self.v_inv {
            axpy_row(d, vi, t, j, &d.neg(q));
        }
    }

    fn scale_row(&mut self, t: usize, c: &D::Elem) {
        let d = self.d;
        for x in self.a[t].iter_mut() {
            *x = d.mul(c, x);
        }
        if let Some(u) = &mut self.u {
            for x in u[t].iter_mut() {
                *x = d.mul(c, x);
            }
        }
        if let Some(ui) = &mut self.u_inv {
            let inv = d.unit_inverse(c);
            for row in ui.iter_mut() {
                row[t] = d.mul(&inv, &row[t]);
            }
        }
    }

    fn least_entry(&self, t: usize) -> Option<(usize, usize)> {
        let d = self.d;
        let mut best: Option<(usize, usize, D::Size)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = &self.a[i][j];
                if d.is_zero(x) {
                    continue;
                }
                let s = d.size(x);
                if best.as_ref().map_or(true, |(_, _, b)| s < *b) {
                    let unit = d.is_unit(x);
                    best = Some((i, j, s));
                    if unit {
                        return best.map(|(i, j, _)| (i, j));
                    }
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    /// Least nonzero entry in row `t` or column `t`, beyond the diagonal.
    fn least_in_cross(&self, t: usize) -> Option<(usize, usize)> {
        let d = self.d;
        let mut best: Option<(usize, usize, D::Size)> = None;
        let candidates = (t + 1..self.rows).map(|i| (i, t)).chain((t + 1..self.cols).map(|j| (t, j)));
        for (i, j) in candidates {
            let x = &self.a[i][j];
            if d.is_zero(x) {
                continue;
            }
            let s = d.size(x);
            if best.as_ref().map_or(true, |(_, _, b)| s < *b) {
                best = Some((i, j, s));
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn run(&mut self) -> Vec<D::Elem> {
        let d = self.d;
        let mut diag = Vec::new();
        let mut t = 0;
        while t < self.rows.min(self.cols) {
            let Some((pi, pj)) = self.least_entry(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut clean = true;
                let pivot = self.a[t][t].clone();
                for i in t + 1..self.rows {
                    if d.is_zero(&self.a[i][t]) {
                        continue;
                    }
                    let (q, r) = d.div_rem(&self.a[i][t], &pivot);
                    self.row_op(i, t, &q);
                    clean &= d.is_zero(&r);
                }
                for j in t + 1..self.cols {
                    if d.is_zero(&self.a[t][j]) {
                        continue;
                    }
                    let (q, r) = d.div_rem(&self.a[t][j], &pivot);
                    self.col_op(j, t, &q);
                    clean &= d.is_zero(&r);
                }
                if !clean {
                    let (i, j) = self.least_in_cross(t).expect("a nonzero remainder exists");
                    self.swap_rows(t, i);
                    self.swap_cols(t, j);
                    continue;
                }
                if !d.is_field() && !d.is_unit(&pivot) {
                    let offender = (t + 1..self.rows).find(|&i| {
                        (t + 1..self.cols).any(|j| {
                            let x = &self.a[i][j];
                            !d.is_zero(x) && !d.is_zero(&d.div_rem(x, &pivot).1)
                        })
                    });
                    if let Some(i) = offender {
                        // row_t += row_i puts a non-multiple of the pivot into row t.
                        self.row_op(t, i, &d.neg(&d.one()));
                        continue;
                    }
                }
                break;
            }
            let c = d.normalizer(&self.a[t][t]);
            if c != d.one() {
                self.scale_row(t, &c);
            }
            diag.push(self.a[t][t].clone());
            t += 1;
        }
        diag
    }
}

pub(crate) fn snf<D: Euclidean>(
    d: &D,
    a: Dense<D::Elem>,
    rows: usize,
    cols: usize,
    track: Track,
) -> Snf<D::Elem> {
    debug_assert_eq!(a.len(), rows);
    debug_assert!(a.iter().all(|r| r.len() == cols));
    let mut calc = Calc {
        d,
        a,
        rows,
        cols,
        u: track.u.then(|| identity(d, rows)),
        u_inv: track.u_inv.then(|| identity(d, rows)),
        v: track.v.then(|| identity(d, cols)),
        v_inv: track.v_inv.then(|| identity(d, cols)),
    };
    let diag = calc.run();
    Snf { diag, u: calc.u, u_inv: calc.u_inv, v: calc.v, v_inv: calc.v_inv }
}

pub(crate) fn mat_mul<D: Euclidean>(d: &D, a: &Dense<D::Elem>, b: &Dense<D::Elem>, inner: usize, cols: usize) -> Dense<D::Elem> {
    a.iter()
        .map(|row| {
            let mut out = vec![d.zero(); cols];
            for k in 0..inner {
                if d.is_zero(&row[k]) {
                    continue;
                }
                for (j, o) in out.iter_mut().enumerate() {
                    if !d.is_zero(&b[k][j]) {
                        *o = d.add(o, &d.mul(&row[k], &b[k][j]));
                    }
                }
            }
            out
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::super::domain::{IntegerDomain, PrimeDomain};
    use super::*;

    fn ints(rows: &[&[i64]]) -> Dense<BigInt> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn check(a: Dense<BigInt>, rows: usize, cols: usize) -> Snf<BigInt> {
        let d = IntegerDomain;
        let s = snf(&d, a.clone(), rows, cols, Track::ALL);
        let (u, ui, v, vi) = (s.u.as_ref().unwrap(), s.u_inv.as_ref().unwrap(), s.v.as_ref().unwrap(), s.v_inv.as_ref().unwrap());
        let uav = mat_mul(&d, &mat_mul(&d, u, &a, rows, cols), v, cols, cols);
        for i in 0..rows {
            for j in 0..cols {
                let expected = if i == j && i < s.rank() { s.diag[i].clone() } else { BigInt::from(0) };
                assert_eq!(uav[i][j], expected);
            }
        }
        assert_eq!(mat_mul(&d, u, ui, rows, rows), identity(&d, rows));
        assert_eq!(mat_mul(&d, v, vi, cols, cols), identity(&d, cols));
        for w in s.diag.windows(2) {
            assert_eq!(&w[1] % &w[0], BigInt::from(0));
        }
        assert!(s.diag.iter().all(|x| x > &BigInt::from(0)));
        s
    }

    #[test]
    fn diagonal_two_three() {
        let s = check(ints(&[&[2, 0], &[0, 3]]), 2, 2);
        assert_eq!(s.diag, vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn zero_and_identity() {
        let s = check(ints(&[&[0, 0], &[0, 0]]), 2, 2);
        assert_eq!(s.rank(), 0);
        assert_eq!(s.u.unwrap(), identity(&IntegerDomain, 2));
        let s = check(ints(&[&[1, 0], &[0, 1]]), 2, 2);
        assert_eq!(s.diag, vec![BigInt::from(1), BigInt::from(1)]);
    }

    #[test]
    fn rectangular_and_empty() {
        let s = check(ints(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]), 3, 3);
        assert_eq!(s.diag, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        let s = check(ints(&[&[4, 6, 8]]), 1, 3);
        assert_eq!(s.diag, vec![BigInt::from(2)]);
        let s = check(Vec::new(), 0, 3);
        assert_eq!(s.rank(), 0);
        let s = check(vec![vec![]; 2], 2, 0);
        assert_eq!(s.rank(), 0);
    }

    #[test]
    fn prime_field_rank() {
        let d = PrimeDomain { p: 2 };
        let a = vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]];
        let s = snf(&d, a, 3, 3, Track::NONE);
        assert_eq!(s.diag, vec![1, 1]);
    }
}
