//! Howell normal form of row spans over `Z/n`.
//!
//! A Howell basis is an echelon basis whose pivots divide `n`, whose entries
//! above each pivot are reduced modulo it, and which has the extra property
//! that the rows with pivot in column `j` or later span every vector of the
//! module whose first `j` entries vanish. That property makes membership
//! testing by reduction and kernel extraction correct even when `n` is
//! composite.

use super::domain::{ext_gcd, ext_gcd_coeff};
use crate::ring::mul_mod;

fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// A unit `u` of `Z/n` with `u a ≡ gcd(a, n)`.
fn normalizing_unit(a: u64, n: u64) -> u64 {
    let g = gcd(a, n);
    let (a1, n1) = (a / g, n / g);
    let base = if n1 == 1 { 1 } else { ext_gcd_coeff(a1 % n1, n1).1 };
    let mut u = base;
    while gcd(u, n) != 1 {
        u += n1;
    }
    u % n
}

fn combine(rows: &mut [Vec<u64>], r: usize, i: usize, j: usize, n: u64) {
    let (a, b) = (rows[r][j], rows[i][j]);
    let (g, s, t) = ext_gcd(a as i128, b as i128);
    let m = n as i128;
    let red = |x: i128| x.rem_euclid(m) as u64;
    let (s, t) = (red(s), red(t));
    let (c, d) = (red(-(b as i128 / g)), red(a as i128 / g));
    for k in 0..rows[r].len() {
        let (x, y) = (rows[r][k], rows[i][k]);
        rows[r][k] = (mul_mod(s, x, n) + mul_mod(t, y, n)) % n;
        rows[i][k] = (mul_mod(c, x, n) + mul_mod(d, y, n)) % n;
    }
}

fn scaled(row: &[u64], c: u64, n: u64) -> Vec<u64> {
    row.iter().map(|&x| mul_mod(c, x, n)).collect()
}

/// Howell basis of the row span of `rows` (each of length `cols`) over `Z/n`.
/// The returned rows are nonzero and ordered by pivot column.
pub(crate) fn howell(mut rows: Vec<Vec<u64>>, cols: usize, n: u64) -> Vec<Vec<u64>> {
    debug_assert!(rows.iter().all(|r| r.len() == cols && r.iter().all(|&x| x < n)));
    let mut r = 0;
    for j in 0..cols {
        if r >= rows.len() {
            break;
        }
        // rows may grow while we scan: saturation rows are appended below r.
        let mut i = r + 1;
        while i < rows.len() {
            if rows[i][j] != 0 {
                combine(&mut rows, r, i, j, n);
            }
            i += 1;
        }
        let pivot = rows[r][j];
        if pivot == 0 {
            continue;
        }
        let u = normalizing_unit(pivot, n);
        if u != 1 {
            rows[r] = scaled(&rows[r], u, n);
        }
        let pivot = rows[r][j];
        for i in 0..r {
            let q = rows[i][j] / pivot;
            if q != 0 {
                let neg_q = (n - q % n) % n;
                for k in j..cols {
                    rows[i][k] = (rows[i][k] + mul_mod(neg_q, rows[r][k], n)) % n;
                }
            }
        }
        if pivot != 1 {
            let sat = scaled(&rows[r], n / pivot, n);
            if sat.iter().any(|&x| x != 0) {
                rows.push(sat);
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows.retain(|row| row.iter().any(|&x| x != 0));
    rows
}

fn pivot_col(row: &[u64]) -> Option<usize> {
    row.iter().position(|&x| x != 0)
}

/// Reduces `v` against a Howell basis. Returns true when `v` lies in the span.
pub(crate) fn reduce(basis: &[Vec<u64>], v: &mut [u64], n: u64) -> bool {
    for row in basis {
        let p = pivot_col(row).expect("howell rows are nonzero");
        if v[p] == 0 {
            continue;
        }
        if v[p] % row[p] != 0 {
            return false;
        }
        let neg_q = (n - (v[p] / row[p]) % n) % n;
        for (x, &y) in v.iter_mut().zip(row) {
            *x = (*x + mul_mod(neg_q, y, n)) % n;
        }
    }
    v.iter().all(|&x| x == 0)
}

/// Generators of the left kernel `{y : y B = 0}` of a `k x c` matrix `B`.
pub(crate) fn left_kernel(b: &[Vec<u64>], c: usize, n: u64) -> Vec<Vec<u64>> {
    let k = b.len();
    let augmented: Vec<Vec<u64>> = b
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut out = row.clone();
            out.extend((0..k).map(|j| u64::from(i == j)));
            out
        })
        .collect();
    howell(augmented, c + k, n)
        .into_iter()
        .filter(|row| row[..c].iter().all(|&x| x == 0))
        .map(|row| row[c..].to_vec())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every element of the span, by enumerating all coefficient vectors.
    fn span(rows: &[Vec<u64>], cols: usize, n: u64) -> Vec<Vec<u64>> {
        let mut out = vec![vec![0; cols]];
        for row in rows {
            let mut next = Vec::new();
            for v in &out {
                for c in 0..n {
                    let w: Vec<u64> = v.iter().zip(row).map(|(&x, &y)| (x + c * y) % n).collect();
                    if !next.contains(&w) {
                        next.push(w);
                    }
                }
            }
            out = next;
        }
        out.sort();
        out
    }

    #[test]
    fn examples() {
        assert_eq!(howell(vec![vec![2]], 1, 4), vec![vec![2]]);
        assert_eq!(howell(vec![vec![2], vec![2]], 1, 4), vec![vec![2]]);
        assert_eq!(howell(vec![vec![1]], 1, 6), vec![vec![1]]);
        assert_eq!(howell(vec![vec![3]], 1, 6), vec![vec![3]]);
        assert_eq!(howell(vec![vec![5]], 1, 6), vec![vec![1]]);
        // [2, 1] over Z/4 spans (0, 2) too: the Howell basis must expose it.
        assert_eq!(howell(vec![vec![2, 1]], 2, 4), vec![vec![2, 1], vec![0, 2]]);
    }

    #[test]
    fn random_spans_match_enumeration() {
        let mut state = 0x2545_f491_4f6c_dd1du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for n in [4u64, 6, 8, 9, 12] {
            for _ in 0..60 {
                let cols = 1 + (next() % 3) as usize;
                let nrows = (next() % 4) as usize;
                let rows: Vec<Vec<u64>> =
                    (0..nrows).map(|_| (0..cols).map(|_| next() % n).collect()).collect();
                let h = howell(rows.clone(), cols, n);
                let full = span(&rows, cols, n);
                assert_eq!(span(&h, cols, n), full, "n={n} rows={rows:?} h={h:?}");
                // echelon with pivots dividing n
                let pivots: Vec<usize> = h.iter().map(|r| pivot_col(r).unwrap()).collect();
                assert!(pivots.windows(2).all(|w| w[0] < w[1]));
                assert!(h.iter().zip(&pivots).all(|(r, &p)| n % r[p] == 0));
                // membership by reduction agrees with enumeration on every vector
                let mut all = vec![vec![]];
                for _ in 0..cols {
                    all = all.into_iter().flat_map(|v: Vec<u64>| (0..n).map(move |x| [v.clone(), vec![x]].concat())).collect();
                }
                for v in all {
                    let mut w = v.clone();
                    assert_eq!(reduce(&h, &mut w, n), full.contains(&v), "n={n} rows={rows:?} v={v:?}");
                }
                // left kernel against brute force
                if nrows > 0 {
                    let ker = left_kernel(&rows, cols, n);
                    let mut brute = Vec::new();
                    let mut ys = vec![vec![]];
                    for _ in 0..nrows {
                        ys = ys.into_iter().flat_map(|v: Vec<u64>| (0..n).map(move |x| [v.clone(), vec![x]].concat())).collect();
                    }
                    for y in ys {
                        let prod: Vec<u64> = (0..cols)
                            .map(|c| (0..nrows).map(|i| y[i] * rows[i][c]).sum::<u64>() % n)
                            .collect();
                        if prod.iter().all(|&x| x == 0) {
                            brute.push(y);
                        }
                    }
                    brute.sort();
                    assert_eq!(span(&ker, nrows, n), brute);
                }
            }
        }
    }
}
