//! Randomized identity suites. Each returns a description of every failing case.

use rand::seq::SliceRandom;
use rand::Rng;
use sqz_hochschild::algebra::{cyclic_chain, degeneracy_chain, face_chain};
use sqz_hochschild::{boundary, shuffle, smith_normal_form, Chain, GroundRing, Matrix, RingElement, Simplex};

use super::{all_rings, is_unimodular, matrix_from, random_chain, random_int_matrix, random_simplex, rng};

type Failures = Vec<String>;

fn d(s: &Chain, i: usize) -> Chain {
    face_chain(s, i).unwrap()
}

fn s_(c: &Chain, i: usize) -> Chain {
    degeneracy_chain(c, i).unwrap()
}

fn t(c: &Chain) -> Chain {
    cyclic_chain(c).unwrap()
}

fn single(s: &Simplex) -> Chain {
    Chain::from_simplex(GroundRing::Integers, s.clone())
}

pub fn simplicial_identities(cases: usize) -> Failures {
    let mut rng = rng(1);
    let mut failures = Vec::new();
    for _ in 0..cases {
        let r = rng.gen_range(1..=3);
        let n = rng.gen_range(2..=6);
        let x = single(&random_simplex(r, n, &mut rng));
        for j in 0..=n {
            for i in 0..j {
                if d(&d(&x, j), i) != d(&d(&x, i), j - 1) {
                    failures.push(format!("d{i} d{j} on {x}"));
                }
            }
        }
        for j in 0..=n {
            for i in 0..=j {
                if s_(&s_(&x, j), i) != s_(&s_(&x, i), j + 1) {
                    failures.push(format!("s{i} s{j} on {x}"));
                }
            }
        }
        for j in 0..=n {
            for i in 0..=n + 1 {
                let lhs = d(&s_(&x, j), i);
                let rhs = if i < j {
                    s_(&d(&x, i), j - 1)
                } else if i == j || i == j + 1 {
                    x.clone()
                } else {
                    s_(&d(&x, i - 1), j)
                };
                if lhs != rhs {
                    failures.push(format!("d{i} s{j} on {x}"));
                }
            }
        }
    }
    failures
}

pub fn cyclic_identities(cases: usize) -> Failures {
    let mut rng = rng(2);
    let mut failures = Vec::new();
    for _ in 0..cases {
        let r = rng.gen_range(1..=3);
        let n = rng.gen_range(1..=6);
        let x = single(&random_simplex(r, n, &mut rng));
        let mut power = x.clone();
        for _ in 0..=n {
            power = t(&power);
        }
        if power != x {
            failures.push(format!("t^(n+1) on {x}"));
        }
        for i in 1..=n {
            if d(&t(&x), i) != t(&d(&x, i - 1)) {
                failures.push(format!("d{i} t on {x}"));
            }
            if s_(&t(&x), i) != t(&s_(&x, i - 1)) {
                failures.push(format!("s{i} t on {x}"));
            }
        }
        if d(&t(&x), 0) != d(&x, n) {
            failures.push(format!("d0 t on {x}"));
        }
        if s_(&t(&x), 0) != t(&t(&s_(&x, n))) {
            failures.push(format!("s0 t on {x}"));
        }
    }
    failures
}

/// `b ∘ b = 0` on `cases` random chains for every `r <= 3` and degree `2..=6`.
pub fn boundary_squares_to_zero(cases: usize) -> Failures {
    let mut rng = rng(3);
    let rings = all_rings();
    let mut failures = Vec::new();
    for r in 1..=3 {
        for n in 2..=6 {
            for _ in 0..cases {
                let ring = *rings.choose(&mut rng).unwrap();
                let terms = rng.gen_range(1..=4);
                let c = random_chain(ring, r, n, terms, &mut rng);
                let bb = boundary(&boundary(&c).unwrap()).unwrap();
                if !bb.is_zero() {
                    failures.push(format!("b b ({c}) = {bb} over {ring}"));
                }
            }
        }
    }
    failures
}

pub fn structure_maps_preserve_summands(cases: usize) -> Failures {
    let mut rng = rng(4);
    let mut failures = Vec::new();
    for _ in 0..cases {
        let r = rng.gen_range(1..=3);
        let n = rng.gen_range(1..=6);
        let s = random_simplex(r, n, &mut rng);
        let w = s.summand();
        let mut images = vec![s.cyclic_op()];
        images.extend((0..=n).map(|i| s.degeneracy(i).unwrap()));
        images.extend((0..=n).filter_map(|i| s.face(i).unwrap()));
        for image in images {
            if image.summand() != w {
                failures.push(format!("{s} -> {image}"));
            }
        }
    }
    failures
}

fn small_chain(ring: GroundRing, rng: &mut rand_chacha::ChaCha8Rng) -> Chain {
    let n = rng.gen_range(0..=2);
    let terms = rng.gen_range(1..=3);
    random_chain(ring, 3, n, terms, rng)
}

/// `u ⋆ v = (-1)^{pq} v ⋆ u`.
pub fn shuffle_graded_commutativity(cases: usize) -> Failures {
    let mut rng = rng(5);
    let rings = all_rings();
    let mut failures = Vec::new();
    for _ in 0..cases {
        let ring = *rings.choose(&mut rng).unwrap();
        let u = small_chain(ring, &mut rng);
        let v = small_chain(ring, &mut rng);
        let lhs = shuffle(&u, &v).unwrap();
        let rhs = shuffle(&v, &u).unwrap().scale(&ring.sign(u.degree() * v.degree()));
        if lhs != rhs {
            failures.push(format!("({u}) ⋆ ({v}) over {ring}"));
        }
    }
    failures
}

pub fn shuffle_associativity(cases: usize) -> Failures {
    let mut rng = rng(6);
    let rings = all_rings();
    let mut failures = Vec::new();
    for _ in 0..cases {
        let ring = *rings.choose(&mut rng).unwrap();
        let u = small_chain(ring, &mut rng);
        let v = small_chain(ring, &mut rng);
        let w = small_chain(ring, &mut rng);
        let lhs = shuffle(&shuffle(&u, &v).unwrap(), &w).unwrap();
        let rhs = shuffle(&u, &shuffle(&v, &w).unwrap()).unwrap();
        if lhs != rhs {
            failures.push(format!("({u}) ⋆ ({v}) ⋆ ({w}) over {ring}"));
        }
    }
    failures
}

/// `b(u ⋆ v) = b(u) ⋆ v + (-1)^p u ⋆ b(v)` for chains of positive degree.
pub fn shuffle_leibniz(cases: usize) -> Failures {
    let mut rng = rng(7);
    let mut failures = Vec::new();
    let ring = GroundRing::Integers;
    for _ in 0..cases {
        let p = rng.gen_range(1..=2);
        let q = rng.gen_range(1..=2);
        let u = random_chain(ring, 3, p, 2, &mut rng);
        let v = random_chain(ring, 3, q, 2, &mut rng);
        let lhs = boundary(&shuffle(&u, &v).unwrap()).unwrap();
        let rhs = shuffle(&boundary(&u).unwrap(), &v)
            .unwrap()
            .add(&shuffle(&u, &boundary(&v).unwrap()).unwrap().scale(&ring.sign(p)))
            .unwrap();
        if lhs != rhs {
            failures.push(format!("b(({u}) ⋆ ({v}))"));
        }
    }
    failures
}

fn int(x: &RingElement) -> num_bigint::BigInt {
    match x {
        RingElement::Integer(v) => v.clone(),
        other => panic!("not an integer: {other:?}"),
    }
}

/// `U M V = S`, `S` diagonal with a divisibility chain of positive entries,
/// and `det U = ±1 = det V`.
pub fn snf_postconditions(cases: usize) -> Failures {
    let mut rng = rng(8);
    let z = GroundRing::Integers;
    let mut failures = Vec::new();
    for _ in 0..cases {
        let rows = rng.gen_range(0..=6);
        let cols = rng.gen_range(0..=6);
        let bound = *[1, 3, 20].choose(&mut rng).unwrap();
        let m: Matrix = matrix_from(z, &random_int_matrix(rows, cols, bound, &mut rng), cols);
        let f = smith_normal_form(&m).unwrap();
        let mut problems = Vec::new();
        if f.u.mul(&m).unwrap().mul(&f.v).unwrap() != f.s {
            problems.push("UMV != S");
        }
        if f.s.nonzeros().any(|(i, j, _)| i != j) {
            problems.push("S not diagonal");
        }
        let diag: Vec<_> = (0..rows.min(cols)).map(|i| int(&f.s.get(i, i))).collect();
        let k = f.invariant_factors.len();
        if diag[..k] != f.invariant_factors[..] || diag[k..].iter().any(|x| x != &0.into()) {
            problems.push("invariant factors differ from the diagonal");
        }
        if f.invariant_factors.iter().any(|x| x <= &0.into()) {
            problems.push("nonpositive invariant factor");
        }
        if f.invariant_factors.windows(2).any(|w| &w[1] % &w[0] != 0.into()) {
            problems.push("divisibility chain broken");
        }
        if !is_unimodular(&f.u) || !is_unimodular(&f.v) {
            problems.push("transform not unimodular");
        }
        if !problems.is_empty() {
            failures.push(format!("{rows}x{cols} {:?}: {}", m.to_dense(), problems.join(", ")));
        }
    }
    failures
}
