mod common;

use common::all_rings;
use num_bigint::BigUint;
use sqz_hochschild::lemma::{canonical_generator_high, unit_generator, LemmaCase};
use sqz_hochschild::trace::{cyclic_permutation_sum, plain_symbol_cycle, symbol_word};
use sqz_hochschild::{
    build_summand_complex, comparison_map, enumerate_necklaces, generator_low, predict, project, project_symbol,
    symbol_cycle, verify_exact_sequence, verify_nontriviality, ChainComplex, GroundRing, Matrix, ModuleDescriptor,
    RingElement,
};

/// Independent reading of the closed formulas for one ring.
fn expected(ring: GroundRing, m: usize, period: usize, q: usize) -> ModuleDescriptor {
    let two = BigUint::from(2u32);
    let half = |free_if_two: bool| match ring {
        GroundRing::Integers => {
            if free_if_two {
                ModuleDescriptor::zero()
            } else {
                ModuleDescriptor::from_cyclic(0, [two.clone()])
            }
        }
        GroundRing::Rationals => ModuleDescriptor::zero(),
        GroundRing::PrimeField(2) => ModuleDescriptor::free(1),
        GroundRing::PrimeField(_) => ModuleDescriptor::zero(),
        GroundRing::ResidueRing(2) => ModuleDescriptor::free(1),
        GroundRing::ResidueRing(n) if n % 2 == 0 => ModuleDescriptor::from_cyclic(0, [two.clone()]),
        GroundRing::ResidueRing(_) => ModuleDescriptor::zero(),
    };
    if m == 0 {
        return if q == 0 { ModuleDescriptor::free(1) } else { ModuleDescriptor::zero() };
    }
    let twisted = m % 2 == 0 && period % 2 == 1;
    match (q + 1 == m, q == m) {
        (true, _) if twisted => half(false),
        (_, true) if twisted => half(true),
        (true, _) | (_, true) => ModuleDescriptor::free(1),
        _ => ModuleDescriptor::zero(),
    }
}

#[test]
fn predictions_match_an_independent_table() {
    for ring in all_rings() {
        for r in 1..=3 {
            for m in 0..=5 {
                for w in enumerate_necklaces(r, m) {
                    for (q, module) in predict(&w, ring) {
                        assert_eq!(module, expected(ring, m, w.period(), q), "{w} {ring} q={q}");
                    }
                }
            }
        }
    }
}

#[test]
fn engine_matches_predictions() {
    for ring in all_rings() {
        for r in 1..=3 {
            for m in 0..=5 {
                for w in enumerate_necklaces(r, m) {
                    let d = build_summand_complex(&w, ring).unwrap();
                    for (q, module) in predict(&w, ring) {
                        assert_eq!(d.complex().homology_at(q).unwrap().module, module, "{w} {ring} q={q}");
                    }
                }
            }
        }
    }
}

/// `z` generates `H_q` iff it is a cycle and every engine generator lies in
/// the span of `z` and the boundaries.
fn generates(c: &ChainComplex, q: usize, z: &[RingElement]) -> bool {
    let ring = c.ring();
    let incoming = c.differential(q + 1);
    let mut m = Matrix::zero(ring, c.rank(q), incoming.cols() + 1);
    for (i, j, x) in incoming.nonzeros() {
        m.set(i, j, x.clone());
    }
    for (i, x) in z.iter().enumerate() {
        m.set(i, incoming.cols(), x.clone());
    }
    c.is_cycle(q, z).unwrap()
        && c.homology_at(q).unwrap().generators.iter().all(|g| m.column_span_contains(&g.cycle).unwrap())
}

fn units(ring: GroundRing) -> Option<Vec<RingElement>> {
    match ring {
        GroundRing::Integers => Some(vec![ring.one(), ring.from_i64(-1)]),
        _ => ring.elements().map(|e| e.into_iter().filter(|x| ring.is_unit(x)).collect()),
    }
}

#[test]
fn closed_form_generators_generate() {
    for ring in all_rings() {
        let d0 = build_summand_complex(&enumerate_necklaces(1, 0)[0], ring).unwrap();
        let unit = d0.coordinates(&unit_generator(ring)).unwrap();
        assert!(generates(d0.complex(), 0, &unit));
        for r in 1..=3 {
            for m in 1..=5 {
                for w in enumerate_necklaces(r, m) {
                    let d = build_summand_complex(&w, ring).unwrap();
                    let low = d.coordinates(&generator_low(&w, ring).unwrap()).unwrap();
                    let high = d.coordinates(&canonical_generator_high(&w, ring).unwrap()).unwrap();
                    assert!(generates(d.complex(), m - 1, &low), "low {w} {ring}");
                    assert!(generates(d.complex(), m, &high), "high {w} {ring}");
                    if LemmaCase::of(&w) == LemmaCase::Untwisted {
                        let Some(units) = units(ring) else { continue };
                        for (q, ours) in [(m - 1, &low), (m, &high)] {
                            let engine = &d.complex().homology_at(q).unwrap().generators[0].cycle;
                            let matched = units.iter().any(|u| {
                                let scaled: Vec<RingElement> = engine.iter().map(|x| ring.mul(u, x)).collect();
                                d.complex().classes_equal(q, ours, &scaled).unwrap()
                            });
                            assert!(matched, "{w} {ring} q={q}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn comparison_maps_are_isomorphisms() {
    for ring in all_rings() {
        for r in 1..=3 {
            for m in 1..=5 {
                for w in enumerate_necklaces(r, m) {
                    let c = comparison_map(&w, ring).unwrap();
                    assert!(c.commutes && c.bijective, "{w} {ring}");
                    assert_eq!(c.reference_homology, c.summand_homology, "{w} {ring}");
                    let p = predict(&w, ring);
                    assert_eq!(c.reference_homology, [p[&(m - 1)].clone(), p[&m].clone()]);
                }
            }
        }
    }
}

#[test]
fn four_term_sequences_are_exact() {
    let rings = [
        GroundRing::Integers,
        GroundRing::Rationals,
        GroundRing::PrimeField(2),
        GroundRing::PrimeField(3),
        GroundRing::ResidueRing(4),
        GroundRing::ResidueRing(6),
        GroundRing::ResidueRing(12),
    ];
    for ring in rings {
        for l in [1, 3, 5, 7, 9] {
            let report = verify_exact_sequence(l, ring).unwrap();
            assert!(report.is_exact(), "{report:?}");
            assert_eq!(report.augmentation_of_norm, ring.from_i64(l as i64));
        }
    }
}

#[test]
fn projected_symbols_are_cyclic_permutation_sums() {
    for q in 1..=6 {
        for ring in [GroundRing::Integers, GroundRing::PrimeField(3)] {
            let p = project_symbol(q, q as u32, ring).unwrap();
            assert_eq!(p, cyclic_permutation_sum(q, ring).unwrap(), "q={q}");
            let word = symbol_word(q, q as u32).unwrap();
            assert_eq!(p, project(&plain_symbol_cycle(q, q as u32, ring).unwrap(), &word));
        }
    }
}

#[test]
fn symbols_are_nontrivial() {
    for ring in all_rings() {
        for r in 1..=4 {
            for q in 1..=r as usize {
                let report = verify_nontriviality(q, r, ring).unwrap();
                assert!(report.verified(), "q={q} r={r} {ring}: {report:?}");
            }
        }
    }
}

#[test]
fn symbol_cycles_are_cycles() {
    for q in 1..=4 {
        let c = symbol_cycle(q, 4, GroundRing::Integers).unwrap();
        assert!(sqz_hochschild::boundary(&c).unwrap().is_zero());
    }
}
