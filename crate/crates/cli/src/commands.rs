use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sqz_hochschild::lemma::{canonical_generator_high, unit_generator, LemmaCase};
use sqz_hochschild::trace::cyclic_permutation_sum;
use sqz_hochschild::{
    aggregate_homology, boundary, build_full_complex, build_summand_complex, canonicalize, comparison_map,
    decompose_chain, enumerate_necklaces, generator_low, necklace_count, predict, project, project_symbol,
    summand_homology, verify_exact_sequence, verify_nontriviality, BasisElement, Chain, CyclicalWord, Error,
    GroundRing, Simplex, Word,
};

use crate::report::{
    torsion_strings, Check, ComputeReport, DegreeModule, DegreeResult, Generator, Meta, NecklaceEntry,
    NecklaceLength, NecklaceReport, Summand, VerifyReport, WordDegree, WordReport,
};

pub enum Failure {
    Usage(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SizeBudgetExceeded { .. } => Failure::Budget(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

fn check_count(what: &str, count: u64, budget: usize) -> Outcome<()> {
    if count > budget as u64 {
        return Err(Failure::Budget(format!("{count} {what} exceed the budget of {budget}")));
    }
    Ok(())
}

fn case(w: &CyclicalWord) -> u8 {
    LemmaCase::of(w).number()
}

fn summand_entry(w: &CyclicalWord, ring: GroundRing) -> Outcome<Summand> {
    let modules = summand_homology(w, ring)?
        .iter()
        .enumerate()
        .map(|(q, m)| DegreeModule::new(q, m, ring))
        .collect();
    Ok(Summand { word: w.to_string(), period: w.period(), case: case(w), modules })
}

pub fn compute(r: u32, ring: GroundRing, max_q: usize, budget: usize) -> Outcome<ComputeReport> {
    check_count("necklaces", necklace_count(r, max_q + 1), budget)?;
    let mut cache: BTreeMap<CyclicalWord, Summand> = BTreeMap::new();
    let mut results = Vec::new();
    for q in 0..=max_q {
        let h = aggregate_homology(r, ring, q)?;
        let mut summands = Vec::new();
        for c in h.contributions.iter().filter(|c| !c.module.is_zero()) {
            if !cache.contains_key(&c.word) {
                cache.insert(c.word.clone(), summand_entry(&c.word, ring)?);
            }
            summands.push(cache[&c.word].clone());
        }
        results.push(DegreeResult {
            degree: q,
            free_rank: h.module.free_rank,
            torsion: torsion_strings(&h.module),
            summands,
        });
    }
    Ok(ComputeReport { meta: Meta::new(Some(ring), r), results })
}

pub fn necklaces(r: u32, max_m: usize, budget: usize) -> Outcome<NecklaceReport> {
    check_count("words", (r as u64).saturating_pow(max_m as u32), budget)?;
    let results = (0..=max_m)
        .map(|m| {
            let words = enumerate_necklaces(r, m);
            NecklaceLength {
                length: m,
                count: words.len(),
                necklaces: words
                    .iter()
                    .map(|w| NecklaceEntry { word: w.to_string(), period: w.period(), case: case(w) })
                    .collect(),
            }
        })
        .collect();
    Ok(NecklaceReport { meta: Meta::new(None, r), results })
}

/// Parses a word; without `r` the alphabet is the largest letter used.
pub fn parse_word(text: &str, r: Option<u32>) -> Outcome<(Word, u32)> {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "0" || trimmed == "()" {
        return Ok((Word::empty(), r.unwrap_or(1)));
    }
    let w = Word::parse(trimmed, r.unwrap_or(u32::MAX))?;
    let r = r.unwrap_or_else(|| w.letters().iter().copied().max().unwrap_or(1));
    Ok((w, r))
}

pub fn word(text: &str, r: Option<u32>, ring: GroundRing) -> Outcome<WordReport> {
    let (w, r) = parse_word(text, r)?;
    let cw = canonicalize(&w);
    let d = build_summand_complex(&cw, ring)?;
    let predicted = predict(&cw, ring);
    let mut results = Vec::new();
    for (q, p) in &predicted {
        let engine = d.complex().homology_at(*q)?.module;
        results.push(WordDegree {
            degree: *q,
            agree: &engine == p,
            engine: DegreeModule::new(*q, &engine, ring),
            predicted: DegreeModule::new(*q, p, ring),
        });
    }
    let generators = if cw.is_empty() {
        vec![Generator { degree: 0, chain: unit_generator(ring).to_string() }]
    } else {
        vec![
            Generator { degree: cw.len() - 1, chain: generator_low(&cw, ring)?.to_string() },
            Generator { degree: cw.len(), chain: canonical_generator_high(&cw, ring)?.to_string() },
        ]
    };
    let basis = (0..=d.top_degree()).map(|q| d.basis(q).iter().map(|s| s.to_string()).collect()).collect();
    Ok(WordReport {
        meta: Meta::new(Some(ring), r),
        word: cw.to_string(),
        period: cw.period(),
        case: case(&cw),
        basis,
        results,
        generators,
    })
}

pub fn verify_lemma(r: u32, max_m: usize, ring: GroundRing, budget: usize) -> Outcome<VerifyReport> {
    let total: u64 = (0..=max_m).map(|m| necklace_count(r, m)).sum();
    check_count("necklaces", total, budget)?;
    let mut checks = Vec::new();
    for m in 0..=max_m {
        for w in enumerate_necklaces(r, m) {
            let d = build_summand_complex(&w, ring)?;
            let mut mismatches = Vec::new();
            for (q, p) in predict(&w, ring) {
                let engine = d.complex().homology_at(q)?.module;
                if engine != p {
                    mismatches.push(format!("H_{q} engine {} predicted {}", engine.render(ring), p.render(ring)));
                }
            }
            let mut detail = format!("case {}", case(&w));
            if !w.is_empty() {
                let c = comparison_map(&w, ring)?;
                if !c.is_isomorphism() {
                    mismatches.push("comparison map is not an isomorphism".to_string());
                }
                detail.push_str(&format!(", H_{} = {}, H_{} = {}", m - 1, c.summand_homology[0].render(ring), m, c.summand_homology[1].render(ring)));
            }
            if !mismatches.is_empty() {
                detail = mismatches.join("; ");
            }
            checks.push(Check::new(w.to_string(), mismatches.is_empty(), detail));
        }
    }
    Ok(VerifyReport::new(Meta::new(Some(ring), r), "verify-lemma", checks))
}

pub fn verify_theorem(r: u32, ring: GroundRing, budget: usize) -> Outcome<VerifyReport> {
    let shuffles: u64 = (1..=r as u64).product();
    check_count("shuffle terms", shuffles.saturating_mul(1 << r.min(63)), budget)?;
    let mut checks = Vec::new();
    for q in 1..=r as usize {
        let chain = project_symbol(q, r, ring)?;
        let units: Vec<String> = (1..=q).map(|i| format!("1+x{i}")).collect();
        let instance = format!("{{{}}}", units.join(","));
        if chain != cyclic_permutation_sum(q, ring)? {
            checks.push(Check::new(instance, false, format!("projection {chain} is not the cyclic permutation sum")));
            continue;
        }
        let report = verify_nontriviality(q, r, ring)?;
        let ok = report.verified();
        let detail = if ok {
            format!("projection {chain} is a nonzero class equal to the generator")
        } else {
            format!(
                "cycle {}, nontrivial {}, equals generator {}",
                report.is_cycle, report.nontrivial, report.equals_generator
            )
        };
        checks.push(Check::new(instance, ok, detail));
    }
    Ok(VerifyReport::new(Meta::new(Some(ring), r), "verify-theorem", checks))
}

pub fn verify_exactness(max_period: usize, ring: GroundRing) -> Outcome<VerifyReport> {
    let mut checks = Vec::new();
    for l in (1..=max_period).step_by(2) {
        let report = verify_exact_sequence(l, ring)?;
        let positions: Vec<String> = report
            .positions
            .iter()
            .map(|p| format!("{} {}", p.position, if p.exact { "exact" } else { "NOT exact" }))
            .collect();
        let detail = format!("{}; ε(N) = {}", positions.join(", "), report.augmentation_of_norm);
        checks.push(Check::new(format!("ℓ = {l}"), report.is_exact(), detail));
    }
    Ok(VerifyReport::new(Meta::new(Some(ring), 0), "verify-exactness", checks))
}

const RANDOM_CHAINS: usize = 200;

fn random_chain(ring: GroundRing, r: u32, n: usize, rng: &mut ChaCha8Rng) -> Chain {
    let mut c = Chain::zero(ring, n);
    for _ in 0..rng.gen_range(1..=4) {
        let factors = (0..=n).map(|_| BasisElement::from_code(rng.gen_range(0..=r as usize))).collect();
        c.add_term(&ring.from_i64(rng.gen_range(-5..=5)), Simplex::new(factors)).expect("degree matches");
    }
    c
}

pub fn oracle(r: u32, ring: GroundRing, max_q: usize, budget: usize, seed: u64) -> Outcome<VerifyReport> {
    let full = build_full_complex(r, ring, max_q, budget)?;
    let mut checks = Vec::new();
    for q in 0..=max_q {
        let brute = full.complex().homology_module_at(q)?;
        let agg = aggregate_homology(r, ring, q)?.module;
        checks.push(Check::new(
            format!("HH_{q}"),
            brute == agg,
            format!("full complex {}, summands {}", brute.render(ring), agg.render(ring)),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = 0;
    for _ in 0..RANDOM_CHAINS {
        let n = rng.gen_range(2..=max_q.max(1) + 1);
        let c = random_chain(ring, r, n, &mut rng);
        let b = boundary(&c)?;
        if !boundary(&b)?.is_zero() {
            bad += 1;
            continue;
        }
        for (w, part) in decompose_chain(&c) {
            if project(&b, &w) != boundary(&part)? {
                bad += 1;
                break;
            }
        }
    }
    checks.push(Check::new(
        format!("random chains (seed {seed})"),
        bad == 0,
        format!("{RANDOM_CHAINS} chains: b∘b = 0 and b commutes with every summand projection, {bad} failures"),
    ));
    Ok(VerifyReport::new(Meta::new(Some(ring), r), "oracle", checks))
}
