//! Report types shared by the text and JSON renderers.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use sqz_hochschild::{GroundRing, ModuleDescriptor};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Meta {
    pub ring: Option<String>,
    pub r: u32,
    pub version: String,
}

impl Meta {
    pub fn new(ring: Option<GroundRing>, r: u32) -> Self {
        Self { ring: ring.map(|k| k.to_string()), r, version: env!("CARGO_PKG_VERSION").to_string() }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DegreeModule {
    pub degree: usize,
    pub free_rank: usize,
    pub torsion: Vec<String>,
    pub rendered: String,
}

impl DegreeModule {
    pub fn new(degree: usize, module: &ModuleDescriptor, ring: GroundRing) -> Self {
        Self {
            degree,
            free_rank: module.free_rank,
            torsion: torsion_strings(module),
            rendered: module.render(ring),
        }
    }
}

pub fn torsion_strings(module: &ModuleDescriptor) -> Vec<String> {
    module.torsion.iter().map(|d| d.to_string()).collect()
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Summand {
    pub word: String,
    pub period: usize,
    pub case: u8,
    pub modules: Vec<DegreeModule>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DegreeResult {
    pub degree: usize,
    pub free_rank: usize,
    pub torsion: Vec<String>,
    pub summands: Vec<Summand>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ComputeReport {
    pub meta: Meta,
    pub results: Vec<DegreeResult>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct NecklaceEntry {
    pub word: String,
    pub period: usize,
    pub case: u8,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct NecklaceLength {
    pub length: usize,
    pub count: usize,
    pub necklaces: Vec<NecklaceEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct NecklaceReport {
    pub meta: Meta,
    pub results: Vec<NecklaceLength>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WordDegree {
    pub degree: usize,
    pub engine: DegreeModule,
    pub predicted: DegreeModule,
    pub agree: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Generator {
    pub degree: usize,
    pub chain: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WordReport {
    pub meta: Meta,
    pub word: String,
    pub period: usize,
    pub case: u8,
    pub basis: Vec<Vec<String>>,
    pub results: Vec<WordDegree>,
    pub generators: Vec<Generator>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Check {
    pub instance: String,
    pub status: String,
    pub detail: String,
}

impl Check {
    pub fn new(instance: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Self { instance: instance.into(), status: if ok { "PASS" } else { "FAIL" }.to_string(), detail: detail.into() }
    }

    pub fn passed(&self) -> bool {
        self.status == "PASS"
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerifyReport {
    pub meta: Meta,
    pub command: String,
    pub results: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
}

impl VerifyReport {
    pub fn new(meta: Meta, command: &str, results: Vec<Check>) -> Self {
        let passed = results.iter().filter(|c| c.passed()).count();
        let failed = results.len() - passed;
        Self { meta, command: command.to_string(), results, passed, failed }
    }
}

pub enum Report {
    Compute(ComputeReport),
    Necklaces(NecklaceReport),
    Word(WordReport),
    Verify(VerifyReport),
}

impl Report {
    pub fn ok(&self) -> bool {
        match self {
            Report::Verify(v) => v.failed == 0,
            Report::Word(w) => w.results.iter().all(|d| d.agree),
            _ => true,
        }
    }

    pub fn json(&self) -> String {
        let value = match self {
            Report::Compute(r) => serde_json::to_string_pretty(r),
            Report::Necklaces(r) => serde_json::to_string_pretty(r),
            Report::Word(r) => serde_json::to_string_pretty(r),
            Report::Verify(r) => serde_json::to_string_pretty(r),
        };
        value.expect("reports serialize")
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        match self {
            Report::Compute(r) => {
                let ring = r.meta.ring.as_deref().unwrap_or("?");
                writeln!(out, "HH_*(A/{ring}) for A = {ring}[x1..x{}]/(x_i x_j)", r.meta.r).unwrap();
                for d in &r.results {
                    let torsion: String = d.torsion.iter().map(|t| format!(" ⊕ Z/{t}")).collect();
                    writeln!(out, "HH_{}: free rank {}{torsion}", d.degree, d.free_rank).unwrap();
                    for s in &d.summands {
                        let here = s.modules.iter().find(|m| m.degree == d.degree).map_or("0", |m| &m.rendered);
                        writeln!(out, "  {:<24} period {:<2} case {}  {here}", s.word, s.period, s.case).unwrap();
                    }
                }
            }
            Report::Necklaces(r) => {
                for l in &r.results {
                    writeln!(out, "length {}: {} necklaces", l.length, l.count).unwrap();
                    for n in &l.necklaces {
                        writeln!(out, "  {:<24} period {:<2} case {}", n.word, n.period, n.case).unwrap();
                    }
                }
            }
            Report::Word(r) => {
                writeln!(out, "{} period {} case {}", r.word, r.period, r.case).unwrap();
                for (q, b) in r.basis.iter().enumerate().filter(|(_, b)| !b.is_empty()) {
                    writeln!(out, "D_{q}: {}", b.join(", ")).unwrap();
                }
                for d in &r.results {
                    let mark = if d.agree { "PASS" } else { "FAIL" };
                    writeln!(
                        out,
                        "{mark} H_{}: engine {}, predicted {}",
                        d.degree, d.engine.rendered, d.predicted.rendered
                    )
                    .unwrap();
                }
                for g in &r.generators {
                    writeln!(out, "generator in degree {}: {}", g.degree, g.chain).unwrap();
                }
            }
            Report::Verify(r) => {
                for c in &r.results {
                    writeln!(out, "{} {}: {}", c.status, c.instance, c.detail).unwrap();
                }
                writeln!(out, "{}: {} passed, {} failed", r.command, r.passed, r.failed).unwrap();
            }
        }
        out
    }
}
