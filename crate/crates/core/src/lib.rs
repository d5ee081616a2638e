//! Hochschild homology of the square-zero algebras `κ[x_1, …, x_r]/(x_i x_j)`.
//!
//! The cyclic bar complex of `A` splits as a direct sum over cyclical words in
//! the letters `x_1, …, x_r`. This crate computes the homology three ways:
//!
//! * directly, from the full bar complex in low degrees ([`build_full_complex`]);
//! * summand by summand, from the normalized complexes ([`build_summand_complex`]);
//! * from closed formulas depending only on the length and period of the word
//!   ([`predict`]).
//!
//! Ground rings are `Z`, `Q`, prime fields and `Z/n`; see [`GroundRing`].
//!
//! ```
//! use sqz_hochschild::{aggregate_homology, GroundRing};
//!
//! let h = aggregate_homology(2, GroundRing::Rationals, 2).unwrap();
//! assert_eq!(h.module.free_rank, 5);
//! ```

pub mod algebra;
pub mod complex;
pub mod error;
pub mod lemma;
pub mod linalg;
pub mod ring;
pub mod summand;
pub mod trace;
pub mod words;

pub use algebra::{boundary, is_degenerate, summand_of, BasisElement, Chain, Simplex};
pub use complex::{ChainComplex, HomologyDescriptor};
pub use error::{Error, Result};
pub use lemma::{
    comparison_map, generator_high, generator_low, predict, reference_complex, verify_exact_sequence, LemmaCase,
    PredictedModule,
};
pub use linalg::{howell_form, smith_normal_form, HomologyGenerator, Matrix, SmithForm};
pub use ring::{
    mod_two_quotient, ring_arithmetic, two_torsion, GroundRing, ModuleDescriptor, RingElement, TwoTorsion,
};
pub use summand::{
    aggregate_homology, build_full_complex, build_summand_complex, build_unnormalized_summand_complex,
    decompose_chain, project, summand_homology, AggregateHomology, SummandComplex, DEFAULT_BUDGET,
};
pub use trace::{project_symbol, shuffle, symbol_cycle, verify_nontriviality, SymbolReport};
pub use words::{canonicalize, enumerate_necklaces, necklace_count, CyclicalWord, Word};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/rings.md")]
    mod rings {}
    #[doc = include_str!("../../../book/src/words.md")]
    mod words {}
    #[doc = include_str!("../../../book/src/algebra.md")]
    mod algebra {}
    #[doc = include_str!("../../../book/src/linear-algebra.md")]
    mod linear_algebra {}
    #[doc = include_str!("../../../book/src/summands.md")]
    mod summands {}
    #[doc = include_str!("../../../book/src/closed-form.md")]
    mod closed_form {}
    #[doc = include_str!("../../../book/src/trace-symbols.md")]
    mod trace_symbols {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
