use crate::ring::GroundRing;

/// Errors raised by the algebra, the linear-algebra engine and the builders.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("cannot parse ring {0:?}: expected Z, Q, F<p> or Z/<n>")]
    InvalidRing(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is out of range (need 2 <= n < 2^62)")]
    ModulusOutOfRange(u64),
    #[error("letter x{letter} is out of range for an alphabet of size {r}")]
    LetterOutOfRange { letter: u32, r: u32 },
    #[error("alphabet size must be at least 1")]
    EmptyAlphabet,
    #[error("cannot parse word at position {position}: {token:?}")]
    WordParse { position: usize, token: String },
    #[error("operation needs a non-empty word")]
    EmptyWord,
    #[error("index {index} out of range for a simplex of degree {degree}")]
    IndexOutOfRange { index: usize, degree: usize },
    #[error("operation needs a chain of positive degree")]
    DegreeZero,
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("ring mismatch: expected {expected}, found {found}")]
    RingMismatch { expected: GroundRing, found: GroundRing },
    #[error("element {element} is not a canonical element of {ring}")]
    NotInRing { element: String, ring: GroundRing },
    #[error("operation is only defined over {0}")]
    UnsupportedRing(&'static str),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{simplex} is not a basis element of this complex")]
    OutsideBasis { simplex: String },
    #[error("differentials compose to a nonzero map at degree {degree}")]
    NotAComplex { degree: usize },
    #[error("homology in degree {degree} needs the differential out of degree {needed}")]
    MissingDifferential { degree: usize, needed: usize },
    #[error("degree {degree} has {dimension} basis elements, over the budget of {budget}")]
    SizeBudgetExceeded { degree: usize, dimension: usize, budget: usize },
    #[error("{element} is not 2-torsion in {ring}")]
    NotTwoTorsion { element: String, ring: GroundRing },
    #[error("period {0} is even; the sequence needs an odd period")]
    EvenPeriod(usize),
    #[error("period must be positive")]
    ZeroPeriod,
    #[error("symbol length {q} exceeds the number of generators {r}")]
    SymbolTooLong { q: usize, r: u32 },
    #[error("symbol length must be at least 1")]
    EmptySymbol,
}

pub type Result<T> = std::result::Result<T, Error>;
