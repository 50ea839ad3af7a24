use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("negative power α^{0} requested but α is not invertible")]
    NotRegular(i64),
    #[error("α is not multiplicative: α([e_{i}, e_{j}]) != [α(e_{i}), α(e_{j})]")]
    NotMultiplicative { i: usize, j: usize },
    #[error("invalid algebra {name}: {reason}")]
    InvalidAlgebra { name: String, reason: String },
    #[error("subspace is not graded")]
    NotGraded,
    #[error("subspace is not α-invariant")]
    NotAlphaInvariant,
    #[error("subspace is not closed under the bracket")]
    NotBracketClosed,
    #[error("subspace is not a hom-ideal")]
    NotHomIdeal,
    #[error("map is not an even endomorphism of the bracket: {0}")]
    NotEndomorphism(String),
    #[error("twist requires α = identity on the input algebra")]
    AlphaNotIdentity,
    #[error("unknown catalog entry {0:?}")]
    UnknownCatalog(String),
    #[error("holomorph: α∘D leaves the derivation space for basis derivation {0}")]
    HolomorphClosure(usize),
    #[error("holomorph: supercommutator of derivations {0} and {1} leaves the derivation space")]
    HolomorphExpansion(usize, usize),
    #[error("derivation algebra: {0}")]
    DerivationAlgebra(String),
    #[error("center is nonzero (dimension {0})")]
    NonzeroCenter(usize),
    #[error("algebra is not complete for s = {0}")]
    NotComplete(usize),
    #[error("subspaces do not form a direct sum of hom-ideals: {0}")]
    NotDirectSum(String),
    #[error("malformed rational {0:?}")]
    MalformedRational(String),
    #[error("index {index} out of range (n = {n}) in {context}")]
    IndexOutOfRange {
        context: &'static str,
        index: usize,
        n: usize,
    },
    #[error("duplicate bracket record for ({0}, {1})")]
    DuplicateRecord(usize, usize),
    #[error("bracket record ({0}, {1}) must satisfy i <= j")]
    LowerTriangleRecord(usize, usize),
    #[error("grading violation: [e_{i}, e_{j}] has a component on e_{k} of the wrong parity")]
    GradingViolation { i: usize, j: usize, k: usize },
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
}
