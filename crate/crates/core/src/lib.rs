//! Exact combinatorics of simultaneous semi-stable reduction for curves
//! with ADE singularities.
//!
//! The crate computes, over exact integer and rational arithmetic:
//!
//! * ADE root systems in their standard integer realizations, Weyl group
//!   elements, Coxeter numbers and exponents ([`roots`]);
//! * the intersection lattice of the Weyl arrangement, the classification
//!   of its flats by parabolic sub-root systems, and Weyl-orbit censuses
//!   ([`strata`]);
//! * the boundary-divisor census and blow-up order of the minimal wonderful
//!   blow-up, together with nested-set (simple-normal-crossing) tests
//!   ([`wonderful`]);
//! * Artin-group words over the Coxeter diagram and their projections to
//!   the Weyl group ([`artin`]);
//! * the classical monodromy operator on the vanishing lattice and the
//!   unipotency classification of boundary monodromy ([`monodromy`]);
//! * exact multivariate polynomials with resultants and discriminants
//!   ([`poly`]), and the explicit A_n reduction equations built from them
//!   ([`an_reduction`]);
//! * curve-level reports assembling all of the above ([`curve`]).
//!
//! No floating point is used anywhere; every quantity is an exact integer,
//! rational, or polynomial identity.

pub mod an_reduction;
pub mod artin;
pub mod curve;
pub mod linalg;
pub mod monodromy;
pub mod poly;
pub mod roots;
pub mod strata;
pub mod wonderful;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid ADE type `{0}`: A needs n >= 1, D needs n >= 4, E needs n in {{6,7,8}}")]
    InvalidType(String),
    #[error("a product root system needs at least one factor")]
    EmptyProduct,
    #[error("root index {index} out of range (positive roots: {count})")]
    BadRootIndex { index: usize, count: usize },
    #[error("generator index {index} out of range for rank {rank}")]
    BadGenerator { index: usize, rank: usize },
    #[error("polynomial is not monic in `{0}`")]
    NotMonic(String),
    #[error("resultant of a zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial has a root that is not a root of unity of order dividing {0}")]
    NotRootsOfUnity(u64),
    #[error("flat of type `{0}` is not irreducible")]
    ReducibleFlat(String),
    #[error("operation requires {expected} index, got {got}")]
    WrongParity { expected: &'static str, got: u32 },
    #[error("sub-root system component of rank {rank} with {positive} positive roots is not ADE")]
    UnclassifiableComponent { rank: usize, positive: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid curve spec: {0}")]
    InvalidCurveSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
