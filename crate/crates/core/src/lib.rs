//! Exact-arithmetic structure computations for the mapping class groups of
//! simply-connected 6-manifolds `M` with `H²(M) = Z·x` and `x³ ≠ 0`.
//!
//! Everything runs over arbitrary-precision integers. The building blocks:
//!
//! * [`exactlin`] — integer matrices, Smith/Hermite normal forms, lattice
//!   quotients, canonical finitely generated abelian groups.
//! * [`manifold`] — the classifying invariants `(spin, d, k, g)` and their
//!   computation for complex complete intersections.
//! * [`kslattice`] — the characteristic-number lattices `L(M)`, the kernel
//!   group `𝒦(M) ≅ Z³/L(M)`, s-invariants of model manifolds, Dehn twists
//!   and local diffeomorphisms, and the boundary-diffeomorphism analysis.
//! * [`symplectic`] — `Sp(2g, Z)` arithmetic, quadratic refinements mod 2,
//!   the associated 1-cocycle, and the semidirect-product image subgroups.
//! * [`groupstruct`] — assembled structure reports: center, abelianization,
//!   splitting, presentations, generator inventories.
//! * [`ahss`] — spectral-sequence page bookkeeping for the bordism order
//!   bounds behind the lattice computations.

pub mod ahss;
pub mod exactlin;
pub mod groupstruct;
pub mod kslattice;
pub mod manifold;
pub mod symplectic;
pub mod tables;

/// Library-wide error type.
///
/// `Classification` maps to exit code 3 in the CLI, `Internal` (consistency
/// checks that must never fire) to exit code 4.
#[derive(Debug, thiserror::Error, PartialEq, Eq, Clone)]
pub enum Error {
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("empty matrix")]
    EmptyMatrix,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("classification error: {0}")]
    Classification(String),
    #[error("unknown name: {0}")]
    Lookup(String),
    #[error("case error: {0}")]
    Case(String),
    #[error("coordinate error: {0}")]
    Coordinate(String),
    #[error("analysis failure: {0}")]
    AnalysisFailure(String),
    #[error("fixture error: {0}")]
    Fixture(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
