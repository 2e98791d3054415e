//! Error type shared by every module of the crate.

use thiserror::Error;

/// Failures reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The characteristic is not an odd prime in the supported range.
    #[error("p = {0} is not an odd prime below 65536")]
    InvalidPrime(u32),
    /// An operator was expected to satisfy t^p = 0 but does not.
    #[error("operator is not nilpotent of order at most p")]
    NotNilpotent,
    /// Two objects or matrices have incompatible shapes.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    /// An index (simple type, degree, basis element) is out of range.
    #[error("index out of range: {0}")]
    OutOfRange(String),
    /// A matrix that should commute with the nilpotent operators does not.
    #[error("map is not t-equivariant")]
    NotEquivariant,
    /// An action that should be by derivations is not.
    #[error("action is not by derivations")]
    NotDerivation,
    /// The invariant form supplied with a symmetrizable datum is degenerate.
    #[error("invariant form K is degenerate")]
    SingularK,
    /// Scalars passed to a datum constructor violate its constraints.
    #[error("invalid scalars: {0}")]
    InvalidScalars(String),
    /// The realization of a Cartan matrix could not be built.
    #[error("realization failed: {0}")]
    RealizationFailure(String),
    /// A computation would exceed the configured upstairs-dimension budget.
    #[error("upstairs dimension {needed} exceeds budget {budget}")]
    BudgetExceeded { needed: usize, budget: usize },
    /// A supplied decomposition of V is not stable under X.
    #[error("decomposition is not X-stable: {0}")]
    DecompositionNotStable(String),
    /// The two half-diagrams defining the invariant form disagree.
    #[error("invariant form recursion inconsistent at degree {0}")]
    RecursionInconsistent(i64),
    /// A bracket left the subspace it should preserve.
    #[error("image escapes piece: {0}")]
    ImageEscapesPiece(String),
    /// Malformed input data.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
