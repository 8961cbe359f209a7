//! Exact-arithmetic engine for the character theory behind the complex
//! K-ring of E6/Spin(10).
//!
//! Everything is computed over arbitrary-precision rationals and integers:
//! weights of the relevant maximal tori are sparse vectors of `BigRational`
//! coordinates, characters are finitely supported integer combinations of
//! weights, and the quotient-ring bookkeeping at the end happens in `Z[t]`.
//! No floating point is used anywhere.

pub mod branching;
pub mod character;
pub mod charcalc;
pub mod formulas;
pub mod kring;
pub mod poly;
pub mod report;
pub mod rootdata;
pub mod smith;
pub mod suites;
pub mod weight;

pub use branching::{BranchError, RestrictionMapKind, Spin10S1Decomposition};
pub use character::{CharError, FormalCharacter};
pub use formulas::{SpinExpr, SpinSymbol};
pub use kring::{BImages, KringError, KringPresentation, ModulePresentation, TorPresentation};
pub use poly::IntPoly;
pub use report::{ClaimRecord, Report, Verdict};
pub use suites::{ClaimOutcome, SuiteOptions, DEFAULT_SEED};
pub use charcalc::{CalcError, IdentityCheck, IrrDecomposition, Spin10Basis};
pub use rootdata::{DominantWeight, RootError, RootSystem, RootSystemKind};
pub use weight::{WeightMap, WeightVector};

/// Exact scalar used for all weight coordinates.
pub type Rational = num_rational::BigRational;
/// Exact integer used for all multiplicities and ring coefficients.
pub type Int = num_bigint::BigInt;
