//! Discrete Hardy spaces on homogeneous rooted trees.
//!
//! A `(q+1)`-homogeneous rooted tree has a root with `q+1` children and `q`
//! children at every other vertex. For a complex-valued function `f` on its
//! vertices the level means
//!
//! ```text
//! M_p(n, f) = ( (1 / |level n|) * sum_{|v|=n} |f(v)|^p )^(1/p)     (0 < p < inf)
//! M_inf(n, f) = max_{|v|=n} |f(v)|
//! ```
//!
//! induce the norm `||f||_p = sup_n M_p(n, f)`. This crate computes means,
//! norms, Lipschitz seminorms and membership evidence for the spaces
//! `T_p = { ||f||_p < inf }` and `T_{p,0} = { M_p(n,f) -> 0 }`, and analyzes
//! multiplication operators `M_psi: f -> psi * f` on them: operator norm,
//! spectra, compactness, essential-norm upper bounds and isometry.
//!
//! The infinite tree is never materialized. Geometry is pure arithmetic on
//! `(level, index)` addresses, and infinite-tail statements are decided from
//! declared tail metadata on the function representation, never from a finite
//! prefix alone. Verdicts are three-valued; `Inconclusive` is an honest answer.

pub mod numeric;
pub mod ops;
pub mod scenarios;
pub mod serialize;
pub mod space;
pub mod tree;

use std::fmt;

use num_bigint::BigUint;
use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Scalar type the numeric kernels are generic over.
///
/// Implemented by `f32` and `f64`; all tolerances quoted in the crate docs
/// assume `f64`.
pub trait Scalar:
    Float
    + FromPrimitive
    + ToPrimitive
    + std::ops::AddAssign
    + std::ops::SubAssign
    + std::ops::MulAssign
    + std::ops::DivAssign
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
{
}

impl<T> Scalar for T where
    T: Float
        + FromPrimitive
        + ToPrimitive
        + std::ops::AddAssign
        + std::ops::SubAssign
        + std::ops::MulAssign
        + std::ops::DivAssign
        + fmt::Debug
        + fmt::Display
        + Send
        + Sync
        + 'static
{
}

/// Default cap on dense level enumeration (number of vertices per level).
pub const DEFAULT_CAP: u64 = 10_000_000;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("the root vertex has no parent")]
    RootHasNoParent,
    #[error("level {level} has {size} vertices, above the enumeration cap {cap}")]
    LevelTooLarge { level: u64, size: BigUint, cap: u64 },
    #[error("branching parameter q must be at least 1")]
    InvalidGeometry,
    #[error("vertex index {index} is out of range for level {level}")]
    InvalidVertex { level: u64, index: u64 },
    #[error("exponents must satisfy 0 < r < s < inf")]
    InvalidExponents,
    #[error("invalid exponent: {0}")]
    InvalidExponent(String),
    #[error("pointwise-rule functions cannot be serialized")]
    NotSerializable,
    #[error("multiplication operator is not invertible at lambda = {lambda}: {reason}")]
    NotInvertible { lambda: String, reason: String },
    #[error("invalid function document: {0}")]
    InvalidDocument(String),
    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub use ops::{
    OperatorAnalysis, SpectrumClassification, SpectrumSample, Symbol, Verdict3,
};
pub use space::{
    Exponent, FunctionRep, MembershipVerdict, NormReport, SpaceKind, Tail, Verdict,
};
pub use tree::{TreeGeometry, VertexId};

/// Concrete double-precision aliases; the generic types live in the modules.
pub type FunctionRep64 = space::FunctionRep<f64>;
pub type Exponent64 = space::Exponent<f64>;
pub type Tail64 = space::Tail<f64>;
pub type NormReport64 = space::NormReport<f64>;
pub type Symbol64 = ops::Symbol<f64>;
pub type Complex64 = num_complex::Complex<f64>;
