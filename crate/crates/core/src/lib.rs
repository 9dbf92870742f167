//! Capacities (non-additive measures) on a finite set of criteria and the
//! extensions of pseudo-Boolean functions built from them.
//!
//! The crate covers
//! - set functions on the subset lattice and their Möbius, zeta, co-Möbius
//!   and ordinal Möbius transforms ([`set_function`]),
//! - the Choquet, Šipoš, multilinear, symmetric multilinear, product-Sugeno
//!   and two-capacity (CPT) extensions ([`integrals`]),
//! - interaction indices and Shapley values ([`interaction`]),
//! - sampled verification of aggregation axioms ([`axioms`]),
//! - a small act-evaluation model over utility scales ([`model`]).
//!
//! Everything numeric is generic over [`Scalar`], which is satisfied by
//! `f32`, `f64` and exact rationals. The aliases below fix the scalar for the
//! common cases.

pub mod axioms;
mod error;
pub mod integrals;
pub mod interaction;
pub mod model;
mod scalar;
pub mod set_function;
mod subset;

pub use error::{Error, Result};
pub use scalar::Scalar;
pub use subset::{Subset, MAX_CRITERIA};

pub use integrals::{Aggregation, Extension, PseudoProduct, ScoreVector};
pub use set_function::{
    Capacity, CapacityProperties, CoMobiusRepr, MobiusRepr, OrdinalMobiusRepr, SetFunction,
};

/// Exact rational scalar.
pub type Rational = num_rational::Ratio<i128>;

pub type SetFunctionF64 = SetFunction<f64>;
pub type CapacityF64 = Capacity<f64>;
pub type MobiusF64 = MobiusRepr<f64>;
pub type CoMobiusF64 = CoMobiusRepr<f64>;
pub type OrdinalMobiusF64 = OrdinalMobiusRepr<f64>;
pub type AggregationF64 = Aggregation<f64>;

pub type SetFunctionF32 = SetFunction<f32>;
pub type CapacityF32 = Capacity<f32>;
pub type MobiusF32 = MobiusRepr<f32>;

pub type SetFunctionQ = SetFunction<Rational>;
pub type CapacityQ = Capacity<Rational>;
pub type MobiusQ = MobiusRepr<Rational>;
pub type OrdinalMobiusQ = OrdinalMobiusRepr<Rational>;

/// Default absolute tolerance used by validation and comparisons.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
