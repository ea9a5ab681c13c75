//! Exact computations around 2-distant noncrossing partitions and weighted
//! lattice paths.
//!
//! The number of set partitions of `[n]` with no two arcs `(a,c), (b,d)`
//! where `a < b <= c < d` and `c - b >= 2` equals a sum over Motzkin paths
//! of products of Fibonacci fractions. This crate computes every side of
//! that identity independently: brute-force partition counts
//! ([`partitions`]), path enumeration and transfer sums ([`paths`]),
//! generating functions ([`series`]), S/J continued fractions
//! ([`contfrac`]) and the step-rewriting bijections that connect them
//! ([`bijections`]).
//!
//! Series, fractions and path sums are generic over [`Scalar`]; the exact
//! instance is [`Rational`].

pub mod bijections;
pub mod contfrac;
pub mod error;
pub mod exactnum;
pub mod partitions;
pub mod paths;
pub mod scalar;
pub mod series;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Arbitrary-precision rational, always normalized with positive denominator.
pub type Rational = num_rational::BigRational;

pub type Series = series::TruncatedSeries<Rational>;
pub type SeriesF64 = series::TruncatedSeries<f64>;
pub type Weights = exactnum::WeightSystem<Rational>;
pub type RationalSequence = exactnum::Sequence<Rational>;
pub type SFraction = contfrac::SFraction<Rational>;
pub type JFraction = contfrac::JFraction<Rational>;
