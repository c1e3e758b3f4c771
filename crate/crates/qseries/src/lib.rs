//! Truncated formal power series in `q` with exact, overflow-checked
//! coefficients, plus the product and sum builders used by the
//! Rogers-Ramanujan-Gordon family of identities.
//!
//! The series type is generic over its coefficient ring; [`Series`] (checked
//! `i64`) is the everyday choice, [`WideSeries`] and [`BigSeries`] exist for
//! larger truncations.

mod builders;
mod series;

pub use builders::{
    family_gf, multisum_rrg, poch_inf, restricted_gf, theta_sum, Sign, ThetaSpec,
};
pub use series::{Coeff, TruncatedSeries};

use num_bigint::BigInt;
use partition_core::PartitionError;
use thiserror::Error;

pub type Series = TruncatedSeries<i64>;
pub type WideSeries = TruncatedSeries<i128>;
pub type BigSeries = TruncatedSeries<BigInt>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },
    #[error("coefficient overflow")]
    Overflow,
    #[error("constant term must be +1 or -1")]
    NotUnit,
    #[error("a series needs at least one coefficient")]
    Empty,
    #[error("invalid Pochhammer parameters a={a}, m={m}")]
    InvalidPochhammer { a: u32, m: u32 },
    #[error("theta spec alpha={alpha}, beta={beta}: alpha must be positive and alpha+beta even")]
    ThetaSpec { alpha: i64, beta: i64 },
    #[error("theta exponent {0} is negative")]
    NegativeExponent(i64),
    #[error("invalid modulus {0}")]
    Modulus(u32),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

pub type Result<T> = std::result::Result<T, SeriesError>;
