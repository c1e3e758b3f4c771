//! Integer partitions and the restricted families that appear in the
//! Rogers-Ramanujan-Gordon identity and its parity variants.
//!
//! A [`Partition`] is a weakly decreasing list of positive parts, a
//! [`SignedPartition`] has distinct parts and carries the sign
//! `(-1)^length`. The families are
//!
//! * `A`: parts avoiding the residues `0, a, 2k+1-a` modulo `2k+1`,
//! * `B`: Gordon partitions (`b_i - b_{i+k-1} >= 2`, at most `a-1` ones),
//! * `W`: Gordon partitions whose even parts have even multiplicity,
//! * `Wbar`: Gordon partitions whose odd parts have even multiplicity.

mod enumerate;
mod family;
mod partition;

pub use enumerate::{distinct_partitions, for_each_distinct, for_each_partition, partitions};
pub use family::{
    count_family, enumerate_family, for_each_in_family, gordon_condition, is_gordon,
    satisfies_parity, Family, GordonParams, ParityMode,
};
pub use partition::{Part, Partition, PartitionPair, SignedPartition};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("invalid parameters k={k}, a={a}: need k >= 2 and 1 <= a <= k")]
    InvalidParams { k: u32, a: u32 },
    #[error("partition parts must be positive")]
    ZeroPart,
    #[error("partition parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<Part>),
    #[error("signed partition parts must be strictly decreasing: {0:?}")]
    NotDistinct(Vec<Part>),
    #[error("count overflowed u64")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, PartitionError>;
