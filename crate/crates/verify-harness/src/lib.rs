//! Verification harness: exact identity checks, exhaustive sweeps of the
//! involution laws, and orbit traces.
//!
//! Every check compares truncated series coefficient by coefficient, so a
//! report either passes or names the first exponent where the sides differ.
//! Reports serialize with serde; the field names are the stable JSON
//! surface used by the command-line tool.

mod identity;
mod laws;
mod orbit;

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use andrews_involutions::{AndrewsError, Pipeline};
use gordon_involution::GordonError;
use partition_core::{Partition, PartitionError, PartitionPair};
use qseries::SeriesError;
use serde::Serialize;
use thiserror::Error;

pub use identity::{check_identity, check_identity_with, compared_sides, IdentityId, Mode};
pub use laws::{check_involution_laws, ground_set, sweep_cap, DEFAULT_SWEEP_CAP};
pub use orbit::{trace_orbit, OrbitTrace, Terminal, TraceStep};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("{0}")]
    Params(String),
    #[error("sweep up to weight {n} exceeds the cap of {cap} (raise it with RRG_MAX_SWEEP)")]
    SweepCap { n: u32, cap: u32 },
    #[error("{0} is not in the ground set")]
    NotMember(String),
    #[error("involution does not return: {0}")]
    NotInvolution(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Gordon(#[from] GordonError),
    #[error(transparent)]
    Andrews(#[from] AndrewsError),
}

pub type Result<T> = std::result::Result<T, HarnessError>;

/// Which involution a sweep or trace runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scope {
    Gordon,
    Pipeline(Pipeline),
}

impl Scope {
    /// The identity whose signed count the scope's involution proves.
    pub fn identity(self) -> IdentityId {
        match self {
            Scope::Gordon => IdentityId::Ebf,
            Scope::Pipeline(Pipeline::EE) => IdentityId::Thm13,
            Scope::Pipeline(Pipeline::OO) => IdentityId::Thm14,
            Scope::Pipeline(Pipeline::OE) => IdentityId::Thm15,
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scope::Gordon => f.write_str("gordon"),
            Scope::Pipeline(p) => write!(f, "{}", p.to_string().to_ascii_lowercase()),
        }
    }
}

impl FromStr for Scope {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "gordon" => Ok(Scope::Gordon),
            other => other
                .parse()
                .map(Scope::Pipeline)
                .map_err(|_| format!("unknown scope {s:?}, expected gordon, ee, oo or oe")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub exponent: usize,
    pub lhs: i64,
    pub rhs: i64,
}

/// A configuration that breaks one of the involution laws.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub law: String,
    pub config: PairJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub image: Option<PairJson>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub identity: String,
    pub k: u32,
    pub a: u32,
    pub truncation: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_discrepancy: Option<Discrepancy>,
    /// Number of configurations visited; sweeps only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checked: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// `{"A": [...], "B": [...]}` with parts in decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairJson {
    #[serde(rename = "A")]
    pub a: Vec<u32>,
    #[serde(rename = "B")]
    pub b: Vec<u32>,
}

impl From<&PartitionPair> for PairJson {
    fn from(p: &PartitionPair) -> Self {
        PairJson { a: p.a.parts().to_vec(), b: p.b.parts().to_vec() }
    }
}

/// Core pair plus free partition of a canonical fixed point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedJson {
    pub tag: String,
    pub weight: u64,
    pub sign: i64,
    #[serde(rename = "A")]
    pub a: Vec<u32>,
    #[serde(rename = "B")]
    pub b: Vec<u32>,
    #[serde(rename = "E", skip_serializing_if = "Option::is_none")]
    pub e: Option<Vec<u32>>,
}

impl FixedJson {
    pub fn gordon(tag: gordon_involution::FixedTag, pair: &PartitionPair) -> Self {
        FixedJson {
            tag: tag.to_string(),
            weight: pair.weight(),
            sign: pair.sign(),
            a: pair.a.parts().to_vec(),
            b: pair.b.parts().to_vec(),
            e: None,
        }
    }

    pub fn canonical(c: &andrews_involutions::CanonicalFixed) -> Self {
        FixedJson {
            tag: c.tag.to_string(),
            weight: c.weight(),
            sign: c.sign(),
            a: c.core.a.parts().to_vec(),
            b: c.core.b.parts().to_vec(),
            e: Some(c.e.parts().to_vec()),
        }
    }
}

/// Parses `"6,1;5,5"` into a pair. Either side may be empty.
pub fn parse_pair(s: &str) -> Result<PartitionPair> {
    let (a, b) = s
        .split_once(';')
        .ok_or_else(|| HarnessError::Params(format!("pair {s:?} must look like \"6,1;5,5\"")))?;
    let side = |t: &str| -> Result<Vec<u32>> {
        t.split(',')
            .map(str::trim)
            .filter(|x| !x.is_empty())
            .map(|x| {
                x.parse::<u32>()
                    .map_err(|_| HarnessError::Params(format!("bad part {x:?} in pair {s:?}")))
            })
            .collect()
    };
    let (a, b) = (side(a)?, side(b)?);
    Ok(PartitionPair::new(
        partition_core::SignedPartition::from_unsorted(a)?,
        Partition::from_unsorted(b)?,
    ))
}
