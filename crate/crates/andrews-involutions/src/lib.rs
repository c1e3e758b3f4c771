//! Involutions for the three parity-restricted Gordon identities.
//!
//! | pipeline | `(k, a)`       | `A`            | `B`            | free factor      |
//! |----------|----------------|----------------|----------------|------------------|
//! | `EE`     | both even      | distinct       | in `W_{k,a}`   | `(q²;q⁴)_∞`      |
//! | `OO`     | both odd       | distinct, even | in `W_{k,a}`   | `(−q;q²)_∞`      |
//! | `OE`     | `k` odd, `a` even | distinct, even | in `Wbar_{k,a}` | `(−q²;q²)_∞`  |
//!
//! Each pipeline reduces to Gordon's involution on halved parts. Its fixed
//! points are a core template crossed with a free partition `E` into
//! distinct parts of the class named in the last column. The `EE` factor
//! is signed.

mod ee;
mod fixed;
mod odd;
mod triple;

use std::fmt;
use std::str::FromStr;

use gordon_involution::{FixedTag, GordonError, Move};
use partition_core::{
    gordon_condition, satisfies_parity, Family, Partition, PartitionError, PartitionPair,
};
use qseries::{poch_inf, Series, SeriesError, Sign};
use thiserror::Error;

pub use fixed::{canonicalize_fixed, pipeline_fixed_gf, pipeline_fixed_triple};
pub use triple::{exceptional_condition, redistribute, to_triple, untransform, PartitionTriple};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AndrewsError {
    #[error("pipeline {pipeline} needs {need}, got k={k}, a={a}")]
    Parity { pipeline: Pipeline, need: &'static str, k: u32, a: u32 },
    #[error("{pair} is not in the ground set of {pipeline} for k={k}, a={a}")]
    NotMember { pair: String, pipeline: Pipeline, k: u32, a: u32 },
    #[error("internal consistency failure at {pair}: {detail}")]
    Consistency { pair: String, detail: String },
    #[error("{0}")]
    Precondition(String),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Gordon(#[from] GordonError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

pub type Result<T> = std::result::Result<T, AndrewsError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pipeline {
    EE,
    OO,
    OE,
}

impl fmt::Display for Pipeline {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pipeline::EE => "EE",
            Pipeline::OO => "OO",
            Pipeline::OE => "OE",
        })
    }
}

impl FromStr for Pipeline {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ee" => Ok(Pipeline::EE),
            "oo" => Ok(Pipeline::OO),
            "oe" => Ok(Pipeline::OE),
            _ => Err(format!("unknown pipeline {s:?}, expected ee, oo or oe")),
        }
    }
}

impl Pipeline {
    /// Checks `k >= 2`, `1 <= a <= k` and the parity hypothesis.
    pub fn check(self, k: u32, a: u32) -> Result<()> {
        partition_core::GordonParams::new(k, a, partition_core::ParityMode::None)?;
        let (ok, need) = match self {
            Pipeline::EE => (k % 2 == 0 && a % 2 == 0, "k and a even"),
            Pipeline::OO => (k % 2 == 1 && a % 2 == 1, "k and a odd"),
            Pipeline::OE => (k % 2 == 1 && a % 2 == 0, "k odd and a even"),
        };
        if !ok {
            return Err(AndrewsError::Parity { pipeline: self, need, k, a });
        }
        Ok(())
    }

    /// Partition family that `B` is drawn from.
    pub fn family(self) -> Family {
        match self {
            Pipeline::OE => Family::Wbar,
            _ => Family::W,
        }
    }

    /// Whether `A` is restricted to even parts.
    pub fn even_a(self) -> bool {
        self != Pipeline::EE
    }

    /// The free factor multiplying the theta series.
    pub fn e_factor(self, n: usize) -> Result<Series> {
        Ok(match self {
            Pipeline::EE => poch_inf(Sign::Plus, 2, 4, n)?,
            Pipeline::OO => poch_inf(Sign::Minus, 1, 2, n)?,
            Pipeline::OE => poch_inf(Sign::Minus, 2, 2, n)?,
        })
    }

    /// Whether `e` may be a part of the free partition.
    pub fn e_allows(self, e: u32) -> bool {
        match self {
            Pipeline::EE => e % 4 == 2,
            Pipeline::OO => e % 2 == 1,
            Pipeline::OE => e % 2 == 0 && e > 0,
        }
    }

    pub fn is_member(self, pair: &PartitionPair, k: u32, a: u32) -> bool {
        (!self.even_a() || pair.a.parts().iter().all(|x| x % 2 == 0))
            && gordon_condition(pair.b.parts(), k, a)
            && satisfies_parity(&pair.b, self.family().parity())
    }

    pub(crate) fn check_member(self, pair: &PartitionPair, k: u32, a: u32) -> Result<()> {
        self.check(k, a)?;
        if !self.is_member(pair, k, a) {
            return Err(AndrewsError::NotMember { pair: pair.to_string(), pipeline: self, k, a });
        }
        Ok(())
    }
}

/// How a partner was reached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PipelineStep {
    /// Largest-part exchange between `A` and the merged middle partition.
    TopLevel,
    /// Toggle of one copy of an odd value between `A` and `B`.
    OddExchange(u32),
    /// Gordon's involution on the halved configuration.
    Reduced(Move),
}

impl fmt::Display for PipelineStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PipelineStep::TopLevel => write!(f, "top-level move"),
            PipelineStep::OddExchange(v) => write!(f, "odd exchange of {v}"),
            PipelineStep::Reduced(m) => match m.map {
                Some(map) => write!(f, "reduced {} via {}", m.label, map),
                None => write!(f, "reduced {}", m.label),
            },
        }
    }
}

/// A fixed point split into its core template and the free partition `E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalFixed {
    pub tag: FixedTag,
    pub core: PartitionPair,
    pub e: Partition,
    pub pipeline: Pipeline,
}

impl CanonicalFixed {
    pub fn weight(&self) -> u64 {
        self.core.weight() + self.e.weight()
    }

    /// Sign of the fixed configuration; parts of `E` carry a sign in `EE`.
    pub fn sign(&self) -> i64 {
        let e_sign = if self.pipeline == Pipeline::EE && self.e.len() % 2 == 1 { -1 } else { 1 };
        self.core.sign() * e_sign
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PipelineOutcome {
    Partner { pair: PartitionPair, step: PipelineStep },
    Fixed(CanonicalFixed),
}

impl PipelineOutcome {
    pub fn partner(&self) -> Option<&PartitionPair> {
        match self {
            PipelineOutcome::Partner { pair, .. } => Some(pair),
            PipelineOutcome::Fixed(_) => None,
        }
    }
}

pub fn involute_pipeline(
    pair: &PartitionPair,
    pipeline: Pipeline,
    k: u32,
    a: u32,
) -> Result<PipelineOutcome> {
    pipeline.check_member(pair, k, a)?;
    match pipeline {
        Pipeline::EE => ee::involute(pair, k, a),
        _ => odd::involute(pair, pipeline, k, a),
    }
}
