use gordon_involution::{FixedTag, GordonInvolution};
use partition_core::{Part, Partition, PartitionPair, SignedPartition};
use qseries::Series;

use crate::triple::{counts, partition, remove_each};
use crate::{AndrewsError, CanonicalFixed, Pipeline, PartitionTriple, Result};

/// Parameters of the Gordon involution the pipeline reduces to.
pub(crate) fn reduced_params(pipeline: Pipeline, k: u32, a: u32) -> (u32, u32) {
    match pipeline {
        Pipeline::EE => (k / 2, a / 2),
        Pipeline::OO => ((k - 1) / 2, (a - 1) / 2),
        Pipeline::OE => ((k - 1) / 2, a / 2),
    }
}

pub(crate) fn reduced_gordon(pipeline: Pipeline, k: u32, a: u32) -> Result<GordonInvolution> {
    let (rk, ra) = reduced_params(pipeline, k, a);
    if ra == 0 {
        return Err(AndrewsError::Consistency {
            pair: String::new(),
            detail: format!("{pipeline} with k={k}, a={a} reduces to Gordon parameters ({rk}, 0)"),
        });
    }
    Ok(GordonInvolution::with_degenerate(rk, ra)?)
}

/// Singles that every `OO`/`OE` fixed core carries in `D`.
pub(crate) fn staircase(pipeline: Pipeline, tag: FixedTag) -> Vec<Part> {
    match (pipeline, tag) {
        (_, FixedTag::Empty) | (Pipeline::EE, _) => vec![],
        (Pipeline::OO, t) => (1..=t.n()).rev().map(|j| 2 * j - 1).collect(),
        (Pipeline::OE, FixedTag::First(n)) => (1..=n).rev().map(|j| 2 * j).collect(),
        (Pipeline::OE, FixedTag::Second(n)) => (1..n).rev().map(|j| 2 * j).collect(),
    }
}

fn doubled(parts: &[Part]) -> Vec<Part> {
    parts.iter().map(|p| 2 * p).collect()
}

fn twice_each(parts: &[Part]) -> Vec<Part> {
    parts.iter().flat_map(|&p| [p, p]).collect()
}

fn gordon_template(pipeline: Pipeline, family: u8, n: u32, k: u32, a: u32) -> Result<PartitionPair> {
    pipeline.check(k, a)?;
    if n == 0 {
        return Err(AndrewsError::Precondition("fixed-point index must be at least 1".into()));
    }
    Ok(reduced_gordon(pipeline, k, a)?.fixed_point(family, n)?)
}

/// Core triple of a fixed-point family with empty `E`. For `OO`/`OE` the
/// staircase of singles sits in `D`.
pub fn pipeline_fixed_triple(
    pipeline: Pipeline,
    family: u8,
    n: u32,
    k: u32,
    a: u32,
) -> Result<PartitionTriple> {
    let t = gordon_template(pipeline, family, n, k, a)?;
    let tag = if family == 1 { FixedTag::First(n) } else { FixedTag::Second(n) };
    Ok(PartitionTriple {
        a: SignedPartition::new(doubled(t.a.parts()))?,
        middle: Partition::new(doubled(t.b.parts()))?,
        d: partition(staircase(pipeline, tag)),
        e: Partition::empty(),
    })
}

/// The core as a configuration `(A|B)`.
pub(crate) fn core_pair(pipeline: Pipeline, tag: FixedTag, k: u32, a: u32) -> Result<PartitionPair> {
    let (family, n) = match tag {
        FixedTag::Empty => return Ok(PartitionPair::empty()),
        FixedTag::First(n) => (1, n),
        FixedTag::Second(n) => (2, n),
    };
    let t = gordon_template(pipeline, family, n, k, a)?;
    let mut b = twice_each(t.b.parts());
    b.extend(staircase(pipeline, tag));
    Ok(PartitionPair::new(SignedPartition::new(doubled(t.a.parts()))?, partition(b)))
}

/// Builds the canonical form from a fixed configuration's tag and free part.
pub(crate) fn canonical(
    pipeline: Pipeline,
    tag: FixedTag,
    e: Vec<Part>,
    k: u32,
    a: u32,
    at: &str,
) -> Result<CanonicalFixed> {
    let bad = |detail: String| AndrewsError::Consistency { pair: at.to_string(), detail };
    if counts(&e).values().any(|&m| m > 1) || !e.iter().all(|&x| pipeline.e_allows(x)) {
        return Err(bad(format!("free part {e:?} is not a set of admissible parts")));
    }
    Ok(CanonicalFixed {
        tag,
        core: core_pair(pipeline, tag, k, a)?,
        e: partition(e),
        pipeline,
    })
}

/// Splits a fixed point into its family, index and free partition `E`.
///
/// For `EE` pass the output of `to_triple`; for `OO`/`OE` pass the
/// redistributed triple.
pub fn canonicalize_fixed(
    t: &PartitionTriple,
    pipeline: Pipeline,
    k: u32,
    a: u32,
) -> Result<CanonicalFixed> {
    pipeline.check(k, a)?;
    let g = reduced_gordon(pipeline, k, a)?;
    let at = format!("({} | {} | {} | {})", t.a, t.middle, t.d, t.e);
    let not_fixed = || AndrewsError::Precondition(format!("{at} is not a fixed point"));
    if t.a.parts().iter().chain(t.middle.parts()).any(|p| p % 2 == 1) {
        return Err(not_fixed());
    }
    let halved = PartitionPair::new(
        SignedPartition::new(t.a.parts().iter().map(|p| p / 2).collect())?,
        Partition::new(t.middle.parts().iter().map(|p| p / 2).collect())?,
    );
    let tag = g.match_fixed(&halved).ok_or_else(not_fixed)?;
    let e = match pipeline {
        Pipeline::EE => {
            if !t.d.is_empty() {
                return Err(not_fixed());
            }
            t.e.parts().to_vec()
        }
        _ => remove_each(t.d.parts(), &staircase(pipeline, tag)).ok_or_else(not_fixed)?,
    };
    canonical(pipeline, tag, e, k, a, &at)
}

/// Signed generating function of all canonical fixed points: each core
/// family crossed with every admissible free partition.
///
/// `OO` with `a = 1` has no core templates (the reduced parameter `a` is 0),
/// so there the series is the product of the free factor and the theta
/// series.
pub fn pipeline_fixed_gf(pipeline: Pipeline, k: u32, a: u32, n: usize) -> Result<Series> {
    pipeline.check(k, a)?;
    if reduced_params(pipeline, k, a).1 == 0 {
        let theta = qseries::theta_sum(qseries::ThetaSpec::parity(k, a), n)?;
        return Ok(pipeline.e_factor(n)?.mul(&theta)?);
    }
    let mut cores = vec![0i64; n + 1];
    cores[0] = 1;
    for family in [1, 2] {
        for m in 1.. {
            let core = core_pair(
                pipeline,
                if family == 1 { FixedTag::First(m) } else { FixedTag::Second(m) },
                k,
                a,
            )?;
            let w = core.weight() as usize;
            if w > n {
                break;
            }
            cores[w] += core.sign();
        }
    }
    // free partitions into distinct admissible parts
    let mut free = Series::one(n);
    for e in 1..=n {
        if pipeline.e_allows(e as u32) {
            let sign = if pipeline == Pipeline::EE { -1 } else { 1 };
            let term = Series::one(n).add(&Series::monomial(n, e, sign))?;
            free = free.mul(&term)?;
        }
    }
    Ok(Series::from_coeffs(cores)?.mul(&free)?)
}
