use gordon_involution::{FixedTag, InvolutionOutcome};
use partition_core::{Part, Partition, PartitionPair, SignedPartition};

use crate::fixed::{canonical, reduced_gordon, staircase};
use crate::triple::{redistribute, remove_each, split, top_level_move, untransform};
use crate::{AndrewsError, Pipeline, PartitionTriple, PipelineOutcome, PipelineStep, Result};

pub(crate) fn involute(
    pair: &PartitionPair,
    pipeline: Pipeline,
    k: u32,
    a: u32,
) -> Result<PipelineOutcome> {
    let bad = |detail: String| AndrewsError::Consistency { pair: pair.to_string(), detail };
    let t = split(pair, pipeline);
    if t.a.is_empty() && t.middle.is_empty() {
        let e = t.d.parts().to_vec();
        return Ok(PipelineOutcome::Fixed(canonical(
            pipeline,
            FixedTag::Empty,
            e,
            k,
            a,
            &pair.to_string(),
        )?));
    }
    if let Some(image) = top_level_move(&t, pipeline, k, a) {
        return Ok(PipelineOutcome::Partner { pair: image, step: PipelineStep::TopLevel });
    }
    let r = redistribute(&t, pipeline)?;
    let g = reduced_gordon(pipeline, k, a).map_err(|e| bad(e.to_string()))?;
    let half = PartitionPair::new(
        SignedPartition::new(r.a.parts().iter().map(|p| p / 2).collect())?,
        Partition::new(r.middle.parts().iter().map(|p| p / 2).collect())?,
    );
    if !g.is_member(&half) {
        return Err(bad(format!(
            "halved middle partition {} fails the Gordon conditions for ({}, {})",
            half.b,
            g.k(),
            g.a()
        )));
    }
    match g.involute(&half)? {
        InvolutionOutcome::Fixed(tag) => {
            let e: Vec<Part> = remove_each(r.d.parts(), &staircase(pipeline, tag))
                .ok_or_else(|| bad(format!("singles {} lack the staircase of {tag}", r.d)))?;
            Ok(PipelineOutcome::Fixed(canonical(pipeline, tag, e, k, a, &pair.to_string())?))
        }
        InvolutionOutcome::Partner(m) => {
            let back = PartitionTriple {
                a: SignedPartition::new(m.pair.a.parts().iter().map(|p| 2 * p).collect())?,
                middle: Partition::new(m.pair.b.parts().iter().map(|p| 2 * p).collect())?,
                d: r.d.clone(),
                e: Partition::empty(),
            };
            let image = untransform(&back, pipeline)?;
            if !pipeline.is_member(&image, k, a) {
                return Err(bad(format!("reduced image {image} leaves the ground set")));
            }
            Ok(PipelineOutcome::Partner { pair: image, step: PipelineStep::Reduced(m) })
        }
    }
}
