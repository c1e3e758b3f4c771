use gordon_involution::{FixedTag, InvolutionOutcome};
use partition_core::{Part, Partition, PartitionPair, SignedPartition};

use crate::fixed::{canonical, reduced_gordon};
use crate::triple::{counts, partition, remove_each};
use crate::{AndrewsError, Pipeline, PipelineOutcome, PipelineStep, Result};

// Largest odd value v whose copies in A and B together are odd in number.
fn odd_candidate(pair: &PartitionPair) -> Option<Part> {
    let f = counts(pair.b.parts());
    let mut vals: Vec<Part> = pair
        .a
        .parts()
        .iter()
        .chain(pair.b.parts())
        .copied()
        .filter(|v| v % 2 == 1)
        .collect();
    vals.sort_unstable();
    vals.dedup();
    vals.into_iter()
        .rev()
        .find(|v| (usize::from(pair.a.contains(*v)) + f.get(v).copied().unwrap_or(0)) % 2 == 1)
}

fn toggle(pair: &PartitionPair, v: Part) -> Result<PartitionPair> {
    let (mut a, mut b) = (pair.a.parts().to_vec(), pair.b.parts().to_vec());
    if pair.a.contains(v) {
        a.retain(|&x| x != v);
        b.push(v);
    } else {
        a.push(v);
        let i = b.iter().position(|&x| x == v).expect("v occurs in A or B");
        b.remove(i);
    }
    Ok(PartitionPair::new(SignedPartition::from_unsorted(a)?, partition(b)))
}

pub(crate) fn involute(pair: &PartitionPair, k: u32, a: u32) -> Result<PipelineOutcome> {
    if pair.is_empty() {
        return Ok(PipelineOutcome::Fixed(canonical(
            Pipeline::EE,
            FixedTag::Empty,
            vec![],
            k,
            a,
            "",
        )?));
    }
    if let Some(v) = odd_candidate(pair) {
        return Ok(PipelineOutcome::Partner {
            pair: toggle(pair, v)?,
            step: PipelineStep::OddExchange(v),
        });
    }
    // Every odd part of A now also sits in B with odd multiplicity; set one
    // copy of each aside and halve what is left.
    let bad = |detail: &str| AndrewsError::Consistency {
        pair: pair.to_string(),
        detail: detail.to_string(),
    };
    let s: Vec<Part> = pair.a.parts().iter().copied().filter(|v| v % 2 == 1).collect();
    let a_core: Vec<Part> = pair.a.parts().iter().copied().filter(|v| v % 2 == 0).collect();
    let b_core = remove_each(pair.b.parts(), &s).ok_or_else(|| bad("odd part of A missing from B"))?;
    let mut b_half = Vec::new();
    for (v, m) in counts(&b_core) {
        if m % 2 == 1 {
            return Err(bad("odd multiplicity survived the odd exchange"));
        }
        b_half.extend(std::iter::repeat(v).take(m / 2));
    }
    let half = PartitionPair::new(
        SignedPartition::new(a_core.iter().map(|v| v / 2).collect())?,
        partition(b_half),
    );
    let g = reduced_gordon(Pipeline::EE, k, a)?;
    match g.involute(&half)? {
        InvolutionOutcome::Fixed(tag) => Ok(PipelineOutcome::Fixed(canonical(
            Pipeline::EE,
            tag,
            s.iter().map(|v| 2 * v).collect(),
            k,
            a,
            &pair.to_string(),
        )?)),
        InvolutionOutcome::Partner(m) => {
            let mut na: Vec<Part> = m.pair.a.parts().iter().map(|v| 2 * v).collect();
            na.extend(&s);
            let mut nb: Vec<Part> = m.pair.b.parts().iter().flat_map(|&v| [v, v]).collect();
            nb.extend(&s);
            let image =
                PartitionPair::new(SignedPartition::from_unsorted(na)?, Partition::from_unsorted(nb)?);
            if !Pipeline::EE.is_member(&image, k, a) {
                return Err(bad("reduced image leaves the ground set"));
            }
            Ok(PipelineOutcome::Partner { pair: image, step: PipelineStep::Reduced(m) })
        }
    }
}
