use std::collections::BTreeMap;

use partition_core::{Part, Partition, PartitionPair, SignedPartition};

use crate::{AndrewsError, Pipeline, Result};

/// `(A | middle | D | E)`. In `EE` the middle is `B'` and `D` is unused;
/// in `OO`/`OE` the middle is `C` (merged pairs), `D` the leftover singles,
/// and `E` stays empty until a fixed point is canonicalized.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PartitionTriple {
    pub a: SignedPartition,
    pub middle: Partition,
    pub d: Partition,
    pub e: Partition,
}

impl PartitionTriple {
    pub fn weight(&self) -> u64 {
        self.a.weight() + self.middle.weight() + self.d.weight() + self.e.weight()
    }
}

pub(crate) fn counts(parts: &[Part]) -> BTreeMap<Part, usize> {
    let mut m = BTreeMap::new();
    for &p in parts {
        *m.entry(p).or_insert(0) += 1;
    }
    m
}

pub(crate) fn desc(mut v: Vec<Part>) -> Vec<Part> {
    v.sort_unstable_by(|x, y| y.cmp(x));
    v
}

pub(crate) fn partition(v: Vec<Part>) -> Partition {
    Partition::from_unsorted(v).expect("positive parts")
}

/// Removes one copy of each listed value; `None` if one is missing.
pub(crate) fn remove_each(parts: &[Part], gone: &[Part]) -> Option<Vec<Part>> {
    let mut out = parts.to_vec();
    for g in gone {
        let i = out.iter().position(|x| x == g)?;
        out.remove(i);
    }
    Some(out)
}

// pairs of equal parts merged into doubles, plus the leftover singles
fn merge_pairs(parts: &[Part]) -> (Vec<Part>, Vec<Part>) {
    let (mut merged, mut single) = (Vec::new(), Vec::new());
    for (v, m) in counts(parts) {
        merged.extend(std::iter::repeat(2 * v).take(m / 2));
        if m % 2 == 1 {
            single.push(v);
        }
    }
    (desc(merged), desc(single))
}

pub fn to_triple(
    pair: &PartitionPair,
    pipeline: Pipeline,
    k: u32,
    a: u32,
) -> Result<PartitionTriple> {
    pipeline.check_member(pair, k, a)?;
    Ok(split(pair, pipeline))
}

pub(crate) fn split(pair: &PartitionPair, pipeline: Pipeline) -> PartitionTriple {
    match pipeline {
        Pipeline::EE => {
            let shared: Vec<Part> = pair
                .a
                .parts()
                .iter()
                .copied()
                .filter(|v| v % 2 == 1 && pair.b.parts().contains(v))
                .collect();
            let a_rest: Vec<Part> =
                pair.a.parts().iter().copied().filter(|v| !shared.contains(v)).collect();
            let b_rest = remove_each(pair.b.parts(), &shared).expect("shared parts are in B");
            let (merged, single) = merge_pairs(&b_rest);
            let mut middle = merged;
            middle.extend(single);
            PartitionTriple {
                a: SignedPartition::new(a_rest).expect("subset of A"),
                middle: partition(middle),
                d: Partition::empty(),
                e: partition(shared.iter().map(|v| 2 * v).collect()),
            }
        }
        _ => {
            let (merged, single) = merge_pairs(pair.b.parts());
            PartitionTriple {
                a: pair.a.clone(),
                middle: partition(merged),
                d: partition(single),
                e: Partition::empty(),
            }
        }
    }
}

/// Inverse of [`to_triple`] on its image.
pub fn untransform(t: &PartitionTriple, pipeline: Pipeline) -> Result<PartitionPair> {
    let mut a = t.a.parts().to_vec();
    let mut b = Vec::new();
    for &p in t.middle.parts() {
        match pipeline {
            Pipeline::EE if p % 2 == 1 => b.push(p),
            _ if p % 2 == 1 => {
                return Err(AndrewsError::Precondition(format!("odd merged part {p}")))
            }
            _ => b.extend([p / 2, p / 2]),
        }
    }
    b.extend_from_slice(t.d.parts());
    for &e in t.e.parts() {
        a.push(e / 2);
        b.push(e / 2);
    }
    Ok(PartitionPair::new(SignedPartition::from_unsorted(a)?, partition(b)))
}

// The triple after the largest-part exchange, when one applies at all.
pub(crate) fn top_level_candidate(t: &PartitionTriple) -> Option<PartitionTriple> {
    let a1 = t.a.largest().unwrap_or(0);
    let m1 = t.middle.largest().unwrap_or(0);
    let mut out = t.clone();
    if m1 > a1 {
        let mut a = vec![m1];
        a.extend_from_slice(t.a.parts());
        out.a = SignedPartition::new(a).ok()?;
        out.middle = partition(t.middle.parts()[1..].to_vec());
    } else if a1 > 0 {
        out.a = SignedPartition::new(t.a.parts()[1..].to_vec()).ok()?;
        let mut m = t.middle.parts().to_vec();
        m.push(a1);
        out.middle = partition(m);
    } else {
        return None;
    }
    Some(out)
}

// Partner of a largest-part exchange if it stays in the ground set.
pub(crate) fn top_level_move(
    t: &PartitionTriple,
    pipeline: Pipeline,
    k: u32,
    a: u32,
) -> Option<PartitionPair> {
    let cand = top_level_candidate(t)?;
    let pair = untransform(&cand, pipeline).ok()?;
    (pipeline.is_member(&pair, k, a) && split(&pair, pipeline) == cand).then_some(pair)
}

/// True when `A` holds the largest part and moving it into the middle
/// partition would leave the ground set.
pub fn exceptional_condition(
    t: &PartitionTriple,
    pipeline: Pipeline,
    k: u32,
    a: u32,
) -> Result<bool> {
    pipeline.check(k, a)?;
    let a1 = t.a.largest().unwrap_or(0);
    let m1 = t.middle.largest().unwrap_or(0);
    if m1 > a1 || a1 == 0 {
        return Ok(false);
    }
    Ok(top_level_move(t, pipeline, k, a).is_none())
}

/// Splits merged parts back into `D` wherever `D` lacks their half:
/// parts `≡ 2 (mod 4)` in `OO`, parts `≡ 0 (mod 4)` in `OE`.
pub fn redistribute(t: &PartitionTriple, pipeline: Pipeline) -> Result<PartitionTriple> {
    let residue = match pipeline {
        Pipeline::OO => 2,
        Pipeline::OE => 0,
        Pipeline::EE => {
            return Err(AndrewsError::Precondition(
                "redistribute applies to the OO and OE pipelines".into(),
            ))
        }
    };
    let mut middle = t.middle.parts().to_vec();
    let mut d = t.d.parts().to_vec();
    let mut seen: Vec<Part> = middle.clone();
    seen.dedup();
    for p in seen {
        if p % 4 == residue && !d.contains(&(p / 2)) {
            let i = middle.iter().position(|&x| x == p).expect("value present");
            middle.remove(i);
            d.extend([p / 2, p / 2]);
        }
    }
    Ok(PartitionTriple {
        a: t.a.clone(),
        middle: partition(middle),
        d: partition(d),
        e: t.e.clone(),
    })
}
