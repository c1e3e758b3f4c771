use partition_core::{gordon_condition, PartitionPair};

use crate::{ClassLabel, FixedTag, GordonError, GordonInvolution, Result};

/// Parameters deciding the class inside `U_i`. `r` is `None` when it is
/// unbounded (only for the degenerate `k = 1`); `s` exists for `2 <= i <= k-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassParams {
    pub p: u32,
    pub q: u32,
    pub r: Option<u32>,
    pub s: Option<u32>,
    pub n: u32,
}

/// `B` followed by `k - a` virtual zero parts. The zeros stand in for the
/// limit on the number of ones.
pub(crate) fn padded(g: &GordonInvolution, b: &[u32]) -> Vec<i64> {
    let mut p: Vec<i64> = b.iter().map(|&x| i64::from(x)).collect();
    p.extend(std::iter::repeat(0).take((g.k - g.a) as usize));
    p
}

// 1-indexed lookup
fn at(p: &[i64], j: usize) -> Option<i64> {
    if j >= 1 {
        p.get(j - 1).copied()
    } else {
        None
    }
}

pub(crate) fn classify(g: &GordonInvolution, pair: &PartitionPair) -> Result<ClassLabel> {
    if pair.is_empty() {
        return Ok(ClassLabel::Fixed(FixedTag::Empty));
    }
    let a1 = pair.a.largest().unwrap_or(0);
    let b1 = pair.b.largest().unwrap_or(0);
    if b1 > a1 {
        return Ok(ClassLabel::MoveBtoA);
    }
    let mut moved = vec![a1];
    moved.extend_from_slice(pair.b.parts());
    if gordon_condition(&moved, g.k, g.a) {
        return Ok(ClassLabel::MoveAtoB);
    }
    let p = padded(g, pair.b.parts());
    let x = i64::from(a1);
    let i = p.iter().filter(|&&v| v == x).count() as u32 + 1;
    // the chain a_1 = b_1 = ... = b_{i-1} = b_i + 1 = ... = b_{k-1} + 1
    for j in 1..g.k {
        let want = if j < i { x } else { x - 1 };
        if at(&p, j as usize) != Some(want) {
            return Err(GordonError::Consistency {
                pair: pair.to_string(),
                detail: format!("largest part of A cannot move, but the chain fails at b_{j}"),
            });
        }
    }
    let (class, _) = uclass(g, pair, i);
    Ok(ClassLabel::U { i, class })
}

// longest chain p_{start}, p_{start+w}, ... with consecutive differences 2
fn chain(p: &[i64], start: usize, w: usize) -> u32 {
    let mut len = 1;
    loop {
        let u = at(p, start + (len as usize - 1) * w);
        let v = at(p, start + len as usize * w);
        match (u, v) {
            (Some(u), Some(v)) if u - v == 2 => len += 1,
            _ => return len,
        }
    }
}

pub(crate) fn params(g: &GordonInvolution, pair: &PartitionPair, i: u32) -> ClassParams {
    let a = pair.a.parts();
    let p = *a.last().expect("U classes have nonempty A");
    let mut q = 1;
    while (q as usize) < a.len() && a[q as usize - 1] - a[q as usize] == 1 {
        q += 1;
    }
    let pad = padded(g, pair.b.parts());
    let w = g.k as usize - 1;
    let r = (g.k > 1).then(|| chain(&pad, w, w));
    let s = (2..g.k).contains(&i).then(|| chain(&pad, i as usize - 1, w));
    let n = [Some(p), Some(q), r, s].into_iter().flatten().min().unwrap();
    ClassParams { p, q, r, s, n }
}

/// Class within `U_i`, checked in the order the definitions are given.
pub(crate) fn uclass(g: &GordonInvolution, pair: &PartitionPair, i: u32) -> (u8, u32) {
    let c = params(g, pair, i);
    let n = c.n;
    let class = if c.p == n {
        1
    } else if i == 1 {
        if c.q == n {
            2
        } else {
            3
        }
    } else if i == g.k {
        if c.r == Some(n) {
            2
        } else {
            4
        }
    } else if c.s == Some(n) {
        2
    } else if c.q == n {
        4
    } else {
        3
    };
    (class, n)
}
