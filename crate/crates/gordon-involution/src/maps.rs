use partition_core::{gordon_condition, PartitionPair};

use crate::classify::{padded, uclass};
use crate::{ClassLabel, GordonError, GordonInvolution, InvolutionOutcome, MapKind, Move, Result};

// Turns raw part vectors back into a pair, or None when the image left the
// configuration space.
fn finish(g: &GordonInvolution, a: Vec<i64>, pad: Vec<i64>) -> Option<PartitionPair> {
    if a.windows(2).any(|w| w[0] <= w[1]) || a.last().is_some_and(|&x| x <= 0) {
        return None;
    }
    if pad.iter().any(|&v| v < 0) || pad.windows(2).any(|w| w[0] < w[1]) {
        return None;
    }
    if pad.iter().filter(|&&v| v == 0).count() != (g.k - g.a) as usize {
        return None;
    }
    let b: Vec<u32> = pad.into_iter().filter(|&v| v > 0).map(|v| v as u32).collect();
    if !gordon_condition(&b, g.k, g.a) {
        return None;
    }
    let a = a.into_iter().map(|v| v as u32).collect();
    PartitionPair::from_parts(a, b).ok()
}

// adds delta at 1-indexed positions start, start+w, ... (count of them)
fn bump(pad: &mut [i64], start: usize, w: usize, count: u32, delta: i64) -> bool {
    for j in 0..count as usize {
        let idx = start + j * w;
        if idx == 0 || idx > pad.len() {
            return false;
        }
        pad[idx - 1] += delta;
    }
    true
}

pub(crate) fn apply(
    g: &GordonInvolution,
    pair: &PartitionPair,
    i: u32,
    class: u8,
) -> Result<InvolutionOutcome> {
    let (_, n) = uclass(g, pair, i);
    let k = g.k;
    let w = k as usize - 1;
    let nn = n as usize;
    let mut a: Vec<i64> = pair.a.parts().iter().map(|&x| i64::from(x)).collect();
    let mut pad = padded(g, pair.b.parts());
    let label = ClassLabel::U { i, class };

    let (map, image) = if i == 1 && class == 2 {
        for x in a.iter_mut().take(nn) {
            *x -= 1;
        }
        a.push(i64::from(n));
        (MapKind::Alpha, finish(g, a, pad))
    } else if i == k && class == 1 {
        if a.len() == nn {
            (MapKind::AlphaInv, None)
        } else {
            for x in a.iter_mut().take(nn) {
                *x += 1;
            }
            a.pop();
            (MapKind::AlphaInv, finish(g, a, pad))
        }
    } else if class == 1 {
        a.pop();
        let ok = bump(&mut pad, i as usize, w, n, 1);
        (MapKind::Beta, if ok { finish(g, a, pad) } else { None })
    } else if class == 2 {
        a.push(i64::from(n));
        let ok = bump(&mut pad, i as usize - 1, w, n, -1);
        (MapKind::BetaInv, if ok { finish(g, a, pad) } else { None })
    } else if class == 4 {
        let b1 = pad.remove(0);
        for x in a.iter_mut().take(nn) {
            *x -= 1;
        }
        a.insert(0, b1);
        let ok = bump(&mut pad, w, w, n, 1);
        (MapKind::Gamma, if ok { finish(g, a, pad) } else { None })
    } else {
        let a1 = a.remove(0);
        for x in a.iter_mut().take(nn) {
            *x += 1;
        }
        let ok = bump(&mut pad, w, w, n, -1);
        pad.insert(0, a1);
        (MapKind::GammaInv, if ok { finish(g, a, pad) } else { None })
    };

    match image {
        Some(pair) => Ok(InvolutionOutcome::Partner(Move { pair, label, map: Some(map) })),
        None => match g.match_fixed(pair) {
            Some(tag) => Ok(InvolutionOutcome::Fixed(tag)),
            None => Err(GordonError::Consistency {
                pair: pair.to_string(),
                detail: format!("{map} in {label} leaves the configuration space"),
            }),
        },
    }
}
