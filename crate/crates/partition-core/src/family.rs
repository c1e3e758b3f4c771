use std::fmt;
use std::str::FromStr;

use crate::partition::{Part, Partition};
use crate::{PartitionError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParityMode {
    None,
    EvenPartsEvenMultiplicity,
    OddPartsEvenMultiplicity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    W,
    Wbar,
}

impl Family {
    /// Parity restriction layered on top of the Gordon conditions.
    pub fn parity(self) -> ParityMode {
        match self {
            Family::A | Family::B => ParityMode::None,
            Family::W => ParityMode::EvenPartsEvenMultiplicity,
            Family::Wbar => ParityMode::OddPartsEvenMultiplicity,
        }
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "W" => Ok(Family::W),
            "Wbar" => Ok(Family::Wbar),
            other => Err(format!("unknown family {other:?}, expected A, B, W or Wbar")),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::W => "W",
            Family::Wbar => "Wbar",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GordonParams {
    pub k: u32,
    pub a: u32,
    pub parity: ParityMode,
}

impl GordonParams {
    pub fn new(k: u32, a: u32, parity: ParityMode) -> Result<Self> {
        check_params(k, a)?;
        Ok(GordonParams { k, a, parity })
    }

    pub fn admits(&self, b: &Partition) -> bool {
        gordon_condition(b.parts(), self.k, self.a) && satisfies_parity(b, self.parity)
    }
}

fn check_params(k: u32, a: u32) -> Result<()> {
    if k < 2 || a < 1 || a > k {
        return Err(PartitionError::InvalidParams { k, a });
    }
    Ok(())
}

/// The Gordon conditions on a decreasing part list without validating
/// `(k, a)`. With `k = 1` the window condition forbids every part, so only
/// the empty list passes; the involution code relies on that degenerate case.
pub fn gordon_condition(parts: &[Part], k: u32, a: u32) -> bool {
    let w = k.max(1) as usize - 1;
    if parts.len() > w && parts.iter().zip(&parts[w..]).any(|(x, y)| x < &(y + 2)) {
        return false;
    }
    parts.iter().filter(|&&p| p == 1).count() < a as usize
}

pub fn is_gordon(b: &Partition, k: u32, a: u32) -> Result<bool> {
    check_params(k, a)?;
    Ok(gordon_condition(b.parts(), k, a))
}

pub fn satisfies_parity(b: &Partition, mode: ParityMode) -> bool {
    let restricted = match mode {
        ParityMode::None => return true,
        ParityMode::EvenPartsEvenMultiplicity => 0,
        ParityMode::OddPartsEvenMultiplicity => 1,
    };
    let parts = b.parts();
    let mut i = 0;
    while i < parts.len() {
        let v = parts[i];
        let mut j = i;
        while j < parts.len() && parts[j] == v {
            j += 1;
        }
        if v % 2 == restricted && (j - i) % 2 == 1 {
            return false;
        }
        i = j;
    }
    true
}

fn a_allows(p: Part, k: u32, a: u32) -> bool {
    let m = 2 * k + 1;
    let r = p % m;
    r != 0 && r != a && r != m - a
}

/// Visits the members of `family` of weight `n` in decreasing lexicographic
/// order. Gordon families are generated with incremental pruning.
pub fn for_each_in_family<F: FnMut(&[Part])>(
    family: Family,
    k: u32,
    a: u32,
    n: u32,
    mut f: F,
) -> Result<()> {
    check_params(k, a)?;
    let mut buf = Vec::new();
    match family {
        Family::A => rec_a(n, n, k, a, &mut buf, &mut f),
        _ => {
            let mode = family.parity();
            rec_gordon(n, n, k as usize, a as usize, mode, &mut buf, &mut f)
        }
    }
    Ok(())
}

fn rec_a<F: FnMut(&[Part])>(rem: u32, cap: u32, k: u32, a: u32, buf: &mut Vec<Part>, f: &mut F) {
    if rem == 0 {
        f(buf);
        return;
    }
    for p in (1..=cap.min(rem)).rev() {
        if a_allows(p, k, a) {
            buf.push(p);
            rec_a(rem - p, p, k, a, buf, f);
            buf.pop();
        }
    }
}

fn run_ok(buf: &[Part], mode: ParityMode) -> bool {
    // the run of the last value is closed when the next part differs
    let restricted = match mode {
        ParityMode::None => return true,
        ParityMode::EvenPartsEvenMultiplicity => 0,
        ParityMode::OddPartsEvenMultiplicity => 1,
    };
    let Some(&v) = buf.last() else { return true };
    let run = buf.iter().rev().take_while(|&&x| x == v).count();
    v % 2 != restricted || run % 2 == 0
}

fn rec_gordon<F: FnMut(&[Part])>(
    rem: u32,
    cap: u32,
    k: usize,
    a: usize,
    mode: ParityMode,
    buf: &mut Vec<Part>,
    f: &mut F,
) {
    if rem == 0 {
        if run_ok(buf, mode) {
            f(buf);
        }
        return;
    }
    let last = buf.last().copied();
    for p in (1..=cap.min(rem)).rev() {
        if let Some(l) = last {
            if p < l && !run_ok(buf, mode) {
                continue;
            }
        }
        let i = buf.len();
        if i + 1 >= k && buf[i + 1 - k] < p + 2 {
            continue;
        }
        if p == 1 && buf.iter().filter(|&&x| x == 1).count() + 1 >= a {
            continue;
        }
        buf.push(p);
        rec_gordon(rem - p, p, k, a, mode, buf, f);
        buf.pop();
    }
}

pub fn enumerate_family(family: Family, k: u32, a: u32, n: u32) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for_each_in_family(family, k, a, n, |p| {
        out.push(Partition::new(p.to_vec()).expect("generated"))
    })?;
    Ok(out)
}

pub fn count_family(family: Family, k: u32, a: u32, n: u32) -> Result<u64> {
    check_params(k, a)?;
    if family == Family::A {
        return count_restricted(k, a, n);
    }
    let mut c = 0u64;
    for_each_in_family(family, k, a, n, |_| c += 1)?;
    Ok(c)
}

// Partitions into allowed parts by the usual coin-change recurrence.
fn count_restricted(k: u32, a: u32, n: u32) -> Result<u64> {
    let n = n as usize;
    let mut dp = vec![0u64; n + 1];
    dp[0] = 1;
    for p in 1..=n {
        if !a_allows(p as u32, k, a) {
            continue;
        }
        for i in p..=n {
            dp[i] = dp[i].checked_add(dp[i - p]).ok_or(PartitionError::Overflow)?;
        }
    }
    Ok(dp[n])
}
