use crate::partition::{Part, Partition, SignedPartition};

/// Visits every partition of `n` with parts at most `max_part`, largest
/// part first, in decreasing lexicographic order.
pub fn for_each_partition<F: FnMut(&[Part])>(n: u32, max_part: u32, mut f: F) {
    let mut buf = Vec::new();
    rec(n, max_part, &mut buf, &mut f);

    fn rec<F: FnMut(&[Part])>(rem: u32, cap: u32, buf: &mut Vec<Part>, f: &mut F) {
        if rem == 0 {
            f(buf);
            return;
        }
        for p in (1..=cap.min(rem)).rev() {
            buf.push(p);
            rec(rem - p, p, buf, f);
            buf.pop();
        }
    }
}

/// Visits every partition of `n` into distinct parts, same order.
pub fn for_each_distinct<F: FnMut(&[Part])>(n: u32, mut f: F) {
    let mut buf = Vec::new();
    rec(n, n, &mut buf, &mut f);

    fn rec<F: FnMut(&[Part])>(rem: u32, cap: u32, buf: &mut Vec<Part>, f: &mut F) {
        if rem == 0 {
            f(buf);
            return;
        }
        // the remaining parts 1..cap must be able to reach rem
        if u64::from(cap) * u64::from(cap + 1) / 2 < u64::from(rem) {
            return;
        }
        for p in (1..=cap.min(rem)).rev() {
            buf.push(p);
            rec(rem - p, p - 1, buf, f);
            buf.pop();
        }
    }
}

pub fn partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each_partition(n, n, |p| out.push(Partition::new(p.to_vec()).expect("generated")));
    out
}

pub fn distinct_partitions(n: u32) -> Vec<SignedPartition> {
    let mut out = Vec::new();
    for_each_distinct(n, |p| {
        out.push(SignedPartition::new(p.to_vec()).expect("generated"))
    });
    out
}
