use std::fmt;

use crate::{PartitionError, Result};

pub type Part = u32;

/// A weakly decreasing list of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<Part>,
}

impl Partition {
    pub fn new(parts: Vec<Part>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(PartitionError::ZeroPart);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts into decreasing order first.
    pub fn from_unsorted(mut parts: Vec<Part>) -> Result<Self> {
        parts.sort_unstable_by(|x, y| y.cmp(x));
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<Part> {
        self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn largest(&self) -> Option<Part> {
        self.parts.first().copied()
    }

    pub fn multiplicity(&self, v: Part) -> usize {
        self.parts.iter().filter(|&&p| p == v).count()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

/// Distinct parts, sign `(-1)^length`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPartition {
    parts: Vec<Part>,
}

impl SignedPartition {
    pub fn new(parts: Vec<Part>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(PartitionError::ZeroPart);
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(PartitionError::NotDistinct(parts));
        }
        Ok(SignedPartition { parts })
    }

    pub fn from_unsorted(mut parts: Vec<Part>) -> Result<Self> {
        parts.sort_unstable_by(|x, y| y.cmp(x));
        SignedPartition::new(parts)
    }

    pub fn empty() -> Self {
        SignedPartition::default()
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<Part> {
        self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn largest(&self) -> Option<Part> {
        self.parts.first().copied()
    }

    pub fn contains(&self, v: Part) -> bool {
        self.parts.contains(&v)
    }

    /// `+1` for an even number of parts, `-1` otherwise.
    pub fn sign(&self) -> i64 {
        if self.parts.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for SignedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

/// A configuration `(A|B)`; its sign is the sign of `A`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionPair {
    pub a: SignedPartition,
    pub b: Partition,
}

impl PartitionPair {
    pub fn new(a: SignedPartition, b: Partition) -> Self {
        PartitionPair { a, b }
    }

    /// Builds a pair from raw part lists, checking both shapes.
    pub fn from_parts(a: Vec<Part>, b: Vec<Part>) -> Result<Self> {
        Ok(PartitionPair {
            a: SignedPartition::new(a)?,
            b: Partition::new(b)?,
        })
    }

    pub fn empty() -> Self {
        PartitionPair::default()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty() && self.b.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.a.weight() + self.b.weight()
    }

    pub fn sign(&self) -> i64 {
        self.a.sign()
    }
}

impl fmt::Display for PartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | {})", join(self.a.parts()), join(self.b.parts()))
    }
}

fn join(parts: &[Part]) -> String {
    if parts.is_empty() {
        return "∅".to_string();
    }
    parts
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[Part]) -> fmt::Result {
    write!(f, "({})", join(parts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_rejects_increasing_and_zero() {
        assert_eq!(
            Partition::new(vec![1, 2]),
            Err(PartitionError::NotDecreasing(vec![1, 2]))
        );
        assert_eq!(Partition::new(vec![2, 0]), Err(PartitionError::ZeroPart));
        assert!(Partition::new(vec![3, 3, 1]).is_ok());
    }

    #[test]
    fn signed_partition_needs_distinct_parts() {
        assert!(SignedPartition::new(vec![3, 3]).is_err());
        let s = SignedPartition::new(vec![6, 1]).unwrap();
        assert_eq!(s.sign(), 1);
        assert_eq!(SignedPartition::new(vec![6]).unwrap().sign(), -1);
        assert_eq!(SignedPartition::empty().sign(), 1);
    }

    #[test]
    fn weights_and_display() {
        let p = PartitionPair::from_parts(vec![6, 1], vec![5, 5]).unwrap();
        assert_eq!(p.weight(), 17);
        assert_eq!(p.to_string(), "(6,1 | 5,5)");
        assert_eq!(PartitionPair::empty().to_string(), "(∅ | ∅)");
        assert_eq!(Partition::empty().weight(), 0);
    }

    #[test]
    fn from_unsorted_sorts() {
        let p = Partition::from_unsorted(vec![1, 4, 4, 2]).unwrap();
        assert_eq!(p.parts(), &[4, 4, 2, 1]);
        assert_eq!(p.multiplicity(4), 2);
    }
}
