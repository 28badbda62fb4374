use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Maximum number of vertices per side supported by [`VertexSet`].
pub const MAX_SIDE: usize = 64;

/// A subset of one side of a bigraph, stored as a single-word bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_SIDE);
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_SIDE);
        VertexSet(1u64 << i)
    }

    pub fn range(lo: usize, hi: usize) -> Self {
        VertexSet::full(hi).difference(VertexSet::full(lo))
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_SIDE && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u64 << i);
    }

    pub fn with(self, i: usize) -> Self {
        VertexSet(self.0 | 1u64 << i)
    }

    pub fn without(self, i: usize) -> Self {
        VertexSet(self.0 & !(1u64 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// The `k` smallest members (all of them if `k >= len`).
    pub fn take_lowest(self, k: usize) -> Self {
        self.iter().take(k).collect()
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Applies an index permutation: member `i` maps to `perm[i]`.
    pub fn permute(self, perm: &[usize]) -> Self {
        self.iter().map(|i| perm[i]).collect()
    }
}

#[derive(Clone)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let items = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = items.iter().find(|&&i| i >= MAX_SIDE) {
            return Err(serde::de::Error::custom(format!(
                "vertex index {bad} exceeds the supported maximum of {}",
                MAX_SIDE - 1
            )));
        }
        Ok(items.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a: VertexSet = [0, 3, 5].into_iter().collect();
        let b = VertexSet::range(2, 6);
        assert_eq!(a.len(), 3);
        assert_eq!(a.intersection(b).iter().collect::<Vec<_>>(), vec![3, 5]);
        assert_eq!(a.difference(b), VertexSet::singleton(0));
        assert!(VertexSet::singleton(3).is_subset(a));
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(a.take_lowest(2), [0, 3].into_iter().collect());
        assert_eq!(a.first(), Some(0));
        assert_eq!(VertexSet::EMPTY.first(), None);
    }
}
