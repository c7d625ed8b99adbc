//! Bitset over dense vertex identifiers.
//!
//! Sets of up to 128 vertices live inline; larger sets spill to the heap.
//! Trailing zero words are always trimmed so that equality and hashing only
//! depend on the members.

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::fmt;

type Words = SmallVec<[u64; 2]>;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Words,
}

impl VertexSet {
    pub fn new() -> Self {
        VertexSet { words: Words::new() }
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = VertexSet::new();
        s.insert(v);
        s
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut words = Words::from_elem(u64::MAX, n / 64);
        if n % 64 != 0 {
            words.push((1u64 << (n % 64)) - 1);
        }
        let mut s = VertexSet { words };
        s.trim();
        s
    }

    fn trim(&mut self) {
        while let Some(&0) = self.words.last() {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        if w >= self.words.len() {
            return false;
        }
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        self.trim();
        present
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        let w = v / 64;
        w < self.words.len() && self.words[w] & (1 << (v % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn last(&self) -> Option<usize> {
        self.words.last().map(|w| (self.words.len() - 1) * 64 + 63 - w.leading_zeros() as usize)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let (long, short) = if self.words.len() >= other.words.len() { (self, other) } else { (other, self) };
        let mut words = long.words.clone();
        for (a, b) in words.iter_mut().zip(short.words.iter()) {
            *a |= b;
        }
        VertexSet { words }
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        if self.words.len() < other.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut words: Words = self.words.iter().zip(other.words.iter()).map(|(a, b)| a & b).collect();
        while let Some(&0) = words.last() {
            words.pop();
        }
        VertexSet { words }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
        self.trim();
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words.iter().zip(other.words.iter()).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(other.words.iter()).any(|(a, b)| a & b != 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        !self.intersects(other)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.len() <= other.words.len()
            && self.words.iter().zip(other.words.iter()).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter { words: &self.words, idx: 0, cur: self.words.first().copied().unwrap_or(0) }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self` (including the empty set and `self`), in binary-counter order.
    pub fn subsets(&self) -> impl Iterator<Item = VertexSet> + '_ {
        let members = self.to_vec();
        assert!(members.len() < 64, "subset enumeration over {} elements", members.len());
        (0u64..(1u64 << members.len())).map(move |mask| {
            let mut s = VertexSet::new();
            let mut m = mask;
            while m != 0 {
                s.insert(members[m.trailing_zeros() as usize]);
                m &= m - 1;
            }
            s
        })
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let b = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + b);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = std::vec::IntoIter<usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.to_vec().into_iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl Extend<usize> for VertexSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        for v in iter {
            self.insert(v);
        }
    }
}

/// Lexicographic order on the sorted member sequence.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<usize> = Vec::deserialize(d)?;
        Ok(v.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    #[test]
    fn spill_past_inline_capacity() {
        let mut s = VertexSet::new();
        s.insert(3);
        s.insert(200);
        assert!(s.contains(200));
        assert_eq!(s.len(), 2);
        s.remove(200);
        assert_eq!(s, VertexSet::singleton(3));
        assert_eq!(s.last(), Some(3));
    }

    #[test]
    fn full_set() {
        assert_eq!(VertexSet::full(0), VertexSet::new());
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::full(130).last(), Some(129));
    }

    proptest! {
        #[test]
        fn matches_btreeset(a in proptest::collection::btree_set(0usize..300, 0..20),
                            b in proptest::collection::btree_set(0usize..300, 0..20)) {
            let sa: VertexSet = a.iter().copied().collect();
            let sb: VertexSet = b.iter().copied().collect();
            let u: BTreeSet<usize> = a.union(&b).copied().collect();
            let i: BTreeSet<usize> = a.intersection(&b).copied().collect();
            let d: BTreeSet<usize> = a.difference(&b).copied().collect();
            prop_assert_eq!(sa.union(&sb).to_vec(), u.into_iter().collect::<Vec<_>>());
            prop_assert_eq!(sa.intersection(&sb).to_vec(), i.iter().copied().collect::<Vec<_>>());
            prop_assert_eq!(sa.difference(&sb).to_vec(), d.into_iter().collect::<Vec<_>>());
            prop_assert_eq!(sa.is_subset(&sb), a.is_subset(&b));
            prop_assert_eq!(sa.intersects(&sb), !i.is_empty());
            prop_assert_eq!(sa.cmp(&sb), a.iter().cmp(b.iter()));
            // canonical form: a set rebuilt through removals hashes like a fresh one
            let mut back = sa.union(&sb);
            for v in b.difference(&a) { back.remove(*v); }
            prop_assert_eq!(back, sa);
        }
    }
}
