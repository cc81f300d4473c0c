//! Bitmask sets of vertices drawn from a fixed universe `1..=n`.

use std::cmp::Ordering;
use std::fmt;

/// Width of the membership mask. Graphs larger than this are rejected.
pub const MAX_VERTICES: usize = 64;

/// A subset of `{1, ..., n}` stored as a membership mask.
///
/// Vertex `v` (1-based) lives in bit `v - 1`. Two sets with different
/// universes never compare equal, and binary set operations panic on a
/// universe mismatch since that always indicates a logic error.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: u64,
    n: u8,
}

#[inline]
fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "universe of {n} vertices exceeds mask width");
        VertexSet { bits: 0, n: n as u8 }
    }

    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "universe of {n} vertices exceeds mask width");
        VertexSet {
            bits: full_mask(n),
            n: n as u8,
        }
    }

    /// Builds a set from a raw mask; bits beyond `n` are an error.
    pub fn from_bits(n: usize, bits: u64) -> Option<Self> {
        if n > MAX_VERTICES || bits & !full_mask(n) != 0 {
            return None;
        }
        Some(VertexSet { bits, n: n as u8 })
    }

    /// Builds a set from 1-based labels. Returns `None` if a label is out of range.
    pub fn from_labels<I: IntoIterator<Item = usize>>(n: usize, labels: I) -> Option<Self> {
        let mut s = Self::empty(n);
        for v in labels {
            if v == 0 || v > n {
                return None;
            }
            s.bits |= 1 << (v - 1);
        }
        Some(s)
    }

    pub fn singleton(n: usize, v: usize) -> Self {
        assert!(v >= 1 && v <= n, "vertex {v} outside 1..={n}");
        VertexSet {
            bits: 1 << (v - 1),
            n: n as u8,
        }
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v >= 1 && v <= self.universe() && self.bits & (1 << (v - 1)) != 0
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v >= 1 && v <= self.universe(), "vertex {v} outside universe");
        self.bits |= 1 << (v - 1);
    }

    pub fn remove(&mut self, v: usize) {
        if v >= 1 && v <= self.universe() {
            self.bits &= !(1 << (v - 1));
        }
    }

    #[inline]
    fn check(&self, other: &Self) {
        assert_eq!(self.n, other.n, "vertex sets over different universes");
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check(other);
        VertexSet {
            bits: self.bits | other.bits,
            n: self.n,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check(other);
        VertexSet {
            bits: self.bits & other.bits,
            n: self.n,
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.check(other);
        VertexSet {
            bits: self.bits & !other.bits,
            n: self.n,
        }
    }

    /// Complement within `[n]`.
    pub fn complement(&self) -> Self {
        VertexSet {
            bits: !self.bits & full_mask(self.universe()),
            n: self.n,
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check(other);
        self.bits & !other.bits == 0
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check(other);
        self.bits & other.bits == 0
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            Some(self.bits.trailing_zeros() as usize + 1)
        }
    }

    /// Members in increasing order, 1-based.
    pub fn iter(&self) -> Iter {
        Iter { bits: self.bits }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Canonical order used for witnesses and certificates: smaller sets
    /// first, then lexicographic comparison of the sorted member lists.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.bits ^ other.bits;
            if diff == 0 {
                Ordering::Equal
            } else if self.bits & (diff & diff.wrapping_neg()) != 0 {
                // the smallest element where they differ belongs to `self`
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

pub struct Iter {
    bits: u64,
}

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let tz = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(tz + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.bits.count_ones() as usize;
        (c, Some(c))
    }
}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_labels(6, [1, 2, 3]).unwrap();
        let b = VertexSet::from_labels(6, [3, 4]).unwrap();
        assert_eq!(a.union(&b).to_vec(), vec![1, 2, 3, 4]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 2]);
        assert_eq!(a.complement().to_vec(), vec![4, 5, 6]);
        assert!(VertexSet::from_labels(6, [7]).is_none());
        assert!(VertexSet::from_labels(6, [0]).is_none());
        assert!(VertexSet::from_bits(3, 0b1000).is_none());
    }

    #[test]
    fn full_width_universe() {
        let s = VertexSet::full(64);
        assert_eq!(s.len(), 64);
        assert!(s.complement().is_empty());
        assert!(s.contains(64));
    }

    #[test]
    fn canonical_order_is_size_then_lex() {
        let a = VertexSet::from_labels(6, [1, 5]).unwrap();
        let b = VertexSet::from_labels(6, [2, 3]).unwrap();
        let c = VertexSet::from_labels(6, [4]).unwrap();
        assert_eq!(a.canonical_cmp(&b), Ordering::Less);
        assert_eq!(b.canonical_cmp(&a), Ordering::Greater);
        assert_eq!(c.canonical_cmp(&a), Ordering::Less);
        assert_eq!(a.canonical_cmp(&a), Ordering::Equal);
    }

    #[test]
    fn display() {
        let a = VertexSet::from_labels(10, [10, 1]).unwrap();
        assert_eq!(a.to_string(), "{1,10}");
    }
}
