//! Fixed-width vertex sets.
//!
//! A [`VertexSet`] is a subset of `{0, .., 63}` stored in one machine word.
//! It is the currency of all domination logic in this crate: neighborhoods,
//! dominating sets, witnesses and certificates are all `VertexSet`s.

use std::cmp::Ordering;
use std::fmt;

/// A set of vertices, one bit per vertex.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub fn empty() -> Self {
        VertexSet(0)
    }

    /// The set `{v}`.
    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < 64);
        VertexSet(1 << v)
    }

    /// The set `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 64);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        debug_assert!(v < 64);
        self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < 64);
        self.0 |= 1 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < 64);
        self.0 &= !(1 << v);
    }

    /// `self` with `v` added, as a new set.
    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    /// `self` with `v` removed, as a new set.
    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    #[inline]
    pub fn cardinality(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in ascending order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    /// Lexicographic order on the ascending member sequences.
    ///
    /// `{0,3}` sorts before `{1,2}`, and a set sorts before any proper
    /// superset sharing its prefix. This is the order in which the solvers
    /// enumerate candidate sets, so it is also the order used to pick
    /// deterministic witnesses.
    pub fn cmp_lex(self, other: Self) -> Ordering {
        let mut a = self.0;
        let mut b = other.0;
        while a != 0 && b != 0 {
            let x = a.trailing_zeros();
            let y = b.trailing_zeros();
            match x.cmp(&y) {
                Ordering::Equal => {
                    a &= a - 1;
                    b &= b - 1;
                }
                ord => return ord,
            }
        }
        // The exhausted side is a prefix of the other and sorts first.
        (a != 0).cmp(&(b != 0))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut s = VertexSet::empty();
        assert!(s.is_empty());
        s.insert(3);
        s.insert(0);
        s.insert(5);
        assert_eq!(s.cardinality(), 3);
        assert!(s.contains(3) && !s.contains(4));
        s.remove(3);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 5]);
        assert_eq!(s.min(), Some(0));
        assert_eq!(s.to_string(), "{0,5}");
        assert_eq!(VertexSet::full(4).bits(), 0b1111);
        assert_eq!(VertexSet::full(64).cardinality(), 64);
    }

    #[test]
    fn set_algebra() {
        let a: VertexSet = [0, 1, 4].into_iter().collect();
        let b: VertexSet = [1, 2].into_iter().collect();
        assert_eq!(a.union(b), [0, 1, 2, 4].into_iter().collect());
        assert_eq!(a.intersection(b), VertexSet::singleton(1));
        assert_eq!(a.difference(b), [0, 4].into_iter().collect());
        assert!(b.is_subset_of(a.union(b)));
        assert!(!a.is_subset_of(b));
    }

    #[test]
    fn lex_order_is_sequence_order() {
        let s = |vs: &[usize]| vs.iter().copied().collect::<VertexSet>();
        // {0,3} < {1,2} even though 0b1001 > 0b0110 numerically.
        assert_eq!(s(&[0, 3]).cmp_lex(s(&[1, 2])), Ordering::Less);
        assert_eq!(s(&[0, 2]).cmp_lex(s(&[0, 3])), Ordering::Less);
        assert_eq!(s(&[1, 2]).cmp_lex(s(&[0, 3])), Ordering::Greater);
        // A prefix sorts before its extensions.
        assert_eq!(s(&[0, 1]).cmp_lex(s(&[0, 1, 2])), Ordering::Less);
        assert_eq!(s(&[0, 1, 2]).cmp_lex(s(&[0, 1])), Ordering::Greater);
        assert_eq!(s(&[2, 5]).cmp_lex(s(&[2, 5])), Ordering::Equal);
        assert_eq!(VertexSet::EMPTY.cmp_lex(s(&[0])), Ordering::Less);
    }
}
