//! Fixed-width bitsets over a small finite universe.

use std::fmt;

/// Largest universe a [`Subset`] can index.
pub const MAX_UNIVERSE: usize = 64;

/// A subset of `{0, .., n-1}` for `n <= 64`, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The full set `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_UNIVERSE);
        if n == MAX_UNIVERSE {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_UNIVERSE);
        Subset(1u64 << i)
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        i < MAX_UNIVERSE && self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u64 << i);
    }

    #[inline]
    pub fn with(mut self, i: usize) -> Self {
        self.insert(i);
        self
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    /// Complement relative to a universe of size `n`.
    #[inline]
    pub fn complement(self, n: usize) -> Subset {
        Subset::full(n).difference(self)
    }

    #[inline]
    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Lexicographic comparison of the sorted member lists.
    pub fn lex_cmp(self, other: Subset) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }

    /// Image of this set under an index map.
    pub fn map(self, f: impl Fn(usize) -> usize) -> Subset {
        self.iter().fold(Subset::EMPTY, |acc, i| acc.with(f(i)))
    }

    /// Preimage of this set under an index map on a domain of size `n`.
    pub fn preimage(self, n: usize, f: impl Fn(usize) -> usize) -> Subset {
        (0..n)
            .filter(|&i| self.contains(f(i)))
            .fold(Subset::EMPTY, Subset::with)
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(Subset::EMPTY, Subset::with)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Members in increasing order.
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_algebra() {
        let a: Subset = [0, 2].into_iter().collect();
        let b: Subset = [2, 3].into_iter().collect();
        assert_eq!(a.union(b).iter().collect::<Vec<_>>(), vec![0, 2, 3]);
        assert_eq!(a.intersection(b), Subset::singleton(2));
        assert_eq!(a.complement(4), [1, 3].into_iter().collect());
        assert!(Subset::EMPTY.is_subset(a));
        assert!(!a.is_subset(b));
        assert_eq!(Subset::full(64).len(), 64);
    }

    #[test]
    fn lex_order_follows_member_lists() {
        let a: Subset = [0, 3].into_iter().collect();
        let b: Subset = [1].into_iter().collect();
        assert_eq!(a.lex_cmp(b), std::cmp::Ordering::Less);
        assert_eq!(Subset::EMPTY.lex_cmp(a), std::cmp::Ordering::Less);
    }

    #[test]
    fn map_and_preimage() {
        let s: Subset = [0, 1].into_iter().collect();
        assert_eq!(s.map(|i| i + 2), [2, 3].into_iter().collect());
        // f = [1, 1, 0]
        let f = [1usize, 1, 0];
        assert_eq!(Subset::singleton(1).preimage(3, |i| f[i]), [0, 1].into_iter().collect());
    }
}
