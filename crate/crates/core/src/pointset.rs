//! Subsets of `{0..n-1}` packed into a single machine word.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub};

/// Largest supported point count. Every subset of the carrier fits in one `u64`.
pub const MAX_POINTS: usize = 62;

/// A set of points, bit `x` set iff point `x` is a member.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet(u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        PointSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The full carrier `{0..n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            PointSet(u64::MAX)
        } else {
            PointSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(x: usize) -> Self {
        PointSet(1u64 << x)
    }

    #[inline]
    pub const fn contains(self, x: usize) -> bool {
        x < 64 && self.0 >> x & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, x: usize) {
        self.0 |= 1u64 << x;
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        self.0 &= !(1u64 << x);
    }

    #[inline]
    pub const fn with(self, x: usize) -> Self {
        PointSet(self.0 | 1u64 << x)
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        PointSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        PointSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        PointSet(self.0 & !other.0)
    }

    /// Complement relative to the carrier `{0..n-1}`.
    #[inline]
    pub const fn complement(self, n: usize) -> Self {
        PointSet(!self.0 & PointSet::full(n).0)
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// True iff every member is below `n`.
    #[inline]
    pub const fn fits(self, n: usize) -> bool {
        self.is_subset(PointSet::full(n))
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Key for the canonical order: ascending cardinality, then numeric encoding.
    #[inline]
    pub const fn canonical_key(self) -> (u32, u64) {
        (self.0.count_ones(), self.0)
    }

    /// Renumbers the members of `self` that lie in `within` to `0..within.len()`,
    /// preserving their relative order.
    pub fn compress(self, within: PointSet) -> PointSet {
        let mut out = PointSet::EMPTY;
        for (i, x) in within.iter().enumerate() {
            if self.contains(x) {
                out.insert(i);
            }
        }
        out
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Members in ascending order.
#[derive(Clone, Debug)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for PointSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = PointSet::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl BitOr for PointSet {
    type Output = PointSet;
    fn bitor(self, rhs: PointSet) -> PointSet {
        self.union(rhs)
    }
}

impl BitOrAssign for PointSet {
    fn bitor_assign(&mut self, rhs: PointSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for PointSet {
    type Output = PointSet;
    fn bitand(self, rhs: PointSet) -> PointSet {
        self.intersection(rhs)
    }
}

impl BitAndAssign for PointSet {
    fn bitand_assign(&mut self, rhs: PointSet) {
        self.0 &= rhs.0;
    }
}

impl Sub for PointSet {
    type Output = PointSet;
    fn sub(self, rhs: PointSet) -> PointSet {
        self.difference(rhs)
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// Builds a [`PointSet`] from a list of points.
#[macro_export]
macro_rules! pset {
    () => { $crate::PointSet::EMPTY };
    ($($x:expr),+ $(,)?) => {
        $crate::PointSet::EMPTY$(.with($x))+
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_algebra() {
        let a = pset![0, 2];
        let b = pset![1, 2];
        assert_eq!(a | b, pset![0, 1, 2]);
        assert_eq!(a & b, pset![2]);
        assert_eq!(a - b, pset![0]);
        assert_eq!(a.complement(4), pset![1, 3]);
        assert_eq!(PointSet::full(0), PointSet::EMPTY);
        assert_eq!(PointSet::full(62).len(), 62);
        assert_eq!(a.to_vec(), vec![0, 2]);
        assert_eq!(format!("{}", a), "{0,2}");
    }

    #[test]
    fn compress_relabels_in_order() {
        assert_eq!(pset![2, 5].compress(pset![1, 2, 5]), pset![1, 2]);
        assert_eq!(pset![0, 3].compress(pset![1, 2]), PointSet::EMPTY);
    }

    #[test]
    fn canonical_key_orders_by_size_first() {
        let mut v = vec![pset![0, 1], pset![2], PointSet::EMPTY, pset![1]];
        v.sort_by_key(|s| s.canonical_key());
        assert_eq!(v, vec![PointSet::EMPTY, pset![1], pset![2], pset![0, 1]]);
    }
}
