use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

/// Largest carrier representable by an [`ElementSet`].
pub const MAX_BITS: usize = 64;

/// A subset of a finite carrier `0..n`, stored as a bitmask (bit `i` set iff
/// element `i` is present).
///
/// The carrier size is not stored; operations that need it (complement,
/// validation) take it explicitly.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The whole carrier `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_BITS);
        if n >= MAX_BITS {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(x: usize) -> Self {
        debug_assert!(x < MAX_BITS);
        ElementSet(1u64 << x)
    }

    pub fn contains(self, x: usize) -> bool {
        x < MAX_BITS && self.0 >> x & 1 == 1
    }

    pub fn insert(&mut self, x: usize) {
        self.0 |= 1u64 << x;
    }

    pub fn remove(&mut self, x: usize) {
        self.0 &= !(1u64 << x);
    }

    pub fn with(self, x: usize) -> Self {
        ElementSet(self.0 | 1u64 << x)
    }

    pub fn without(self, x: usize) -> Self {
        ElementSet(self.0 & !(1u64 << x))
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn complement(self, n: usize) -> Self {
        ElementSet(!self.0 & Self::full(n).0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// True when no bit at position `>= n` is set.
    pub fn within(self, n: usize) -> bool {
        self.is_subset(Self::full(n))
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// Re-indexes the elements of `self` that lie in `support` onto
    /// `0..support.len()`, preserving their relative order.
    pub fn compress(self, support: ElementSet) -> Self {
        let mut out = 0u64;
        for (i, x) in support.iter().enumerate() {
            if self.contains(x) {
                out |= 1 << i;
            }
        }
        ElementSet(out)
    }

    /// Inverse of [`compress`](Self::compress): maps position `i` to the
    /// `i`-th element of `support`.
    pub fn expand(self, support: ElementSet) -> Self {
        let mut out = ElementSet::EMPTY;
        for (i, x) in support.iter().enumerate() {
            if self.contains(i) {
                out.insert(x);
            }
        }
        out
    }

    /// Image of the set under an element map.
    pub fn map(self, f: impl Fn(usize) -> usize) -> Self {
        self.iter().map(f).collect()
    }

    /// All subsets of `self`, in ascending bitmask order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ElementSet {
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

impl BitOr for ElementSet {
    type Output = ElementSet;
    fn bitor(self, rhs: Self) -> Self {
        self.union(rhs)
    }
}

impl BitAnd for ElementSet {
    type Output = ElementSet;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(rhs)
    }
}

impl Sub for ElementSet {
    type Output = ElementSet;
    fn sub(self, rhs: Self) -> Self {
        self.difference(rhs)
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElementSet::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Elements;
    fn into_iter(self) -> Elements {
        self.iter()
    }
}

/// Ascending iterator over the members of an [`ElementSet`].
#[derive(Clone)]
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// Iterator over the subsets of a mask (ascending by bitmask value).
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        let cur = self.next?;
        // standard "next submask in increasing order" step
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur | !self.mask).wrapping_add(1) & self.mask)
        };
        Some(ElementSet(cur))
    }
}

/// All subsets of the carrier `0..n` in ascending bitmask order.
pub fn all_subsets(n: usize) -> Subsets {
    ElementSet::full(n).subsets()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_algebra() {
        let a: ElementSet = [0, 2].into_iter().collect();
        let b: ElementSet = [2, 3].into_iter().collect();
        assert_eq!((a | b).bits(), 0b1101);
        assert_eq!((a & b).bits(), 0b0100);
        assert_eq!((a - b).bits(), 0b0001);
        assert_eq!(a.complement(4).bits(), 0b1010);
        assert!(a.within(3));
        assert!(!b.within(3));
        assert_eq!(a.to_string(), "{0,2}");
        assert_eq!(ElementSet::EMPTY.to_string(), "{}");
    }

    #[test]
    fn subsets_are_ascending_and_complete() {
        let m = ElementSet::from_bits(0b1010);
        let subs: Vec<u64> = m.subsets().map(|s| s.bits()).collect();
        assert_eq!(subs, vec![0b0000, 0b0010, 0b1000, 0b1010]);
        assert_eq!(all_subsets(3).count(), 8);
        assert_eq!(all_subsets(0).count(), 1);
    }

    #[test]
    fn compress_expand_roundtrip() {
        let support = ElementSet::from_bits(0b10110);
        let s = ElementSet::from_bits(0b10010);
        let c = s.compress(support);
        assert_eq!(c.bits(), 0b101);
        assert_eq!(c.expand(support), s);
    }

    #[test]
    fn full_at_width() {
        assert_eq!(ElementSet::full(64).bits(), u64::MAX);
        assert_eq!(ElementSet::full(0), ElementSet::EMPTY);
    }
}
