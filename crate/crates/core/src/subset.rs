//! Subsets of a carrier of at most 256 elements, as a fixed-width bit set.

use core::fmt;

const WORDS: usize = 4;

/// A subset of `0..order`.
///
/// Ordering compares the member bits from the highest element down, so sets
/// sort the way their bit patterns would as 256-bit integers.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubsetMask {
    order: u16,
    words: [u64; WORDS],
}

impl SubsetMask {
    pub fn empty(order: usize) -> Self {
        assert!(order <= crate::MAX_ORDER, "order {order} too large");
        SubsetMask { order: order as u16, words: [0; WORDS] }
    }

    pub fn full(order: usize) -> Self {
        let mut s = Self::empty(order);
        for x in 0..order {
            s.insert(x);
        }
        s
    }

    pub fn singleton(order: usize, x: usize) -> Self {
        let mut s = Self::empty(order);
        s.insert(x);
        s
    }

    /// Panics if an element is `>= order`.
    pub fn from_elements<I: IntoIterator<Item = usize>>(order: usize, elements: I) -> Self {
        let mut s = Self::empty(order);
        for x in elements {
            s.insert(x);
        }
        s
    }

    /// Set whose members are the set bits of `bits` (bit `i` is element `i`).
    /// Only the first 64 elements can be addressed this way.
    pub fn from_bits(order: usize, bits: u64) -> Self {
        let mut s = Self::empty(order);
        for x in 0..order.min(64) {
            if bits >> x & 1 == 1 {
                s.insert(x);
            }
        }
        s
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order as usize
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.order() && self.words[x / 64] >> (x % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, x: usize) -> bool {
        assert!(x < self.order(), "element {x} out of range for order {}", self.order);
        let was = self.contains(x);
        self.words[x / 64] |= 1 << (x % 64);
        !was
    }

    #[inline]
    pub fn remove(&mut self, x: usize) -> bool {
        let was = self.contains(x);
        if was {
            self.words[x / 64] &= !(1 << (x % 64));
        }
        was
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.order()
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter { set: self, word: 0, bits: self.words[0] }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Self {
        Self::full(self.order()).difference(self)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Members strictly below `bound`.
    pub fn below(&self, bound: usize) -> Self {
        let mut out = *self;
        for (w, word) in out.words.iter_mut().enumerate() {
            let lo = w * 64;
            if bound <= lo {
                *word = 0;
            } else if bound < lo + 64 {
                *word &= (1u64 << (bound - lo)) - 1;
            }
        }
        out
    }

    /// Image of the set under an element map.
    pub fn map<F: Fn(usize) -> usize>(&self, f: F) -> Self {
        let mut out = Self::empty(self.order());
        for x in self.iter() {
            out.insert(f(x));
        }
        out
    }

    fn zip(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        debug_assert_eq!(self.order, other.order);
        let mut words = [0; WORDS];
        for (i, w) in words.iter_mut().enumerate() {
            *w = f(self.words[i], other.words[i]);
        }
        SubsetMask { order: self.order, words }
    }
}

impl PartialOrd for SubsetMask {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SubsetMask {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.order.cmp(&other.order).then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

pub struct Iter<'a> {
    set: &'a SubsetMask,
    word: usize,
    bits: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let tz = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.word * 64 + tz);
            }
            self.word += 1;
            if self.word >= WORDS {
                return None;
            }
            self.bits = self.set.words[self.word];
        }
    }
}

impl<'a> IntoIterator for &'a SubsetMask {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Comma-separated members, e.g. `0,3,6`; the empty set prints as nothing.
impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn insert_iterate_across_words() {
        let s = SubsetMask::from_elements(200, [0, 63, 64, 130, 199]);
        assert_eq!(s.iter().collect::<Vec<_>>(), [0, 63, 64, 130, 199]);
        assert_eq!(s.len(), 5);
        assert!(s.contains(130) && !s.contains(131));
    }

    #[test]
    fn below_masks_prefix() {
        let s = SubsetMask::full(100);
        assert_eq!(s.below(70).len(), 70);
        assert_eq!(s.below(0).len(), 0);
        assert_eq!(s.below(64).len(), 64);
    }

    #[test]
    fn set_algebra() {
        let a = SubsetMask::from_elements(5, [0, 1, 2]);
        let b = SubsetMask::from_elements(5, [2, 3]);
        assert_eq!(a.union(&b).len(), 4);
        assert_eq!(a.intersection(&b), SubsetMask::singleton(5, 2));
        assert_eq!(a.complement(), SubsetMask::from_elements(5, [3, 4]));
        assert!(!a.is_disjoint(&b));
        assert!(SubsetMask::empty(5).is_subset(&a));
        assert_eq!(alloc::format!("{a}"), "0,1,2");
    }

    #[test]
    #[should_panic]
    fn insert_out_of_range_panics() {
        SubsetMask::empty(3).insert(3);
    }
}
