//! Permutations of a finite carrier and generator closure.

use alloc::collections::VecDeque;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::HashSet;

use crate::{Error, Result, MAX_ORDER};

/// A bijection of `0..n`, stored as its image sequence.
///
/// Permutations order lexicographically by image.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_ORDER);
        Permutation { image: (0..n).map(|x| x as u8).collect() }
    }

    pub fn from_images(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { order: n, bound: MAX_ORDER });
        }
        let mut seen = alloc::vec![false; n];
        for &x in &image {
            if x >= n || core::mem::replace(&mut seen[x], true) {
                return Err(Error::NotPermutation);
            }
        }
        Ok(Permutation { image: image.into_iter().map(|x| x as u8).collect() })
    }

    /// Caller guarantees `f` is a bijection of `0..n`; checked in debug builds.
    pub(crate) fn from_fn_unchecked(n: usize, f: impl Fn(usize) -> usize) -> Self {
        let p = Permutation { image: (0..n).map(|x| f(x) as u8).collect() };
        debug_assert!(p.is_bijection());
        p
    }

    fn is_bijection(&self) -> bool {
        let mut seen = alloc::vec![false; self.len()];
        self.image.iter().all(|&x| !core::mem::replace(&mut seen[x as usize], true))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.image.iter().map(|&x| x as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self ∘ rhs`: apply `rhs` first.
    pub fn compose(&self, rhs: &Permutation) -> Permutation {
        debug_assert_eq!(self.len(), rhs.len());
        Permutation { image: rhs.image.iter().map(|&x| self.image[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = alloc::vec![0u8; self.len()];
        for (x, &y) in self.image.iter().enumerate() {
            image[y as usize] = x as u8;
        }
        Permutation { image }
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.image.iter().enumerate().filter(|(i, &x)| *i == x as usize).map(|(i, _)| i)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.image)
    }
}

/// Cycle notation, fixed points omitted; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = alloc::vec![false; self.len()];
        let mut any = false;
        for start in 0..self.len() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            any = true;
            f.write_str("(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
                first = false;
                x = self.apply(x);
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

/// The closure of a generator list under composition.
#[derive(Clone, Debug)]
pub struct GeneratedGroup {
    generators: Vec<Permutation>,
    /// Sorted ascending.
    elements: Vec<Permutation>,
    complete: bool,
    cap: usize,
}

impl GeneratedGroup {
    /// Breadth-first closure; stops with `complete() == false` once more than
    /// `cap` elements would be needed. Duplicate generators are dropped
    /// (first occurrence kept).
    ///
    /// Panics if generators have different lengths.
    pub fn close(generators: &[Permutation], n: usize, cap: usize) -> Self {
        assert!(generators.iter().all(|g| g.len() == n), "generators of mixed order");
        let mut gens: Vec<Permutation> = Vec::new();
        {
            let mut seen = HashSet::new();
            for g in generators {
                if !g.is_identity() && seen.insert(g.clone()) {
                    gens.push(g.clone());
                }
            }
        }

        let id = Permutation::identity(n);
        let mut set: HashSet<Permutation> = HashSet::new();
        let mut queue = VecDeque::new();
        set.insert(id.clone());
        queue.push_back(id);
        let mut complete = true;
        'bfs: while let Some(p) = queue.pop_front() {
            for g in &gens {
                let q = g.compose(&p);
                if set.contains(&q) {
                    continue;
                }
                if set.len() >= cap {
                    complete = false;
                    break 'bfs;
                }
                set.insert(q.clone());
                queue.push_back(q);
            }
        }
        let mut elements: Vec<Permutation> = set.into_iter().collect();
        elements.sort_unstable();
        GeneratedGroup { generators: gens, elements, complete, cap }
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Elements in lexicographic order of their images.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }
}

/// Closure of `generators` on a carrier of size `n`; fails once the group
/// would exceed `cap` elements. Use [`GeneratedGroup::close`] for the partial set.
pub fn closure(generators: &[Permutation], n: usize, cap: usize) -> Result<GeneratedGroup> {
    if let Some(g) = generators.iter().find(|g| g.len() != n) {
        return Err(Error::OrderMismatch { left: n, right: g.len() });
    }
    let group = GeneratedGroup::close(generators, n, cap);
    if group.is_complete() {
        Ok(group)
    } else {
        Err(Error::CapExceeded { cap })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::vec;

    fn cycle(n: usize) -> Permutation {
        Permutation::from_images((0..n).map(|x| (x + 1) % n).collect()).unwrap()
    }

    #[test]
    fn compose_applies_right_first() {
        let a = Permutation::from_images(vec![1, 0, 2]).unwrap();
        let b = Permutation::from_images(vec![0, 2, 1]).unwrap();
        // a∘b: 0 -> b 0 -> a 1; 1 -> b 2 -> a 2; 2 -> b 1 -> a 0.
        assert_eq!(a.compose(&b), Permutation::from_images(vec![1, 2, 0]).unwrap());
        assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn rejects_non_bijection() {
        assert_eq!(Permutation::from_images(vec![0, 0]), Err(Error::NotPermutation));
        assert_eq!(Permutation::from_images(vec![2, 0]), Err(Error::NotPermutation));
    }

    #[test]
    fn closure_of_identity_is_trivial() {
        let g = closure(&[Permutation::identity(4)], 4, 10).unwrap();
        assert_eq!(g.size(), 1);
        assert!(g.is_complete());
    }

    #[test]
    fn closure_of_cycle_and_transposition_is_symmetric_group() {
        let t = Permutation::from_images(vec![1, 0, 2, 3]).unwrap();
        let g = closure(&[cycle(4), t], 4, 100).unwrap();
        assert_eq!(g.size(), 24);
        assert!(g.elements().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn closure_respects_cap() {
        let t = Permutation::from_images(vec![1, 0, 2, 3, 4]).unwrap();
        assert!(matches!(closure(&[cycle(5), t.clone()], 5, 119), Err(Error::CapExceeded { cap: 119 })));
        let partial = GeneratedGroup::close(&[cycle(5), t], 5, 50);
        assert!(!partial.is_complete());
        assert_eq!(partial.size(), 50);
    }

    #[test]
    fn cycle_notation() {
        let p = Permutation::from_images(vec![1, 2, 0, 3, 5, 4]).unwrap();
        assert_eq!(format!("{p}"), "(0 1 2)(4 5)");
        assert_eq!(format!("{}", Permutation::identity(3)), "()");
    }
}
