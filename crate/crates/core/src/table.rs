//! Raw binary-operation tables.

use alloc::vec::Vec;

use crate::{Error, Result, MAX_ORDER};

/// An `n x n` operation table over `0..n`. Row is the left operand:
/// `get(x, y)` is `x ∘ y`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CayleyTable {
    order: usize,
    entries: Vec<u8>,
}

impl CayleyTable {
    /// Builds a table from row-major entries.
    pub fn new(order: usize, entries: Vec<usize>) -> Result<Self> {
        if order == 0 || order > MAX_ORDER || entries.len() != order * order {
            return Err(Error::BadShape { order, entries: entries.len() });
        }
        let mut bytes = Vec::with_capacity(entries.len());
        for (i, &value) in entries.iter().enumerate() {
            if value >= order {
                return Err(Error::EntryOutOfRange { row: i / order, col: i % order, value });
            }
            bytes.push(value as u8);
        }
        Ok(CayleyTable { order, entries: bytes })
    }

    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let mut entries = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                entries.push(f(x, y));
            }
        }
        Self::new(order, entries)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.entries[x * self.order + y] as usize
    }

    pub fn row(&self, x: usize) -> &[u8] {
        &self.entries[x * self.order..(x + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u8]> {
        self.entries.chunks(self.order)
    }

    /// The two-sided identity, if any (the smallest one; there is at most one).
    pub fn identity(&self) -> Option<usize> {
        let n = self.order;
        (0..n).find(|&e| (0..n).all(|x| self.get(e, x) == x && self.get(x, e) == x))
    }

    /// First row or column that repeats a value, if any.
    pub fn latin_violation(&self) -> Option<Error> {
        let n = self.order;
        let mut seen = alloc::vec![false; n];
        for x in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for y in 0..n {
                let v = self.get(x, y);
                if core::mem::replace(&mut seen[v], true) {
                    return Some(Error::NotLatin { row: true, index: x });
                }
            }
        }
        for y in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for x in 0..n {
                let v = self.get(x, y);
                if core::mem::replace(&mut seen[v], true) {
                    return Some(Error::NotLatin { row: false, index: y });
                }
            }
        }
        None
    }

    pub fn is_latin(&self) -> bool {
        self.latin_violation().is_none()
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }

    /// First triple `(x, y, z)` with `(x∘y)∘z != x∘(y∘z)`.
    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for x in 0..n {
            for y in 0..n {
                let xy = self.get(x, y);
                for z in 0..n {
                    if self.get(xy, z) != self.get(x, self.get(y, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order;
        (0..n).all(|x| (x + 1..n).all(|y| self.get(x, y) == self.get(y, x)))
    }

    /// Applies the relabeling `perm` (old label -> new label); the result
    /// satisfies `new[perm[x]][perm[y]] = perm[old[x][y]]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order;
        if perm.len() != n {
            return Err(Error::OrderMismatch { left: n, right: perm.len() });
        }
        let mut seen = alloc::vec![false; n];
        for &p in perm {
            if p >= n || core::mem::replace(&mut seen[p], true) {
                return Err(Error::NotPermutation);
            }
        }
        let mut entries = alloc::vec![0u8; n * n];
        for x in 0..n {
            for y in 0..n {
                entries[perm[x] * n + perm[y]] = perm[self.get(x, y)] as u8;
            }
        }
        Ok(CayleyTable { order: n, entries })
    }

    /// Moves the identity to index 0 by swapping it with element 0.
    pub fn canonicalize(&self) -> Result<Self> {
        self.canonicalize_with_relabeling().map(|(t, _)| t)
    }

    /// Like [`canonicalize`](Self::canonicalize), also returning the relabeling
    /// (old label -> new label) that was applied.
    pub fn canonicalize_with_relabeling(&self) -> Result<(Self, Vec<usize>)> {
        let e = self.identity().ok_or(Error::NoIdentity)?;
        let mut perm: Vec<usize> = (0..self.order).collect();
        perm.swap(0, e);
        Ok((self.relabel(&perm)?, perm))
    }
}

impl core::fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        writeln!(f, "CayleyTable({})", self.order)?;
        for row in self.rows() {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}
