//! Validated loops and the Bol / automorphic-inverse / 2-divisibility axioms.

use alloc::vec::Vec;

use crate::morphism::{self, Search};
use crate::perm::Permutation;
use crate::subset::SubsetMask;
use crate::table::CayleyTable;
use crate::{Error, Result};

/// A loop with identity `0`, its division tables and cached axiom flags.
///
/// Construct with [`make_loop`]. Inputs whose identity is not `0` are
/// relabeled by swapping the identity with `0`; the relabeling is kept.
#[derive(Clone, Debug)]
pub struct LoopStructure {
    table: CayleyTable,
    relabeling: Vec<usize>,
    ldiv: Vec<u8>,
    rdiv: Vec<u8>,
    left_inv: Vec<u8>,
    right_inv: Vec<u8>,
    half: Option<Vec<u8>>,
    flags: LoopFlags,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LoopFlags {
    pub two_sided_inverses: bool,
    pub bol: bool,
    pub aip: bool,
    pub u2d: bool,
}

impl LoopFlags {
    pub fn kloop(&self) -> bool {
        self.bol && self.aip
    }
}

/// Validates `t` as a loop and computes every flag exhaustively.
pub fn make_loop(t: &CayleyTable) -> Result<LoopStructure> {
    if let Some(err) = t.latin_violation() {
        return Err(err);
    }
    let (table, relabeling) = t.canonicalize_with_relabeling()?;
    Ok(LoopStructure::from_canonical(table, relabeling))
}

impl LoopStructure {
    fn from_canonical(table: CayleyTable, relabeling: Vec<usize>) -> Self {
        let n = table.order();
        let mut ldiv = alloc::vec![0u8; n * n];
        let mut rdiv = alloc::vec![0u8; n * n];
        for a in 0..n {
            for y in 0..n {
                let b = table.get(a, y);
                ldiv[a * n + b] = y as u8;
                rdiv[y * n + b] = a as u8;
            }
        }
        // x + a = 0 and a + y = 0
        let left_inv: Vec<u8> = (0..n).map(|a| rdiv[a * n]).collect();
        let right_inv: Vec<u8> = (0..n).map(|a| ldiv[a * n]).collect();
        let two_sided_inverses = left_inv == right_inv;

        let mut l = LoopStructure {
            table,
            relabeling,
            ldiv,
            rdiv,
            left_inv,
            right_inv,
            half: None,
            flags: LoopFlags { two_sided_inverses, bol: false, aip: false, u2d: false },
        };
        l.flags.bol = l.bol_witness().is_none();
        l.flags.aip = l.aip_witness().is_none();
        l.half = l.compute_half();
        l.flags.u2d = l.half.is_some();
        l
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.table.order()
    }

    /// Always `0`.
    pub fn identity(&self) -> usize {
        0
    }

    /// Input label -> label in this structure.
    pub fn relabeling(&self) -> &[usize] {
        &self.relabeling
    }

    pub fn flags(&self) -> LoopFlags {
        self.flags
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.table.get(x, y)
    }

    /// The unique `y` with `a + y = b`.
    #[inline]
    pub fn ldiv(&self, a: usize, b: usize) -> usize {
        self.ldiv[a * self.order() + b] as usize
    }

    /// The unique `x` with `x + a = b`.
    #[inline]
    pub fn rdiv(&self, b: usize, a: usize) -> usize {
        self.rdiv[a * self.order() + b] as usize
    }

    pub fn left_inverse(&self, a: usize) -> usize {
        self.left_inv[a] as usize
    }

    pub fn right_inverse(&self, a: usize) -> usize {
        self.right_inv[a] as usize
    }

    /// `-a`, available when left and right inverses agree for every element
    /// (always the case in Bol loops).
    pub fn neg(&self, a: usize) -> Option<usize> {
        self.flags.two_sided_inverses.then(|| self.left_inv[a] as usize)
    }

    /// Left inverse; the two-sided inverse wherever the loop has one.
    #[inline]
    pub(crate) fn inv(&self, a: usize) -> usize {
        self.left_inv[a] as usize
    }

    pub fn is_bol(&self) -> bool {
        self.flags.bol
    }

    pub fn is_aip(&self) -> bool {
        self.flags.aip
    }

    pub fn is_kloop(&self) -> bool {
        self.flags.kloop()
    }

    pub fn is_uniquely_2_divisible(&self) -> bool {
        self.flags.u2d
    }

    pub fn is_associative(&self) -> bool {
        self.table.is_associative()
    }

    pub fn is_commutative(&self) -> bool {
        self.table.is_commutative()
    }

    /// First `(a, b, c)` with `a+(b+(a+c)) != (a+(b+a))+c`.
    pub fn bol_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.order();
        for a in 0..n {
            for b in 0..n {
                let aba = self.add(a, self.add(b, a));
                for c in 0..n {
                    if self.add(a, self.add(b, self.add(a, c))) != self.add(aba, c) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// First `(a, b)` with `-(a+b) != -a-b`. One-sided inverses fail at the
    /// first element whose inverses differ, reported as `(a, a)`.
    pub fn aip_witness(&self) -> Option<(usize, usize)> {
        let n = self.order();
        if let Some(a) = (0..n).find(|&a| self.left_inv[a] != self.right_inv[a]) {
            return Some((a, a));
        }
        for a in 0..n {
            for b in 0..n {
                if self.inv(self.add(a, b)) != self.add(self.inv(a), self.inv(b)) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    fn compute_half(&self) -> Option<Vec<u8>> {
        let n = self.order();
        let mut half = alloc::vec![u8::MAX; n];
        let mut seen = alloc::vec![false; n];
        for y in 0..n {
            let d = self.add(y, y);
            if core::mem::replace(&mut seen[d], true) {
                return None;
            }
            half[d] = y as u8;
        }
        Some(half)
    }

    /// The unique `y` with `y + y = x`.
    pub fn half(&self, x: usize) -> Result<usize> {
        match &self.half {
            Some(h) => Ok(h[x] as usize),
            None => Err(Error::NotTwoDivisible),
        }
    }

    /// `a·n`, by left accumulation `a·(k+1) = a + a·k`, with
    /// `a·(-k) = (-a)·k`.
    ///
    /// Fails with `PowerAmbiguous` when right accumulation gives a different
    /// element, or when a negative exponent meets one-sided inverses.
    pub fn power(&self, a: usize, n: i64) -> Result<usize> {
        let base = if n < 0 {
            if self.left_inv[a] != self.right_inv[a] {
                return Err(Error::PowerAmbiguous { element: a, exponent: n });
            }
            self.inv(a)
        } else {
            a
        };
        let k = n.unsigned_abs();
        let (mut left, mut right) = (0, 0);
        for _ in 0..k {
            left = self.add(base, left);
            right = self.add(right, base);
        }
        if left != right {
            return Err(Error::PowerAmbiguous { element: a, exponent: n });
        }
        Ok(left)
    }

    /// Left-accumulated power, reduced by the element order. Use only where
    /// powers are known to be well defined (Bol loops).
    pub(crate) fn power_unchecked(&self, a: usize, n: i64) -> usize {
        let (base, k) = if n < 0 { (self.inv(a), n.unsigned_abs()) } else { (a, n as u64) };
        let k = k % self.element_order(base) as u64;
        (0..k).fold(0, |acc, _| self.add(base, acc))
    }

    /// Least `k > 0` with `a·k = 0` (the length of the orbit of `0` under
    /// left translation by `a`).
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = self.add(a, 0);
        let mut k = 1;
        while x != 0 {
            x = self.add(a, x);
            k += 1;
        }
        k
    }

    /// Closure of `seed ∪ {0}` under `+`; a subloop since the carrier is finite.
    pub(crate) fn plus_closure(&self, seed: &SubsetMask) -> SubsetMask {
        let mut set = *seed;
        set.insert(0);
        let mut members: Vec<usize> = set.iter().collect();
        let mut i = 0;
        while i < members.len() {
            let z = members[i];
            for j in 0..=i {
                let w = members[j];
                for s in [self.add(z, w), self.add(w, z)] {
                    if set.insert(s) {
                        members.push(s);
                    }
                }
            }
            i += 1;
        }
        set
    }

    /// Does `f` preserve `+` on this loop?
    pub fn is_endomorphism(&self, f: &Permutation) -> bool {
        let n = self.order();
        f.len() == n
            && (0..n).all(|x| (0..n).all(|y| f.apply(self.add(x, y)) == self.add(f.apply(x), f.apply(y))))
    }

    /// Every automorphism, in lexicographic order of images.
    pub fn automorphisms(&self, cap: usize) -> Result<Vec<Permutation>> {
        let mut out = Vec::new();
        let mut overflow = false;
        Search::new(self, self).run(|map| {
            if out.len() == cap {
                overflow = true;
                return morphism::Flow::Stop;
            }
            out.push(Permutation::from_fn_unchecked(map.len(), |x| map[x]));
            morphism::Flow::Continue
        });
        if overflow {
            return Err(Error::CapExceeded { cap });
        }
        out.sort_unstable();
        Ok(out)
    }

    /// For every involutive automorphism fixing only `0`, checks that it is
    /// negation. Vacuously true when there is none.
    pub fn check_involutive_fpf_is_neg(&self, cap: usize) -> Result<bool> {
        if !self.is_kloop() || !self.is_uniquely_2_divisible() {
            return Err(Error::Precondition("uniquely 2-divisible K-loop required"));
        }
        let n = self.order();
        for eps in self.automorphisms(cap)? {
            let involutive = (0..n).all(|x| eps.apply(eps.apply(x)) == x);
            let fpf = eps.fixed_points().all(|x| x == 0);
            if involutive && fpf && (0..n).any(|x| eps.apply(x) != self.inv(x)) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl PartialEq for LoopStructure {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}

impl Eq for LoopStructure {}
