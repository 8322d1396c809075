//! Groups and the K-loops built from them.

use alloc::vec::Vec;

use crate::loops::{make_loop, LoopStructure};
use crate::table::CayleyTable;
use crate::{Error, Result};

/// A group table with identity `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    table: CayleyTable,
    inv: Vec<usize>,
}

impl GroupTable {
    /// Validates associativity, identity and inverses; relabels the identity to `0`.
    pub fn new(t: &CayleyTable) -> Result<Self> {
        let table = t.canonicalize().map_err(|_| Error::NotAGroup("no identity"))?;
        if !table.is_associative() {
            return Err(Error::NotAGroup("not associative"));
        }
        let n = table.order();
        let mut inv = Vec::with_capacity(n);
        for x in 0..n {
            match (0..n).find(|&y| table.get(x, y) == 0 && table.get(y, x) == 0) {
                Some(y) => inv.push(y),
                None => return Err(Error::NotAGroup("missing inverse")),
            }
        }
        Ok(GroupTable { table, inv })
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table.get(x, y)
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    pub fn is_abelian(&self) -> bool {
        self.table.is_commutative()
    }

    /// Inverse of squaring, if squaring is a bijection.
    fn square_root(&self) -> Option<Vec<usize>> {
        let n = self.order();
        let mut root = alloc::vec![usize::MAX; n];
        for x in 0..n {
            let sq = self.mul(x, x);
            if root[sq] != usize::MAX {
                return None;
            }
            root[sq] = x;
        }
        Some(root)
    }
}

/// `Z/n`.
pub fn cyclic_group(n: usize) -> Result<GroupTable> {
    GroupTable::new(&CayleyTable::from_fn(n, |x, y| (x + y) % n)?)
}

/// `Z/n` as a K-loop; `n` must be odd.
pub fn cyclic_kloop(n: usize) -> Result<LoopStructure> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenOrder(n));
    }
    make_loop(&CayleyTable::from_fn(n, |x, y| (x + y) % n)?)
}

/// The half-sandwich loop `x+y = x^{1/2} y x^{1/2}`.
pub fn kloop_from_group(g: &GroupTable) -> Result<LoopStructure> {
    let root = g.square_root().ok_or(Error::NotTwoDivisibleGroup)?;
    let t = CayleyTable::from_fn(g.order(), |x, y| g.mul(g.mul(root[x], y), root[x]))?;
    make_loop(&t)
}

/// The half-sandwich loop on `X = { α(g)g⁻¹ }` for an involutive automorphism
/// `α`, together with the map from loop indices to group elements.
///
/// Loop index `i` is the `i`-th smallest element of `X`, so the group
/// identity becomes loop element `0`.
pub fn kloop_from_involution(g: &GroupTable, alpha: &[usize]) -> Result<(LoopStructure, Vec<usize>)> {
    let n = g.order();
    if alpha.len() != n || alpha.iter().any(|&y| y >= n) {
        return Err(Error::NotAutomorphism);
    }
    let mut hit = alloc::vec![false; n];
    for &y in alpha {
        if core::mem::replace(&mut hit[y], true) {
            return Err(Error::NotAutomorphism);
        }
    }
    if (0..n).any(|x| (0..n).any(|y| alpha[g.mul(x, y)] != g.mul(alpha[x], alpha[y]))) {
        return Err(Error::NotAutomorphism);
    }
    if (0..n).any(|x| alpha[alpha[x]] != x) {
        return Err(Error::NotInvolutive);
    }

    let mut members: Vec<usize> = (0..n).map(|x| g.mul(alpha[x], g.inv(x))).collect();
    members.sort_unstable();
    members.dedup();
    debug_assert!(members.iter().all(|&x| alpha[x] == g.inv(x)));
    let mut index = alloc::vec![usize::MAX; n];
    for (i, &x) in members.iter().enumerate() {
        index[x] = i;
    }

    let k = members.len();
    let mut root = alloc::vec![usize::MAX; n];
    for &x in &members {
        let sq = g.mul(x, x);
        if index[sq] == usize::MAX || root[sq] != usize::MAX {
            return Err(Error::NotTwoDivisibleSet);
        }
        root[sq] = x;
    }

    let mut entries = Vec::with_capacity(k * k);
    for &x in &members {
        let r = root[x];
        for &y in &members {
            let z = g.mul(g.mul(r, y), r);
            if index[z] == usize::MAX {
                return Err(Error::NotClosed { x, y });
            }
            entries.push(index[z]);
        }
    }
    let l = make_loop(&CayleyTable::new(k, entries)?)?;
    Ok((l, members))
}

/// Upper unitriangular 3x3 matrices over `Z/3`: triples `(a,b,c)` with
/// `(a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')`, indexed `9a+3b+c`.
pub fn heisenberg27() -> GroupTable {
    let dec = |x: usize| (x / 9, x / 3 % 3, x % 3);
    let t = CayleyTable::from_fn(27, |x, y| {
        let ((a, b, c), (a2, b2, c2)) = (dec(x), dec(y));
        9 * ((a + a2) % 3) + 3 * ((b + b2) % 3) + (c + c2 + a * b2) % 3
    })
    .expect("entries in range");
    GroupTable::new(&t).expect("Heisenberg group")
}

/// The wreath product `Z3 ≀ Z3` (order 81, nilpotent of class 3):
/// pairs `(v, k)` with `v ∈ (Z/3)^3`, `(v,k)(w,l) = (v + shift_k(w), k+l)`,
/// indexed `27k + 9v0 + 3v1 + v2`. Its half-sandwich loop is not associative.
pub fn wreath_z3_z3() -> GroupTable {
    let dec = |x: usize| (x / 27, [x / 9 % 3, x / 3 % 3, x % 3]);
    let t = CayleyTable::from_fn(81, |x, y| {
        let ((k, v), (l, w)) = (dec(x), dec(y));
        let u: Vec<usize> = (0..3).map(|i| (v[i] + w[(i + 3 - k) % 3]) % 3).collect();
        27 * ((k + l) % 3) + 9 * u[0] + 3 * u[1] + u[2]
    })
    .expect("entries in range");
    GroupTable::new(&t).expect("wreath product")
}

/// Componentwise operation on pairs, `(i, j)` stored at `i * |L2| + j`.
pub fn direct_product(l1: &LoopStructure, l2: &LoopStructure) -> LoopStructure {
    let m = l2.order();
    let t = CayleyTable::from_fn(l1.order() * m, |x, y| l1.add(x / m, y / m) * m + l2.add(x % m, y % m))
        .expect("product order within bounds");
    let p = make_loop(&t).expect("product of loops is a loop");
    debug_assert_eq!(p.is_kloop(), l1.is_kloop() && l2.is_kloop());
    debug_assert_eq!(
        p.is_uniquely_2_divisible(),
        l1.is_uniquely_2_divisible() && l2.is_uniquely_2_divisible()
    );
    p
}
