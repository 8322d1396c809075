//! Subloops, normality, quotients, morphisms and centralizers.

use alloc::vec;
use alloc::vec::Vec;

use crate::closed_sets;
use crate::loops::{make_loop, LoopStructure};
use crate::mlt::inner_generators;
use crate::morphism;
use crate::subset::SubsetMask;
use crate::table::CayleyTable;
use crate::{Error, Result};

/// Least superset of `seed ∪ {0}` closed under `+` and `-`.
pub fn subloop_closure(l: &LoopStructure, seed: &SubsetMask) -> SubsetMask {
    let mut set = *seed;
    set.insert(0);
    let mut members: Vec<usize> = set.iter().collect();
    let mut i = 0;
    while i < members.len() {
        let z = members[i];
        let mut fresh = vec![l.inv(z)];
        for &w in &members[..=i] {
            fresh.push(l.add(z, w));
            fresh.push(l.add(w, z));
        }
        for x in fresh {
            if set.insert(x) {
                members.push(x);
            }
        }
        i += 1;
    }
    set
}

/// `0 ∈ c` and `c` is closed under `+` and `-`.
pub fn is_subloop(l: &LoopStructure, c: &SubsetMask) -> bool {
    c.contains(0) && c.iter().all(|x| c.contains(l.inv(x)) && c.iter().all(|y| c.contains(l.add(x, y))))
}

/// `c` is mapped into itself by every inner generator.
pub fn is_normal(l: &LoopStructure, c: &SubsetMask) -> bool {
    inner_generators(l).iter().all(|p| c.iter().all(|x| c.contains(p.apply(x))))
}

/// `b+C = C+b`, `(a+b)+C = a+(b+C)` and `C+(a+b) = (C+a)+b` for all `a, b`.
pub fn is_normal_by_cosets(l: &LoopStructure, c: &SubsetMask) -> bool {
    let n = l.order();
    let left = |a: usize, set: &SubsetMask| set.map(|x| l.add(a, x));
    let right = |set: &SubsetMask, a: usize| set.map(|x| l.add(x, a));
    let lc: Vec<SubsetMask> = (0..n).map(|a| left(a, c)).collect();
    let rc: Vec<SubsetMask> = (0..n).map(|a| right(c, a)).collect();
    (0..n).all(|b| lc[b] == rc[b])
        && (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = l.add(a, b);
                lc[ab] == left(a, &lc[b]) && rc[ab] == right(&rc[a], b)
            })
        })
}

#[derive(Clone, Debug)]
pub struct QuotientResult {
    /// Cosets `x+C`, ordered by smallest member; `blocks[0] == C`.
    pub blocks: Vec<SubsetMask>,
    pub table: CayleyTable,
    /// Element -> block index.
    pub projection: Vec<usize>,
}

impl QuotientResult {
    pub fn to_loop(&self) -> LoopStructure {
        make_loop(&self.table).expect("quotient table is a loop")
    }
}

/// Quotient by a normal subloop, with the induced operation checked to be
/// well defined on every pair.
pub fn quotient(l: &LoopStructure, c: &SubsetMask) -> Result<QuotientResult> {
    let n = l.order();
    if !c.contains(0) {
        return Err(Error::NotNormal);
    }
    let mut blocks: Vec<SubsetMask> = Vec::new();
    let mut projection = alloc::vec![usize::MAX; n];
    for x in 0..n {
        if projection[x] != usize::MAX {
            continue;
        }
        let coset = c.map(|y| l.add(x, y));
        if coset.iter().any(|y| projection[y] != usize::MAX) {
            return Err(Error::NotNormal);
        }
        for y in coset.iter() {
            projection[y] = blocks.len();
        }
        blocks.push(coset);
    }
    // Every coset x+C, not just the chosen representatives, must be a block.
    for x in 0..n {
        if c.map(|y| l.add(x, y)) != blocks[projection[x]] {
            return Err(Error::NotNormal);
        }
    }
    let k = blocks.len();
    let mut op = alloc::vec![usize::MAX; k * k];
    for x in 0..n {
        for y in 0..n {
            let (bx, by) = (projection[x], projection[y]);
            let bz = projection[l.add(x, y)];
            let slot = &mut op[bx * k + by];
            if *slot == usize::MAX {
                *slot = bz;
            } else if *slot != bz {
                return Err(Error::NotNormal);
            }
        }
    }
    let table = CayleyTable::new(k, op)?;
    if make_loop(&table).is_err() || table.identity() != Some(0) {
        return Err(Error::NotNormal);
    }
    Ok(QuotientResult { blocks, table, projection })
}

#[derive(Clone, Debug)]
pub struct LoopMorphism<'a> {
    pub source: &'a LoopStructure,
    pub target: &'a LoopStructure,
    pub map: Vec<usize>,
}

impl LoopMorphism<'_> {
    /// `map(0) = 0` and `map(x+y) = map(x)+map(y)` for all pairs.
    pub fn is_homomorphism(&self) -> bool {
        let (s, t) = (self.source, self.target);
        let n = s.order();
        self.map.len() == n
            && self.map.iter().all(|&y| y < t.order())
            && self.map[0] == 0
            && (0..n).all(|x| (0..n).all(|y| self.map[s.add(x, y)] == t.add(self.map[x], self.map[y])))
    }

    /// Preimage of `0`.
    pub fn kernel(&self) -> SubsetMask {
        SubsetMask::from_elements(self.source.order(), (0..self.source.order()).filter(|&x| self.map[x] == 0))
    }
}

pub fn check_homomorphism(m: &LoopMorphism<'_>) -> bool {
    m.is_homomorphism()
}

pub fn kernel(m: &LoopMorphism<'_>) -> SubsetMask {
    m.kernel()
}

/// An isomorphism `a -> b` as an image vector, or `None`.
pub fn find_isomorphism(a: &LoopStructure, b: &LoopStructure) -> Option<Vec<usize>> {
    morphism::first_isomorphism(a, b)
}

/// `C_B(x) = { b : δ_{x,b} = δ_{-x,b} = Id }`.
pub fn centralizer(l: &LoopStructure, x: usize) -> SubsetMask {
    let nx = l.inv(x);
    SubsetMask::from_elements(
        l.order(),
        (0..l.order()).filter(|&b| l.precession_is_trivial(x, b) && l.precession_is_trivial(nx, b)),
    )
}

/// `Z(C_B(x)) = { b ∈ C_B(x) : δ_{b,b'} = Id for all b' ∈ C_B(x) }`.
pub fn center_of_centralizer(l: &LoopStructure, x: usize) -> SubsetMask {
    let c = centralizer(l, x);
    SubsetMask::from_elements(
        l.order(),
        c.iter().filter(|&b| c.iter().all(|b2| l.precession_is_trivial(b, b2))),
    )
}

/// `c` is a subloop on which `+` is commutative and associative.
pub fn is_abelian_subloop(l: &LoopStructure, c: &SubsetMask) -> bool {
    is_subloop(l, c)
        && c.iter().all(|x| {
            c.iter().all(|y| {
                l.add(x, y) == l.add(y, x) && c.iter().all(|z| l.add(x, l.add(y, z)) == l.add(l.add(x, y), z))
            })
        })
}

/// Every inner generator (hence every inner mapping) is an automorphism.
pub fn is_automorphic(l: &LoopStructure) -> bool {
    let mut gens = inner_generators(l);
    gens.sort_unstable();
    gens.dedup();
    gens.iter().all(|p| l.is_endomorphism(p))
}

/// Every subloop, in lectic order. Requires a Bol loop.
pub fn enumerate_subloops(l: &LoopStructure, cap: usize) -> Result<Vec<SubsetMask>> {
    if !l.is_bol() {
        return Err(Error::Precondition("Bol loop required"));
    }
    closed_sets::enumerate(l.order(), cap, |s| subloop_closure(l, s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: usize) -> LoopStructure {
        make_loop(&CayleyTable::from_fn(n, |x, y| (x + y) % n).unwrap()).unwrap()
    }

    fn set(n: usize, xs: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(n, xs.iter().copied())
    }

    #[test]
    fn closure_examples() {
        let z5 = zn(5);
        assert!(subloop_closure(&z5, &set(5, &[1])).is_full());
        assert_eq!(subloop_closure(&z5, &SubsetMask::empty(5)), set(5, &[0]));
    }

    #[test]
    fn subloop_predicate() {
        assert!(is_subloop(&zn(5), &set(5, &[0])));
        assert!(!is_subloop(&zn(5), &set(5, &[0, 1])));
        assert!(is_subloop(&zn(9), &set(9, &[0, 3, 6])));
        assert!(!is_subloop(&zn(9), &set(9, &[3, 6])));
    }

    #[test]
    fn normality_in_abelian_groups() {
        let z9 = zn(9);
        for c in [set(9, &[0]), set(9, &[0, 3, 6]), SubsetMask::full(9)] {
            assert!(is_normal(&z9, &c));
            assert!(is_normal_by_cosets(&z9, &c));
        }
    }

    #[test]
    fn z9_mod_three() {
        let z9 = zn(9);
        let c = set(9, &[0, 3, 6]);
        let q = quotient(&z9, &c).unwrap();
        assert_eq!(q.blocks.len(), 3);
        assert_eq!(q.blocks[0], c);
        let z3 = zn(3);
        assert!(find_isomorphism(&q.to_loop(), &z3).is_some());
        let qloop = q.to_loop();
        let proj = LoopMorphism { source: &z9, target: &qloop, map: q.projection.clone() };
        assert!(check_homomorphism(&proj));
        assert_eq!(kernel(&proj), c);
    }

    #[test]
    fn trivial_quotients() {
        let z5 = zn(5);
        let by_zero = quotient(&z5, &set(5, &[0])).unwrap();
        assert!(find_isomorphism(&by_zero.to_loop(), &z5).is_some());
        let by_all = quotient(&z5, &SubsetMask::full(5)).unwrap();
        assert_eq!(by_all.table.order(), 1);
    }

    #[test]
    fn quotient_rejects_non_subloops() {
        assert!(matches!(quotient(&zn(5), &set(5, &[0, 1])), Err(Error::NotNormal)));
    }

    #[test]
    fn morphism_examples() {
        let z5 = zn(5);
        let id = LoopMorphism { source: &z5, target: &z5, map: (0..5).collect() };
        assert!(check_homomorphism(&id));
        assert_eq!(kernel(&id), set(5, &[0]));
        let shift = LoopMorphism { source: &z5, target: &z5, map: (0..5).map(|x| (x + 1) % 5).collect() };
        assert!(!check_homomorphism(&shift));
    }

    #[test]
    fn isomorphism_with_relabeling() {
        let z5 = zn(5);
        // Relabel by x -> 3x (keeps 0 fixed).
        let relabeled = make_loop(&z5.table().relabel(&[0, 3, 1, 4, 2]).unwrap()).unwrap();
        let map = find_isomorphism(&z5, &relabeled).unwrap();
        let m = LoopMorphism { source: &z5, target: &relabeled, map };
        assert!(m.is_homomorphism());
    }

    #[test]
    fn subloop_lattices() {
        assert_eq!(enumerate_subloops(&zn(5), 100).unwrap(), [set(5, &[0]), SubsetMask::full(5)]);
        let mut z9 = enumerate_subloops(&zn(9), 100).unwrap();
        z9.sort_by_key(|s| s.len());
        assert_eq!(z9, [set(9, &[0]), set(9, &[0, 3, 6]), SubsetMask::full(9)]);
    }

    #[test]
    fn centralizers_in_abelian_group() {
        let z5 = zn(5);
        for x in 0..5 {
            assert!(centralizer(&z5, x).is_full());
            assert!(center_of_centralizer(&z5, x).is_full());
        }
        assert!(is_automorphic(&z5));
        assert!(is_abelian_subloop(&z5, &SubsetMask::full(5)));
        assert!(!is_abelian_subloop(&z5, &set(5, &[0, 1])));
        assert!(is_automorphic(&zn(1)));
    }
}
