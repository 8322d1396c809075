//! Symétrons: `s(x,y)` is `x` reflected through `y`, with `s_y(x) = s(x,y)`.
//!
//! On a finite carrier every notion here is decidable by exhaustion. Two
//! degeneracies follow from finiteness: singletons are always convex, so the
//! only indecomposable sets are those with at most one point; and every
//! nonempty set is covered by finitely many translates `s_u s_v X`.

use alloc::vec::Vec;

use crate::closed_sets;
use crate::subset::SubsetMask;
use crate::table::CayleyTable;
use crate::{Error, Result};

/// A validated symétron with its midpoint table: `m(x,y)` is the unique `z`
/// with `s(x,z) = y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymetronStructure {
    table: CayleyTable,
    midpoint: Vec<u8>,
}

/// Checks idempotence, involutivity, self-distributivity and unique midpoints.
pub fn make_symetron(t: &CayleyTable) -> Result<SymetronStructure> {
    let n = t.order();
    let s = |x: usize, y: usize| t.get(x, y);
    if let Some(x) = (0..n).find(|&x| s(x, x) != x) {
        return Err(Error::NotSymetron { axiom: "s(x,x)=x", witness: alloc::vec![x] });
    }
    for x in 0..n {
        for y in 0..n {
            if s(s(x, y), y) != x {
                return Err(Error::NotSymetron { axiom: "s(s(x,y),y)=x", witness: alloc::vec![x, y] });
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let xy = s(x, y);
            for z in 0..n {
                if s(s(x, z), s(y, z)) != s(xy, z) {
                    return Err(Error::NotSymetron {
                        axiom: "s(s(x,z),s(y,z))=s(s(x,y),z)",
                        witness: alloc::vec![x, y, z],
                    });
                }
            }
        }
    }
    let mut midpoint = alloc::vec![u8::MAX; n * n];
    for x in 0..n {
        for z in 0..n {
            let y = s(x, z);
            if midpoint[x * n + y] != u8::MAX {
                return Err(Error::NoUniqueMidpoint { x, y });
            }
            midpoint[x * n + y] = z as u8;
        }
        // Row x is not onto: some y has no midpoint with x.
        if let Some(y) = (0..n).find(|&y| midpoint[x * n + y] == u8::MAX) {
            return Err(Error::NoUniqueMidpoint { x, y });
        }
    }
    Ok(SymetronStructure { table: t.clone(), midpoint })
}

impl SymetronStructure {
    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    #[inline]
    pub fn s(&self, x: usize, y: usize) -> usize {
        self.table.get(x, y)
    }

    #[inline]
    pub fn midpoint(&self, x: usize, y: usize) -> usize {
        self.midpoint[x * self.order() + y] as usize
    }

    /// `s_y(A) = { s(a,y) : a ∈ A }`.
    pub fn reflect_set(&self, a: &SubsetMask, y: usize) -> SubsetMask {
        a.map(|x| self.s(x, y))
    }
}

pub fn is_convex(s: &SymetronStructure, y: &SubsetMask) -> bool {
    y.iter().all(|a| y.iter().all(|b| y.contains(s.s(a, b))))
}

pub fn is_midpoint_closed(s: &SymetronStructure, y: &SubsetMask) -> bool {
    y.iter().all(|a| y.iter().all(|b| y.contains(s.midpoint(a, b))))
}

/// `{ x : s_x(Y) = Y }`.
pub fn symmetrizer(s: &SymetronStructure, y: &SubsetMask) -> SubsetMask {
    sym_between(s, y, y)
}

/// `{ x : s_x(Y) = Z }`.
pub fn sym_between(s: &SymetronStructure, y: &SubsetMask, z: &SubsetMask) -> SubsetMask {
    SubsetMask::from_elements(s.order(), (0..s.order()).filter(|&x| s.reflect_set(y, x) == *z))
}

/// Least convex superset of `y`, saturating under `s` and `m` together.
/// Returns the number of rounds that added points.
pub fn convex_closure(s: &SymetronStructure, y: &SubsetMask) -> (SubsetMask, usize) {
    let mut current = *y;
    let mut steps = 0;
    loop {
        let mut next = current;
        for a in current.iter() {
            for b in current.iter() {
                next.insert(s.s(a, b));
                next.insert(s.midpoint(a, b));
            }
        }
        if next == current {
            return (current, steps);
        }
        current = next;
        steps += 1;
    }
}

/// All convex subsets (including `∅`), in lectic order.
pub fn enumerate_convex(s: &SymetronStructure, cap: usize) -> Result<Vec<SubsetMask>> {
    closed_sets::enumerate(s.order(), cap, |y| convex_closure(s, y).0)
}

/// `s_u(s_v(X))`.
pub fn translate(s: &SymetronStructure, x: &SubsetMask, u: usize, v: usize) -> SubsetMask {
    s.reflect_set(&s.reflect_set(x, v), u)
}

/// Greedy cover of the carrier by translates of a nonempty `x`: each round
/// picks the `(u,v)` with the most new points, ties to the smallest pair.
pub fn cover_by_translates(s: &SymetronStructure, x: &SubsetMask, cap: usize) -> Result<Vec<(usize, usize)>> {
    if x.is_empty() {
        return Err(Error::Precondition("nonempty set required"));
    }
    let n = s.order();
    let translates: Vec<SubsetMask> =
        (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).map(|(u, v)| translate(s, x, u, v)).collect();
    let mut covered = SubsetMask::empty(n);
    let mut chosen = Vec::new();
    while !covered.is_full() {
        if chosen.len() == cap {
            return Err(Error::CapExceeded { cap });
        }
        let (best, gain) = translates
            .iter()
            .enumerate()
            .map(|(i, t)| (i, t.difference(&covered).len()))
            .fold((0, 0), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
        if gain == 0 {
            // Translates never reach some point; impossible in a symétron.
            return Err(Error::Precondition("translates do not cover the carrier"));
        }
        covered = covered.union(&translates[best]);
        chosen.push((best / n, best % n));
    }
    Ok(chosen)
}

/// Closed form: a finite set is indecomposable iff it has at most one point,
/// since distinct singletons are disjoint convex sets.
pub fn is_indecomposable(_s: &SymetronStructure, a: &SubsetMask) -> bool {
    a.len() <= 1
}

/// Singletons for `|A| >= 2`, otherwise `[A]` (or nothing for `∅`).
pub fn decompose_indecomposable(_s: &SymetronStructure, a: &SubsetMask) -> Vec<SubsetMask> {
    match a.len() {
        0 => Vec::new(),
        1 => alloc::vec![*a],
        _ => a.iter().map(|x| SubsetMask::singleton(a.order(), x)).collect(),
    }
}

/// Indecomposability straight from the definition: is there a family of
/// pairwise disjoint convex sets covering `a`, none of which contains `a`?
/// `∅` lies in every set, so no such family exists for it.
pub fn is_indecomposable_by_search(s: &SymetronStructure, a: &SubsetMask, cap: usize) -> Result<bool> {
    if a.is_empty() {
        return Ok(true);
    }
    let convex = enumerate_convex(s, cap)?;
    // Only sets meeting `a` but not containing it can be part of a witness.
    let useful: Vec<SubsetMask> =
        convex.into_iter().filter(|c| !c.is_disjoint(a) && !a.is_subset(c)).collect();
    Ok(!has_disjoint_cover(&useful, a, &SubsetMask::empty(s.order()), &SubsetMask::empty(s.order())))
}

fn has_disjoint_cover(
    family: &[SubsetMask],
    a: &SubsetMask,
    used: &SubsetMask,
    covered: &SubsetMask,
) -> bool {
    let Some(x) = a.difference(covered).first() else {
        return true;
    };
    family
        .iter()
        .filter(|c| c.contains(x) && c.is_disjoint(used))
        .any(|c| has_disjoint_cover(family, a, &used.union(c), &covered.union(&c.intersection(a))))
}

/// Convex closure of the union of `parts`, which must share a point.
pub fn elliptic_generate(
    s: &SymetronStructure,
    parts: &[SubsetMask],
    max_steps: usize,
) -> Result<(SubsetMask, usize)> {
    let n = s.order();
    let common = parts.iter().fold(SubsetMask::full(n), |acc, p| acc.intersection(p));
    if parts.is_empty() || common.is_empty() {
        return Err(Error::Precondition("parts must share a common point"));
    }
    let union = parts.iter().fold(SubsetMask::empty(n), |acc, p| acc.union(p));
    let (hull, steps) = convex_closure(s, &union);
    if steps > max_steps {
        let mut partial = union;
        for _ in 0..max_steps {
            let mut next = partial;
            for a in partial.iter() {
                for b in partial.iter() {
                    next.insert(s.s(a, b));
                    next.insert(s.midpoint(a, b));
                }
            }
            partial = next;
        }
        return Err(Error::StepBudgetExceeded { partial, steps: max_steps });
    }
    Ok((hull, steps))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `s(x,y) = 2y - x mod n`.
    fn affine(n: usize) -> SymetronStructure {
        make_symetron(&CayleyTable::from_fn(n, |x, y| (2 * y + n - x) % n).unwrap()).unwrap()
    }

    fn set(n: usize, xs: &[usize]) -> SubsetMask {
        SubsetMask::from_elements(n, xs.iter().copied())
    }

    #[test]
    fn z5_midpoints() {
        let s = affine(5);
        assert_eq!(s.midpoint(1, 3), 2);
        for x in 0..5 {
            for y in 0..5 {
                assert_eq!(s.midpoint(x, y), s.midpoint(y, x));
                assert_eq!(s.s(x, s.midpoint(x, y)), y);
            }
        }
    }

    #[test]
    fn projection_is_not_a_symetron() {
        let t = CayleyTable::from_fn(3, |x, _| x).unwrap();
        assert!(matches!(make_symetron(&t), Err(Error::NoUniqueMidpoint { .. })));
        let single = make_symetron(&CayleyTable::from_fn(1, |x, _| x).unwrap()).unwrap();
        assert_eq!(single.midpoint(0, 0), 0);
    }

    #[test]
    fn axiom_failures_carry_witnesses() {
        // Z3 addition: s(1,1) = 2.
        let t = CayleyTable::from_fn(3, |x, y| (x + y) % 3).unwrap();
        assert_eq!(make_symetron(&t), Err(Error::NotSymetron { axiom: "s(x,x)=x", witness: alloc::vec![1] }));
    }

    #[test]
    fn convexity_examples() {
        let s = affine(5);
        assert!(is_convex(&s, &SubsetMask::empty(5)));
        assert!(is_convex(&s, &set(5, &[3])) && is_midpoint_closed(&s, &set(5, &[3])));
        assert!(!is_convex(&s, &set(5, &[0, 1])));
        assert!(is_convex(&s, &SubsetMask::full(5)));
    }

    #[test]
    fn symmetrizer_examples() {
        let s = affine(5);
        assert_eq!(symmetrizer(&s, &set(5, &[0])), set(5, &[0]));
        assert!(symmetrizer(&s, &SubsetMask::empty(5)).is_full());
        assert!(symmetrizer(&s, &SubsetMask::full(5)).is_full());
        // s_x({0,2}) = {2x, 2x-2} = {0,2} forces x = 1.
        assert_eq!(sym_between(&s, &set(5, &[0, 2]), &set(5, &[0, 2])), set(5, &[1]));
    }

    #[test]
    fn convex_closure_examples() {
        let s = affine(5);
        let (hull, steps) = convex_closure(&s, &set(5, &[0, 1]));
        assert!(hull.is_full());
        assert!(steps <= 3);
        assert_eq!(convex_closure(&s, &set(5, &[2])), (set(5, &[2]), 0));
        assert_eq!(convex_closure(&s, &SubsetMask::empty(5)), (SubsetMask::empty(5), 0));
    }

    #[test]
    fn convex_counts() {
        assert_eq!(enumerate_convex(&affine(5), 100).unwrap().len(), 7);
        assert_eq!(enumerate_convex(&affine(3), 100).unwrap().len(), 5);
        assert_eq!(enumerate_convex(&affine(1), 100).unwrap().len(), 2);
    }

    #[test]
    fn covers() {
        let s = affine(5);
        assert_eq!(cover_by_translates(&s, &SubsetMask::full(5), 10).unwrap(), [(0, 0)]);
        assert_eq!(cover_by_translates(&s, &set(5, &[0]), 10).unwrap().len(), 5);
        for u in 0..5 {
            assert_eq!(translate(&s, &set(5, &[1, 2]), u, u), set(5, &[1, 2]));
        }
        assert!(matches!(cover_by_translates(&s, &SubsetMask::empty(5), 10), Err(Error::Precondition(_))));
    }

    #[test]
    fn indecomposability() {
        let s = affine(5);
        assert!(is_indecomposable(&s, &SubsetMask::empty(5)));
        assert!(is_indecomposable(&s, &set(5, &[4])));
        assert!(!is_indecomposable(&s, &set(5, &[0, 1])));
        assert_eq!(decompose_indecomposable(&s, &set(5, &[0, 1])), [set(5, &[0]), set(5, &[1])]);
        assert!(!is_indecomposable_by_search(&s, &set(5, &[0, 1]), 100).unwrap());
        assert!(is_indecomposable_by_search(&s, &set(5, &[3]), 100).unwrap());
        assert!(is_indecomposable_by_search(&s, &SubsetMask::empty(5), 100).unwrap());
    }

    #[test]
    fn elliptic_examples() {
        let s = affine(5);
        assert_eq!(elliptic_generate(&s, &[set(5, &[2]), set(5, &[2])], 5).unwrap(), (set(5, &[2]), 0));
        let (hull, _) = elliptic_generate(&s, &[set(5, &[0]), set(5, &[0, 1])], 5).unwrap();
        assert!(hull.is_full());
        assert!(matches!(
            elliptic_generate(&s, &[set(5, &[0]), set(5, &[1])], 5),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            elliptic_generate(&s, &[set(5, &[0, 1])], 0),
            Err(Error::StepBudgetExceeded { .. })
        ));
    }
}
