//! Passing between uniquely 2-divisible K-loops and symétrons.
//!
//! A K-loop gives the reflection `s(x,y) = y+(-x+y)`. A symétron with a
//! basepoint `a` gives the loop `x +_a y = s(s(y,a), m(x,a))`, whose neutral
//! element is `a`.

use crate::loops::{make_loop, LoopStructure};
use crate::subquotient::find_isomorphism;
use crate::symetron::{make_symetron, SymetronStructure};
use crate::table::CayleyTable;
use crate::{Error, Result};

/// `y + (-x + y)` on a loop table with identity `e`, where `-x` is the left
/// inverse.
fn reflection_table(t: &CayleyTable, e: usize) -> CayleyTable {
    let n = t.order();
    let inv: alloc::vec::Vec<usize> =
        (0..n).map(|x| (0..n).find(|&z| t.get(z, x) == e).expect("Latin table")).collect();
    CayleyTable::from_fn(n, |x, y| t.get(y, t.get(inv[x], y))).expect("entries in range")
}

/// The symétron `s(x,y) = y+(-x+y)` of a uniquely 2-divisible K-loop.
pub fn kloop_to_symetron(l: &LoopStructure) -> Result<SymetronStructure> {
    if !l.is_kloop() || !l.is_uniquely_2_divisible() {
        return Err(Error::Precondition("uniquely 2-divisible K-loop required"));
    }
    let s = make_symetron(&reflection_table(l.table(), 0))?;
    debug_assert!((0..l.order()).all(|a| s.midpoint(0, a) == l.half(a).unwrap()));
    Ok(s)
}

/// `x +_a y` on the original labels; the identity is `a`.
pub fn basepoint_table(s: &SymetronStructure, a: usize) -> CayleyTable {
    CayleyTable::from_fn(s.order(), |x, y| s.s(s.s(y, a), s.midpoint(x, a))).expect("entries in range")
}

/// The K-loop at basepoint `a`, relabeled so that `a` becomes `0`
/// (see [`LoopStructure::relabeling`]).
pub fn symetron_to_kloop(s: &SymetronStructure, a: usize) -> Result<LoopStructure> {
    if a >= s.order() {
        return Err(Error::ElementOutOfRange { element: a, order: s.order() });
    }
    let l = make_loop(&basepoint_table(s, a))?;
    debug_assert_eq!(l.relabeling()[a], 0);
    Ok(l)
}

/// The midpoint of `a` and `b` computed inside the loop as
/// `s(half(s(b, half(a))), half(a))`.
pub fn kloop_midpoint(l: &LoopStructure, a: usize, b: usize) -> Result<usize> {
    if !l.is_kloop() {
        return Err(Error::Precondition("K-loop required"));
    }
    let s = |x: usize, y: usize| l.add(y, l.add(l.inv(x), y));
    let ha = l.half(a)?;
    let z = s(l.half(s(b, ha))?, ha);
    debug_assert_eq!(s(a, z), b);
    Ok(z)
}

/// Is `x ↦ s(x,u)` an isomorphism `(X, +_a) -> (X, +_{s(a,u)})`?
pub fn check_su_isomorphism(s: &SymetronStructure, a: usize, u: usize) -> bool {
    let n = s.order();
    let src = basepoint_table(s, a);
    let dst = basepoint_table(s, s.s(a, u));
    let f = |x: usize| s.s(x, u);
    (0..n).all(|x| (0..n).all(|y| f(src.get(x, y)) == dst.get(f(x), f(y))))
}

/// Is `x ↦ m(x,a)` an isomorphism from `(X, s^a)` to `(X, s)`, where `s^a` is
/// the reflection of the loop `+_a`?
pub fn check_midpoint_isomorphism(s: &SymetronStructure, a: usize) -> bool {
    let n = s.order();
    let sa = reflection_table(&basepoint_table(s, a), a);
    let f = |x: usize| s.midpoint(x, a);
    (0..n).all(|x| (0..n).all(|y| f(sa.get(x, y)) == s.s(f(x), f(y))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RoundTrip {
    /// The loop at basepoint `0` of the induced symétron is the same table.
    pub equal: bool,
    pub isomorphic: bool,
}

/// K-loop -> symétron -> K-loop at basepoint `0`.
pub fn roundtrip_check(l: &LoopStructure) -> Result<RoundTrip> {
    let s = kloop_to_symetron(l)?;
    let back = symetron_to_kloop(&s, 0)?;
    Ok(RoundTrip { equal: back == *l, isomorphic: find_isomorphism(l, &back).is_some() })
}
