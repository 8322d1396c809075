//! The K-loop identity suite, checked exhaustively.
//!
//! Items with integer parameters run over `n, m ∈ [-2N, 2N]` for a loop of
//! order `N`. Since those checks only depend on the elements `a·n`, `a·m` and
//! `a·(n+m)`, each distinct triple of elements is tested once.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::loops::LoopStructure;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ItemVerdict {
    /// `"1"`..`"9"`, plus `"3-literal"` for the one-index form of item 3.
    pub id: &'static str,
    pub statement: &'static str,
    pub holds: bool,
    /// Arguments of the first failure, in the order they appear in the statement.
    pub witness: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub items: Vec<ItemVerdict>,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.items.iter().all(|i| i.holds)
    }

    pub fn item(&self, id: &str) -> Option<&ItemVerdict> {
        self.items.iter().find(|i| i.id == id)
    }
}

fn verdict(id: &'static str, statement: &'static str, witness: Option<Vec<i64>>) -> ItemVerdict {
    ItemVerdict { id, statement, holds: witness.is_none(), witness }
}

fn w(xs: &[usize]) -> Vec<i64> {
    xs.iter().map(|&x| x as i64).collect()
}

/// Runs items 1–9 (and the literal reading of item 3) on a K-loop.
pub fn check_kloop_identities(l: &LoopStructure) -> Result<IdentityReport> {
    if !l.is_kloop() {
        return Err(Error::Precondition("K-loop required"));
    }
    let items = vec![
        verdict("1", "a+b = δ_{a,b}(b+a)", item1(l)),
        verdict("2", "a·n+(a·m+x) = a·(n+m)+x", item2(l)),
        verdict("3", "δ_{a·n,a·m} = Id", item3(l, false)),
        verdict("3-literal", "δ_{a·m,a·m} = Id", item3(l, true)),
        verdict("4", "δ_{a,b}^-1 = δ_{b,a}", item4(l)),
        verdict("5", "δ_{a,b} = δ_{-b,b+a}", item5(l)),
        verdict("6", "δ_{a,b+a} = δ_{a,b}", item6(l)),
        verdict("7", "δ_{a,b} is an automorphism", item7(l)),
        verdict("8", "(a+b)·2 = a+(b·2+a)", item8(l)),
        verdict("9", "doubling injective <=> no element of order 2", item9(l)),
    ];
    Ok(IdentityReport { items })
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)))
}

fn item1(l: &LoopStructure) -> Option<Vec<i64>> {
    pairs(l.order()).find(|&(a, b)| l.add(a, b) != l.precess(a, b, l.add(b, a))).map(|(a, b)| w(&[a, b]))
}

/// Powers `a·k` for `k ∈ [-4N, 4N]`, indexed by `k + 4N`.
fn power_window(l: &LoopStructure, a: usize) -> Vec<usize> {
    let big = 4 * l.order() as i64;
    (-big..=big).map(|k| l.power_unchecked(a, k)).collect()
}

fn item2(l: &LoopStructure) -> Option<Vec<i64>> {
    let n = l.order();
    let half = 2 * n as i64;
    let offset = 4 * n as i64;
    for a in 0..n {
        let pw = power_window(l, a);
        let at = |k: i64| pw[(k + offset) as usize];
        let mut seen = BTreeSet::new();
        for i in -half..=half {
            for j in -half..=half {
                let key = (at(i), at(j), at(i + j));
                if !seen.insert(key) {
                    continue;
                }
                let (an, am, anm) = key;
                if let Some(x) = (0..n).find(|&x| l.add(an, l.add(am, x)) != l.add(anm, x)) {
                    return Some(vec![a as i64, i, j, x as i64]);
                }
            }
        }
    }
    None
}

fn item3(l: &LoopStructure, literal: bool) -> Option<Vec<i64>> {
    let n = l.order();
    let half = 2 * n as i64;
    let offset = 4 * n as i64;
    for a in 0..n {
        let pw = power_window(l, a);
        let at = |k: i64| pw[(k + offset) as usize];
        let mut seen = BTreeSet::new();
        for i in -half..=half {
            let js = if literal { i..=i } else { -half..=half };
            for j in js {
                let key = (at(i), at(j));
                if seen.insert(key) && !l.precession_is_trivial(key.0, key.1) {
                    return Some(if literal { vec![a as i64, i] } else { vec![a as i64, i, j] });
                }
            }
        }
    }
    None
}

fn item4(l: &LoopStructure) -> Option<Vec<i64>> {
    let n = l.order();
    pairs(n).find(|&(a, b)| (0..n).any(|c| l.precess(a, b, l.precess(b, a, c)) != c)).map(|(a, b)| w(&[a, b]))
}

fn item5(l: &LoopStructure) -> Option<Vec<i64>> {
    let n = l.order();
    pairs(n)
        .find(|&(a, b)| {
            let (nb, ba) = (l.inv(b), l.add(b, a));
            (0..n).any(|c| l.precess(a, b, c) != l.precess(nb, ba, c))
        })
        .map(|(a, b)| w(&[a, b]))
}

fn item6(l: &LoopStructure) -> Option<Vec<i64>> {
    let n = l.order();
    pairs(n)
        .find(|&(a, b)| {
            let ba = l.add(b, a);
            (0..n).any(|c| l.precess(a, ba, c) != l.precess(a, b, c))
        })
        .map(|(a, b)| w(&[a, b]))
}

fn item7(l: &LoopStructure) -> Option<Vec<i64>> {
    let n = l.order();
    for (a, b) in pairs(n) {
        let d: Vec<usize> = (0..n).map(|c| l.precess(a, b, c)).collect();
        for (x, y) in pairs(n) {
            if d[l.add(x, y)] != l.add(d[x], d[y]) {
                return Some(w(&[a, b, x, y]));
            }
        }
    }
    None
}

fn item8(l: &LoopStructure) -> Option<Vec<i64>> {
    pairs(l.order())
        .find(|&(a, b)| {
            let ab = l.add(a, b);
            l.add(ab, ab) != l.add(a, l.add(l.add(b, b), a))
        })
        .map(|(a, b)| w(&[a, b]))
}

/// Witness on failure: the element of order 2 (or `-1` if there is none)
/// and the two colliding elements of doubling (or `-1`s).
fn item9(l: &LoopStructure) -> Option<Vec<i64>> {
    let n = l.order();
    let order_two = (1..n).find(|&a| l.add(a, a) == 0);
    let mut collision = None;
    let mut first_with_double = vec![usize::MAX; n];
    for x in 0..n {
        let d = l.add(x, x);
        if first_with_double[d] != usize::MAX {
            collision = Some((first_with_double[d], x));
            break;
        }
        first_with_double[d] = x;
    }
    if collision.is_none() == order_two.is_none() {
        return None;
    }
    let t = order_two.map_or(-1, |a| a as i64);
    let (p, q) = collision.map_or((-1, -1), |(p, q)| (p as i64, q as i64));
    Some(vec![t, p, q])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loops::make_loop;
    use crate::table::CayleyTable;

    fn zn(n: usize) -> LoopStructure {
        make_loop(&CayleyTable::from_fn(n, |x, y| (x + y) % n).unwrap()).unwrap()
    }

    #[test]
    fn cyclic_groups_pass() {
        for n in [1, 2, 4, 5, 7, 9] {
            let r = check_kloop_identities(&zn(n)).unwrap();
            assert!(r.all_hold(), "Z{n}: {r:?}");
            assert_eq!(r.items.len(), 10);
        }
    }

    #[test]
    fn item8_z5_instance() {
        let l = zn(5);
        let (a, b) = (1, 2);
        let ab = l.add(a, b);
        assert_eq!(l.add(ab, ab), 1);
        assert_eq!(l.add(a, l.add(l.add(b, b), a)), 1);
    }

    #[test]
    fn rejects_non_kloops() {
        let rows = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]];
        let l = make_loop(&CayleyTable::from_fn(5, |x, y| rows[x][y]).unwrap()).unwrap();
        assert!(matches!(check_kloop_identities(&l), Err(Error::Precondition(_))));
    }
}
