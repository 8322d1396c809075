//! Exhaustive enumeration of small K-loops up to isomorphism.
//!
//! Rows of the table are the left translations `g_a`. The search fills rows
//! one at a time and propagates the Bol law in its translation form
//! `g_x g_y g_x = g_{x+(y+x)}`: once rows `x` and `y` are known, the row of
//! `x+(y+x)` is forced. The automorphic inverse property is checked on
//! complete tables unless only the Bol law is requested.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::loops::make_loop;
use crate::table::CayleyTable;
use crate::{Error, Result};

/// Largest order accepted by [`enumerate_kloops`].
pub const MAX_ENUMERATION_ORDER: usize = 8;

/// One canonical table per isomorphism class of K-loops of order `n`, sorted.
pub fn enumerate_kloops(n: usize, cap: usize) -> Result<Vec<CayleyTable>> {
    enumerate(n, cap, true)
}

/// One canonical table per isomorphism class of Bol loops of order `n`, sorted.
pub fn enumerate_bol_loops(n: usize, cap: usize) -> Result<Vec<CayleyTable>> {
    enumerate(n, cap, false)
}

fn enumerate(n: usize, cap: usize, require_aip: bool) -> Result<Vec<CayleyTable>> {
    if n == 0 {
        return Err(Error::BadShape { order: 0, entries: 0 });
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::OrderTooLarge { order: n, bound: MAX_ENUMERATION_ORDER });
    }
    let mut found =
        Classes { n, require_aip, seen: HashSet::new(), canon: BTreeSet::new(), cap, overflow: false };
    let mut root = State::new(n);
    let identity: Vec<u8> = (0..n as u8).collect();
    if !root.place(0, &identity) {
        unreachable!("identity row always fits");
    }
    search(&root, &mut found);
    if found.overflow {
        return Err(Error::CapExceeded { cap });
    }
    Ok(found.canon.into_iter().collect())
}

/// Lexicographically least relabeling of `t` among those fixing `0`.
pub fn canonical_form(t: &CayleyTable) -> CayleyTable {
    let mut best: Option<CayleyTable> = None;
    for_each_relabeling(t.order(), |perm| {
        let r = t.relabel(perm).expect("valid relabeling");
        if best.as_ref().is_none_or(|b| r < *b) {
            best = Some(r);
        }
    });
    best.expect("at least the identity relabeling")
}

/// Calls `f` with every permutation of `0..n` fixing `0` (Heap's algorithm).
fn for_each_relabeling(n: usize, mut f: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    let k = n.saturating_sub(1);
    let mut c = alloc::vec![0usize; k];
    f(&perm);
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(1, 1 + i);
            } else {
                perm.swap(1 + c[i], 1 + i);
            }
            f(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

struct Classes {
    n: usize,
    require_aip: bool,
    /// Every relabeling of every class found so far.
    seen: HashSet<Vec<u8>>,
    canon: BTreeSet<CayleyTable>,
    cap: usize,
    overflow: bool,
}

impl Classes {
    fn add(&mut self, rows: &[Vec<u8>]) {
        let flat: Vec<u8> = rows.concat();
        if self.seen.contains(&flat) {
            return;
        }
        let t = CayleyTable::new(self.n, flat.iter().map(|&x| x as usize).collect()).expect("valid");
        let mut best: Option<CayleyTable> = None;
        for_each_relabeling(self.n, |perm| {
            let r = t.relabel(perm).expect("valid relabeling");
            self.seen.insert(r.rows().flatten().copied().collect());
            if best.as_ref().is_none_or(|b| r < *b) {
                best = Some(r);
            }
        });
        if self.canon.len() == self.cap {
            self.overflow = true;
            return;
        }
        self.canon.insert(best.expect("nonempty"));
    }
}

#[derive(Clone)]
struct State {
    n: usize,
    rows: Vec<Option<Vec<u8>>>,
    /// Bit `v` of `col_used[y]`: value `v` already appears in column `y`.
    col_used: Vec<u16>,
}

impl State {
    fn new(n: usize) -> Self {
        State { n, rows: alloc::vec![None; n], col_used: alloc::vec![0; n] }
    }

    fn fits(&self, a: usize, row: &[u8]) -> bool {
        row[0] as usize == a && row.iter().enumerate().all(|(y, &v)| self.col_used[y] >> v & 1 == 0)
    }

    /// Places row `a` and everything the Bol law forces from it.
    fn place(&mut self, a: usize, row: &[u8]) -> bool {
        if !self.fits(a, row) {
            return false;
        }
        self.set(a, row);
        let mut queue = alloc::vec![a];
        while let Some(r) = queue.pop() {
            let assigned: Vec<usize> = (0..self.n).filter(|&q| self.rows[q].is_some()).collect();
            for &q in &assigned {
                for (x, y) in [(r, q), (q, r)] {
                    if !self.force(x, y, &mut queue) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn set(&mut self, a: usize, row: &[u8]) {
        for (y, &v) in row.iter().enumerate() {
            self.col_used[y] |= 1 << v;
        }
        self.rows[a] = Some(row.to_vec());
    }

    /// Requires `g_{x+(y+x)} = g_x g_y g_x`.
    fn force(&mut self, x: usize, y: usize, queue: &mut Vec<usize>) -> bool {
        let (gx, gy) = match (&self.rows[x], &self.rows[y]) {
            (Some(gx), Some(gy)) => (gx, gy),
            _ => return true,
        };
        let composite: Vec<u8> = (0..self.n).map(|c| gx[gy[gx[c] as usize] as usize]).collect();
        let target = composite[0] as usize;
        match &self.rows[target] {
            Some(existing) => *existing == composite,
            None => {
                if !self.fits(target, &composite) {
                    return false;
                }
                self.set(target, &composite);
                queue.push(target);
                true
            }
        }
    }

    fn is_aip(&self) -> bool {
        let n = self.n;
        let row = |x: usize| self.rows[x].as_ref().expect("complete");
        let inv: Vec<usize> = (0..n).map(|a| row(a).iter().position(|&v| v == 0).expect("latin")).collect();
        (0..n).all(|a| row(inv[a])[a] == 0)
            && (0..n).all(|a| (0..n).all(|b| inv[row(a)[b] as usize] == row(inv[a])[inv[b]] as usize))
    }
}

fn search(state: &State, found: &mut Classes) {
    if found.overflow {
        return;
    }
    let Some(a) = (0..state.n).find(|&a| state.rows[a].is_none()) else {
        if !found.require_aip || state.is_aip() {
            let rows: Vec<Vec<u8>> = state.rows.iter().map(|r| r.clone().expect("complete")).collect();
            found.add(&rows);
        }
        return;
    };
    let mut row = alloc::vec![0u8; state.n];
    row[0] = a as u8;
    fill(state, a, &mut row, 1, 1 << a, found);
}

/// Chooses `row[col..]` with distinct values avoiding column clashes.
fn fill(state: &State, a: usize, row: &mut Vec<u8>, col: usize, used: u16, found: &mut Classes) {
    if found.overflow {
        return;
    }
    if col == state.n {
        let mut next = state.clone();
        if next.place(a, row) {
            search(&next, found);
        }
        return;
    }
    let banned = used | state.col_used[col];
    for v in 0..state.n {
        if banned >> v & 1 == 0 {
            row[col] = v as u8;
            fill(state, a, row, col + 1, used | 1 << v, found);
        }
    }
}

/// Re-checks an enumerated table: a K-loop with identity `0`.
pub fn validate_enumerated(t: &CayleyTable) -> bool {
    t.identity() == Some(0) && make_loop(t).is_ok_and(|l| l.is_kloop())
}
