//! Backtracking search for loop isomorphisms.
//!
//! A bijective homomorphism is fixed by the images of a generating set. The
//! search assigns generator images in increasing order, propagates the
//! assignment through `f(x+y) = f(x)+f(y)` and prunes on element order and
//! commutant size.

use alloc::vec::Vec;

use crate::loops::LoopStructure;
use crate::subset::SubsetMask;

pub(crate) enum Flow {
    Continue,
    Stop,
}

const UNSET: u16 = u16::MAX;

/// (element order, number of elements commuting with it)
fn fingerprints(l: &LoopStructure) -> Vec<(usize, usize)> {
    let n = l.order();
    (0..n).map(|x| (l.element_order(x), (0..n).filter(|&y| l.add(x, y) == l.add(y, x)).count())).collect()
}

/// Greedy generating set: the smallest element outside the subloop generated
/// so far.
fn generators(l: &LoopStructure) -> Vec<usize> {
    let n = l.order();
    let mut gens = Vec::new();
    let mut span = l.plus_closure(&SubsetMask::empty(n));
    while let Some(x) = (0..n).find(|&x| !span.contains(x)) {
        gens.push(x);
        span.insert(x);
        span = l.plus_closure(&span);
    }
    gens
}

pub(crate) struct Search<'a> {
    src: &'a LoopStructure,
    dst: &'a LoopStructure,
    gens: Vec<usize>,
    src_fp: Vec<(usize, usize)>,
    dst_fp: Vec<(usize, usize)>,
}

#[derive(Clone)]
struct State {
    map: Vec<u16>,
    used: SubsetMask,
    /// Elements of the source with an assigned image, in assignment order.
    domain: Vec<usize>,
}

impl<'a> Search<'a> {
    pub(crate) fn new(src: &'a LoopStructure, dst: &'a LoopStructure) -> Self {
        Search {
            src,
            dst,
            gens: generators(src),
            src_fp: fingerprints(src),
            dst_fp: if core::ptr::eq(src, dst) { Vec::new() } else { fingerprints(dst) },
        }
    }

    fn dst_fp(&self, y: usize) -> (usize, usize) {
        if self.dst_fp.is_empty() {
            self.src_fp[y]
        } else {
            self.dst_fp[y]
        }
    }

    /// Calls `visit` with every isomorphism `src -> dst` (as an image vector)
    /// in lexicographic order of generator images.
    pub(crate) fn run(&self, mut visit: impl FnMut(&[usize]) -> Flow) {
        let n = self.src.order();
        if n != self.dst.order() {
            return;
        }
        let mut state = State { map: alloc::vec![UNSET; n], used: SubsetMask::empty(n), domain: Vec::new() };
        if !self.assign(&mut state, 0, 0) {
            return;
        }
        self.descend(&state, 0, &mut visit);
    }

    fn descend(&self, state: &State, depth: usize, visit: &mut impl FnMut(&[usize]) -> Flow) -> bool {
        if depth == self.gens.len() {
            debug_assert_eq!(state.domain.len(), self.src.order());
            let map: Vec<usize> = state.map.iter().map(|&y| y as usize).collect();
            return matches!(visit(&map), Flow::Continue);
        }
        let g = self.gens[depth];
        let want = self.src_fp[g];
        for y in 0..self.dst.order() {
            if state.used.contains(y) || self.dst_fp(y) != want {
                continue;
            }
            let mut next = state.clone();
            if self.assign(&mut next, g, y) && !self.descend(&next, depth + 1, visit) {
                return false;
            }
        }
        true
    }

    /// Sets `f(x) = y` and closes the domain under `+`. Returns false on a
    /// clash with an earlier assignment or with injectivity.
    fn assign(&self, state: &mut State, x: usize, y: usize) -> bool {
        if !self.set(state, x, y) {
            return false;
        }
        let mut i = state.domain.len() - 1;
        while i < state.domain.len() {
            let z = state.domain[i];
            let fz = state.map[z] as usize;
            for j in 0..=i {
                let w = state.domain[j];
                let fw = state.map[w] as usize;
                if !self.set(state, self.src.add(z, w), self.dst.add(fz, fw))
                    || !self.set(state, self.src.add(w, z), self.dst.add(fw, fz))
                {
                    return false;
                }
            }
            i += 1;
        }
        true
    }

    fn set(&self, state: &mut State, x: usize, y: usize) -> bool {
        match state.map[x] {
            UNSET => {
                if state.used.contains(y) || self.src_fp[x] != self.dst_fp(y) {
                    return false;
                }
                state.map[x] = y as u16;
                state.used.insert(y);
                state.domain.push(x);
                true
            }
            prev => prev as usize == y,
        }
    }
}

pub(crate) fn first_isomorphism(src: &LoopStructure, dst: &LoopStructure) -> Option<Vec<usize>> {
    let mut found = None;
    Search::new(src, dst).run(|map| {
        found = Some(map.to_vec());
        Flow::Stop
    });
    found
}
