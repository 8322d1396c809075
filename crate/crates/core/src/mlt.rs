//! Translations, precession maps and the permutation groups they generate.
//!
//! Conventions: `g_a(x) = a+x`, `r_a(x) = x+a`, and the precession
//! `δ_{a,b}` is the unique permutation with `a+(b+c) = (a+b)+δ_{a,b}(c)`.
//! The inner generators are read so that each one fixes `0`:
//! `r_{a,b}(x) = ((x+a)+b)/(a+b)`, `g_{a,b}(x) = (b+a)\(b+(a+x))` and
//! `c_a(x) = a\(x+a)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::loops::LoopStructure;
use crate::perm::{closure, GeneratedGroup, Permutation};
use crate::{Error, Result};

impl LoopStructure {
    /// `δ_{a,b}(c)` without materializing the permutation.
    #[inline]
    pub fn precess(&self, a: usize, b: usize, c: usize) -> usize {
        self.ldiv(self.add(a, b), self.add(a, self.add(b, c)))
    }

    /// Is `δ_{a,b}` the identity map?
    pub fn precession_is_trivial(&self, a: usize, b: usize) -> bool {
        let ab = self.add(a, b);
        (0..self.order()).all(|c| self.add(a, self.add(b, c)) == self.add(ab, c))
    }
}

pub fn left_translation(l: &LoopStructure, a: usize) -> Permutation {
    Permutation::from_fn_unchecked(l.order(), |x| l.add(a, x))
}

pub fn right_translation(l: &LoopStructure, a: usize) -> Permutation {
    Permutation::from_fn_unchecked(l.order(), |x| l.add(x, a))
}

pub fn precession(l: &LoopStructure, a: usize, b: usize) -> Permutation {
    let d = Permutation::from_fn_unchecked(l.order(), |c| l.precess(a, b, c));
    debug_assert_eq!(d.apply(0), 0);
    d
}

pub fn left_translations(l: &LoopStructure) -> Vec<Permutation> {
    (0..l.order()).map(|a| left_translation(l, a)).collect()
}

pub fn precessions(l: &LoopStructure) -> Vec<Permutation> {
    let n = l.order();
    (0..n).flat_map(|a| (0..n).map(move |b| precession(l, a, b))).collect()
}

/// `M_g(B)`, generated by left translations.
pub fn mlt_left(l: &LoopStructure, cap: usize) -> Result<GeneratedGroup> {
    closure(&left_translations(l), l.order(), cap)
}

/// `M(B)`, generated by left and right translations.
pub fn mlt(l: &LoopStructure, cap: usize) -> Result<GeneratedGroup> {
    closure(&mlt_generators(l), l.order(), cap)
}

fn mlt_generators(l: &LoopStructure) -> Vec<Permutation> {
    let n = l.order();
    let mut gens = left_translations(l);
    gens.extend((0..n).map(|a| right_translation(l, a)));
    gens
}

/// `D(B)`, generated by the precession maps.
pub fn precession_group(l: &LoopStructure, cap: usize) -> Result<GeneratedGroup> {
    closure(&precessions(l), l.order(), cap)
}

/// `r_{a,b}` then `g_{a,b}` for every pair (row-major), then `c_a` for every `a`.
pub fn inner_generators(l: &LoopStructure) -> Vec<Permutation> {
    let n = l.order();
    let mut out = Vec::with_capacity(2 * n * n + n);
    for a in 0..n {
        for b in 0..n {
            let ab = l.add(a, b);
            let ba = l.add(b, a);
            out.push(Permutation::from_fn_unchecked(n, |x| l.rdiv(l.add(l.add(x, a), b), ab)));
            out.push(Permutation::from_fn_unchecked(n, |x| l.ldiv(ba, l.add(b, l.add(a, x)))));
        }
    }
    for a in 0..n {
        out.push(Permutation::from_fn_unchecked(n, |x| l.ldiv(a, l.add(x, a))));
    }
    out
}

/// `I(B)`, generated by [`inner_generators`].
pub fn inner_group(l: &LoopStructure, cap: usize) -> Result<GeneratedGroup> {
    closure(&inner_generators(l), l.order(), cap)
}

/// Checks that `I(B)` is exactly the stabilizer of `0` in `M(B)`.
pub fn stabilizer_check(l: &LoopStructure, cap: usize) -> Result<bool> {
    let m = mlt(l, cap)?;
    let inner = inner_group(l, cap)?;
    let stab: Vec<&Permutation> = m.elements().iter().filter(|p| p.apply(0) == 0).collect();
    Ok(stab.len() == inner.size() && stab.iter().zip(inner.elements()).all(|(a, b)| *a == b))
}

/// Every non-identity element of `D(B)` fixes only `0`.
pub fn is_fixed_point_free(l: &LoopStructure, cap: usize) -> Result<bool> {
    let d = precession_group(l, cap)?;
    Ok(d.elements().iter().filter(|p| !p.is_identity()).all(|p| p.fixed_points().all(|x| x == 0)))
}

/// In a fixed-point-free loop, `δ_{a,b}` depends only on `(a+b, b+a)`.
pub fn precession_determinacy_check(l: &LoopStructure, cap: usize) -> Result<bool> {
    if !is_fixed_point_free(l, cap)? {
        return Err(Error::Precondition("fixed-point-free loop required"));
    }
    let n = l.order();
    let mut seen: BTreeMap<(usize, usize), Permutation> = BTreeMap::new();
    for a in 0..n {
        for b in 0..n {
            let key = (l.add(a, b), l.add(b, a));
            let d = precession(l, a, b);
            match seen.get(&key) {
                Some(prev) if *prev != d => return Ok(false),
                Some(_) => {}
                None => {
                    seen.insert(key, d);
                }
            }
        }
    }
    Ok(true)
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
    fn z5_translations() {
        let l = zn(5);
        let g2 = left_translation(&l, 2);
        assert_eq!(g2.images().collect::<Vec<_>>(), [2, 3, 4, 0, 1]);
        assert!(left_translation(&l, 0).is_identity());
        assert!(right_translation(&l, 0).is_identity());
    }

    #[test]
    fn abelian_groups() {
        let l = zn(5);
        assert_eq!(mlt_left(&l, 100).unwrap().size(), 5);
        assert_eq!(mlt(&l, 100).unwrap().size(), 5);
        assert_eq!(precession_group(&l, 100).unwrap().size(), 1);
        assert!(inner_generators(&l).iter().all(|p| p.is_identity()));
        assert_eq!(inner_group(&l, 100).unwrap().size(), 1);
        assert!(stabilizer_check(&l, 100).unwrap());
        assert!(is_fixed_point_free(&l, 100).unwrap());
        assert!(precession_determinacy_check(&l, 100).unwrap());
        for a in 0..5 {
            assert!(precession(&l, a, 0).is_identity());
        }
    }

    #[test]
    fn trivial_loop() {
        let l = zn(1);
        assert_eq!(mlt_left(&l, 10).unwrap().size(), 1);
        assert_eq!(mlt(&l, 10).unwrap().size(), 1);
        assert_eq!(precession_group(&l, 10).unwrap().size(), 1);
        assert!(stabilizer_check(&l, 10).unwrap());
    }

    #[test]
    fn inner_generators_fix_zero_in_nonassociative_loop() {
        // Smallest nonassociative loop (order 5), not Bol.
        let rows = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]];
        let l = make_loop(&CayleyTable::from_fn(5, |x, y| rows[x][y]).unwrap()).unwrap();
        assert!(!l.is_associative());
        let gens = inner_generators(&l);
        assert_eq!(gens.len(), 2 * 25 + 5);
        assert!(gens.iter().all(|p| p.apply(0) == 0));
        assert!(precessions(&l).iter().any(|p| !p.is_identity()));
        for a in 0..5 {
            for b in 0..5 {
                let d = precession(&l, a, b);
                for c in 0..5 {
                    assert_eq!(l.add(a, l.add(b, c)), l.add(l.add(a, b), d.apply(c)));
                }
            }
        }
        assert!(stabilizer_check(&l, 1000).unwrap());
    }

    #[test]
    fn determinacy_needs_fixed_point_freeness() {
        let l = crate::constructions::kloop_from_group(&crate::constructions::wreath_z3_z3()).unwrap();
        assert!(!is_fixed_point_free(&l, 1000).unwrap());
        assert!(matches!(precession_determinacy_check(&l, 1000), Err(Error::Precondition(_))));
    }

    #[test]
    fn cap_is_reported() {
        let rows = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]];
        let l = make_loop(&CayleyTable::from_fn(5, |x, y| rows[x][y]).unwrap()).unwrap();
        assert!(matches!(mlt(&l, 3), Err(Error::CapExceeded { cap: 3 })));
    }
}
