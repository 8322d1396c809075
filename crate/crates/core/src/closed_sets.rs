//! Ganter's NextClosure: every closed set of a closure operator on `0..n`,
//! in lectic order.

use alloc::vec::Vec;

use crate::subset::SubsetMask;
use crate::{Error, Result};

pub(crate) fn enumerate<F>(n: usize, cap: usize, close: F) -> Result<Vec<SubsetMask>>
where
    F: Fn(&SubsetMask) -> SubsetMask,
{
    let mut out = Vec::new();
    let mut current = close(&SubsetMask::empty(n));
    loop {
        if out.len() == cap {
            return Err(Error::CapExceeded { cap });
        }
        out.push(current);
        match next(n, &current, &close) {
            Some(c) => current = c,
            None => return Ok(out),
        }
    }
}

fn next<F>(n: usize, current: &SubsetMask, close: &F) -> Option<SubsetMask>
where
    F: Fn(&SubsetMask) -> SubsetMask,
{
    for i in (0..n).rev() {
        if current.contains(i) {
            continue;
        }
        let prefix = current.below(i);
        let mut seed = prefix;
        seed.insert(i);
        let candidate = close(&seed);
        if candidate.below(i) == prefix {
            return Some(candidate);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_closure_gives_power_set() {
        let all = enumerate(4, 100, |s| *s).unwrap();
        assert_eq!(all.len(), 16);
    }

    #[test]
    fn interval_closure() {
        // Closed sets of "fill the gaps": intervals plus the empty set.
        let close = |s: &SubsetMask| match (s.iter().next(), s.iter().last()) {
            (Some(lo), Some(hi)) => SubsetMask::from_elements(s.order(), lo..=hi),
            _ => *s,
        };
        let all = enumerate(4, 100, close).unwrap();
        assert_eq!(all.len(), 1 + 4 * 5 / 2);
        assert!(matches!(enumerate(4, 5, close), Err(Error::CapExceeded { cap: 5 })));
    }
}
