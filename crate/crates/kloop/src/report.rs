//! Line-oriented `key: value` invariant reports.

use std::fmt;

use kloop_core::identities::check_kloop_identities;
use kloop_core::interp::{kloop_to_symetron, symetron_to_kloop};
use kloop_core::mlt::{inner_group, is_fixed_point_free, mlt, mlt_left, precession_group};
use kloop_core::subquotient::{enumerate_subloops, is_automorphic};
use kloop_core::symetron::enumerate_convex;
use kloop_core::{Error, GeneratedGroup, LoopStructure, Result, SymetronStructure};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureKind {
    Loop,
    Bol,
    KLoop,
    Symetron,
}

impl StructureKind {
    pub fn of_loop(l: &LoopStructure) -> Self {
        if l.is_kloop() {
            StructureKind::KLoop
        } else if l.is_bol() {
            StructureKind::Bol
        } else {
            StructureKind::Loop
        }
    }
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StructureKind::Loop => "loop",
            StructureKind::Bol => "bol",
            StructureKind::KLoop => "kloop",
            StructureKind::Symetron => "symetron",
        })
    }
}

/// A size, a cap overflow, or "does not apply to this structure".
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Count {
    Exact(usize),
    CapExceeded,
    NotApplicable,
}

impl Count {
    fn of<T>(r: Result<T>, size: impl FnOnce(T) -> usize) -> Result<Self> {
        match r {
            Ok(v) => Ok(Count::Exact(size(v))),
            Err(Error::CapExceeded { .. }) => Ok(Count::CapExceeded),
            Err(e) => Err(e),
        }
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Exact(n) => write!(f, "{n}"),
            Count::CapExceeded => f.write_str("cap-exceeded"),
            Count::NotApplicable => f.write_str("n/a"),
        }
    }
}

/// A boolean that may be unavailable because a closure hit its cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Known(bool),
    CapExceeded,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Known(b) => write!(f, "{b}"),
            Verdict::CapExceeded => f.write_str("cap-exceeded"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub kind: StructureKind,
    pub order: usize,
    pub is_associative: bool,
    pub is_commutative: bool,
    pub is_bol: bool,
    pub is_aip: bool,
    pub is_u2d: bool,
    pub is_automorphic: bool,
    pub is_fixed_point_free: Verdict,
    pub mlt_left_size: Count,
    pub mlt_size: Count,
    pub precession_group_size: Count,
    pub inner_group_size: Count,
    pub subloop_count: Count,
    pub convex_set_count: Count,
    /// `(item id, holds)`; empty unless the structure is a K-loop.
    pub identities: Vec<(String, bool)>,
}

fn size(g: GeneratedGroup) -> usize {
    g.size()
}

/// Invariants of a loop; `cap` bounds every closure and enumeration.
pub fn loop_report(l: &LoopStructure, cap: usize) -> Result<InvariantReport> {
    let kind = StructureKind::of_loop(l);
    let fpf = match is_fixed_point_free(l, cap) {
        Ok(b) => Verdict::Known(b),
        Err(Error::CapExceeded { .. }) => Verdict::CapExceeded,
        Err(e) => return Err(e),
    };
    let subloop_count =
        if l.is_bol() { Count::of(enumerate_subloops(l, cap), |v| v.len())? } else { Count::NotApplicable };
    let convex_set_count = if l.is_kloop() && l.is_uniquely_2_divisible() {
        let s = kloop_to_symetron(l)?;
        Count::of(enumerate_convex(&s, cap), |v| v.len())?
    } else {
        Count::NotApplicable
    };
    let identities = if l.is_kloop() {
        check_kloop_identities(l)?.items.iter().map(|i| (i.id.to_owned(), i.holds)).collect()
    } else {
        Vec::new()
    };
    Ok(InvariantReport {
        kind,
        order: l.order(),
        is_associative: l.is_associative(),
        is_commutative: l.is_commutative(),
        is_bol: l.is_bol(),
        is_aip: l.is_aip(),
        is_u2d: l.is_uniquely_2_divisible(),
        is_automorphic: is_automorphic(l),
        is_fixed_point_free: fpf,
        mlt_left_size: Count::of(mlt_left(l, cap), size)?,
        mlt_size: Count::of(mlt(l, cap), size)?,
        precession_group_size: Count::of(precession_group(l, cap), size)?,
        inner_group_size: Count::of(inner_group(l, cap), size)?,
        subloop_count,
        convex_set_count,
        identities,
    })
}

/// Invariants of a symétron, with loop invariants taken at basepoint `0`.
pub fn symetron_report(s: &SymetronStructure, cap: usize) -> Result<InvariantReport> {
    let l = symetron_to_kloop(s, 0)?;
    let mut r = loop_report(&l, cap)?;
    r.kind = StructureKind::Symetron;
    r.convex_set_count = Count::of(enumerate_convex(s, cap), |v| v.len())?;
    Ok(r)
}

impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "kind: {}", self.kind)?;
        writeln!(f, "order: {}", self.order)?;
        writeln!(f, "is_associative: {}", self.is_associative)?;
        writeln!(f, "is_commutative: {}", self.is_commutative)?;
        writeln!(f, "is_bol: {}", self.is_bol)?;
        writeln!(f, "is_aip: {}", self.is_aip)?;
        writeln!(f, "is_u2d: {}", self.is_u2d)?;
        writeln!(f, "is_automorphic: {}", self.is_automorphic)?;
        writeln!(f, "is_fixed_point_free: {}", self.is_fixed_point_free)?;
        writeln!(f, "mlt_left_size: {}", self.mlt_left_size)?;
        writeln!(f, "mlt_size: {}", self.mlt_size)?;
        writeln!(f, "precession_group_size: {}", self.precession_group_size)?;
        writeln!(f, "inner_group_size: {}", self.inner_group_size)?;
        writeln!(f, "subloop_count: {}", self.subloop_count)?;
        writeln!(f, "convex_set_count: {}", self.convex_set_count)?;
        for (id, holds) in &self.identities {
            writeln!(f, "identity_{id}: {}", if *holds { "pass" } else { "fail" })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use kloop_core::constructions::cyclic_kloop;

    #[test]
    fn z5_report() {
        let r = loop_report(&cyclic_kloop(5).unwrap(), 1000).unwrap();
        assert_eq!(r.kind, StructureKind::KLoop);
        assert_eq!(r.mlt_size, Count::Exact(5));
        assert_eq!(r.precession_group_size, Count::Exact(1));
        assert_eq!(r.subloop_count, Count::Exact(2));
        assert_eq!(r.convex_set_count, Count::Exact(7));
        let text = r.to_string();
        assert!(text.starts_with("kind: kloop\norder: 5\n"));
        assert!(text.contains("identity_9: pass\n"));
    }

    #[test]
    fn cap_is_reported_not_fatal() {
        let r = loop_report(&cyclic_kloop(5).unwrap(), 2).unwrap();
        assert_eq!(r.mlt_size, Count::CapExceeded);
        assert_eq!(r.precession_group_size, Count::Exact(1));
        assert!(r.to_string().contains("mlt_size: cap-exceeded\n"));
    }
}
