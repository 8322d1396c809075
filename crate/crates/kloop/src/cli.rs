//! The `kloop` command line.
//!
//! Exit codes: `0` success or property true, `1` property false or witness
//! absent, `2` input error, violated precondition or exceeded cap.
//! Element indices on the command line and in reports use the labels of the
//! input file.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use kloop_core::enumerate::enumerate_kloops;
use kloop_core::identities::check_kloop_identities;
use kloop_core::interp::{kloop_to_symetron, symetron_to_kloop};
use kloop_core::mlt::is_fixed_point_free;
use kloop_core::subquotient::{
    center_of_centralizer, centralizer, enumerate_subloops, find_isomorphism, is_abelian_subloop, is_normal,
    is_normal_by_cosets, is_subloop, quotient, subloop_closure,
};
use kloop_core::symetron::{cover_by_translates, make_symetron};
use kloop_core::{loops::make_loop, CayleyTable, Error, LoopStructure, SubsetMask, SymetronStructure};

use crate::error::{KloopError, Result};
use crate::format::{parse_subset, parse_table, serialize_subset, serialize_table};
use crate::report::{loop_report, symetron_report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Loop,
    Bol,
    Kloop,
    Symetron,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Symetron,
    Kloop,
}

#[derive(Debug, Parser)]
#[command(name = "kloop", version, about = "Finite loops, K-loops and symétrons given by Cayley tables")]
pub struct Cli {
    /// Upper bound on group closures and enumerations.
    #[arg(long, global = true, default_value_t = kloop_core::DEFAULT_GROUP_CAP)]
    pub cap: usize,

    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// How to read the input table.
    #[arg(long = "as", global = true, value_enum)]
    pub kind: Option<Kind>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the axioms of the kind given by --as (default kloop).
    Validate { file: PathBuf },
    /// Axiom flags, group sizes, subloop and convex-set counts, identity suite.
    Invariants { file: PathBuf },
    /// The K-loop identity suite, item by item.
    Identities { file: PathBuf },
    /// K-loop to symétron, or symétron to the K-loop at a basepoint.
    Convert {
        file: PathBuf,
        #[arg(long, value_enum)]
        to: Target,
        #[arg(long, default_value_t = 0)]
        basepoint: usize,
    },
    /// Every subloop of a Bol loop.
    Subloops { file: PathBuf },
    /// Normality of a subloop, by inner mappings and by cosets.
    Normal {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        subloop: String,
    },
    /// The quotient table by a normal subloop.
    Quotient {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        subloop: String,
    },
    /// The centralizer of an element of a K-loop and its center.
    Centralizer {
        file: PathBuf,
        #[arg(long)]
        element: usize,
    },
    /// An isomorphism between two loops.
    Iso { a: PathBuf, b: PathBuf },
    /// A greedy cover of a symétron by translates s_u s_v X.
    Cover {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        subset: String,
    },
    /// One table per isomorphism class of K-loops of the given order.
    Enumerate {
        #[arg(long)]
        order: usize,
        /// Write one file per class into this directory instead.
        #[arg(long)]
        split: Option<PathBuf>,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            }
        }
    }
}

/// Runs an already parsed command line.
pub fn execute(cli: &Cli) -> Outcome {
    let result = dispatch(cli).and_then(|(code, text)| match &cli.out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|source| KloopError::Write { path: path.clone(), source })?;
            Ok((code, String::new()))
        }
        None => Ok((code, text)),
    });
    match result {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn read_table(path: &Path) -> Result<CayleyTable> {
    let text =
        std::fs::read_to_string(path).map_err(|source| KloopError::Read { path: path.into(), source })?;
    parse_table(&text)
}

/// A loop together with the map between file labels and loop labels (an
/// involution, so it converts both ways).
struct Loaded {
    l: LoopStructure,
    relabel: Vec<usize>,
}

impl Loaded {
    fn to_loop(&self, x: usize) -> usize {
        self.relabel[x]
    }

    fn to_file(&self, x: usize) -> usize {
        self.relabel[x]
    }

    fn set_to_loop(&self, s: &SubsetMask) -> SubsetMask {
        s.map(|x| self.to_loop(x))
    }

    fn set_to_file(&self, s: &SubsetMask) -> SubsetMask {
        s.map(|x| self.to_file(x))
    }

    fn element(&self, x: usize) -> Result<usize> {
        let order = self.l.order();
        if x >= order {
            return Err(Error::ElementOutOfRange { element: x, order }.into());
        }
        Ok(self.to_loop(x))
    }

    fn subset(&self, literal: &str) -> Result<SubsetMask> {
        Ok(self.set_to_loop(&parse_subset(literal, self.l.order())?))
    }
}

/// Reads a loop; with `--as symetron` the loop at basepoint 0 of the symétron.
fn load_loop(path: &Path, kind: Option<Kind>) -> Result<Loaded> {
    let t = read_table(path)?;
    let l = match kind {
        Some(Kind::Symetron) => symetron_to_kloop(&make_symetron(&t)?, 0)?,
        _ => make_loop(&t)?,
    };
    let relabel = l.relabeling().to_vec();
    Ok(Loaded { l, relabel })
}

/// Reads a symétron; with a loop kind, the symétron of that K-loop.
fn load_symetron(path: &Path, kind: Option<Kind>) -> Result<SymetronStructure> {
    let t = read_table(path)?;
    match kind {
        None | Some(Kind::Symetron) => Ok(make_symetron(&t)?),
        Some(_) => {
            let l = make_loop(&t)?;
            let s = kloop_to_symetron(&l)?;
            Ok(make_symetron(&s.table().relabel(l.relabeling())?)?)
        }
    }
}

fn csv(xs: impl IntoIterator<Item = impl std::fmt::Display>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn line(out: &mut String, key: &str, value: impl std::fmt::Display) {
    writeln!(out, "{key}: {value}").expect("writing to a String");
}

fn dispatch(cli: &Cli) -> Result<(u8, String)> {
    match &cli.command {
        Command::Validate { file } => validate(file, cli.kind.unwrap_or(Kind::Kloop)),
        Command::Invariants { file } => {
            let report = match cli.kind {
                Some(Kind::Symetron) => symetron_report(&load_symetron(file, cli.kind)?, cli.cap)?,
                _ => loop_report(&load_loop(file, cli.kind)?.l, cli.cap)?,
            };
            Ok((0, report.to_string()))
        }
        Command::Identities { file } => identities(&load_loop(file, cli.kind)?.l, cli.cap),
        Command::Convert { file, to, basepoint } => convert(file, *to, *basepoint),
        Command::Subloops { file } => {
            let ld = load_loop(file, cli.kind)?;
            let subs = enumerate_subloops(&ld.l, cli.cap)?;
            let mut out = String::new();
            line(&mut out, "count", subs.len());
            for c in &subs {
                line(&mut out, "subloop", serialize_subset(&ld.set_to_file(c)));
            }
            Ok((0, out))
        }
        Command::Normal { file, subloop } => {
            let ld = load_loop(file, cli.kind)?;
            let c = checked_subloop(&ld, subloop)?;
            let (by_inner, by_cosets) = (is_normal(&ld.l, &c), is_normal_by_cosets(&ld.l, &c));
            let mut out = String::new();
            line(&mut out, "normal", by_inner);
            line(&mut out, "normal_by_cosets", by_cosets);
            Ok((u8::from(!(by_inner && by_cosets)), out))
        }
        Command::Quotient { file, subloop } => {
            let ld = load_loop(file, cli.kind)?;
            let c = checked_subloop(&ld, subloop)?;
            let q = quotient(&ld.l, &c)?;
            Ok((0, serialize_table(&q.table) + "\n"))
        }
        Command::Centralizer { file, element } => {
            centralizer_cmd(&load_loop(file, cli.kind)?, *element, cli.cap)
        }
        Command::Iso { a, b } => {
            let (la, lb) = (load_loop(a, cli.kind)?, load_loop(b, cli.kind)?);
            let mut out = String::new();
            match find_isomorphism(&la.l, &lb.l) {
                Some(map) => {
                    line(&mut out, "isomorphic", true);
                    let images = (0..la.l.order()).map(|x| lb.to_file(map[la.to_loop(x)]));
                    line(&mut out, "map", csv(images));
                    Ok((0, out))
                }
                None => {
                    line(&mut out, "isomorphic", false);
                    Ok((1, out))
                }
            }
        }
        Command::Cover { file, subset } => {
            let s = load_symetron(file, cli.kind)?;
            let x = parse_subset(subset, s.order())?;
            let pairs = cover_by_translates(&s, &x, cli.cap)?;
            let mut out = String::new();
            line(&mut out, "translates", pairs.len());
            for (u, v) in pairs {
                line(&mut out, "pair", format!("{u},{v}"));
            }
            Ok((0, out))
        }
        Command::Enumerate { order, split } => enumerate(*order, cli.cap, split.as_deref()),
    }
}

fn checked_subloop(ld: &Loaded, literal: &str) -> Result<SubsetMask> {
    let c = ld.subset(literal)?;
    if !is_subloop(&ld.l, &c) {
        return Err(Error::Precondition("the given set is not a subloop").into());
    }
    Ok(c)
}

fn validate(file: &Path, kind: Kind) -> Result<(u8, String)> {
    let mut out = String::new();
    if kind == Kind::Symetron {
        line(&mut out, "kind", "symetron");
        let t = read_table(file)?;
        line(&mut out, "order", t.order());
        return Ok(match make_symetron(&t) {
            Ok(_) => {
                line(&mut out, "valid", true);
                (0, out)
            }
            Err(e @ (Error::NotSymetron { .. } | Error::NoUniqueMidpoint { .. })) => {
                line(&mut out, "valid", false);
                line(&mut out, "reason", e);
                (1, out)
            }
            Err(e) => return Err(e.into()),
        });
    }
    let ld = load_loop(file, Some(kind))?;
    let l = &ld.l;
    line(&mut out, "kind", kind_name(kind));
    line(&mut out, "order", l.order());
    line(&mut out, "identity", ld.to_file(0));
    let mut valid = true;
    if matches!(kind, Kind::Bol | Kind::Kloop) {
        line(&mut out, "is_bol", l.is_bol());
        if let Some((a, b, c)) = l.bol_witness() {
            valid = false;
            line(&mut out, "bol_witness", csv([a, b, c].map(|x| ld.to_file(x))));
        }
    }
    if kind == Kind::Kloop {
        line(&mut out, "is_aip", l.is_aip());
        if let Some((a, b)) = l.aip_witness() {
            valid = false;
            line(&mut out, "aip_witness", csv([a, b].map(|x| ld.to_file(x))));
        }
        line(&mut out, "is_u2d", l.is_uniquely_2_divisible());
        line(&mut out, "is_associative", l.is_associative());
        if let Some((a, b, c)) = l.table().associativity_witness() {
            line(&mut out, "associativity_witness", csv([a, b, c].map(|x| ld.to_file(x))));
        }
    }
    line(&mut out, "valid", valid);
    Ok((u8::from(!valid), out))
}

fn kind_name(kind: Kind) -> &'static str {
    match kind {
        Kind::Loop => "loop",
        Kind::Bol => "bol",
        Kind::Kloop => "kloop",
        Kind::Symetron => "symetron",
    }
}

fn identities(l: &LoopStructure, cap: usize) -> Result<(u8, String)> {
    let report = check_kloop_identities(l)?;
    let mut out = String::new();
    let mut ok = report.all_hold();
    for item in &report.items {
        let value = match &item.witness {
            None => "pass".to_owned(),
            Some(w) => format!("fail {}", csv(w)),
        };
        line(&mut out, &format!("item_{}", item.id), value);
    }
    let item10 = if l.is_uniquely_2_divisible() {
        let holds = l.check_involutive_fpf_is_neg(cap)?;
        ok &= holds;
        if holds {
            "pass"
        } else {
            "fail"
        }
    } else {
        "n/a"
    };
    line(&mut out, "item_10", item10);
    Ok((u8::from(!ok), out))
}

fn convert(file: &Path, to: Target, basepoint: usize) -> Result<(u8, String)> {
    let t = read_table(file)?;
    let table = match to {
        Target::Symetron => {
            let l = make_loop(&t)?;
            kloop_to_symetron(&l)?.table().relabel(l.relabeling())?
        }
        Target::Kloop => symetron_to_kloop(&make_symetron(&t)?, basepoint)?.table().clone(),
    };
    Ok((0, serialize_table(&table) + "\n"))
}

fn centralizer_cmd(ld: &Loaded, element: usize, cap: usize) -> Result<(u8, String)> {
    let l = &ld.l;
    if !l.is_kloop() {
        return Err(Error::Precondition("K-loop required").into());
    }
    let x = ld.element(element)?;
    let c = centralizer(l, x);
    let z = center_of_centralizer(l, x);
    let mut out = String::new();
    line(&mut out, "centralizer", serialize_subset(&ld.set_to_file(&c)));
    line(&mut out, "center", serialize_subset(&ld.set_to_file(&z)));
    let fpf = match is_fixed_point_free(l, cap) {
        Ok(b) => b,
        Err(Error::CapExceeded { .. }) => {
            line(&mut out, "is_fixed_point_free", "cap-exceeded");
            return Ok((0, out));
        }
        Err(e) => return Err(e.into()),
    };
    line(&mut out, "is_fixed_point_free", fpf);
    if !fpf {
        return Ok((0, out));
    }
    let generated = subloop_closure(l, &SubsetMask::singleton(l.order(), x));
    let abelian = is_abelian_subloop(l, &z);
    let contains = generated.is_subset(&z);
    line(&mut out, "center_is_abelian_subloop", abelian);
    line(&mut out, "center_contains_generated", contains);
    Ok((u8::from(!(abelian && contains)), out))
}

fn enumerate(order: usize, cap: usize, split: Option<&Path>) -> Result<(u8, String)> {
    let tables = enumerate_kloops(order, cap)?;
    let total = tables.len();
    let mut out = String::new();
    match split {
        None => {
            for (i, t) in tables.iter().enumerate() {
                writeln!(out, "# {}/{total}\n{}", i + 1, serialize_table(t)).expect("writing to a String");
            }
        }
        Some(dir) => {
            std::fs::create_dir_all(dir).map_err(|source| KloopError::Write { path: dir.into(), source })?;
            line(&mut out, "classes", total);
            for (i, t) in tables.iter().enumerate() {
                let path = dir.join(format!("kloop-{order}-{}.tbl", i + 1));
                std::fs::write(&path, serialize_table(t) + "\n")
                    .map_err(|source| KloopError::Write { path: path.clone(), source })?;
                line(&mut out, "file", path.display());
            }
        }
    }
    Ok((0, out))
}
