//! Text formats: Cayley tables and subset literals.
//!
//! A table file holds the order `n` followed by `n` rows of `n` decimal
//! indices. Whitespace is free-form and `#` starts a comment running to the
//! end of the line. Several tables may follow each other in one stream.

use std::fmt::Write as _;

use kloop_core::{CayleyTable, SubsetMask, MAX_ORDER};

use crate::error::{KloopError, Result};

struct Token<'a> {
    line: usize,
    text: &'a str,
}

fn tokens(text: &str) -> impl Iterator<Item = Token<'_>> {
    text.lines().enumerate().flat_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        body.split_whitespace().map(move |t| Token { line: i + 1, text: t })
    })
}

fn number(tok: &Token<'_>) -> Result<usize> {
    if !tok.text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(KloopError::malformed(tok.line, format!("non-numeric token {:?}", tok.text)));
    }
    tok.text
        .parse()
        .map_err(|_| KloopError::malformed(tok.line, format!("number {:?} is too large", tok.text)))
}

fn last_line(text: &str) -> usize {
    text.lines().count().max(1)
}

fn read_one<'a>(
    it: &mut impl Iterator<Item = Token<'a>>,
    first: Token<'a>,
    eof_line: usize,
) -> Result<CayleyTable> {
    let n = number(&first)?;
    if n == 0 || n > MAX_ORDER {
        return Err(KloopError::malformed(first.line, format!("order {n} outside 1..={MAX_ORDER}")));
    }
    let mut entries = Vec::with_capacity(n * n);
    for k in 0..n * n {
        let tok = it.next().ok_or_else(|| {
            KloopError::malformed(eof_line, format!("expected {} entries, found {k}", n * n))
        })?;
        let v = number(&tok)?;
        if v >= n {
            return Err(KloopError::malformed(
                tok.line,
                format!("entry {v} at row {}, column {} is not below the order {n}", k / n, k % n),
            ));
        }
        entries.push(v);
    }
    Ok(CayleyTable::new(n, entries)?)
}

/// Parses exactly one table; trailing tokens are an error.
pub fn parse_table(text: &str) -> Result<CayleyTable> {
    let eof = last_line(text);
    let mut it = tokens(text);
    let first = it.next().ok_or_else(|| KloopError::malformed(eof, "empty input"))?;
    let t = read_one(&mut it, first, eof)?;
    if let Some(extra) = it.next() {
        return Err(KloopError::malformed(extra.line, format!("unexpected trailing token {:?}", extra.text)));
    }
    Ok(t)
}

/// Parses a stream of consecutive tables (as written by `enumerate`).
pub fn parse_tables(text: &str) -> Result<Vec<CayleyTable>> {
    let eof = last_line(text);
    let mut it = tokens(text);
    let mut out = Vec::new();
    while let Some(first) = it.next() {
        out.push(read_one(&mut it, first, eof)?);
    }
    Ok(out)
}

/// `n` on the first line, then one line per row; no trailing newline.
pub fn serialize_table(t: &CayleyTable) -> String {
    let mut s = t.order().to_string();
    for row in t.rows() {
        s.push('\n');
        for (i, v) in row.iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            write!(s, "{v}").expect("writing to a String");
        }
    }
    s
}

/// Parses `"0,5,10"` into a subset of `0..order`. The empty literal is `∅`.
pub fn parse_subset(literal: &str, order: usize) -> Result<SubsetMask> {
    let bad = |message: String| KloopError::BadSubset { literal: literal.to_owned(), message };
    let mut set = SubsetMask::empty(order);
    if literal.trim().is_empty() {
        return Ok(set);
    }
    for part in literal.split(',') {
        let part = part.trim();
        let x: usize = part.parse().map_err(|_| bad(format!("{part:?} is not an index")))?;
        if x >= order {
            return Err(bad(format!("{x} is not below the order {order}")));
        }
        set.insert(x);
    }
    Ok(set)
}

/// Comma-separated members in increasing order.
pub fn serialize_subset(set: &SubsetMask) -> String {
    set.to_string()
}
