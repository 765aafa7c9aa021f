//! Plain-text exchange formats.
//!
//! Matrices (`rational-coo`): a header `rational-coo N N nnz`, then one line
//! `row col p/q` per nonzero entry on or above the diagonal, 0-based colex
//! ranks. The lower triangle is implied by symmetry.
//!
//! Families: `#` lines are comments, a header `n=<int> k=<int>`, then one
//! block per line as 1-based space-separated points.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::families::SetFamily;
use crate::matrix::DenseRationalMatrix;
use crate::scheme::Subset;

pub const COO_MAGIC: &str = "rational-coo";

pub fn write_matrix(m: &DenseRationalMatrix) -> String {
    let entries: Vec<_> = m.upper_nonzeros().collect();
    let mut out = format!("{COO_MAGIC} {} {} {}\n", m.dim(), m.dim(), entries.len());
    for (u, v, x) in entries {
        let _ = writeln!(out, "{u} {v} {x}");
    }
    out
}

fn perr<T>(line: usize, msg: impl std::fmt::Display) -> Result<T> {
    Err(Error::Parse(format!("line {line}: {msg}")))
}

pub fn parse_matrix(text: &str) -> Result<DenseRationalMatrix> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let Some((hl, header)) = lines.next() else {
        return perr(1, "missing header");
    };
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 4 || fields[0] != COO_MAGIC {
        return perr(hl + 1, format!("expected `{COO_MAGIC} N N nnz`, got {header:?}"));
    }
    let num = |s: &str| s.parse::<usize>().map_err(|_| Error::Parse(format!("line {}: bad integer {s:?}", hl + 1)));
    let (rows, cols, nnz) = (num(fields[1])?, num(fields[2])?, num(fields[3])?);
    if rows != cols {
        return perr(hl + 1, format!("matrix must be square, got {rows}x{cols}"));
    }
    let mut m = DenseRationalMatrix::zeros(rows);
    let mut seen = HashSet::new();
    let mut count = 0;
    for (ln, line) in lines {
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() != 3 {
            return perr(ln + 1, format!("expected `row col p/q`, got {line:?}"));
        }
        let (u, v) = (
            f[0].parse::<usize>().map_err(|_| Error::Parse(format!("line {}: bad row {:?}", ln + 1, f[0])))?,
            f[1].parse::<usize>().map_err(|_| Error::Parse(format!("line {}: bad column {:?}", ln + 1, f[1])))?,
        );
        if u > v || v >= rows {
            return perr(ln + 1, format!("entry ({u},{v}) not in the upper triangle of a {rows}x{rows} matrix"));
        }
        if !seen.insert((u, v)) {
            return perr(ln + 1, format!("entry ({u},{v}) repeated"));
        }
        let x: Rational = f[2].parse().map_err(|e| Error::Parse(format!("line {}: {e}", ln + 1)))?;
        m.set(u, v, x.clone());
        m.set(v, u, x);
        count += 1;
    }
    if count != nnz {
        return perr(hl + 1, format!("header announces {nnz} entries, found {count}"));
    }
    Ok(m)
}

pub fn write_family(family: &SetFamily) -> String {
    let mut out = format!("n={} k={}\n", family.n(), family.k());
    for b in family.blocks() {
        let pts: Vec<String> = b.points().map(|p| p.to_string()).collect();
        let _ = writeln!(out, "{}", pts.join(" "));
    }
    out
}

pub fn parse_family(text: &str) -> Result<SetFamily> {
    let mut header: Option<(u32, u32)> = None;
    let mut blocks = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((n, k)) = header else {
            header = Some(parse_family_header(line).ok_or_else(|| {
                Error::Parse(format!("line {}: expected `n=<int> k=<int>`, got {line:?}", ln + 1))
            })?);
            continue;
        };
        let points = line
            .split_whitespace()
            .map(|p| p.parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("line {}: bad point in {line:?}", ln + 1)))?;
        if let Some(&p) = points.iter().find(|&&p| p == 0 || p > n) {
            return perr(ln + 1, format!("point {p} outside 1..={n}"));
        }
        let b = Subset::from_points(&points).map_err(|e| Error::Parse(format!("line {}: {e}", ln + 1)))?;
        if b.len() != k {
            return perr(ln + 1, format!("block has {} points, expected {k}", b.len()));
        }
        blocks.push(b);
    }
    let Some((n, k)) = header else {
        return perr(1, "missing `n=<int> k=<int>` header");
    };
    SetFamily::new(n, k, blocks).map_err(|e| Error::Parse(e.to_string()))
}

fn parse_family_header(line: &str) -> Option<(u32, u32)> {
    let mut n = None;
    let mut k = None;
    for tok in line.split_whitespace() {
        let (key, val) = tok.split_once('=')?;
        let val = val.parse().ok()?;
        match key {
            "n" if n.is_none() => n = Some(val),
            "k" if k.is_none() => k = Some(val),
            _ => return None,
        }
    }
    Some((n?, k?))
}
