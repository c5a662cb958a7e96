//! Plain-text file formats for seeds and quivers.
//!
//! Both formats are line-based: blank lines and lines starting with `#`
//! are ignored, and `parse(render(x)) == x` exactly.
//!
//! **Seed format** — the seed data `(B, y, labels)`; cluster variables are
//! always the fresh initial ones:
//!
//! ```text
//! # header line: n m
//! 2 2
//! # n rows of the exchange matrix B, n integers each
//! 0 -2
//! 2 0
//! # n coefficient monomials in z1..zm (written `1` when trivial)
//! z1*z2^-1
//! z2^-1
//! # optional: `labels` followed by n whitespace-free names
//! labels x1 x2
//! ```
//!
//! **Quiver format** — header `n m`, then one arrow per line as
//! `src dst mult` with 0-based vertices (frozen vertices are `n..n+m-1`):
//!
//! ```text
//! 2 2
//! 0 1 2
//! 0 2 1
//! 3 0 1
//! 3 1 1
//! ```

use std::fmt::Write as _;

use itertools::Itertools;
use thiserror::Error;

use crate::quiver::Quiver;
use crate::seed::{ExchangeMatrix, Seed};
use crate::semifield::TropMonomial;

/// Errors raised when parsing a seed or quiver file.
#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum IoError {
    /// A malformed line, with its 1-based line number in the input text.
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    /// The lines parsed individually but do not form a valid object.
    #[error("{0}")]
    Invalid(String),
}

fn syntax(line: usize, message: impl Into<String>) -> IoError {
    IoError::Syntax {
        line,
        message: message.into(),
    }
}

/// Content lines with their original 1-based line numbers; comments and
/// blanks skipped.
fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

fn parse_header(lines: &[(usize, &str)]) -> Result<(usize, usize), IoError> {
    let &(lineno, line) = lines
        .first()
        .ok_or_else(|| syntax(1, "empty input: expected a header line `n m`"))?;
    let nums: Vec<&str> = line.split_whitespace().collect();
    if nums.len() != 2 {
        return Err(syntax(lineno, "header must be two integers: `n m`"));
    }
    let n = nums[0]
        .parse::<usize>()
        .map_err(|_| syntax(lineno, format!("invalid vertex count '{}'", nums[0])))?;
    let m = nums[1]
        .parse::<usize>()
        .map_err(|_| syntax(lineno, format!("invalid frozen count '{}'", nums[1])))?;
    Ok((n, m))
}

fn parse_int_row(lineno: usize, line: &str, expected: usize) -> Result<Vec<i64>, IoError> {
    let row: Result<Vec<i64>, IoError> = line
        .split_whitespace()
        .map(|tok| {
            tok.parse::<i64>()
                .map_err(|_| syntax(lineno, format!("invalid integer '{tok}'")))
        })
        .collect();
    let row = row?;
    if row.len() != expected {
        return Err(syntax(
            lineno,
            format!("expected {expected} integers, found {}", row.len()),
        ));
    }
    Ok(row)
}

/// Renders a seed to the seed file format. Only the seed data `(B, y,
/// labels)` is stored: cluster variables are not serialized, so a parsed
/// seed always carries fresh initial variables. The `labels` line is
/// written only when the labels differ from the default `x1..xn`.
pub fn render_seed(s: &Seed) -> String {
    let n = s.n();
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", n, s.m);
    for i in 0..n {
        let _ = writeln!(out, "{}", s.b.row(i).iter().join(" "));
    }
    for y in &s.y {
        let _ = writeln!(out, "{y}");
    }
    let default: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    if s.labels != default {
        let _ = writeln!(out, "labels {}", s.labels.iter().join(" "));
    }
    out
}

/// Parses the seed file format (see the module docs).
pub fn parse_seed(text: &str) -> Result<Seed, IoError> {
    let lines = content_lines(text);
    let (n, m) = parse_header(&lines)?;
    let body = &lines[1..];
    if body.len() < 2 * n {
        let last = lines.last().map_or(1, |&(l, _)| l);
        return Err(syntax(
            last,
            format!(
                "seed with n = {n} needs {n} matrix rows and {n} coefficient lines, found {} content lines",
                body.len()
            ),
        ));
    }

    let mut entries = Vec::with_capacity(n);
    for &(lineno, line) in &body[..n] {
        entries.push(parse_int_row(lineno, line, n)?);
    }
    let mut y = Vec::with_capacity(n);
    for &(lineno, line) in &body[n..2 * n] {
        let mono = TropMonomial::parse(line, m)
            .map_err(|e| syntax(lineno, format!("invalid coefficient monomial: {e}")))?;
        y.push(mono);
    }

    let mut labels = None;
    let rest = &body[2 * n..];
    match rest {
        [] => {}
        [(lineno, line)] => {
            let mut toks = line.split_whitespace();
            if toks.next() != Some("labels") {
                return Err(syntax(*lineno, "expected a `labels` line or end of file"));
            }
            let names: Vec<String> = toks.map(str::to_owned).collect();
            if names.len() != n {
                return Err(syntax(
                    *lineno,
                    format!("expected {n} labels, found {}", names.len()),
                ));
            }
            labels = Some(names);
        }
        _ => {
            return Err(syntax(
                rest[1].0,
                "unexpected content after the seed definition",
            ));
        }
    }

    let b = ExchangeMatrix::new(entries).map_err(|e| IoError::Invalid(e.to_string()))?;
    Seed::new(b, y, m, labels).map_err(|e| IoError::Invalid(e.to_string()))
}

/// Renders a quiver to the quiver file format.
pub fn render_quiver(q: &Quiver) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", q.n(), q.m());
    for (src, dst, mult) in q.arrows() {
        let _ = writeln!(out, "{src} {dst} {mult}");
    }
    out
}

/// Parses the quiver file format (see the module docs).
pub fn parse_quiver(text: &str) -> Result<Quiver, IoError> {
    let lines = content_lines(text);
    let (n, m) = parse_header(&lines)?;
    let total = n + m;
    let mut arrows = Vec::new();
    for &(lineno, line) in &lines[1..] {
        let row = parse_int_row(lineno, line, 3)?;
        let src = usize::try_from(row[0])
            .ok()
            .filter(|&v| v < total)
            .ok_or_else(|| {
                syntax(lineno, format!("source vertex {} out of range 0..{total}", row[0]))
            })?;
        let dst = usize::try_from(row[1])
            .ok()
            .filter(|&v| v < total)
            .ok_or_else(|| {
                syntax(lineno, format!("target vertex {} out of range 0..{total}", row[1]))
            })?;
        if row[2] < 1 {
            return Err(syntax(
                lineno,
                format!("multiplicity must be at least 1, found {}", row[2]),
            ));
        }
        if src == dst {
            return Err(syntax(lineno, format!("loop at vertex {src} is not allowed")));
        }
        if src >= n && dst >= n {
            return Err(syntax(
                lineno,
                format!("arrow between frozen vertices {src} and {dst} is not allowed"),
            ));
        }
        arrows.push((src, dst, row[2]));
    }
    Quiver::new(n, m, arrows).map_err(|e| IoError::Invalid(e.to_string()))
}
