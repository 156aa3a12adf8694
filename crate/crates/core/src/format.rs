//! Plain-text encodings.
//!
//! Digraph: a header line `n m`, then `m` lines `u v` (0-based decimal
//! indices). Chain: one line of space-separated indices. Relation: `n` lines
//! of `n` characters, each `1` or `0`. Trailing blank lines are ignored; a
//! `\r\n` line ending is accepted.

use std::fmt::Write as _;

use thiserror::Error;

use crate::digraph::{Chain, Digraph, DigraphError, Relation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Invalid { line: usize, source: DigraphError },
    #[error("expected {expected} arc lines, found {found}")]
    MissingArcs { expected: usize, found: usize },
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_index(tok: &str, line: usize) -> Result<usize, FormatError> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax(
            line,
            format!("expected a decimal integer, found {tok:?}"),
        ));
    }
    tok.parse()
        .map_err(|_| syntax(line, format!("integer {tok:?} out of range")))
}

/// Exactly two integers on one line.
fn parse_pair(text: &str, line: usize) -> Result<(usize, usize), FormatError> {
    let mut toks = text.split_ascii_whitespace();
    match (toks.next(), toks.next(), toks.next()) {
        (Some(a), Some(b), None) => Ok((parse_index(a, line)?, parse_index(b, line)?)),
        _ => Err(syntax(
            line,
            format!("expected two integers, found {text:?}"),
        )),
    }
}

/// Lines with their 1-based numbers, trailing blank lines dropped.
fn content_lines(text: &str) -> Vec<(usize, &str)> {
    let mut lines: Vec<(usize, &str)> = text.lines().enumerate().map(|(i, l)| (i + 1, l)).collect();
    while lines.last().is_some_and(|(_, l)| l.trim().is_empty()) {
        lines.pop();
    }
    lines
}

pub fn parse_digraph(text: &str) -> Result<Digraph, FormatError> {
    let lines = content_lines(text);
    let mut lines = lines.into_iter();
    let (_, header) = lines
        .next()
        .ok_or_else(|| syntax(1, "missing header line"))?;
    let (n, m) = parse_pair(header, 1)?;
    let mut g = Digraph::empty(n);
    let mut found = 0;
    for (line, body) in lines {
        if found == m {
            return Err(syntax(line, "more arc lines than the header declares"));
        }
        let (u, v) = parse_pair(body, line)?;
        g.add_arc(u, v)
            .map_err(|source| FormatError::Invalid { line, source })?;
        found += 1;
    }
    if found != m {
        return Err(FormatError::MissingArcs { expected: m, found });
    }
    Ok(g)
}

pub fn write_digraph(g: &Digraph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.vertex_count(), g.arc_count()).unwrap();
    for (u, v) in g.arcs() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_chain(text: &str) -> Result<Chain, FormatError> {
    let lines = content_lines(text);
    if lines.len() > 1 {
        return Err(syntax(lines[1].0, "a chain occupies a single line"));
    }
    let order = match lines.first() {
        Some(&(_, body)) => body
            .split_ascii_whitespace()
            .map(|tok| parse_index(tok, 1))
            .collect::<Result<Vec<_>, _>>()?,
        None => Vec::new(),
    };
    Chain::new(order).map_err(|source| FormatError::Invalid { line: 1, source })
}

pub fn write_chain(c: &Chain) -> String {
    let mut out = String::new();
    for (i, v) in c.order().iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        write!(out, "{v}").unwrap();
    }
    out.push('\n');
    out
}

/// Parses the matrix form. Only the shape is checked, not the order axioms.
pub fn parse_relation(text: &str) -> Result<Relation, FormatError> {
    let lines = content_lines(text);
    let n = lines.len();
    let mut rows = Vec::with_capacity(n);
    for (line, body) in lines {
        let body = body.trim_end_matches([' ', '\t']);
        if body.len() != n {
            return Err(syntax(
                line,
                format!("expected {n} characters, found {}", body.len()),
            ));
        }
        let row = body
            .bytes()
            .map(|b| match b {
                b'1' => Ok(true),
                b'0' => Ok(false),
                other => Err(syntax(line, format!("unexpected byte {other:#04x}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    Relation::from_rows(&rows).map_err(|source| FormatError::Invalid { line: 1, source })
}

pub fn write_relation(r: &Relation) -> String {
    let n = r.vertex_count();
    let mut out = String::with_capacity(n * (n + 1));
    for u in 0..n {
        for v in 0..n {
            out.push(if r.leq(u, v) { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}
