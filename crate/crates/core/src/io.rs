//! The `rkp 1` text format.
//!
//! ```text
//! rkp 1
//! # comment
//! vertex a
//! vertex b
//! le a b        # a is dominated by b
//! il a 0
//! il b 1
//! ```
//!
//! Statements after the header may come in any order. `le` pairs are
//! closed reflexively and transitively; `il` labels the whole class of the
//! named vertex. Parsing does not check admissibility.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::preorder::{Preorder, Vertex};
use crate::profile::RkProfile;
use crate::validate::require_admissible;

pub const HEADER: &str = "rkp 1";

pub fn parse(text: &str) -> Result<RkProfile> {
    let mut header_seen = false;
    let mut vertices: Vec<Vertex> = Vec::new();
    let mut pairs: Vec<(Vertex, Vertex)> = Vec::new();
    let mut il: Vec<(Vertex, u64)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if !header_seen {
            if tokens != ["rkp", "1"] {
                return Err(Error::BadHeader { line: line_no });
            }
            header_seen = true;
            continue;
        }
        let name = |s: &str| {
            Vertex::new(s).map_err(|_| Error::MalformedLine {
                line: line_no,
                message: format!("invalid identifier `{s}`"),
            })
        };
        match tokens.as_slice() {
            ["vertex", v] => vertices.push(name(v)?),
            ["le", a, b] => pairs.push((name(a)?, name(b)?)),
            ["il", v, count] => {
                let count = count.parse::<u64>().map_err(|_| Error::MalformedLine {
                    line: line_no,
                    message: format!("invalid count `{count}`"),
                })?;
                il.push((name(v)?, count));
            }
            [kw, ..] if matches!(*kw, "vertex" | "le" | "il") => {
                return Err(Error::MalformedLine {
                    line: line_no,
                    message: format!("wrong number of arguments to `{kw}`"),
                })
            }
            [kw, ..] => {
                return Err(Error::MalformedLine {
                    line: line_no,
                    message: format!("unknown statement `{kw}`"),
                })
            }
            [] => unreachable!("blank lines are skipped"),
        }
    }
    if !header_seen {
        return Err(Error::BadHeader {
            line: text.lines().count() + 1,
        });
    }
    let order = Preorder::close(vertices, pairs)?;
    RkProfile::new(order, il.iter().map(|(v, c)| (v.as_str(), *c)))
}

/// Deterministic document for an admissible profile.
pub fn serialize(profile: &RkProfile) -> Result<String> {
    require_admissible(profile)?;
    Ok(write_document(profile))
}

/// Writes the document without checking admissibility.
pub(crate) fn write_document(profile: &RkProfile) -> String {
    let order = profile.order();
    let q = profile.quotient();
    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    for v in order.vertices() {
        writeln!(out, "vertex {v}").unwrap();
    }
    for c in 0..profile.class_count() {
        let m = profile.class_members(c);
        if m.len() > 1 {
            for (i, &a) in m.iter().enumerate() {
                let b = m[(i + 1) % m.len()];
                writeln!(out, "le {} {}", order.vertex(a), order.vertex(b)).unwrap();
            }
        }
    }
    // class indices follow representative order, so cover pairs come sorted
    for (x, y) in q.cover_pairs() {
        writeln!(
            out,
            "le {} {}",
            q.class(x).representative,
            q.class(y).representative
        )
        .unwrap();
    }
    for c in q.classes() {
        writeln!(out, "il {} {}", c.representative, c.limit_count).unwrap();
    }
    out
}
