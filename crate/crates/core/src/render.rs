//! Hasse-diagram renderers. Classes are drawn, not vertices; the least class
//! sits at the bottom.

use std::fmt::Write as _;

use crate::error::Result;
use crate::profile::RkProfile;
use crate::validate::require_admissible;

/// Graphviz document with one node per class and one edge per cover pair,
/// drawn from the lower class to the upper one.
pub fn render_dot(profile: &RkProfile) -> Result<String> {
    require_admissible(profile)?;
    let q = profile.quotient();
    let mut out = String::new();
    out.push_str("digraph rk {\n");
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=box];\n");
    for c in q.classes() {
        writeln!(
            out,
            "  \"{rep}\" [label=\"{rep} | size={} | IL={}\"];",
            c.size,
            c.limit_count,
            rep = c.representative
        )
        .unwrap();
    }
    for (x, y) in q.cover_pairs() {
        writeln!(
            out,
            "  \"{}\" -> \"{}\";",
            q.class(x).representative,
            q.class(y).representative
        )
        .unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}

/// One line per level of longest-chain depth, top level first. Each class
/// prints as `REP(size,IL)`.
pub fn render_ascii(profile: &RkProfile) -> Result<String> {
    require_admissible(profile)?;
    let q = profile.quotient();
    let depths = q.depths();
    let levels = depths.iter().max().map_or(0, |d| d + 1);
    let mut out = String::new();
    for level in (0..levels).rev() {
        let row: Vec<String> = (0..q.len())
            .filter(|&c| depths[c] == level)
            .map(|c| {
                let s = q.class(c);
                format!("{}({},{})", s.representative, s.size, s.limit_count)
            })
            .collect();
        out.push_str(&row.join("  "));
        out.push('\n');
    }
    Ok(out)
}
