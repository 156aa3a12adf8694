use std::fmt::Write as _;

use kodag::cobweb::{cobweb_edges, CobwebTruncation};

/// Layered DOT drawing of a cobweb truncation: one `rank=same` group per
/// level, level 0 at the bottom, nodes labeled `j,s`.
pub fn cobweb_dot(t: &CobwebTruncation) -> String {
    let mut out = String::new();
    writeln!(out, "digraph cobweb {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=circle, fontsize=10];").unwrap();
    for level in 0..=t.max_level() {
        write!(out, "  {{ rank=same;").unwrap();
        for index in t.level_range(level) {
            write!(out, " v{index} [label=\"{}\"];", t.vertex(index)).unwrap();
        }
        writeln!(out, " }}").unwrap();
    }
    for (u, v) in cobweb_edges(t).arcs() {
        writeln!(out, "  v{u} -> v{v};").unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}
