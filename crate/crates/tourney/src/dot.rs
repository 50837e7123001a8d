//! Graphviz export.

use std::fmt::Write;

use tourney_core::Tournament;

/// Renders a tournament as a Graphviz digraph. Every vertex gets a node line
/// and every ordered pair appears as exactly one arc.
pub fn to_dot(t: &Tournament) -> String {
    let n = t.order();
    let mut out = String::from("digraph tournament {\n");
    for v in 0..n {
        writeln!(out, "  {v};").expect("writing to a string cannot fail");
    }
    for i in 0..n {
        for j in i + 1..n {
            let forward = t.has_arc(i, j).expect("pair is in range");
            let (from, to) = if forward { (i, j) } else { (j, i) };
            writeln!(out, "  {from} -> {to};").expect("writing to a string cannot fail");
        }
    }
    out.push_str("}\n");
    out
}
