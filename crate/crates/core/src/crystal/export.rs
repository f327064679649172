use std::fmt::Write as _;

use crate::crystal::graph::{CrystalGraph, IndexedCrystal};

const PALETTE: [&str; 3] = ["red", "blue", "green"];

pub fn color_name(color: usize) -> &'static str {
    PALETTE[(color - 1) % PALETTE.len()]
}

fn node_name(p: &crate::polytope::LatticePoint) -> String {
    let parts: Vec<String> = p.0.iter().map(|c| c.to_string()).collect();
    format!("\"{}\"", parts.join(","))
}

pub fn to_dot(g: &CrystalGraph) -> String {
    let mut out = String::from("digraph crystal {\n");
    for v in g.vertices.iter() {
        let _ = writeln!(out, "  {};", node_name(v));
    }
    for e in &g.edges {
        let _ = writeln!(
            out,
            "  {} -> {} [color={}, label=\"{}\"];",
            node_name(&e.source),
            node_name(&e.target),
            color_name(e.color),
            e.color
        );
    }
    out.push_str("}\n");
    out
}

pub fn to_json(g: &CrystalGraph) -> serde_json::Result<String> {
    serde_json::to_string_pretty(g)
}

/// DOT for a crystal on abstract vertices, named by their labels.
pub fn indexed_to_dot(ic: &IndexedCrystal) -> String {
    let mut out = String::from("digraph crystal {\n");
    for label in &ic.labels {
        let _ = writeln!(out, "  \"{label}\";");
    }
    for a in 1..=ic.n {
        for v in 0..ic.len() {
            if let Some(t) = ic.f(a, v) {
                let _ = writeln!(
                    out,
                    "  \"{}\" -> \"{}\" [color={}, label=\"{a}\"];",
                    ic.labels[v],
                    ic.labels[t],
                    color_name(a)
                );
            }
        }
    }
    out.push_str("}\n");
    out
}
