//! Graphviz rendering. One rank per noncompact length, so the minus side sits
//! above the invisible bullet and the plus side below it; Knapp–Stein partners
//! are joined by dashed undirected lines.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::config::EdgeSet;
use crate::error::Result;
use crate::multiplet::{Multiplet, Side};

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn emit_dot(m: &Multiplet, edges: EdgeSet) -> Result<Vec<u8>> {
    m.validate()?;
    let mut out = String::new();
    let _ = writeln!(out, "digraph multiplet {{");
    let _ = writeln!(
        out,
        "  // {} rank {}, {} arrows",
        m.algebra.as_str(),
        m.rank,
        match edges {
            EdgeSet::Reduced => "non-composite",
            EdgeSet::All => "all",
        }
    );
    let _ = writeln!(out, "  rankdir=TB;");
    let _ = writeln!(out, "  node [shape=box, fontname=\"monospace\"];");

    for v in &m.vertices {
        let ls: Vec<String> = v.signature.labels.iter().map(ToString::to_string).collect();
        let label = format!(
            "{}\\n{{{}; {}}}",
            escape(&v.signature.name),
            escape(&ls.join(", ")),
            escape(&v.signature.c.to_string())
        );
        let _ = writeln!(out, "  v{} [label=\"{}\"];", v.id, label);
    }

    let mut layers: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in &m.vertices {
        layers.entry(v.length).or_default().push(v.id);
    }
    for ids in layers.values() {
        let names: Vec<String> = ids.iter().map(|i| format!("v{i}")).collect();
        let _ = writeln!(out, "  {{ rank=same; {}; }}", names.join("; "));
    }

    // Knapp–Stein symmetry centre between the two halves
    let _ = writeln!(out, "  ks_bullet [shape=point, style=invis];");
    let last_minus = m
        .vertices
        .iter()
        .filter(|v| v.side == Side::Minus)
        .map(|v| v.length)
        .max();
    let first_plus = m
        .vertices
        .iter()
        .filter(|v| v.side == Side::Plus)
        .map(|v| v.length)
        .min();
    for v in &m.vertices {
        if Some(v.length) == last_minus && v.side == Side::Minus {
            let _ = writeln!(out, "  v{} -> ks_bullet [style=invis];", v.id);
        }
    }
    for v in &m.vertices {
        if Some(v.length) == first_plus && v.side == Side::Plus {
            let _ = writeln!(out, "  ks_bullet -> v{} [style=invis];", v.id);
        }
    }

    for e in m
        .edges
        .iter()
        .filter(|e| edges == EdgeSet::All || e.reduced)
    {
        let label = e.label().unwrap_or_else(|| format!("{}: {}", e.root, e.m));
        let style = if e.reduced { "" } else { ", style=dotted" };
        let _ = writeln!(
            out,
            "  v{} -> v{} [label=\"{}\"{}];",
            e.from,
            e.to,
            escape(&label),
            style
        );
    }
    for &(a, b) in &m.ks_pairs {
        let _ = writeln!(
            out,
            "  v{a} -> v{b} [dir=none, style=dashed, color=gray, constraint=false];"
        );
    }
    let _ = writeln!(out, "}}");
    Ok(out.into_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiplet::{build_multiplet, AlgebraTag};
    use crate::rootsys::Labels;

    fn arrows(dot: &str) -> Vec<String> {
        dot.lines()
            .filter(|l| l.contains(" -> v") && l.contains("label="))
            .map(|l| l.split(" [").next().unwrap().trim().to_string())
            .collect()
    }

    #[test]
    fn nodes_and_arrows() {
        let m = build_multiplet(6, &Labels::Symbolic, AlgebraTag::SoStar).unwrap();
        let dot = String::from_utf8(emit_dot(&m, EdgeSet::Reduced).unwrap()).unwrap();
        let nodes = dot
            .lines()
            .filter(|l| {
                l.trim_start().starts_with('v') && l.contains("[label=") && !l.contains("->")
            })
            .count();
        assert_eq!(nodes, 32);
        assert_eq!(arrows(&dot).len(), 48);
        assert!(dot.contains("label=\"6_{56}\""));
        assert_eq!(dot.matches("style=dashed").count(), 16);
    }

    #[test]
    fn all_edges_superset() {
        let m = build_multiplet(6, &Labels::Symbolic, AlgebraTag::SoStar).unwrap();
        let red = String::from_utf8(emit_dot(&m, EdgeSet::Reduced).unwrap()).unwrap();
        let all = String::from_utf8(emit_dot(&m, EdgeSet::All).unwrap()).unwrap();
        let (red, all) = (arrows(&red), arrows(&all));
        assert!(all.len() > red.len());
        assert!(red.iter().all(|a| all.contains(a)));
    }
}
