use std::fmt::Write as _;

use super::config::EdgeSet;
use crate::error::Result;
use crate::multiplet::Multiplet;

fn push_row(out: &mut String, cells: &[String], widths: &[usize]) {
    let line: Vec<String> = cells
        .iter()
        .zip(widths)
        .map(|(c, &w)| format!("{c:<w$}"))
        .collect();
    let _ = writeln!(out, "{}", line.join("  ").trim_end());
}

fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        push_row(&mut out, r, &widths);
    }
    out
}

/// Signatures first, then the arrows.
pub fn emit_table(m: &Multiplet, edges: EdgeSet) -> Result<Vec<u8>> {
    m.validate()?;
    let k = m.rank - 1;

    let mut header = vec!["id".to_string(), "name".into(), "side".into()];
    header.extend((1..=k).map(|i| format!("n{i}")));
    header.extend(["c".to_string(), "d".into()]);
    let mut rows = vec![header];
    for v in &m.vertices {
        let mut r = vec![
            v.id.to_string(),
            v.signature.name.clone(),
            v.side.as_str().into(),
        ];
        r.extend(v.signature.labels.iter().map(ToString::to_string));
        r.push(v.signature.c.to_string());
        r.push(
            v.signature
                .d
                .as_ref()
                .map_or("-".into(), ToString::to_string),
        );
        rows.push(r);
    }

    let mut out = format!(
        "# {} rank {}: {} vertices\n",
        m.algebra.as_str(),
        m.rank,
        m.vertices.len()
    );
    out.push_str(&aligned(&rows));
    if let Some(v) = m.finite_dim_vertex() {
        if let Some(dim) = &v.dim_e {
            let _ = writeln!(out, "# dim E at {} = {}", v.signature.name, dim);
        }
    }

    let shown: Vec<_> = m
        .edges
        .iter()
        .filter(|e| edges == EdgeSet::All || e.reduced)
        .collect();
    let _ = writeln!(out, "\n# {} arrows", shown.len());
    let mut arrows = vec![vec![
        "from".to_string(),
        "to".into(),
        "label".into(),
        "root".into(),
        "m".into(),
        "reduced".into(),
    ]];
    for e in shown {
        arrows.push(vec![
            m.vertices[e.from].signature.name.clone(),
            m.vertices[e.to].signature.name.clone(),
            e.label().unwrap_or_else(|| "-".into()),
            e.root.to_string(),
            e.m.to_string(),
            e.reduced.to_string(),
        ]);
    }
    out.push_str(&aligned(&arrows));
    Ok(out.into_bytes())
}
