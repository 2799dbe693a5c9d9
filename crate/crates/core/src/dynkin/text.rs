use super::{Diagram, DiagramKind};
use crate::groups::{Element, FinAbGroup};

const GLYPHS: [&str; 4] = ["○", "●", "⊗", "⊙"];

fn glyph(group: &FinAbGroup, e: &Element) -> String {
    if group.order() <= 4 {
        GLYPHS[group.index(e)].to_string()
    } else {
        let parts: Vec<String> = e.0.iter().map(|x| x.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

/// `○=(0,0) ●=(1,0) …` for groups small enough to use glyphs; empty otherwise.
pub fn glyph_legend(group: &FinAbGroup) -> String {
    if group.order() > 4 {
        return String::new();
    }
    group
        .elements()
        .iter()
        .map(|e| {
            let parts: Vec<String> = e.0.iter().map(|x| x.to_string()).collect();
            format!("{}=({})", glyph(group, e), parts.join(","))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn vertex_token(d: &Diagram, k: usize) -> String {
    let v = &d.vertices[k];
    let mark = match (d.kind, &d.group, &v.degree) {
        (DiagramKind::Colored, Some(g), Some(e)) => glyph(g, e),
        _ => "○".to_string(),
    };
    format!("{mark}^{}", v.label.pretty())
}

fn edge_token(label: &Option<crate::scalars::Scalar>) -> String {
    match label {
        Some(s) => s.pretty(),
        None => "·".to_string(),
    }
}

/// Glyph rendering: a single line `○^ω —q^-1— ○^q` when the diagram is a path in vertex
/// order, otherwise a vertex list and an edge list. Colored diagrams over groups of order at
/// most 4 get a legend line.
pub fn render_text(d: &Diagram) -> String {
    let n = d.rank();
    let is_path = d.edges.len() + 1 == n && d.edges.iter().enumerate().all(|(k, e)| e.i == k && e.j == k + 1);
    let mut out = if is_path || n == 1 {
        let mut s = vertex_token(d, 0);
        for e in &d.edges {
            match &e.label {
                Some(l) => s.push_str(&format!(" —{}— ", l.pretty())),
                None => s.push_str(" ——— "),
            }
            s.push_str(&vertex_token(d, e.j));
        }
        s
    } else {
        let verts: Vec<String> = (0..n).map(|k| format!("v{}:{}", k + 1, vertex_token(d, k))).collect();
        let edges: Vec<String> = d
            .edges
            .iter()
            .map(|e| format!("v{}—v{}:{}", e.i + 1, e.j + 1, edge_token(&e.label)))
            .collect();
        format!("{} | {}", verts.join(" "), edges.join(", "))
    };
    if let (DiagramKind::Colored, Some(g)) = (d.kind, &d.group) {
        let legend = glyph_legend(g);
        if !legend.is_empty() {
            out.push_str(&format!("\nlegend: {legend}"));
        }
    }
    out
}
