use super::{Diagram, DiagramKind, Edge, Vertex};
use crate::error::{Error, Result};
use crate::groups::{Element, FinAbGroup};

const PALETTE: [&str; 8] = [
    "#ffffff", "#4c72b0", "#dd8452", "#55a868", "#c44e52", "#8172b3", "#937860", "#da8bc3",
];

fn residues(e: &Element) -> String {
    e.0.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Deterministic Graphviz output. Colored diagrams fill vertices by degree, with palette
/// slots assigned in group-index order.
pub fn emit_dot(d: &Diagram) -> String {
    let name = match d.kind {
        DiagramKind::Generalized => "generalized",
        DiagramKind::Colored => "colored",
    };
    let mut out = format!("graph {name} {{\n");
    if let Some(g) = &d.group {
        let orders: Vec<String> = g.orders().iter().map(|x| x.to_string()).collect();
        out.push_str(&format!("  group=\"{}\";\n", orders.join(",")));
    }
    out.push_str("  node [shape=circle, style=filled];\n");
    for (k, v) in d.vertices.iter().enumerate() {
        match (&v.degree, &d.group) {
            (Some(e), Some(g)) => {
                let fill = PALETTE[g.index(e) % PALETTE.len()];
                out.push_str(&format!(
                    "  v{} [label=\"{}\", degree=\"{}\", fillcolor=\"{fill}\"];\n",
                    k + 1,
                    v.label,
                    residues(e)
                ));
            }
            _ => out.push_str(&format!("  v{} [label=\"{}\", fillcolor=\"#ffffff\"];\n", k + 1, v.label)),
        }
    }
    for e in &d.edges {
        match &e.label {
            Some(l) => out.push_str(&format!("  v{} -- v{} [label=\"{l}\"];\n", e.i + 1, e.j + 1)),
            None => out.push_str(&format!("  v{} -- v{} [style=dashed];\n", e.i + 1, e.j + 1)),
        }
    }
    out.push_str("}\n");
    out
}

fn attr<'a>(body: &'a str, key: &str) -> Option<&'a str> {
    let pat = format!("{key}=\"");
    let start = body.find(&pat)? + pat.len();
    let len = body[start..].find('"')?;
    Some(&body[start..start + len])
}

fn vertex_id(tok: &str, line: usize) -> Result<usize> {
    tok.trim()
        .strip_prefix('v')
        .and_then(|n| n.parse::<usize>().ok())
        .filter(|&n| n > 0)
        .map(|n| n - 1)
        .ok_or(Error::Parse { pos: line, msg: format!("bad vertex id {tok:?}") })
}

/// Reads back the output of [`emit_dot`]. Error positions are line numbers.
pub fn parse_dot(src: &str) -> Result<Diagram> {
    let mut lines = src.lines().enumerate();
    let (_, head) = lines.next().ok_or(Error::Parse { pos: 0, msg: "empty input".into() })?;
    let kind = match head.trim() {
        "graph generalized {" => DiagramKind::Generalized,
        "graph colored {" => DiagramKind::Colored,
        _ => return Err(Error::Parse { pos: 0, msg: "unknown graph header".into() }),
    };
    let mut group = None;
    let mut vertices: Vec<Vertex> = Vec::new();
    let mut edges = Vec::new();
    for (no, line) in lines {
        let line = line.trim();
        if line == "}" || line.is_empty() || line.starts_with("node ") {
            continue;
        }
        let err = |msg: &str| Error::Parse { pos: no, msg: msg.to_string() };
        if let Some(orders) = attr(line, "group").filter(|_| line.starts_with("group=")) {
            let orders = orders
                .split(',')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<u64>().map_err(|_| err("bad group order")))
                .collect::<Result<Vec<_>>>()?;
            group = Some(FinAbGroup::new(orders)?);
            continue;
        }
        let (head, body) = line.split_once('[').ok_or_else(|| err("missing attributes"))?;
        if let Some((a, b)) = head.split_once("--") {
            let (i, j) = (vertex_id(a, no)?, vertex_id(b, no)?);
            let label = match attr(body, "label") {
                Some(l) => Some(l.parse()?),
                None => None,
            };
            edges.push(Edge { i: i.min(j), j: i.max(j), label });
        } else {
            let k = vertex_id(head, no)?;
            if k != vertices.len() {
                return Err(err("vertices out of order"));
            }
            let label = attr(body, "label").ok_or_else(|| err("vertex without label"))?.parse()?;
            let degree = match (attr(body, "degree"), &group) {
                (Some(r), Some(g)) => {
                    let res = r
                        .split(',')
                        .filter(|s| !s.is_empty())
                        .map(|s| s.parse::<i64>().map_err(|_| err("bad degree")))
                        .collect::<Result<Vec<_>>>()?;
                    Some(g.element(&res)?)
                }
                (Some(_), None) => return Err(err("degree without group")),
                _ => None,
            };
            vertices.push(Vertex { label, degree });
        }
    }
    Ok(Diagram { kind, group, vertices, edges })
}
