//! Weyl groupoid orbit of a rank-two colored datum over C3, with its diagram classes.
//!
//! Run with `cargo run --example weyl_orbit`.

use chroma::datum::DatumJson;
use chroma::dynkin::{colored_diagram, diagram_classes, generalized_diagram, render_text};
use chroma::weyl::{cartan_row, weyl_orbit};

fn main() {
    let d = serde_json::from_str::<DatumJson>(include_str!("../data/c3_rank2.json")).unwrap().build().unwrap();
    let orbit = weyl_orbit(&d, 1024);
    println!("{} nodes, {} edges, truncated: {}", orbit.nodes.len(), orbit.edges.len(), orbit.truncated);
    for (k, n) in orbit.nodes.iter().enumerate() {
        let rows: Vec<_> = (0..n.rank()).map(|p| cartan_row(n.q(), p).ok()).collect();
        println!("node {k}: {}  |  {}", render_text(&generalized_diagram(n.q())), first_line(&render_text(&colored_diagram(n))));
        println!("         cartan rows {rows:?}");
    }
    let classes = diagram_classes(&orbit.nodes, &d.beta().automorphisms()).unwrap();
    println!("{} classes modulo β-preserving automorphisms: {classes:?}", classes.len());
}

fn first_line(s: &str) -> &str {
    s.lines().next().unwrap_or("")
}
