//! Rank-four datum over the Klein four-group: orbit size and the distinct diagram pairs.
//!
//! Run with `cargo run --release --example klein_four_orbit`.

use std::time::Instant;

use chroma::datum::DatumJson;
use chroma::dynkin::{colored_diagram, diagram_classes, generalized_diagram, render_text};
use chroma::weyl::{check_consistent_coloring, weyl_orbit};

fn main() {
    let d = serde_json::from_str::<DatumJson>(include_str!("../data/klein4.json")).unwrap().build().unwrap();
    let start = Instant::now();
    let orbit = weyl_orbit(&d, 4096);
    println!("{} nodes in {:.2?}", orbit.nodes.len(), start.elapsed());
    println!("degree coloring consistent: {}", check_consistent_coloring(&orbit));
    // classes up to vertex relabeling, keeping degrees fixed
    let g = d.group();
    let identity: Vec<_> = (0..g.rank()).map(|i| g.generator(i)).collect();
    let classes = diagram_classes(&orbit.nodes, &[identity]).unwrap();
    println!("{} distinct (generalized, colored) diagram pairs", classes.len());
    for c in classes.iter().take(8) {
        let n = &orbit.nodes[c[0]];
        println!("x{:<3} {}", c.len(), render_text(&generalized_diagram(n.q())));
        println!("     {}", render_text(&colored_diagram(n)).replace('\n', "\n     "));
    }
}
