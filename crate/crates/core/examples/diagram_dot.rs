//! Graphviz output for generalized and colored diagrams, and parsing it back.
//!
//! Run with `cargo run --example diagram_dot > diagrams.dot`.

use chroma::datum::DatumJson;
use chroma::dynkin::{colored_diagram, emit_dot, generalized_diagram, glyph_legend, parse_dot};

fn main() {
    let d = serde_json::from_str::<DatumJson>(include_str!("../data/klein4.json")).unwrap().build().unwrap();
    for dia in [generalized_diagram(d.q()), colored_diagram(&d)] {
        let dot = emit_dot(&dia);
        assert_eq!(parse_dot(&dot).unwrap(), dia);
        print!("{dot}");
    }
    eprintln!("{}", glyph_legend(d.group()));
}
