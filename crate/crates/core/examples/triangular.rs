//! Triangular structure from a commutation factor: Drinfeld element, reduction, 2-cocycle.
//!
//! Run with `cargo run --example triangular`.

use chroma::groups::{Bicharacter, FinAbGroup};
use chroma::scalars::Rational01;
use chroma::triangular::{emit_triangular, reduce};

fn main() {
    let g = FinAbGroup::new(vec![2, 4]).unwrap();
    let (h, q, z) = (Rational01::HALF, Rational01::new(1, 4), Rational01::ZERO);
    // β(e1,e1) = -1 gives a nontrivial Drinfeld element
    let beta = Bicharacter::new(g.clone(), vec![vec![h, h], vec![h, z]]).unwrap();
    println!("commutation factor: {}", beta.is_commutation_factor());
    let red = reduce(&beta).unwrap();
    println!("u = {:?}, radical of βκ has order {}", red.u, red.kernel.order());
    println!("quotient group {:?}", red.projection.target().orders());
    println!("{}", serde_json::to_string_pretty(&emit_triangular(&beta).unwrap()).unwrap());

    // a non-commutation factor is rejected
    let bad = Bicharacter::new(g, vec![vec![z, q], vec![z, z]]);
    println!("{:?}", bad.map(|b| emit_triangular(&b).err()));
}
