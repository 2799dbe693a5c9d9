//! A color bialgebra given by structure constants, verified and bosonized.
//!
//! Run with `cargo run --example bosonization`.

use chroma::hopf::{bosonize, check_axioms, check_flip, solve_antipode, Mode, StructJson};

fn main() {
    let h = serde_json::from_str::<StructJson>(include_str!("../data/super_line.json")).unwrap().build().unwrap();
    println!("super line, dim {}", h.dim);
    println!("plain axioms fail: {:?}", check_axioms(&h, Mode::Plain).unwrap().failures());
    println!("color axioms fail: {:?}", check_axioms(&h, Mode::Color).unwrap().failures());
    println!("braiding squares to the flip: {}", check_flip(&h).unwrap());
    let s = solve_antipode(&h, Mode::Color).unwrap();
    println!("color antipode found: {}", s.all_pass());

    let b = bosonize(&h).unwrap();
    println!("bosonization, dim {}", b.dim);
    println!("plain axioms fail: {:?}", check_axioms(&b, Mode::Plain).unwrap().failures());
    println!("antipode found: {}", solve_antipode(&b, Mode::Plain).map(|a| a.all_pass()).unwrap_or(false));
}
