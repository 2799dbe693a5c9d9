//! Bicrossed product of a matched pair: Kac compatibility, Hopf axioms and the antipode.
//!
//! Run with `cargo run --example bicrossed_product`.

use chroma::extensions::{build_bicrossed, kac_condition, kac_violation, FiniteGroup, MatchedPair, Sigma, Tau};
use chroma::hopf::{check_axioms, solve_antipode, Mode};
use chroma::scalars::Rational01;

fn main() {
    // C3 acting on C7 by squaring
    let auts: Vec<Vec<usize>> = (0..3).map(|k| (0..7).map(|x| x * 2usize.pow(k) % 7).collect()).collect();
    let mp = MatchedPair::with_right_action(FiniteGroup::cyclic(7), FiniteGroup::cyclic(3), &auts).unwrap();
    println!("matched pair valid: {}", mp.validate());

    let sigma = Sigma::trivial(&mp);
    let tau = Tau::trivial(&mp);
    let b = build_bicrossed(&mp, &sigma, &tau, None).unwrap();
    println!("dimension {}, conductor {}", b.algebra.dim, b.algebra.conductor);
    println!("axioms: {}", serde_json::to_string(&check_axioms(&b.algebra, Mode::Plain).unwrap()).unwrap());
    let s = solve_antipode(&b.algebra, Mode::Plain).unwrap();
    println!("antipode laws pass: {}", s.all_pass());

    // a single corrupted cocycle value breaks compatibility and the Hopf structure
    let mut bad = Sigma::trivial(&mp);
    bad.values[1][1][1] = Rational01::new(1, 7);
    println!("corrupted σ: kac {} at {:?}", kac_condition(&mp, &bad, &tau), kac_violation(&mp, &bad, &tau));
    let b = build_bicrossed(&mp, &bad, &tau, None).unwrap();
    println!("failing axioms: {:?}", check_axioms(&b.algebra, Mode::Plain).unwrap().failures());
}
