//! Automorphisms of a bicrossed product covering a pair of group automorphisms.
//!
//! Run with `cargo run --example extension_automorphisms`.

use chroma::extensions::{aut_ext_solve, default_root_bound, enumerate_aut_ext, FiniteGroup, MatchedPair};

fn main() {
    let auts: Vec<Vec<usize>> = (0..3).map(|k| (0..7).map(|x| x * 2usize.pow(k) % 7).collect()).collect();
    let mp = MatchedPair::with_right_action(FiniteGroup::cyclic(7), FiniteGroup::cyclic(3), &auts).unwrap();
    let n = default_root_bound(&mp);
    println!("default root bound: {n}");

    // inversion on C7, identity on C3
    let g: Vec<usize> = (0..7).map(|x| (7 - x) % 7).collect();
    let sol = aut_ext_solve(&mp, &g, &[0, 1, 2], 7).unwrap();
    println!("condition (i): {}, advisory: {:?}", sol.condition_i, sol.advisory);
    for s in &sol.solutions {
        println!("certified {}: f̃ on γ = {:?}", s.certified, s.automorphism.ftilde[1]);
    }

    let all = enumerate_aut_ext(&mp, n).unwrap();
    let total: usize = all.iter().map(|e| e.solution.solutions.len()).sum();
    println!("{} admissible (g, h) pairs, {total} automorphisms with roots of order dividing {n}", all.len());
}
