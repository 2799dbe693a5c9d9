//! Color actions on group algebras and on a bicrossed product: support and the color test.
//!
//! Run with `cargo run --example color_group_algebra`.

use chroma::extensions::{
    build_bicrossed, check_color_matched_pair_def, is_color, ColorAction, FiniteGroup, MatchedPair, MonomialMap, Sigma,
    Tau,
};
use chroma::groups::{Bicharacter, FinAbGroup};
use chroma::hopf::{check_axioms, solve_antipode, Mode};
use chroma::scalars::Rational01;

fn main() {
    // k[C2 x C2], with the generator of C2 x C4 acting by swapping the last two basis vectors
    let v4 = FinAbGroup::new(vec![2, 2]).unwrap();
    let mp = MatchedPair::trivial(FiniteGroup::cyclic(1), FiniteGroup::from_abelian(&v4));
    let swap = MonomialMap::permutation(vec![0, 1, 3, 2]).unwrap();
    let half = Rational01::HALF;
    let zero = Rational01::ZERO;
    let g = FinAbGroup::new(vec![2, 4]).unwrap();
    let beta = Bicharacter::new(g, vec![vec![zero, half], vec![half, zero]]).unwrap();
    let action = ColorAction::new(beta, vec![swap.clone(), swap]).unwrap();

    let support = action.support();
    println!("support: {support:?}");
    println!("color: {}", is_color(&support, action.beta()));
    println!("definition check: {}", check_color_matched_pair_def(&mp, &action).unwrap().holds());

    let h = build_bicrossed(&mp, &Sigma::trivial(&mp), &Tau::trivial(&mp), None).unwrap().algebra;
    println!("acts by automorphisms: {}", action.acts_by_automorphisms(&h));
    let (homogeneous, _) = action.homogeneous_form(&h).unwrap();
    let axioms = check_axioms(&homogeneous, Mode::Color).unwrap();
    println!("color axioms on the homogeneous form: {:?}", axioms.failures());
    println!("antipode: {}", solve_antipode(&homogeneous, Mode::Color).map(|a| a.all_pass()).unwrap_or(false));
}
