//! A braided bicrossed product from the ring family over Z/3, checked two ways.
//!
//! Run with `cargo run --example braided_extension`.

use chroma::extensions::{
    build_bicrossed, coboundary_2cocycle, coboundary_tau, sommer_family, trivial_ract_criterion, FiniteGroup, FiniteRing,
    SommerInput, Tau, ZMap,
};
use chroma::hopf::{check_axioms, solve_antipode, Mode};
use chroma::scalars::Rational01;

fn main() {
    let input = SommerInput {
        ring: FiniteRing::zmod(3),
        gamma: FiniteGroup::cyclic(2),
        nu: vec![1, 2],
        psi: vec![0, 1],
        phi: vec![vec![0, 0], vec![0, 0]],
        eta: vec![Rational01::ZERO; 3],
        theta: (0..3).map(|x| Rational01::new(x, 3)).collect(),
    };
    let data = sommer_family(&input).unwrap();
    let mp = &data.mp;
    println!("compatible: {}", data.compatible);

    let cob = coboundary_tau(mp, &coboundary_2cocycle(&mp.l, &[Rational01::ZERO, Rational01::new(1, 3), Rational01::ZERO]))
        .unwrap();
    for (name, tau) in [("trivial", Tau::trivial(mp)), ("coboundary", cob)] {
        let criterion = trivial_ract_criterion(mp, &data.sigma, &tau, &data.ztilde, &data.beta).unwrap();
        let grading = ZMap::from_tilde(&data.ztilde).grading(mp, &data.beta);
        let h = build_bicrossed(mp, &data.sigma, &tau, Some(grading)).unwrap().algebra;
        let axioms = check_axioms(&h, Mode::Color).unwrap();
        let antipode = solve_antipode(&h, Mode::Color).map(|a| a.all_pass()).unwrap_or(false);
        println!("τ {name}: criterion {}, color axioms {}, antipode {antipode}", criterion.holds(), axioms.all_pass());
    }
}
