//! Matched pairs of finite groups, bicrossed products and their color structures.

pub mod autext;
pub mod braided;
pub mod color;
pub mod finite_group;
pub mod matched;
pub mod monomial;

pub use autext::{
    aut_ext_solve, condition_i, default_root_bound, enumerate_aut_ext, AutExtEntry, AutExtSolution,
    CertifiedAutomorphism, ExtAutomorphism,
};
pub use braided::{
    braided_compat, coboundary_2cocycle, coboundary_tau, sommer_family, trivial_ract_criterion, validate_z, FiniteRing,
    SommerData, SommerInput, TrivialRactReport, ZMap,
};
pub use color::{check_color_matched_pair_def, is_color, ColorAction, ColorMatchedPairReport};
pub use finite_group::{FiniteGroup, GroupSpec};
pub use matched::{basis_index, build_bicrossed, kac_condition, kac_violation, Bicrossed, MatchedPair, Sigma, Tau, Violation};
pub use monomial::{as_root_of_unity, MonomialMap};
