//! Structure-constant bialgebras over cyclotomic fields: axiom checks, antipodes,
//! the flip criterion and bosonization.

pub mod antipode;
pub mod axioms;
pub mod bosonize;
pub mod linear;
pub mod structure;

pub use antipode::{check_antipode_laws, solve_antipode, solve_antipode_linear, AntipodeReport};
pub use axioms::{check_axioms, check_flip, is_bialgebra_automorphism, AxiomReport, AxiomResult, Mode};
pub use bosonize::{bosonize, bosonized_antipode};
pub use linear::{LinearCombo, Tensor2, Tensor3};
pub use structure::{group_algebra, Grading, GradingJson, StructBialgebra, StructJson};
