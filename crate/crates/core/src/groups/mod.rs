//! Finite abelian groups in residue coordinates, their characters and bicharacters.
//!
//! JSON forms: a group is `{"orders": [2, 4]}`, an element is `[1, 3]`, and a bicharacter
//! is a matrix of `"num/den"` exponents on pairs of generators.

mod bichar;
mod finab;
mod snf;
mod subgroup;

pub use bichar::Bicharacter;
pub use finab::{Element, FinAbGroup, Projection};
pub use snf::smith_columns;
pub use subgroup::Subgroup;
