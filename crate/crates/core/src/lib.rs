pub mod cli;
pub mod datum;
pub mod doubles;
pub mod dynkin;
pub mod error;
pub mod extensions;
pub mod groups;
pub mod hopf;
pub mod scalars;
pub mod triangular;
pub mod weyl;

pub use error::{Error, Result};
