pub mod classify;
pub mod cli;
pub mod error;
pub mod koszul;
pub mod poly;
pub mod search;
pub mod semigroup;
pub mod tangent_cone;

pub use error::{Error, Result};
pub use semigroup::{CmCertificate, CmStatus, Factorization, NumericalSemigroup};
