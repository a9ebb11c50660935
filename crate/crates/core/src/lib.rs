//! Exact computations in the first Weyl algebra and its Poisson shadow,
//! aimed at deciding when a pair `(z, w)` with `[z, w] = 1` generates `A_1`.

pub mod cli;
pub mod dc;
pub mod error;
pub mod geometry;
pub mod linalg;
pub mod parse;
pub mod poisson;
pub mod poly;
pub mod report;
pub mod svg;
pub mod transforms;
pub mod univariate;
pub mod weyl;

pub use error::{Error, Result};
pub use poly::{BiPoly, Degree, Direction, Rational};
pub use univariate::UniPoly;
pub use weyl::WeylElement;
