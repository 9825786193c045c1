//! Exact arithmetic in the free *-algebra on `x1..xg, x1*..xg*`: Gröbner
//! completion of two-sided ideals, positive moment functionals, finite GNS
//! witnesses, real varieties of matrix tuples and finite quotients.

pub mod error;
pub mod functional;
pub mod gns;
pub mod groebner;
pub mod matrix;
pub mod poly;
pub mod quotients;
pub mod repvar;
pub mod rewrite;
pub mod scalar;
pub mod span;
pub mod syntax;
pub mod trace;
pub mod word;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use poly::{Classification, Polynomial};
pub use scalar::{FieldMode, GaussianRational, Rational, Scalar};
pub use syntax::{format_poly, parse_poly};
pub use word::{Letter, Word};

pub type RatPoly = Polynomial<Rational>;
pub type GaussPoly = Polynomial<GaussianRational>;
pub type RatMatrix = Matrix<Rational>;
pub type GaussMatrix = Matrix<GaussianRational>;
