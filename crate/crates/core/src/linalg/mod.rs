//! Exact linear algebra over the rationals.

mod matrix;
mod poly;
mod scalar;
mod span;

pub use matrix::Matrix;
pub use poly::Poly;
pub use scalar::{format_scalar, int, parse_scalar, Scalar};
pub use span::Span;
