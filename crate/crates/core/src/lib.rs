//! Exact computations with tilting complexes over finite-dimensional quiver algebras.
//!
//! Modules are representations of the quiver: an arrow `i -> j` acts by a matrix from the
//! space at `i` to the space at `j`, with vectors written as rows. The indecomposable
//! projective `P(v)` is spanned by the paths starting at `v`, and a map `P(a) -> P(b)` is
//! left multiplication by a combination of paths from `b` to `a`.
#![no_std]

extern crate alloc;

pub mod algebra;
pub mod complex;
mod error;
pub mod linalg;
pub mod module;
pub mod tilting;

pub use error::{Error, Profile, Result};

/// Knobs shared by every computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    /// Seed for the randomized searches (isomorphism tests, idempotent splitting).
    pub seed: u64,
    /// Longest path considered when computing normal forms.
    pub max_path_len: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { seed: 0, max_path_len: 30 }
    }
}
