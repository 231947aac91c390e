use alloc::vec::Vec;

use super::proj_complex::ProjComplex;
use crate::algebra::BasicAlgebra;
use crate::linalg::Span;
use crate::module::{hom_matrix_to_map, projective_sum, whole, Representation, Subspaces};

/// `H^d(X)` as a representation.
pub fn homology(alg: &BasicAlgebra, x: &ProjComplex, d: i32) -> Representation {
    let p = projective_sum(alg, x.term(d));
    let cycles: Subspaces = if x.term(d + 1).is_empty() {
        whole(&p)
    } else {
        hom_matrix_to_map(alg, &x.diff(d)).kernel()
    };
    let (z, _) = p.restrict(alg, &cycles);
    if x.term(d - 1).is_empty() {
        return z;
    }
    let bounds = hom_matrix_to_map(alg, &x.diff(d - 1)).image();
    let sub: Subspaces = bounds
        .iter()
        .zip(&cycles)
        .map(|(b, c)| Span::from_vectors(c.dim(), b.basis().iter().map(|v| c.coords(v).expect("boundaries are cycles"))))
        .collect();
    z.quotient(alg, &sub).0
}

/// Degrees with nonzero homology and their dimension vectors.
pub fn homology_profile(alg: &BasicAlgebra, x: &ProjComplex) -> Vec<(i32, Vec<usize>)> {
    if x.is_zero() {
        return Vec::new();
    }
    x.degrees()
        .map(|d| (d, homology(alg, x, d).dims().to_vec()))
        .filter(|(_, v)| v.iter().any(|&n| n > 0))
        .collect()
}
