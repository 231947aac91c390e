use alloc::vec::Vec;

use super::representation::{Representation, Subspaces};
use crate::algebra::BasicAlgebra;
use crate::linalg::{Matrix, Span};

/// `rad(U)` for a submodule `U`: the span of images of arrows applied to `U`.
pub fn radical_of(alg: &BasicAlgebra, m: &Representation, sub: &Subspaces) -> Subspaces {
    let mut out: Subspaces = m.dims().iter().map(|&d| Span::new(d)).collect();
    for (ai, a) in alg.quiver().arrows().iter().enumerate() {
        for x in sub[a.source].basis() {
            out[a.target].insert(m.map(ai).vec_mul(x));
        }
    }
    out
}

pub fn whole(m: &Representation) -> Subspaces {
    m.dims().iter().map(|&d| Span::from_vectors(d, Matrix::identity(d).row_vecs())).collect()
}

pub fn radical(alg: &BasicAlgebra, m: &Representation) -> Subspaces {
    radical_of(alg, m, &whole(m))
}

/// Radical series `M ⊇ rad M ⊇ rad^2 M ⊇ ... ⊇ 0`.
pub fn radical_series(alg: &BasicAlgebra, m: &Representation) -> Vec<Subspaces> {
    let mut out = alloc::vec![whole(m)];
    loop {
        let last = out.last().unwrap();
        if last.iter().all(|s| s.dim() == 0) {
            return out;
        }
        let next = radical_of(alg, m, last);
        out.push(next);
    }
}

/// Dimension vectors of the Loewy layers `rad^k M / rad^{k+1} M`.
pub fn loewy_layers(alg: &BasicAlgebra, m: &Representation) -> Vec<Vec<usize>> {
    let series = radical_series(alg, m);
    series.windows(2).map(|w| w[0].iter().zip(&w[1]).map(|(a, b)| a.dim() - b.dim()).collect()).collect()
}

pub fn top(alg: &BasicAlgebra, m: &Representation) -> Representation {
    m.quotient(alg, &radical(alg, m)).0
}

/// Socle: vectors killed by every arrow leaving their vertex.
pub fn socle(alg: &BasicAlgebra, m: &Representation) -> Subspaces {
    let q = alg.quiver();
    (0..q.num_vertices())
        .map(|v| {
            let d = m.dims()[v];
            let mut stacked = Matrix::zeros(d, 0);
            for (ai, a) in q.arrows().iter().enumerate() {
                if a.source == v {
                    stacked = stacked.hstack(m.map(ai));
                }
            }
            let basis = if stacked.cols() == 0 { Matrix::identity(d).row_vecs() } else { stacked.left_kernel_basis() };
            Span::from_vectors(d, basis)
        })
        .collect()
}

pub fn dims_of(sub: &Subspaces) -> Vec<usize> {
    sub.iter().map(Span::dim).collect()
}
