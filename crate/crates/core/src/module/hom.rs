use alloc::vec::Vec;

use num_traits::Zero;

use super::representation::{ModuleMap, Representation};
use crate::algebra::BasicAlgebra;
use crate::linalg::{Matrix, Scalar, Span};

/// Basis of `Hom_A(m, n)`.
pub fn hom_space(alg: &BasicAlgebra, m: &Representation, n: &Representation) -> Vec<ModuleMap> {
    let nv = m.dims().len();
    let mut offset = Vec::with_capacity(nv);
    let mut total = 0;
    for v in 0..nv {
        offset.push(total);
        total += m.dims()[v] * n.dims()[v];
    }
    let var = |v: usize, i: usize, j: usize| offset[v] + i * n.dims()[v] + j;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (ai, a) in alg.quiver().arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let (ma, na) = (m.map(ai), n.map(ai));
        // (M_a F_t - F_s N_a)[r][j] = 0
        for r in 0..m.dims()[s] {
            for j in 0..n.dims()[t] {
                let mut row = alloc::vec![Scalar::zero(); total];
                for i in 0..m.dims()[t] {
                    let c = ma.get(r, i);
                    if !c.is_zero() {
                        row[var(t, i, j)] += c;
                    }
                }
                for k in 0..n.dims()[s] {
                    let c = na.get(k, j);
                    if !c.is_zero() {
                        row[var(s, r, k)] -= c;
                    }
                }
                rows.push(row);
            }
        }
    }
    let basis = if rows.is_empty() {
        (0..total)
            .map(|i| {
                let mut v = alloc::vec![Scalar::zero(); total];
                v[i] = num_traits::One::one();
                v
            })
            .collect()
    } else {
        Matrix::from_rows(rows, total).kernel_basis()
    };
    basis.iter().map(|v| ModuleMap::from_vec(m.dims(), n.dims(), v)).collect()
}

pub fn hom_dim(alg: &BasicAlgebra, m: &Representation, n: &Representation) -> usize {
    hom_space(alg, m, n).len()
}

/// Coordinates of maps in a fixed basis of a hom space.
#[derive(Clone, Debug)]
pub struct HomCoords {
    span: Span,
    src: Vec<usize>,
    tgt: Vec<usize>,
}

impl HomCoords {
    pub fn new(basis: &[ModuleMap], m: &Representation, n: &Representation) -> Self {
        let d: usize = m.dims().iter().zip(n.dims()).map(|(a, b)| a * b).sum();
        HomCoords {
            span: Span::from_vectors(d, basis.iter().map(ModuleMap::to_vec)),
            src: m.dims().to_vec(),
            tgt: n.dims().to_vec(),
        }
    }

    pub fn coords(&self, f: &ModuleMap) -> Option<Vec<Scalar>> {
        self.span.coords(&f.to_vec())
    }

    pub fn combine(&self, c: &[Scalar]) -> ModuleMap {
        let d = self.span.ambient_dim();
        let mut v = alloc::vec![Scalar::zero(); d];
        for (b, x) in self.span.basis().iter().zip(c) {
            if x.is_zero() {
                continue;
            }
            for (vi, bi) in v.iter_mut().zip(b) {
                *vi += x * bi;
            }
        }
        ModuleMap::from_vec(&self.src, &self.tgt, &v)
    }
}
