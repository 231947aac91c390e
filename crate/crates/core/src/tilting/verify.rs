use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Signed};

use crate::algebra::BasicAlgebra;
use crate::complex::{decompose_complex, homotopy_hom_dim, ComplexDecomposition, ProjComplex};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::Config;

/// How the generation axiom is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenerationStatus {
    /// Built by the approximation construction, whose summands generate.
    ProvedByConstruction,
    /// Only the necessary Grothendieck-group condition was checked.
    K0NecessaryOnly,
}

#[derive(Clone, Debug)]
pub struct TiltingReport {
    /// `dim Hom_K(T, T[n])` for `n` in `[-w, w]`, `w` the width of the radical form.
    pub hom_dims: BTreeMap<i32, usize>,
    pub self_orthogonal: bool,
    /// Rows: classes of the distinct indecomposable summands in the basis of projectives.
    pub k0_matrix: Vec<Vec<i64>>,
    pub k0_unimodular: bool,
    pub generation_status: GenerationStatus,
    /// Every indecomposable summand has multiplicity one.
    pub basic: bool,
    pub decomposition: ComplexDecomposition,
}

impl TiltingReport {
    /// Self-orthogonal, unimodular classes.
    pub fn is_tilting(&self) -> bool {
        self.self_orthogonal && self.k0_unimodular
    }
}

/// `dim Hom_K(T, T[n])` for every shift where it can be nonzero except 0.
pub fn self_orthogonality(alg: &BasicAlgebra, t: &ProjComplex) -> BTreeMap<i32, usize> {
    let w = t.width();
    (-w..=w).map(|n| (n, homotopy_hom_dim(alg, t, t, n))).collect()
}

pub fn verify_tilting(alg: &BasicAlgebra, t: &ProjComplex, constructed: bool, cfg: &Config) -> Result<TiltingReport> {
    let v = t.validate(alg);
    if let Some(d) = v.d_squared_failure {
        return Err(Error::DSquaredNonzero(d));
    }
    if !v.is_radical {
        return Err(Error::NotRadical);
    }
    let hom_dims = self_orthogonality(alg, t);
    let self_orthogonal = hom_dims.iter().all(|(n, d)| *n == 0 || *d == 0);
    let decomposition = decompose_complex(alg, t, cfg);
    let basic = decomposition.summands.iter().all(|s| s.1 == 1);
    let nv = alg.num_vertices();
    let k0_matrix: Vec<Vec<i64>> = decomposition.summands.iter().map(|(c, _)| c.k0_class(nv)).collect();
    let k0_unimodular = k0_matrix.len() == nv && {
        let flat: Vec<i64> = k0_matrix.iter().flatten().copied().collect();
        Matrix::from_i64(nv, nv, &flat).det().abs().is_one()
    };
    Ok(TiltingReport {
        hom_dims,
        self_orthogonal,
        k0_matrix,
        k0_unimodular,
        generation_status: if constructed { GenerationStatus::ProvedByConstruction } else { GenerationStatus::K0NecessaryOnly },
        basic,
        decomposition,
    })
}
