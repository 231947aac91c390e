use alloc::vec::Vec;

use super::verify::self_orthogonality;
use crate::algebra::{quiver_presentation, Presentation, StructureAlgebra};
use crate::algebra::BasicAlgebra;
use crate::complex::{decompose_complex, homotopy_hom, ChainMap, ComplexDecomposition, HomotopyHom, ProjComplex};
use crate::error::{Error, Result};
use crate::Config;

/// `End_K(T)` with its quiver presentation; vertex `i` is the summand `summands[i]`.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    /// The input complex.
    pub complex: ProjComplex,
    pub decomposition: ComplexDecomposition,
    /// Indecomposable summands repeated by multiplicity, in vertex order.
    pub summands: Vec<ProjComplex>,
    /// Direct sum of `summands`, on which the basis maps act.
    pub sum: ProjComplex,
    pub injections: Vec<ChainMap>,
    pub projections: Vec<ChainMap>,
    /// Homotopy classes `sum -> sum`; structure coordinates refer to this basis.
    pub hom: HomotopyHom,
    /// Product `u * v = u ∘ v` (first `v`, then `u`).
    pub structure: StructureAlgebra,
    pub presentation: Presentation,
}

impl EndAlgebra {
    pub fn algebra(&self) -> &BasicAlgebra {
        &self.presentation.algebra
    }

    /// Chain map `sum -> sum` representing structure coordinates.
    pub fn chain_map(&self, coords: &[crate::linalg::Scalar]) -> ChainMap {
        self.hom.combine(coords)
    }
}

pub fn end_algebra(alg: &BasicAlgebra, t: &ProjComplex, cfg: &Config) -> Result<EndAlgebra> {
    if let Some((n, _)) = self_orthogonality(alg, t).into_iter().find(|(n, d)| *n != 0 && *d != 0) {
        return Err(Error::NotSelfOrthogonal(n));
    }
    end_algebra_unchecked(alg, t, cfg)
}

/// As [`end_algebra`] without the self-orthogonality check.
pub fn end_algebra_unchecked(alg: &BasicAlgebra, t: &ProjComplex, cfg: &Config) -> Result<EndAlgebra> {
    let decomposition = decompose_complex(alg, t, cfg);
    if decomposition.summands.iter().any(|s| s.1 > 1) {
        return Err(Error::NotBasic(alloc::string::String::from("complex has a repeated indecomposable summand")));
    }
    let summands: Vec<ProjComplex> = decomposition.indecomposables().into_iter().cloned().collect();
    let refs: Vec<&ProjComplex> = summands.iter().collect();
    let (sum, injections, projections) = ProjComplex::direct_sum_maps(alg, &refs);
    let hom = homotopy_hom(alg, &sum, &sum, 0);
    let one = hom.coords(&ChainMap::identity(alg, &sum)).expect("identity is a chain map");
    let structure = StructureAlgebra::from_products(
        hom.dim(),
        |i, j| hom.coords(&hom.basis()[j].then(alg, &hom.basis()[i])).expect("chain maps compose"),
        one,
    );
    let idempotents = projections
        .iter()
        .zip(&injections)
        .map(|(p, i)| hom.coords(&p.then(alg, i)).expect("block idempotent"))
        .collect();
    let presentation = quiver_presentation(&structure, Some(idempotents), cfg)?;
    Ok(EndAlgebra {
        complex: t.clone(),
        decomposition,
        summands,
        sum,
        injections,
        projections,
        hom,
        structure,
        presentation,
    })
}
