use alloc::format;
use alloc::vec::Vec;

use super::decompose::{decompose, iso_indecomposable, Decomposition};
use super::projective::{injective_sum, projective, HomMatrix};
use super::representation::{ModuleMap, Representation};
use super::structure::top;
use crate::algebra::{BasicAlgebra, Element};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::Config;

/// A projective module identified as `⊕ P(labels[k])`.
#[derive(Clone, Debug)]
pub struct ProjectiveLabels {
    pub labels: Vec<usize>,
    pub decomposition: Decomposition,
}

/// Certifies that `x` is projective and returns its sorted label multiset.
pub fn projective_labels(alg: &BasicAlgebra, x: &Representation, cfg: &Config) -> Result<ProjectiveLabels> {
    let d = decompose(alg, x, cfg);
    let mut labels = Vec::new();
    for (rep, mult) in &d.summands {
        let t = top(alg, rep);
        let verts: Vec<usize> = (0..t.dims().len()).filter(|&v| t.dims()[v] > 0).collect();
        let v = match verts.as_slice() {
            [v] if t.dims()[*v] == 1 => *v,
            _ => return Err(Error::NotProjective(format!("summand with top dimensions {:?}", t.dims()))),
        };
        if iso_indecomposable(alg, rep, &projective(alg, v)).is_none() {
            return Err(Error::NotProjective(format!("summand with top at vertex {v} is not P({v})")));
        }
        labels.extend(core::iter::repeat_n(v, *mult));
    }
    labels.sort_unstable();
    Ok(ProjectiveLabels { labels, decomposition: d })
}

/// `ν(⊕ P(v)) = ⊕ I(v)`, with the labels certifying the input is projective.
pub fn nakayama_on_projectives(alg: &BasicAlgebra, x: &Representation, cfg: &Config) -> Result<(Representation, ProjectiveLabels)> {
    let pl = projective_labels(alg, x, cfg)?;
    Ok((injective_sum(alg, &pl.labels), pl))
}

/// `ν` on a map between projective sums: `⊕ I(source) -> ⊕ I(target)`.
pub fn nakayama_hom(alg: &BasicAlgebra, f: &HomMatrix) -> ModuleMap {
    let nv = alg.num_vertices();
    let comps = (0..nv)
        .map(|w| {
            let rows: usize = f.source.iter().map(|&a| alg.peirce(w, a).len()).sum();
            let cols: usize = f.target.iter().map(|&b| alg.peirce(w, b).len()).sum();
            let mut m = Matrix::zeros(rows, cols);
            let mut ro = 0;
            for (k, &a) in f.source.iter().enumerate() {
                let mut co = 0;
                for (l, &b) in f.target.iter().enumerate() {
                    let x = f.get(k, l);
                    for (j, &q) in alg.peirce(w, b).iter().enumerate() {
                        let qx = alg.mul(&Element::basis(q), x);
                        for (i, &p) in alg.peirce(w, a).iter().enumerate() {
                            m.set(ro + i, co + j, qx.coeff(p));
                        }
                    }
                    co += alg.peirce(w, b).len();
                }
                ro += alg.peirce(w, a).len();
            }
            m
        })
        .collect();
    ModuleMap::new(comps)
}
