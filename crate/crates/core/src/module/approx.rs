use alloc::vec::Vec;

use super::hom::hom_space;
use super::projective::{hom_matrix_to_map, map_from_generators, projective, unit_vector, HomMatrix};
use super::representation::{ModuleMap, Representation};
use super::structure::radical_of;
use crate::algebra::{BasicAlgebra, Element};
use crate::linalg::{Matrix, Span};

/// A minimal approximation by a sum of indecomposable projectives.
#[derive(Clone, Debug)]
pub struct Approximation {
    /// Labels of the projective sum, ascending.
    pub labels: Vec<usize>,
    /// `⊕ P(labels) -> X` for right approximations, `X -> ⊕ P(labels)` for left ones.
    pub map: ModuleMap,
}

fn distinct(labels: &[usize]) -> Vec<usize> {
    let mut l = labels.to_vec();
    l.sort_unstable();
    l.dedup();
    l
}

/// Minimal right `add(⊕ P(p_labels))`-approximation of `x`.
pub fn right_approximation(alg: &BasicAlgebra, p_labels: &[usize], x: &Representation) -> Approximation {
    let verts = distinct(p_labels);
    let gens: Vec<Vec<Vec<_>>> = (0..x.dims().len())
        .map(|v| if verts.contains(&v) { (0..x.dims()[v]).map(|i| unit_vector(x.dims()[v], i)).collect() } else { Vec::new() })
        .collect();
    let trace = x.generated(alg, gens);
    let rad = radical_of(alg, x, &trace);
    let mut labels = Vec::new();
    let mut chosen = Vec::new();
    for &v in &verts {
        for i in rad[v].complement_units() {
            labels.push(v);
            chosen.push(unit_vector(x.dims()[v], i));
        }
    }
    let map = map_from_generators(alg, &labels, x, &chosen);
    Approximation { labels, map }
}

/// Minimal left `add(⊕ P(q_labels))`-approximation of `x`.
pub fn left_approximation(alg: &BasicAlgebra, q_labels: &[usize], x: &Representation) -> Approximation {
    let verts = distinct(q_labels);
    let targets: Vec<Representation> = verts.iter().map(|&q| projective(alg, q)).collect();
    let homs: Vec<Vec<ModuleMap>> = targets.iter().map(|p| hom_space(alg, x, p)).collect();
    let mut labels = Vec::new();
    let mut maps: Vec<ModuleMap> = Vec::new();
    for (qi, &q) in verts.iter().enumerate() {
        let dim: usize = x.dims().iter().zip(targets[qi].dims()).map(|(a, b)| a * b).sum();
        let mut span = Span::new(dim);
        for (pi, &q2) in verts.iter().enumerate() {
            for &path in alg.peirce(q, q2) {
                if alg.basis()[path].is_trivial() {
                    continue;
                }
                let mut h = HomMatrix::zero(alloc::vec![q2], alloc::vec![q]);
                h.set(0, 0, Element::basis(path));
                let rho = hom_matrix_to_map(alg, &h);
                for g in &homs[pi] {
                    span.insert(g.then(&rho).to_vec());
                }
            }
        }
        for g in &homs[qi] {
            if span.insert(g.to_vec()) {
                labels.push(q);
                maps.push(g.clone());
            }
        }
    }
    let nv = x.dims().len();
    let comps = (0..nv)
        .map(|v| maps.iter().fold(Matrix::zeros(x.dims()[v], 0), |acc, g| acc.hstack(g.comp(v))))
        .collect();
    Approximation { labels, map: ModuleMap::new(comps) }
}
