use alloc::format;
use alloc::vec::Vec;

use super::nust::compare_add_nu;
use crate::algebra::BasicAlgebra;
use crate::complex::{decompose_complex, ComplexDecomposition, ProjComplex};
use crate::error::{Error, Result};
use crate::module::{left_approximation, map_to_hom_matrix, projective_sum, right_approximation, HomMatrix};
use crate::Config;

/// Output of the approximation construction.
#[derive(Clone, Debug)]
pub struct Constructed {
    /// `0 -> P^{-r} -> ... -> P^{-1} -> A -> Q^1 -> ... -> Q^s -> 0`.
    pub t_pq: ProjComplex,
    /// `T_{P,Q} ⊕ P[r] ⊕ Q[-s]` before minimization.
    pub raw: ProjComplex,
    /// The radical form of `raw`.
    pub complex: ProjComplex,
    pub decomposition: ComplexDecomposition,
}

fn sorted_distinct(l: &[usize]) -> Vec<usize> {
    let mut v = l.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

fn check_preconditions(alg: &BasicAlgebra, p: &[usize], q: &[usize], r: usize, s: usize, cfg: &Config) -> Result<()> {
    if r == 0 || s == 0 {
        return Err(Error::PreconditionFailed(format!("r = {r} and s = {s} must both be at least 1")));
    }
    for (name, set) in [("P", p), ("Q", q)] {
        if let Some(v) = set.iter().find(|&&v| v >= alg.num_vertices()) {
            return Err(Error::PreconditionFailed(format!("{name} has unknown vertex {v}")));
        }
        if set.is_empty() {
            continue;
        }
        let c = compare_add_nu(alg, &projective_sum(alg, set), cfg)?;
        if !c.add_equal {
            return Err(Error::PreconditionFailed(format!("add({name}) != add(ν{name})")));
        }
    }
    for &a in p {
        for &b in q {
            if !alg.peirce(b, a).is_empty() {
                return Err(Error::PreconditionFailed(format!("Hom(P({a}), P({b})) != 0")));
            }
        }
    }
    Ok(())
}

/// `T_{P,Q} ⊕ P[r] ⊕ Q[-s]` from minimal approximations of `A`, minimized and decomposed.
pub fn construct_tpq(alg: &BasicAlgebra, p: &[usize], q: &[usize], r: usize, s: usize, cfg: &Config) -> Result<Constructed> {
    let p = sorted_distinct(p);
    let q = sorted_distinct(q);
    check_preconditions(alg, &p, &q, r, s, cfg)?;
    let n = alg.num_vertices();
    let a_labels: Vec<usize> = (0..n).collect();
    let a = projective_sum(alg, &a_labels);

    // Leftwards: P^{-i} -> K_{i-1} with K_0 = A, K_i the kernel.
    let mut left_terms: Vec<Vec<usize>> = Vec::new();
    let mut left_diffs: Vec<HomMatrix> = Vec::new();
    let mut target_labels = a_labels.clone();
    let mut k = a.clone();
    let mut k_incl: Option<crate::module::ModuleMap> = None;
    for _ in 0..r {
        let ap = right_approximation(alg, &p, &k);
        let src = projective_sum(alg, &ap.labels);
        let into_target = match &k_incl {
            Some(i) => ap.map.then(i),
            None => ap.map.clone(),
        };
        left_diffs.push(map_to_hom_matrix(alg, &ap.labels, &target_labels, &into_target));
        let (kr, incl) = src.restrict(alg, &ap.map.kernel());
        left_terms.push(ap.labels.clone());
        target_labels = ap.labels;
        k = kr;
        k_incl = Some(incl);
    }

    // Rightwards: C_{i-1} -> Q^i with C_0 = A, C_i the cokernel.
    let mut right_terms: Vec<Vec<usize>> = Vec::new();
    let mut right_diffs: Vec<HomMatrix> = Vec::new();
    let mut source_labels = a_labels.clone();
    let mut c = a.clone();
    let mut c_proj: Option<crate::module::ModuleMap> = None;
    for _ in 0..s {
        let ap = left_approximation(alg, &q, &c);
        let tgt = projective_sum(alg, &ap.labels);
        let from_source = match &c_proj {
            Some(pr) => pr.then(&ap.map),
            None => ap.map.clone(),
        };
        right_diffs.push(map_to_hom_matrix(alg, &source_labels, &ap.labels, &from_source));
        let (cr, proj) = tgt.quotient(alg, &ap.map.image());
        right_terms.push(ap.labels.clone());
        source_labels = ap.labels;
        c = cr;
        c_proj = Some(proj);
    }

    let mut terms: Vec<Vec<usize>> = left_terms.iter().rev().cloned().collect();
    terms.push(a_labels);
    terms.extend(right_terms);
    let mut diffs: Vec<HomMatrix> = left_diffs.into_iter().rev().collect();
    diffs.extend(right_diffs);
    let t_pq = ProjComplex::new(alg, -(r as i32), terms, diffs)?;
    let raw = ProjComplex::direct_sum(&[&t_pq, &ProjComplex::stalk(-(r as i32), p), &ProjComplex::stalk(s as i32, q)]);
    let decomposition = decompose_complex(alg, &raw, cfg);
    Ok(Constructed { t_pq, raw, complex: decomposition.minimized.complex.clone(), decomposition })
}
