use alloc::format;
use alloc::vec::Vec;

use crate::algebra::BasicAlgebra;
use crate::error::{Error, Result};
use crate::module::{injective, projective_labels, Representation};
use crate::Config;

/// One indecomposable projective and its behaviour under the Nakayama functor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveEntry {
    pub vertex: usize,
    /// `P(v)` is also injective.
    pub projective_injective: bool,
    /// `u` with `ν P(v) = I(v) ≅ P(u)`, if `I(v)` is projective.
    pub nu_image: Option<usize>,
    /// The whole forward ν-orbit of `P(v)` stays projective-injective.
    pub in_e: bool,
}

/// Per-projective witness for the two conditions on a projective outside `add(E)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionWitness {
    pub vertex: usize,
    /// Nonzero degrees whose term contains `P(v)`.
    pub off_degrees: Vec<i32>,
    /// Multiplicity of `P(v)` in the degree-0 term.
    pub multiplicity_t0: usize,
    /// `P(v)` is not a summand of any nonzero-degree term.
    pub a: bool,
    /// `P(v)` occurs exactly once in degree 0.
    pub b: bool,
}

/// Maximal ν-stable module and, for a complex, the criterion on projectives outside it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NuStableReport {
    pub projectives: Vec<ProjectiveEntry>,
    /// Labels of the summands of `E`, ascending.
    pub e: Vec<usize>,
    pub conditions: Vec<ConditionWitness>,
    /// Every nonzero-degree term lies in `add(E)`.
    pub t_pm_in_e: Option<bool>,
    pub verdict: Option<bool>,
}

/// The partial permutation `v -> u` with `I(v) ≅ P(u)`.
pub fn nu_permutation(alg: &BasicAlgebra, cfg: &Config) -> Vec<Option<usize>> {
    (0..alg.num_vertices())
        .map(|v| match projective_labels(alg, &injective(alg, v), cfg) {
            Ok(pl) if pl.labels.len() == 1 => Some(pl.labels[0]),
            _ => None,
        })
        .collect()
}

/// Orbit iteration with cycle detection, at most `#vertices + 1` steps.
pub fn maximal_nu_stable(alg: &BasicAlgebra, cfg: &Config) -> NuStableReport {
    let pi = nu_permutation(alg, cfg);
    let n = pi.len();
    let projectives: Vec<ProjectiveEntry> = (0..n)
        .map(|v| {
            let mut seen = alloc::vec![false; n];
            let mut cur = v;
            let mut in_e = false;
            for _ in 0..=n {
                if seen[cur] {
                    in_e = cur == v;
                    break;
                }
                seen[cur] = true;
                match pi[cur] {
                    Some(u) => cur = u,
                    None => break,
                }
            }
            ProjectiveEntry { vertex: v, projective_injective: pi.contains(&Some(v)), nu_image: pi[v], in_e }
        })
        .collect();
    let e = projectives.iter().filter(|p| p.in_e).map(|p| p.vertex).collect();
    NuStableReport { projectives, e, conditions: Vec::new(), t_pm_in_e: None, verdict: None }
}

/// Both routes for a projective `x`: `add(x) = add(νx)` by summand matching, and `x ∈ add(E)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AddNuComparison {
    pub labels: Vec<usize>,
    pub nu_labels: Option<Vec<usize>>,
    pub add_equal: bool,
    pub in_add_e: bool,
}

/// Evaluates both routes and reports `InternalDisagreement` when they differ.
pub fn check_add_nu_equal(alg: &BasicAlgebra, x: &Representation, cfg: &Config) -> Result<bool> {
    let c = compare_add_nu(alg, x, cfg)?;
    if c.add_equal != c.in_add_e {
        return Err(Error::InternalDisagreement(format!(
            "labels {:?}: add(X) = add(νX) is {} but X in add(E) is {}",
            c.labels, c.add_equal, c.in_add_e
        )));
    }
    Ok(c.add_equal)
}

pub fn compare_add_nu(alg: &BasicAlgebra, x: &Representation, cfg: &Config) -> Result<AddNuComparison> {
    let pl = projective_labels(alg, x, cfg)?;
    let mut labels = pl.labels;
    labels.dedup();
    let nu = crate::module::injective_sum(alg, &labels);
    let nu_labels = projective_labels(alg, &nu, cfg).ok().map(|p| {
        let mut l = p.labels;
        l.dedup();
        l
    });
    let add_equal = nu_labels.as_ref() == Some(&labels);
    let e = maximal_nu_stable(alg, cfg).e;
    let in_add_e = labels.iter().all(|v| e.contains(v));
    Ok(AddNuComparison { labels, nu_labels, add_equal, in_add_e })
}
