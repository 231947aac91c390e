use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::proj_complex::{ChainMap, ProjComplex};
use crate::algebra::BasicAlgebra;
use crate::linalg::Scalar;
use crate::module::HomMatrix;

/// A radical complex homotopy equivalent to the input, with the equivalence.
#[derive(Clone, Debug)]
pub struct Minimized {
    pub complex: ProjComplex,
    /// `X -> M`.
    pub to_min: ChainMap,
    /// `M -> X`; `from_min ; to_min` is the identity of `M`.
    pub from_min: ChainMap,
}

fn find_unit(alg: &BasicAlgebra, c: &ProjComplex) -> Option<(i32, usize, usize)> {
    if c.is_zero() {
        return None;
    }
    for d in c.lo()..c.hi() {
        let m = c.diff_ref(d)?;
        for k in 0..m.rows() {
            for l in 0..m.cols() {
                if m.source[k] == m.target[l] && !alg.unit_coeff(m.get(k, l), m.source[k]).is_zero() {
                    return Some((d, k, l));
                }
            }
        }
    }
    None
}

fn embedding(alg: &BasicAlgebra, labels: &[usize], skip: usize, forward: bool) -> HomMatrix {
    let rest: Vec<usize> = labels.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, v)| *v).collect();
    let mut h = if forward {
        HomMatrix::zero(labels.to_vec(), rest)
    } else {
        HomMatrix::zero(rest, labels.to_vec())
    };
    let mut j = 0;
    for (i, &v) in labels.iter().enumerate() {
        if i == skip {
            continue;
        }
        if forward {
            h.set(i, j, alg.vertex_element(v));
        } else {
            h.set(j, i, alg.vertex_element(v));
        }
        j += 1;
    }
    h
}

/// Cancels the summand pair joined by the invertible entry `(k, l)` of the differential at `d`.
fn eliminate(alg: &BasicAlgebra, c: &ProjComplex, d: i32, k: usize, l: usize) -> (ProjComplex, ChainMap, ChainMap) {
    let dd = c.diff(d);
    let (s, t) = (c.term(d).to_vec(), c.term(d + 1).to_vec());
    let rest_s: Vec<usize> = (0..s.len()).filter(|&i| i != k).collect();
    let rest_t: Vec<usize> = (0..t.len()).filter(|&i| i != l).collect();
    let phi_inv = dd.select(&[k], &[l]).inverse(alg).expect("unit entry");
    let delta = dd.select(&[k], &rest_t);
    let gamma = dd.select(&rest_s, &[l]);
    let eps = dd.select(&rest_s, &rest_t);
    let new_d = eps.sub(&gamma.then(alg, &phi_inv).then(alg, &delta));

    let all = |n: usize| (0..n).collect::<Vec<usize>>();
    let mut terms = Vec::new();
    let mut diffs = Vec::new();
    for e in c.degrees() {
        terms.push(match e {
            _ if e == d => rest_s.iter().map(|&i| s[i]).collect(),
            _ if e == d + 1 => rest_t.iter().map(|&i| t[i]).collect(),
            _ => c.term(e).to_vec(),
        });
        if e < c.hi() {
            let m = c.diff(e);
            diffs.push(match e {
                _ if e == d => new_d.clone(),
                _ if e == d - 1 => m.select(&all(m.rows()), &rest_s),
                _ if e == d + 1 => m.select(&rest_t, &all(m.cols())),
                _ => m,
            });
        }
    }
    let reduced = ProjComplex::new_unchecked(c.lo(), terms, diffs);

    let mut f = BTreeMap::new();
    let mut g = BTreeMap::new();
    for e in c.degrees() {
        if e != d && e != d + 1 {
            f.insert(e, HomMatrix::identity(alg, c.term(e)));
            g.insert(e, HomMatrix::identity(alg, c.term(e)));
        }
    }
    f.insert(d, embedding(alg, &s, k, true));
    let mut f1 = embedding(alg, &t, l, true);
    let row = phi_inv.then(alg, &delta).scale(&-Scalar::one());
    for j in 0..row.cols() {
        f1.set(l, j, row.get(0, j).clone());
    }
    f.insert(d + 1, f1);
    let mut g0 = embedding(alg, &s, k, false);
    let col = gamma.then(alg, &phi_inv).scale(&-Scalar::one());
    for i in 0..col.rows() {
        g0.set(i, k, col.get(i, 0).clone());
    }
    g.insert(d, g0);
    g.insert(d + 1, embedding(alg, &t, l, false));
    let fmap = ChainMap::from_comps(c, &reduced, f);
    let gmap = ChainMap::from_comps(&reduced, c, g);
    (reduced, fmap, gmap)
}

/// Gaussian elimination of invertible differential entries until the complex is radical.
pub fn minimize(alg: &BasicAlgebra, x: &ProjComplex) -> Minimized {
    let mut cur = x.clone();
    let mut to_min = ChainMap::identity(alg, x);
    let mut from_min = to_min.clone();
    while let Some((d, k, l)) = find_unit(alg, &cur) {
        let (next, f, g) = eliminate(alg, &cur, d, k, l);
        to_min = to_min.then(alg, &f);
        from_min = g.then(alg, &from_min);
        cur = next;
    }
    Minimized { complex: cur, to_min, from_min }
}
