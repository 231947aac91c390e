use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::Zero;

use super::homotopy::homotopy_hom;
use super::minimize::{minimize, Minimized};
use super::proj_complex::{ChainMap, ProjComplex};
use crate::algebra::{BasicAlgebra, StructureAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{int, Matrix, Span};
use crate::module::HomMatrix;
use crate::Config;

/// A direct summand `S` of a complex `X` with `inclusion ; projection = id_S`.
#[derive(Clone, Debug)]
pub struct Summand {
    pub complex: ProjComplex,
    /// `S -> X`.
    pub inclusion: ChainMap,
    /// `X -> S`.
    pub projection: ChainMap,
}

fn lift_matrix(alg: &BasicAlgebra, m: &Matrix, rows: &[usize], cols: &[usize]) -> HomMatrix {
    let mut h = HomMatrix::zero(rows.to_vec(), cols.to_vec());
    for (k, &a) in rows.iter().enumerate() {
        for (l, &b) in cols.iter().enumerate() {
            let c = m.get(k, l);
            if a == b && !c.is_zero() {
                h.set(k, l, alg.vertex_element(a).scale(c));
            }
        }
    }
    h
}

/// Iterates `y -> 3y^2 - 2y^3` until `y` is a strict idempotent; the limit is the
/// semisimple part of `y` in its Jordan-Chevalley decomposition.
pub fn lift_strict_idempotent(alg: &BasicAlgebra, y: &ChainMap) -> Option<ChainMap> {
    let mut y = y.clone();
    for _ in 0..64 {
        let y2 = y.then(alg, &y);
        if y2 == y {
            return Some(y);
        }
        let y3 = y2.then(alg, &y);
        y = y2.scale(&int(3)).sub(&y3.scale(&int(2)));
    }
    None
}

/// Image of a strict idempotent endomorphism of `x`.
pub(crate) fn split_strict(alg: &BasicAlgebra, x: &ProjComplex, y: &ChainMap) -> Summand {
    let mut incl = BTreeMap::new();
    let mut proj = BTreeMap::new();
    let mut terms = Vec::new();
    for d in x.degrees() {
        let labels = x.term(d);
        let yd = y.comp(d).expect("endomorphism component").clone();
        let u = yd.scalar_part(alg).row_space();
        let r = u.len();
        let sub: Vec<usize> = u.iter().map(|row| labels[row.iter().position(|c| !c.is_zero()).unwrap()]).collect();
        let um = Matrix::from_rows(u, labels.len());
        let pi0 = if r == 0 {
            Matrix::zeros(labels.len(), 0)
        } else {
            um.transpose().mul(&um.mul(&um.transpose()).inverse().expect("full row rank"))
        };
        let iota0 = lift_matrix(alg, &um, &sub, labels);
        let pi0 = lift_matrix(alg, &pi0, labels, &sub);
        let iota = iota0.then(alg, &yd);
        let g = iota.then(alg, &pi0);
        let g_inv = if r == 0 { g } else { g.inverse(alg).expect("invertible on the image") };
        let pi = yd.then(alg, &pi0).then(alg, &g_inv);
        incl.insert(d, iota);
        proj.insert(d, pi);
        terms.push(sub);
    }
    let mut diffs = Vec::new();
    if !x.is_zero() {
        for d in x.lo()..x.hi() {
            diffs.push(incl[&d].then(alg, &x.diff(d)).then(alg, &proj[&(d + 1)]));
        }
    }
    let s = ProjComplex::new_unchecked(x.lo(), terms, diffs);
    Summand {
        inclusion: ChainMap::from_comps(&s, x, incl),
        projection: ChainMap::from_comps(x, &s, proj),
        complex: s,
    }
}

/// Splits an endomorphism of a radical complex that is idempotent up to homotopy.
pub fn split_idempotent(alg: &BasicAlgebra, x: &ProjComplex, e: &ChainMap) -> Result<Summand> {
    if !x.is_radical(alg) {
        return Err(Error::NotRadical);
    }
    if !e.is_chain_map(alg, x, x) {
        return Err(Error::NotChainMap(alloc::string::String::from("idempotent does not commute with the differential")));
    }
    let h = homotopy_hom(alg, x, x, 0);
    if !h.is_null_homotopic(&e.then(alg, e).sub(e)) {
        return Err(Error::NotIdempotent);
    }
    let y = lift_strict_idempotent(alg, e).ok_or(Error::NotIdempotent)?;
    Ok(split_strict(alg, x, &y))
}

fn same_terms(a: &ProjComplex, b: &ProjComplex) -> bool {
    if a.is_zero() || b.is_zero() {
        return a.is_zero() && b.is_zero();
    }
    if a.lo() != b.lo() || a.hi() != b.hi() {
        return false;
    }
    a.degrees().all(|d| {
        let (mut s, mut t) = (a.term(d).to_vec(), b.term(d).to_vec());
        s.sort_unstable();
        t.sort_unstable();
        s == t
    })
}

fn scalar_invertible(alg: &BasicAlgebra, f: &ChainMap) -> bool {
    f.comps().values().all(|m| m.rows() == 0 || (m.rows() == m.cols() && !m.scalar_part(alg).det().is_zero()))
}

/// Chain isomorphism between radical complexes with local endomorphism rings,
/// found by testing compositions of homotopy-class basis maps.
pub fn iso_indecomposable_complex(alg: &BasicAlgebra, a: &ProjComplex, b: &ProjComplex) -> Option<(ChainMap, ChainMap)> {
    if !same_terms(a, b) {
        return None;
    }
    let hab = homotopy_hom(alg, a, b, 0);
    let hba = homotopy_hom(alg, b, a, 0);
    for f in hab.basis() {
        for g in hba.basis() {
            if scalar_invertible(alg, &f.then(alg, g)) {
                let inv = f.inverse(alg)?;
                return Some((f.clone(), inv));
            }
        }
    }
    None
}

/// Krull-Schmidt decomposition in the homotopy category.
#[derive(Clone, Debug)]
pub struct ComplexDecomposition {
    pub minimized: Minimized,
    /// Pairwise non-isomorphic indecomposable radical complexes with multiplicities.
    pub summands: Vec<(ProjComplex, usize)>,
    /// `⊕ copies -> M` for the minimized complex `M`, copies ordered class by class.
    pub inclusion: ChainMap,
    /// `M -> ⊕ copies`, inverse of `inclusion`.
    pub projection: ChainMap,
    /// False if some summand has an endomorphism ring that does not split over Q.
    pub split_local: bool,
}

impl ComplexDecomposition {
    pub fn direct_sum(&self) -> ProjComplex {
        let copies: Vec<&ProjComplex> = self.summands.iter().flat_map(|(c, m)| core::iter::repeat_n(c, *m)).collect();
        ProjComplex::direct_sum(&copies)
    }

    pub fn num_indecomposables(&self) -> usize {
        self.summands.iter().map(|s| s.1).sum()
    }

    /// Every summand, repeated by multiplicity.
    pub fn indecomposables(&self) -> Vec<&ProjComplex> {
        self.summands.iter().flat_map(|(c, m)| core::iter::repeat_n(c, *m)).collect()
    }

    /// Re-checks all certificates.
    pub fn verify(&self, alg: &BasicAlgebra, x: &ProjComplex) -> bool {
        let m = &self.minimized;
        let mc = &m.complex;
        let sum = self.direct_sum();
        let h = homotopy_hom(alg, x, x, 0);
        m.to_min.is_chain_map(alg, x, mc)
            && m.from_min.is_chain_map(alg, mc, x)
            && m.from_min.then(alg, &m.to_min) == ChainMap::identity(alg, mc)
            && h.is_null_homotopic(&m.to_min.then(alg, &m.from_min).sub(&ChainMap::identity(alg, x)))
            && self.inclusion.is_chain_map(alg, &sum, mc)
            && self.projection.is_chain_map(alg, mc, &sum)
            && self.inclusion.then(alg, &self.projection) == ChainMap::identity(alg, &sum)
            && self.projection.then(alg, &self.inclusion) == ChainMap::identity(alg, mc)
    }
}

/// `End_K(X)` of a radical complex with product `u * v = u ∘ v`, and its basis.
pub fn end_k_structure(alg: &BasicAlgebra, x: &ProjComplex) -> (StructureAlgebra, super::HomotopyHom) {
    let h = homotopy_hom(alg, x, x, 0);
    let one = h.coords(&ChainMap::identity(alg, x)).expect("identity is a chain map");
    let sa = StructureAlgebra::from_products(
        h.dim(),
        |i, j| h.coords(&h.basis()[j].then(alg, &h.basis()[i])).expect("chain maps compose"),
        one,
    );
    (sa, h)
}

fn order_key(c: &ProjComplex) -> (i32, Vec<Vec<usize>>) {
    (c.lo(), c.terms().to_vec())
}

/// Stacks components of maps out of (`rows = true`) or into consecutive blocks.
fn block_map(x: &ProjComplex, y: &ProjComplex, parts: &[&ChainMap], rows: bool) -> ChainMap {
    let mut z = ChainMap::zero(x, y);
    for (d, m) in z.comps().clone() {
        let mut out = m;
        let mut off = 0;
        for p in parts {
            let Some(c) = p.comp(d) else { continue };
            for k in 0..c.rows() {
                for l in 0..c.cols() {
                    if rows {
                        out.set(off + k, l, c.get(k, l).clone());
                    } else {
                        out.set(k, off + l, c.get(k, l).clone());
                    }
                }
            }
            off += if rows { c.rows() } else { c.cols() };
        }
        *z.comp_mut(d).unwrap() = out;
    }
    z
}

/// Minimizes, then splits a complete set of primitive idempotents of `End_K`.
pub fn decompose_complex(alg: &BasicAlgebra, x: &ProjComplex, cfg: &Config) -> ComplexDecomposition {
    let minimized = minimize(alg, x);
    let mc = minimized.complex.clone();
    if mc.is_zero() {
        let z = ChainMap::zero(&mc, &mc);
        return ComplexDecomposition { minimized, summands: Vec::new(), inclusion: z.clone(), projection: z, split_local: true };
    }
    let (sa, h) = end_k_structure(alg, &mc);
    let powers = sa.radical_powers().expect("endomorphism rings are associative");
    let empty = Span::new(sa.dim());
    let rad = powers.first().unwrap_or(&empty);
    let ids = sa.primitive_idempotents(rad, cfg.seed);

    // Lift class idempotents one at a time inside the remaining strict idempotent.
    let mut rest = ChainMap::identity(alg, &mc);
    let mut pieces = Vec::new();
    for (i, e) in ids.elements.iter().enumerate() {
        let strict = if i + 1 == ids.elements.len() {
            rest.clone()
        } else {
            let y = rest.then(alg, &h.combine(e)).then(alg, &rest);
            lift_strict_idempotent(alg, &y).expect("null-homotopic endomorphisms of radical complexes are nilpotent")
        };
        rest = rest.sub(&strict);
        pieces.push(split_strict(alg, &mc, &strict));
    }
    pieces.sort_by(|a, b| order_key(&a.complex).cmp(&order_key(&b.complex)));

    let mut classes: Vec<(ProjComplex, Vec<(ChainMap, ChainMap)>)> = Vec::new();
    for s in pieces {
        let found = classes.iter().position(|(r, _)| iso_indecomposable_complex(alg, r, &s.complex).is_some());
        match found {
            Some(c) => {
                let (f, g) = iso_indecomposable_complex(alg, &classes[c].0, &s.complex).unwrap();
                classes[c].1.push((f.then(alg, &s.inclusion), s.projection.then(alg, &g)));
            }
            None => classes.push((s.complex, alloc::vec![(s.inclusion, s.projection)])),
        }
    }
    let summands: Vec<(ProjComplex, usize)> = classes.iter().map(|(c, v)| (c.clone(), v.len())).collect();
    let incs: Vec<&ChainMap> = classes.iter().flat_map(|(_, v)| v.iter().map(|p| &p.0)).collect();
    let projs: Vec<&ChainMap> = classes.iter().flat_map(|(_, v)| v.iter().map(|p| &p.1)).collect();
    let copies: Vec<&ProjComplex> = summands.iter().flat_map(|(c, m)| core::iter::repeat_n(c, *m)).collect();
    let sum = ProjComplex::direct_sum(&copies);
    ComplexDecomposition {
        inclusion: block_map(&sum, &mc, &incs, true),
        projection: block_map(&mc, &sum, &projs, false),
        minimized,
        summands,
        split_local: ids.split,
    }
}
