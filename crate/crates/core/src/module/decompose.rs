use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::hom::{hom_space, HomCoords};
use super::representation::{ModuleMap, Representation};
use crate::algebra::{BasicAlgebra, StructureAlgebra};
use crate::linalg::{int, Matrix, Span};
use crate::Config;

/// Krull-Schmidt decomposition with an explicit isomorphism.
#[derive(Clone, Debug)]
pub struct Decomposition {
    /// Pairwise non-isomorphic indecomposables with multiplicities.
    pub summands: Vec<(Representation, usize)>,
    /// `⊕ copies -> M`, copies ordered class by class.
    pub inclusion: ModuleMap,
    /// `M -> ⊕ copies`, inverse of `inclusion`.
    pub projection: ModuleMap,
    /// False if some summand has an endomorphism ring that does not split over Q.
    pub split_local: bool,
}

impl Decomposition {
    pub fn direct_sum(&self) -> Representation {
        let copies: Vec<&Representation> =
            self.summands.iter().flat_map(|(r, m)| core::iter::repeat_n(r, *m)).collect();
        Representation::direct_sum(&copies)
    }

    /// Re-checks the certificate: both maps are morphisms and mutually inverse.
    pub fn verify(&self, alg: &BasicAlgebra, m: &Representation) -> bool {
        let sum = self.direct_sum();
        self.inclusion.is_morphism(alg, &sum, m)
            && self.projection.is_morphism(alg, m, &sum)
            && self.inclusion.then(&self.projection) == ModuleMap::identity(&sum)
            && self.projection.then(&self.inclusion) == ModuleMap::identity(m)
    }

    pub fn num_indecomposables(&self) -> usize {
        self.summands.iter().map(|s| s.1).sum()
    }
}

/// `End(M)` with product `u * v = u ∘ v` (first `v`, then `u`), and its basis of maps.
pub fn end_structure(alg: &BasicAlgebra, m: &Representation) -> (StructureAlgebra, Vec<ModuleMap>, HomCoords) {
    let basis = hom_space(alg, m, m);
    let coords = HomCoords::new(&basis, m, m);
    let n = basis.len();
    let one = coords.coords(&ModuleMap::identity(m)).expect("identity is an endomorphism");
    let sa = StructureAlgebra::from_products(
        n,
        |i, j| coords.coords(&basis[j].then(&basis[i])).expect("endomorphisms compose"),
        one,
    );
    (sa, basis, coords)
}

/// Image of an idempotent endomorphism as a summand, with inclusion and projection.
fn split_module_idempotent(alg: &BasicAlgebra, m: &Representation, e: &ModuleMap) -> (Representation, ModuleMap, ModuleMap) {
    let image = e.image();
    let (sub, incl) = m.restrict(alg, &image);
    let proj = (0..m.dims().len())
        .map(|v| {
            let rows = (0..m.dims()[v]).map(|i| image[v].coords(e.comp(v).row(i)).expect("image")).collect();
            Matrix::from_rows(rows, sub.dims()[v])
        })
        .collect();
    (sub, incl, ModuleMap::new(proj))
}

/// Isomorphism between two modules with local endomorphism rings, found by testing
/// compositions of basis maps.
pub fn iso_indecomposable(alg: &BasicAlgebra, x: &Representation, y: &Representation) -> Option<(ModuleMap, ModuleMap)> {
    if x.dims() != y.dims() {
        return None;
    }
    let hxy = hom_space(alg, x, y);
    let hyx = hom_space(alg, y, x);
    for f in &hxy {
        for g in &hyx {
            if f.then(g).is_iso() {
                let inv = f.inverse()?;
                return Some((f.clone(), inv));
            }
        }
    }
    None
}

/// Complete decomposition via primitive idempotents of `End(M)`.
pub fn decompose(alg: &BasicAlgebra, m: &Representation, cfg: &Config) -> Decomposition {
    if m.is_zero() {
        let z = ModuleMap::identity(m);
        return Decomposition { summands: Vec::new(), inclusion: z.clone(), projection: z, split_local: true };
    }
    let (sa, _, coords) = end_structure(alg, m);
    let powers = sa.radical_powers().expect("endomorphism rings are associative");
    let empty = Span::new(sa.dim());
    let rad = powers.first().unwrap_or(&empty);
    let ids = sa.primitive_idempotents(rad, cfg.seed);

    let mut pieces: Vec<(Representation, ModuleMap, ModuleMap)> =
        ids.elements.iter().map(|e| split_module_idempotent(alg, m, &coords.combine(e))).collect();
    pieces.sort_by(|a, b| a.0.dims().cmp(b.0.dims()));

    // Group into isomorphism classes; each copy is transported onto the class representative.
    let mut classes: Vec<(Representation, Vec<(ModuleMap, ModuleMap)>)> = Vec::new();
    for (rep, incl, proj) in pieces {
        let found = classes.iter().position(|(r, _)| iso_indecomposable(alg, r, &rep).is_some());
        match found {
            Some(c) => {
                let (f, g) = iso_indecomposable(alg, &classes[c].0, &rep).unwrap();
                classes[c].1.push((f.then(&incl), proj.then(&g)));
            }
            None => {
                let id = ModuleMap::identity(&rep);
                classes.push((rep, vec![(id.then(&incl), proj)]));
            }
        }
    }
    let nv = m.dims().len();
    let mut inc_rows: Vec<Matrix> = (0..nv).map(|v| Matrix::zeros(0, m.dims()[v])).collect();
    let mut proj_cols: Vec<Matrix> = (0..nv).map(|v| Matrix::zeros(m.dims()[v], 0)).collect();
    let mut summands = Vec::new();
    for (rep, maps) in classes {
        for (i, p) in &maps {
            for v in 0..nv {
                inc_rows[v] = inc_rows[v].vstack(i.comp(v));
                proj_cols[v] = proj_cols[v].hstack(p.comp(v));
            }
        }
        summands.push((rep, maps.len()));
    }
    Decomposition {
        summands,
        inclusion: ModuleMap::new(inc_rows),
        projection: ModuleMap::new(proj_cols),
        split_local: ids.split,
    }
}

/// Seeded randomized isomorphism search with a deterministic fallback through decomposition.
pub fn is_isomorphic(alg: &BasicAlgebra, m: &Representation, n: &Representation, cfg: &Config) -> Option<(ModuleMap, ModuleMap)> {
    if m.dims() != n.dims() {
        return None;
    }
    let basis = hom_space(alg, m, n);
    if basis.is_empty() {
        return m.is_zero().then(|| (ModuleMap::zero(m, n), ModuleMap::zero(n, m)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..8 {
        let mut f = ModuleMap::zero(m, n);
        for b in &basis {
            let c = int((rng.next_u32() % 2001) as i64 - 1000);
            if !c.is_zero() {
                f = f.add(&b.scale(&c));
            }
        }
        if f.is_iso() {
            let g = f.inverse()?;
            return Some((f, g));
        }
    }
    let dm = decompose(alg, m, cfg);
    let dn = decompose(alg, n, cfg);
    if dm.summands.len() != dn.summands.len() {
        return None;
    }
    // Match classes and assemble a block isomorphism between the two direct sums.
    let mut used = vec![false; dn.summands.len()];
    let mut blocks: Vec<(usize, ModuleMap)> = Vec::new();
    for (r, mult) in &dm.summands {
        let j = (0..dn.summands.len()).find(|&j| {
            !used[j] && dn.summands[j].1 == *mult && iso_indecomposable(alg, r, &dn.summands[j].0).is_some()
        })?;
        used[j] = true;
        blocks.push((j, iso_indecomposable(alg, r, &dn.summands[j].0)?.0));
    }
    let nv = m.dims().len();
    // Offsets of each class block inside the ordered direct sum of `dn`.
    let mut offs_n: Vec<Vec<usize>> = Vec::new();
    let mut acc = vec![0usize; nv];
    for (r, mult) in &dn.summands {
        offs_n.push(acc.clone());
        for v in 0..nv {
            acc[v] += r.dims()[v] * mult;
        }
    }
    let sum_m = dm.direct_sum();
    let sum_n = dn.direct_sum();
    let mut comps: Vec<Matrix> = (0..nv).map(|v| Matrix::zeros(sum_m.dims()[v], sum_n.dims()[v])).collect();
    let mut row = vec![0usize; nv];
    for ((r, mult), (j, f)) in dm.summands.iter().zip(&blocks) {
        for c in 0..*mult {
            for v in 0..nv {
                let d = r.dims()[v];
                let col0 = offs_n[*j][v] + c * d;
                for a in 0..d {
                    for b in 0..d {
                        comps[v].set(row[v] + a, col0 + b, f.comp(v).get(a, b).clone());
                    }
                }
                row[v] += d;
            }
        }
    }
    let iso = dm.projection.then(&ModuleMap::new(comps)).then(&dn.inclusion);
    let inv = iso.inverse()?;
    Some((iso, inv))
}
