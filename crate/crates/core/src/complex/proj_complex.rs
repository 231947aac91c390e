use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::One;

use crate::algebra::BasicAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Scalar;
use crate::module::HomMatrix;

/// Structural checks on a complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Validation {
    /// First degree `d` with `d^{d+1} ∘ d^d != 0`.
    pub d_squared_failure: Option<i32>,
    pub is_radical: bool,
}

/// Bounded complex of finitely generated projectives in label form.
///
/// `terms[i]` lists the vertices `v` of the summands `P(v)` in degree `lo + i`;
/// `diffs[i]` is the differential from degree `lo + i` to `lo + i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjComplex {
    lo: i32,
    terms: Vec<Vec<usize>>,
    diffs: Vec<HomMatrix>,
}

impl ProjComplex {
    /// Validates shapes, Peirce membership of entries and `d^2 = 0`.
    pub fn new(alg: &BasicAlgebra, lo: i32, terms: Vec<Vec<usize>>, diffs: Vec<HomMatrix>) -> Result<Self> {
        if diffs.len() + 1 != terms.len().max(1) {
            return Err(Error::DimensionMismatch(format!(
                "{} terms need {} differentials, got {}",
                terms.len(),
                terms.len().saturating_sub(1),
                diffs.len()
            )));
        }
        for (i, d) in diffs.iter().enumerate() {
            if d.source != terms[i] || d.target != terms[i + 1] {
                return Err(Error::DimensionMismatch(format!("differential at degree {} has the wrong shape", lo + i as i32)));
            }
            if !d.is_well_typed(alg) {
                return Err(Error::DimensionMismatch(format!(
                    "differential at degree {} has entries in the wrong Peirce component",
                    lo + i as i32
                )));
            }
        }
        for v in terms.iter().flatten() {
            if *v >= alg.num_vertices() {
                return Err(Error::DimensionMismatch(format!("unknown vertex {v}")));
            }
        }
        for (i, w) in diffs.windows(2).enumerate() {
            if !w[0].then(alg, &w[1]).is_zero() {
                return Err(Error::DSquaredNonzero(lo + i as i32));
            }
        }
        Ok(Self::new_unchecked(lo, terms, diffs))
    }

    /// Builds without validation, trimming empty terms at both ends.
    pub(crate) fn new_unchecked(mut lo: i32, mut terms: Vec<Vec<usize>>, mut diffs: Vec<HomMatrix>) -> Self {
        while terms.last().is_some_and(Vec::is_empty) {
            terms.pop();
            diffs.pop();
        }
        while terms.first().is_some_and(Vec::is_empty) {
            terms.remove(0);
            if !diffs.is_empty() {
                diffs.remove(0);
            }
            lo += 1;
        }
        if terms.is_empty() {
            lo = 0;
            diffs.clear();
        }
        ProjComplex { lo, terms, diffs }
    }

    pub fn zero() -> Self {
        ProjComplex { lo: 0, terms: Vec::new(), diffs: Vec::new() }
    }

    /// `⊕ P(labels)` concentrated in degree `deg`.
    pub fn stalk(deg: i32, labels: Vec<usize>) -> Self {
        Self::new_unchecked(deg, alloc::vec![labels], Vec::new())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest degree with a nonzero term (0 for the zero complex).
    pub fn lo(&self) -> i32 {
        self.lo
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.terms.len() as i32 - 1
    }

    pub fn width(&self) -> i32 {
        if self.is_zero() {
            0
        } else {
            self.hi() - self.lo
        }
    }

    pub fn degrees(&self) -> core::ops::RangeInclusive<i32> {
        self.lo..=self.hi()
    }

    pub fn term(&self, d: i32) -> &[usize] {
        let i = d - self.lo;
        if i < 0 || i as usize >= self.terms.len() {
            &[]
        } else {
            &self.terms[i as usize]
        }
    }

    pub fn terms(&self) -> &[Vec<usize>] {
        &self.terms
    }

    /// Differential from degree `d` to `d + 1`.
    pub fn diff(&self, d: i32) -> HomMatrix {
        let i = d - self.lo;
        if i >= 0 && (i as usize) < self.diffs.len() {
            self.diffs[i as usize].clone()
        } else {
            HomMatrix::zero(self.term(d).to_vec(), self.term(d + 1).to_vec())
        }
    }

    pub(crate) fn diff_ref(&self, d: i32) -> Option<&HomMatrix> {
        let i = d - self.lo;
        if i >= 0 {
            self.diffs.get(i as usize)
        } else {
            None
        }
    }

    /// `X[n]` with `(X[n])^i = X^{n+i}` and differential `(-1)^n d`.
    pub fn shift(&self, n: i32) -> ProjComplex {
        if self.is_zero() {
            return self.clone();
        }
        let sign = if n % 2 == 0 { Scalar::one() } else { -Scalar::one() };
        ProjComplex {
            lo: self.lo - n,
            terms: self.terms.clone(),
            diffs: self.diffs.iter().map(|d| d.scale(&sign)).collect(),
        }
    }

    pub fn direct_sum(parts: &[&ProjComplex]) -> ProjComplex {
        let nonzero: Vec<&&ProjComplex> = parts.iter().filter(|p| !p.is_zero()).collect();
        let Some(lo) = nonzero.iter().map(|p| p.lo).min() else {
            return ProjComplex::zero();
        };
        let hi = nonzero.iter().map(|p| p.hi()).max().unwrap();
        let terms: Vec<Vec<usize>> = (lo..=hi).map(|d| parts.iter().flat_map(|p| p.term(d).iter().copied()).collect()).collect();
        let diffs = (lo..hi)
            .map(|d| {
                let mut m = HomMatrix::zero(terms[(d - lo) as usize].clone(), terms[(d - lo + 1) as usize].clone());
                let (mut r, mut c) = (0, 0);
                for p in parts {
                    let pd = p.diff(d);
                    for k in 0..pd.rows() {
                        for l in 0..pd.cols() {
                            m.set(r + k, c + l, pd.get(k, l).clone());
                        }
                    }
                    r += pd.rows();
                    c += pd.cols();
                }
                m
            })
            .collect();
        Self::new_unchecked(lo, terms, diffs)
    }

    /// The direct sum with its block injections and projections.
    pub fn direct_sum_maps(alg: &BasicAlgebra, parts: &[&ProjComplex]) -> (ProjComplex, Vec<ChainMap>, Vec<ChainMap>) {
        let sum = Self::direct_sum(parts);
        let mut offs: BTreeMap<i32, usize> = BTreeMap::new();
        let mut incs = Vec::new();
        let mut projs = Vec::new();
        for p in parts {
            let mut inc = ChainMap::zero(p, &sum);
            let mut proj = ChainMap::zero(&sum, p);
            for d in p.degrees() {
                if p.is_zero() {
                    break;
                }
                let o = offs.entry(d).or_insert(0);
                let (i, q) = (inc.comp_mut(d).unwrap(), proj.comp_mut(d).unwrap());
                for (k, &v) in p.term(d).iter().enumerate() {
                    i.set(k, *o + k, alg.vertex_element(v));
                    q.set(*o + k, k, alg.vertex_element(v));
                }
                *o += p.term(d).len();
            }
            incs.push(inc);
            projs.push(proj);
        }
        (sum, incs, projs)
    }

    pub fn validate(&self, alg: &BasicAlgebra) -> Validation {
        let d_squared_failure =
            self.diffs.windows(2).position(|w| !w[0].then(alg, &w[1]).is_zero()).map(|i| self.lo + i as i32);
        Validation { d_squared_failure, is_radical: self.is_radical(alg) }
    }

    /// No differential entry has an invertible component.
    pub fn is_radical(&self, alg: &BasicAlgebra) -> bool {
        self.diffs.iter().all(|d| d.is_radical(alg))
    }

    /// Alternating sum of label counts: the class in the Grothendieck group of projectives.
    pub fn k0_class(&self, num_vertices: usize) -> Vec<i64> {
        let mut v = alloc::vec![0i64; num_vertices];
        for d in self.degrees() {
            let s = if d.rem_euclid(2) == 0 { 1 } else { -1 };
            for &l in self.term(d) {
                v[l] += s;
            }
        }
        v
    }

    /// Labels of all terms in nonzero degrees.
    pub fn off_degree_labels(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.degrees().filter(|&d| d != 0).flat_map(|d| self.term(d).iter().copied()).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Degree-0 morphism of complexes; `comps[d]: X^d -> Y^d` over the union of both ranges.
#[derive(Clone, Debug)]
pub struct ChainMap {
    comps: BTreeMap<i32, HomMatrix>,
}

impl PartialEq for ChainMap {
    fn eq(&self, o: &ChainMap) -> bool {
        let nonempty = |c: &ChainMap| -> Vec<(i32, HomMatrix)> {
            c.comps.iter().filter(|(_, m)| m.rows() + m.cols() > 0).map(|(d, m)| (*d, m.clone())).collect()
        };
        nonempty(self) == nonempty(o)
    }
}

impl Eq for ChainMap {}

fn union_range(x: &ProjComplex, y: &ProjComplex) -> Vec<i32> {
    match (x.is_zero(), y.is_zero()) {
        (true, true) => Vec::new(),
        (true, false) => y.degrees().collect(),
        (false, true) => x.degrees().collect(),
        (false, false) => (x.lo.min(y.lo)..=x.hi().max(y.hi())).collect(),
    }
}

impl ChainMap {
    pub fn zero(x: &ProjComplex, y: &ProjComplex) -> Self {
        ChainMap {
            comps: union_range(x, y)
                .into_iter()
                .map(|d| (d, HomMatrix::zero(x.term(d).to_vec(), y.term(d).to_vec())))
                .collect(),
        }
    }

    pub fn identity(alg: &BasicAlgebra, x: &ProjComplex) -> Self {
        ChainMap { comps: x.degrees().map(|d| (d, HomMatrix::identity(alg, x.term(d)))).collect() }
    }

    /// Builds from components; missing degrees are zero.
    pub fn from_comps(x: &ProjComplex, y: &ProjComplex, mut given: BTreeMap<i32, HomMatrix>) -> Self {
        let mut z = Self::zero(x, y);
        for (d, m) in z.comps.iter_mut() {
            if let Some(g) = given.remove(d) {
                *m = g;
            }
        }
        z
    }

    pub fn comp(&self, d: i32) -> Option<&HomMatrix> {
        self.comps.get(&d)
    }

    pub fn comps(&self) -> &BTreeMap<i32, HomMatrix> {
        &self.comps
    }

    pub(crate) fn comp_mut(&mut self, d: i32) -> Option<&mut HomMatrix> {
        self.comps.get_mut(&d)
    }

    pub fn is_zero(&self) -> bool {
        self.comps.values().all(HomMatrix::is_zero)
    }

    /// `self` followed by `g`.
    pub fn then(&self, alg: &BasicAlgebra, g: &ChainMap) -> ChainMap {
        let mut comps = BTreeMap::new();
        let degrees: alloc::collections::BTreeSet<i32> = self.comps.keys().chain(g.comps.keys()).copied().collect();
        for d in degrees {
            let m = match (self.comps.get(&d), g.comps.get(&d)) {
                (Some(a), Some(b)) => a.then(alg, b),
                (Some(a), None) => HomMatrix::zero(a.source.clone(), Vec::new()),
                (None, Some(b)) => HomMatrix::zero(Vec::new(), b.target.clone()),
                (None, None) => unreachable!(),
            };
            comps.insert(d, m);
        }
        ChainMap { comps }
    }

    fn zip(&self, o: &ChainMap, f: impl Fn(&HomMatrix, &HomMatrix) -> HomMatrix) -> ChainMap {
        let mut comps = self.comps.clone();
        for (d, m) in o.comps.iter() {
            match comps.get_mut(d) {
                Some(a) => *a = f(a, m),
                None => {
                    comps.insert(*d, f(&HomMatrix::zero(m.source.clone(), m.target.clone()), m));
                }
            }
        }
        ChainMap { comps }
    }

    pub fn add(&self, o: &ChainMap) -> ChainMap {
        self.zip(o, |a, b| a.add(b))
    }

    pub fn sub(&self, o: &ChainMap) -> ChainMap {
        self.zip(o, |a, b| a.sub(b))
    }

    pub fn scale(&self, c: &Scalar) -> ChainMap {
        ChainMap { comps: self.comps.iter().map(|(d, m)| (*d, m.scale(c))).collect() }
    }

    /// Commutes with the differentials of `x` and `y`.
    pub fn is_chain_map(&self, alg: &BasicAlgebra, x: &ProjComplex, y: &ProjComplex) -> bool {
        for d in union_range(x, y) {
            let Some(fd) = self.comps.get(&d) else { return false };
            if fd.source != x.term(d) || fd.target != y.term(d) {
                return false;
            }
            let f1 = self.comps.get(&(d + 1)).cloned().unwrap_or_else(|| HomMatrix::zero(x.term(d + 1).to_vec(), y.term(d + 1).to_vec()));
            if x.diff(d).then(alg, &f1) != fd.then(alg, &y.diff(d)) {
                return false;
            }
        }
        true
    }

    /// Every component is invertible.
    pub fn inverse(&self, alg: &BasicAlgebra) -> Option<ChainMap> {
        let mut comps = BTreeMap::new();
        for (d, m) in &self.comps {
            if m.rows() != m.cols() {
                return None;
            }
            let inv = if m.rows() == 0 { m.clone() } else { m.inverse(alg)? };
            comps.insert(*d, inv);
        }
        Some(ChainMap { comps })
    }
}
