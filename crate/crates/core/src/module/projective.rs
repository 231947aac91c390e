use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::representation::{ModuleMap, Representation};
use crate::algebra::{BasicAlgebra, Element};
use crate::linalg::{Matrix, Scalar};

/// Morphism between direct sums of indecomposable projectives.
///
/// `source[k]` and `target[l]` are vertex labels; entry `(k, l)` is an element of
/// `e_{target[l]} A e_{source[k]}` acting by left multiplication `P(source[k]) -> P(target[l])`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomMatrix {
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    entries: Vec<Element>,
}

impl HomMatrix {
    pub fn zero(source: Vec<usize>, target: Vec<usize>) -> Self {
        let n = source.len() * target.len();
        HomMatrix { source, target, entries: vec![Element::zero(); n] }
    }

    pub fn identity(alg: &BasicAlgebra, labels: &[usize]) -> Self {
        let mut m = HomMatrix::zero(labels.to_vec(), labels.to_vec());
        for (k, &v) in labels.iter().enumerate() {
            m.set(k, k, alg.vertex_element(v));
        }
        m
    }

    pub fn from_entries(source: Vec<usize>, target: Vec<usize>, entries: Vec<Element>) -> Self {
        assert_eq!(entries.len(), source.len() * target.len());
        HomMatrix { source, target, entries }
    }

    pub fn rows(&self) -> usize {
        self.source.len()
    }

    pub fn cols(&self) -> usize {
        self.target.len()
    }

    pub fn get(&self, k: usize, l: usize) -> &Element {
        &self.entries[k * self.target.len() + l]
    }

    pub fn set(&mut self, k: usize, l: usize, x: Element) {
        let c = self.target.len();
        self.entries[k * c + l] = x;
    }

    pub fn entries(&self) -> &[Element] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Element::is_zero)
    }

    /// Every entry lies in the correct Peirce component.
    pub fn is_well_typed(&self, alg: &BasicAlgebra) -> bool {
        (0..self.rows()).all(|k| (0..self.cols()).all(|l| alg.in_peirce(self.get(k, l), self.target[l], self.source[k])))
    }

    /// `self` followed by `then`.
    pub fn then(&self, alg: &BasicAlgebra, then: &HomMatrix) -> HomMatrix {
        assert_eq!(self.target, then.source, "incompatible hom matrices");
        let mut out = HomMatrix::zero(self.source.clone(), then.target.clone());
        for k in 0..self.rows() {
            for l in 0..self.cols() {
                let x = self.get(k, l);
                if x.is_zero() {
                    continue;
                }
                for m in 0..then.cols() {
                    let y = then.get(l, m);
                    if y.is_zero() {
                        continue;
                    }
                    let p = alg.mul(y, x);
                    let idx = k * out.cols() + m;
                    out.entries[idx].add_scaled(&p, &Scalar::one());
                }
            }
        }
        out
    }

    pub fn add(&self, o: &HomMatrix) -> HomMatrix {
        HomMatrix {
            source: self.source.clone(),
            target: self.target.clone(),
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, o: &HomMatrix) -> HomMatrix {
        HomMatrix {
            source: self.source.clone(),
            target: self.target.clone(),
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> HomMatrix {
        HomMatrix {
            source: self.source.clone(),
            target: self.target.clone(),
            entries: self.entries.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// Restriction to the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> HomMatrix {
        let mut out = HomMatrix::zero(
            rows.iter().map(|&k| self.source[k]).collect(),
            cols.iter().map(|&l| self.target[l]).collect(),
        );
        for (i, &k) in rows.iter().enumerate() {
            for (j, &l) in cols.iter().enumerate() {
                out.set(i, j, self.get(k, l).clone());
            }
        }
        out
    }

    /// Scalar part: coefficient of `e_v` in entries between summands with equal label `v`.
    pub fn scalar_part(&self, alg: &BasicAlgebra) -> Matrix {
        let mut m = Matrix::zeros(self.rows(), self.cols());
        for k in 0..self.rows() {
            for l in 0..self.cols() {
                if self.source[k] == self.target[l] {
                    m.set(k, l, alg.unit_coeff(self.get(k, l), self.source[k]));
                }
            }
        }
        m
    }

    /// No entry has an invertible component.
    pub fn is_radical(&self, alg: &BasicAlgebra) -> bool {
        self.entries.iter().all(|x| alg.is_radical_element(x))
    }

    /// Inverse of a square matrix whose scalar part is invertible.
    pub fn inverse(&self, alg: &BasicAlgebra) -> Option<HomMatrix> {
        let s_inv = self.scalar_part(alg).inverse()?;
        if self.source != self.target {
            return None;
        }
        let labels = self.source.clone();
        let lift = |m: &Matrix| {
            let mut h = HomMatrix::zero(labels.clone(), labels.clone());
            for k in 0..m.rows() {
                for l in 0..m.cols() {
                    let c = m.get(k, l);
                    if !c.is_zero() && labels[k] == labels[l] {
                        h.set(k, l, alg.vertex_element(labels[k]).scale(c));
                    }
                }
            }
            h
        };
        // self = S + N; self^{-1} = sum_k (-S^{-1} N)^k S^{-1} in composition order.
        let s_inv_h = lift(&s_inv);
        let n = self.sub(&lift(&self.scalar_part(alg)));
        let step = n.then(alg, &s_inv_h).scale(&-Scalar::one());
        let mut term = s_inv_h.clone();
        let mut acc = s_inv_h;
        for _ in 0..=alg.path_bound() * labels.len().max(1) {
            term = term.then(alg, &step);
            if term.is_zero() {
                break;
            }
            acc = acc.add(&term);
        }
        let check = self.then(alg, &acc);
        (check == HomMatrix::identity(alg, &labels)).then_some(acc)
    }
}

/// Basis of `P(v)`: at vertex `w`, the normal-form paths from `v` to `w`.
pub fn projective(alg: &BasicAlgebra, v: usize) -> Representation {
    projective_sum(alg, &[v])
}

/// `P(labels[0]) ⊕ P(labels[1]) ⊕ ...`, summands in order at every vertex.
pub fn projective_sum(alg: &BasicAlgebra, labels: &[usize]) -> Representation {
    let q = alg.quiver();
    let nv = q.num_vertices();
    let dims: Vec<usize> = (0..nv).map(|w| labels.iter().map(|&v| alg.peirce(v, w).len()).sum()).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let (w, w2) = (a.source, a.target);
            let arrow = alg.arrow_element(ai);
            let mut m = Matrix::zeros(dims[w], dims[w2]);
            let (mut ro, mut co) = (0, 0);
            for &v in labels {
                let rows = alg.peirce(v, w);
                let cols = alg.peirce(v, w2);
                for (i, &p) in rows.iter().enumerate() {
                    let img = alg.mul(&Element::basis(p), &arrow);
                    for (j, &q) in cols.iter().enumerate() {
                        m.set(ro + i, co + j, img.coeff(q));
                    }
                }
                ro += rows.len();
                co += cols.len();
            }
            m
        })
        .collect();
    Representation::new_unchecked(dims, maps)
}

/// `I(v) = D(A e_v)`: at vertex `w`, the dual of the paths from `w` to `v`.
pub fn injective(alg: &BasicAlgebra, v: usize) -> Representation {
    injective_sum(alg, &[v])
}

pub fn injective_sum(alg: &BasicAlgebra, labels: &[usize]) -> Representation {
    let q = alg.quiver();
    let nv = q.num_vertices();
    let dims: Vec<usize> = (0..nv).map(|w| labels.iter().map(|&v| alg.peirce(w, v).len()).sum()).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let (w, w2) = (a.source, a.target);
            let arrow = alg.arrow_element(ai);
            let mut m = Matrix::zeros(dims[w], dims[w2]);
            let (mut ro, mut co) = (0, 0);
            for &v in labels {
                let rows = alg.peirce(w, v);
                let cols = alg.peirce(w2, v);
                for (j, &q) in cols.iter().enumerate() {
                    let img = alg.mul(&arrow, &Element::basis(q));
                    for (i, &p) in rows.iter().enumerate() {
                        m.set(ro + i, co + j, img.coeff(p));
                    }
                }
                ro += rows.len();
                co += cols.len();
            }
            m
        })
        .collect();
    Representation::new_unchecked(dims, maps)
}

pub fn simple(alg: &BasicAlgebra, v: usize) -> Representation {
    let q = alg.quiver();
    let mut dims = vec![0; q.num_vertices()];
    dims[v] = 1;
    let maps = q.arrows().iter().map(|a| Matrix::zeros(dims[a.source], dims[a.target])).collect();
    Representation::new_unchecked(dims, maps)
}

/// Offset of summand `k` inside the space at vertex `w` of a projective sum.
fn proj_offsets(alg: &BasicAlgebra, labels: &[usize], w: usize) -> Vec<usize> {
    let mut offs = Vec::with_capacity(labels.len());
    let mut o = 0;
    for &v in labels {
        offs.push(o);
        o += alg.peirce(v, w).len();
    }
    offs
}

/// The module map between projective sums given by a hom matrix.
pub fn hom_matrix_to_map(alg: &BasicAlgebra, h: &HomMatrix) -> ModuleMap {
    let nv = alg.num_vertices();
    let comps = (0..nv)
        .map(|w| {
            let so = proj_offsets(alg, &h.source, w);
            let to = proj_offsets(alg, &h.target, w);
            let rows: usize = h.source.iter().map(|&v| alg.peirce(v, w).len()).sum();
            let cols: usize = h.target.iter().map(|&v| alg.peirce(v, w).len()).sum();
            let mut m = Matrix::zeros(rows, cols);
            for (k, &a) in h.source.iter().enumerate() {
                for (l, &b) in h.target.iter().enumerate() {
                    let x = h.get(k, l);
                    if x.is_zero() {
                        continue;
                    }
                    for (i, &p) in alg.peirce(a, w).iter().enumerate() {
                        let img = alg.mul(x, &Element::basis(p));
                        for (j, &q) in alg.peirce(b, w).iter().enumerate() {
                            let c = img.coeff(q);
                            if !c.is_zero() {
                                m.set(so[k] + i, to[l] + j, c);
                            }
                        }
                    }
                }
            }
            m
        })
        .collect();
    ModuleMap::new(comps)
}

/// Images of the generators `e_{labels[k]}` under a map out of a projective sum.
pub fn generator_images(alg: &BasicAlgebra, labels: &[usize], f: &ModuleMap) -> Vec<Vec<Scalar>> {
    labels
        .iter()
        .enumerate()
        .map(|(k, &v)| {
            let offs = proj_offsets(alg, labels, v);
            let pos = alg.peirce(v, v).iter().position(|&i| alg.basis()[i].is_trivial()).expect("e_v is a basis path");
            f.comp(v).row(offs[k] + pos).to_vec()
        })
        .collect()
}

/// Hom matrix of a module map between projective sums.
pub fn map_to_hom_matrix(alg: &BasicAlgebra, source: &[usize], target: &[usize], f: &ModuleMap) -> HomMatrix {
    let gens = generator_images(alg, source, f);
    let mut h = HomMatrix::zero(source.to_vec(), target.to_vec());
    for (k, &a) in source.iter().enumerate() {
        let offs = proj_offsets(alg, target, a);
        for (l, &b) in target.iter().enumerate() {
            let basis = alg.peirce(b, a);
            h.set(
                k,
                l,
                Element::from_terms(basis.iter().enumerate().map(|(j, &q)| (q, gens[k][offs[l] + j].clone()))),
            );
        }
    }
    h
}

/// Map `P(labels[0]) ⊕ ... -> x` sending `e_{labels[k]}` to `gens[k]` in `x_{labels[k]}`.
pub fn map_from_generators(alg: &BasicAlgebra, labels: &[usize], x: &Representation, gens: &[Vec<Scalar>]) -> ModuleMap {
    let nv = alg.num_vertices();
    let comps = (0..nv)
        .map(|w| {
            let mut rows = Vec::new();
            for (k, &v) in labels.iter().enumerate() {
                for &p in alg.peirce(v, w) {
                    rows.push(x.path_matrix(&alg.basis()[p]).vec_mul(&gens[k]));
                }
            }
            Matrix::from_rows(rows, x.dims()[w])
        })
        .collect();
    ModuleMap::new(comps)
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}
