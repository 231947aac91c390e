use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::element::Element;
use super::quiver::{Path, Quiver, Relation};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Span};

/// Upper bound on the number of paths enumerated while computing normal forms.
const PATH_CAP: usize = 200_000;

/// Finite-dimensional quotient `kQ/I` of a path algebra by an admissible ideal.
///
/// The basis consists of normal-form paths; arrows compose left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicAlgebra {
    quiver: Quiver,
    relations: Vec<Relation>,
    basis: Vec<Path>,
    index: BTreeMap<(usize, Vec<usize>), usize>,
    mult: Vec<Element>,
    peirce: Vec<Vec<Vec<usize>>>,
    path_bound: usize,
}

fn validate_relation(q: &Quiver, r: &Relation) -> Result<()> {
    let nonzero: Vec<&(Scalar, Path)> = r.terms.iter().filter(|t| !t.0.is_zero()).collect();
    let Some(first) = nonzero.first() else {
        return Ok(());
    };
    for (_, p) in &nonzero {
        if p.source >= q.num_vertices() || p.target >= q.num_vertices() {
            return Err(Error::InvalidQuiver(format!("relation path {p:?} outside quiver")));
        }
        if !p.is_trivial() {
            Path::from_arrows(q, p.arrows.clone())?;
        }
        if p.source != first.1.source || p.target != first.1.target {
            return Err(Error::NotAdmissible(format!("relation {} mixes non-parallel paths", r.display(q))));
        }
        if p.len() < 2 {
            return Err(Error::NotAdmissible(format!("relation {} has a term of length < 2", r.display(q))));
        }
    }
    Ok(())
}

/// All paths below a length bound, indexed for linear algebra.
pub(crate) struct Stage {
    pub(crate) paths: Vec<Path>,
    col: BTreeMap<(usize, Vec<usize>), usize>,
}

impl Stage {
    /// Paths of length `< bound`, ordered by length, then arrows lexicographically.
    pub(crate) fn enumerate(q: &Quiver, bound: usize) -> Result<Stage> {
        let mut levels: Vec<Vec<Path>> = vec![(0..q.num_vertices()).map(Path::trivial).collect()];
        let mut total = q.num_vertices();
        while levels.len() < bound {
            let next = extend_level(q, levels.last().unwrap());
            total += next.len();
            if total > PATH_CAP {
                return Err(Error::NotAdmissible(format!("more than {PATH_CAP} paths below length {bound}")));
            }
            levels.push(next);
        }
        Ok(Stage::from_levels(&levels))
    }

    fn from_levels(levels: &[Vec<Path>]) -> Stage {
        let paths: Vec<Path> = levels.iter().flatten().cloned().collect();
        let col = paths.iter().enumerate().map(|(i, p)| ((p.source, p.arrows.clone()), i)).collect();
        Stage { paths, col }
    }

    pub(crate) fn lookup(&self, source: usize, arrows: &[usize]) -> Option<usize> {
        self.col.get(&(source, arrows.to_vec())).copied()
    }

    pub(crate) fn vector(&self, terms: &[(Scalar, Path)]) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.paths.len()];
        for (c, p) in terms {
            if let Some(i) = self.lookup(p.source, &p.arrows) {
                v[i] += c;
            }
        }
        v
    }
}

/// Builds `kQ/(R)` with default path-length limit.
pub fn build_path_algebra(quiver: Quiver, relations: Vec<Relation>, max_path_len: usize) -> Result<BasicAlgebra> {
    for r in &relations {
        validate_relation(&quiver, r)?;
    }
    let mut levels: Vec<Vec<Path>> = vec![(0..quiver.num_vertices()).map(Path::trivial).collect()];
    let mut total = quiver.num_vertices();
    for bound in 2..=max_path_len + 1 {
        while levels.len() < bound {
            let next = extend_level(&quiver, levels.last().unwrap());
            total += next.len();
            if total > PATH_CAP {
                return Err(Error::NotAdmissible(format!("more than {PATH_CAP} paths below length {bound}")));
            }
            levels.push(next);
        }
        let stage = Stage::from_levels(&levels);
        let mut span = Span::new(stage.paths.len());
        let seeds = relations.iter().map(|r| stage.vector(&r.terms)).collect();
        close_ideal(&stage, &quiver, &mut span, seeds, bound);
        let standard: Vec<usize> = span.complement_units();
        let top = bound - 1;
        if standard.iter().all(|&i| stage.paths[i].len() < top) {
            return Ok(finish(quiver, relations, &stage, &span, standard, top));
        }
    }
    Err(Error::NotAdmissible(format!("nonzero paths of length {max_path_len} survive")))
}

fn extend_level(q: &Quiver, level: &[Path]) -> Vec<Path> {
    let mut next = Vec::new();
    for p in level {
        for (ai, a) in q.arrows().iter().enumerate() {
            if a.source == p.target {
                let mut arr = p.arrows.clone();
                arr.push(ai);
                next.push(Path { source: p.source, target: a.target, arrows: arr });
            }
        }
    }
    next
}

/// Extends `span` to the two-sided ideal generated by it and `seeds`, with path terms of
/// length `>= bound` discarded.
pub(crate) fn close_ideal(stage: &Stage, q: &Quiver, span: &mut Span, seeds: Vec<Vec<Scalar>>, bound: usize) {
    let n = stage.paths.len();
    let mut queue: VecDeque<Vec<Scalar>> = seeds.into();
    while let Some(v) = queue.pop_front() {
        if !span.insert(v.clone()) {
            continue;
        }
        for (ai, a) in q.arrows().iter().enumerate() {
            let mut left = vec![Scalar::zero(); n];
            let mut right = vec![Scalar::zero(); n];
            let (mut any_l, mut any_r) = (false, false);
            for (i, c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let p = &stage.paths[i];
                if p.len() + 1 >= bound {
                    continue;
                }
                if a.target == p.source {
                    let mut arr = vec![ai];
                    arr.extend_from_slice(&p.arrows);
                    if let Some(j) = stage.lookup(a.source, &arr) {
                        left[j] += c;
                        any_l = true;
                    }
                }
                if p.target == a.source {
                    let mut arr = p.arrows.clone();
                    arr.push(ai);
                    if let Some(j) = stage.lookup(p.source, &arr) {
                        right[j] += c;
                        any_r = true;
                    }
                }
            }
            if any_l {
                queue.push_back(left);
            }
            if any_r {
                queue.push_back(right);
            }
        }
    }
}

fn finish(
    quiver: Quiver,
    relations: Vec<Relation>,
    stage: &Stage,
    span: &Span,
    standard: Vec<usize>,
    path_bound: usize,
) -> BasicAlgebra {
    let basis: Vec<Path> = standard.iter().map(|&i| stage.paths[i].clone()).collect();
    let mut std_pos = vec![usize::MAX; stage.paths.len()];
    for (k, &i) in standard.iter().enumerate() {
        std_pos[i] = k;
    }
    // Normal form of every enumerated path.
    let mut nf: Vec<Element> = vec![Element::zero(); stage.paths.len()];
    for (k, &i) in standard.iter().enumerate() {
        nf[i] = Element::basis(k);
    }
    for &p in span.pivots() {
        let mut unit = vec![Scalar::zero(); stage.paths.len()];
        unit[p] = num_traits::One::one();
        // unit minus a span element; residual lives on standard columns only.
        let r = span.reduce(&unit);
        nf[p] = Element::from_terms(
            r.iter().enumerate().filter(|t| !t.1.is_zero()).map(|(j, c)| (std_pos[j], c.clone())),
        );
    }
    let d = basis.len();
    let mut mult = vec![Element::zero(); d * d];
    for (i, s) in basis.iter().enumerate() {
        for (j, t) in basis.iter().enumerate() {
            if let Some(p) = s.concat(t) {
                if p.len() < path_bound {
                    if let Some(c) = stage.lookup(p.source, &p.arrows) {
                        mult[i * d + j] = nf[c].clone();
                    }
                }
            }
        }
    }
    let nv = quiver.num_vertices();
    let mut peirce = vec![vec![Vec::new(); nv]; nv];
    for (i, p) in basis.iter().enumerate() {
        peirce[p.source][p.target].push(i);
    }
    let index = basis.iter().enumerate().map(|(i, p)| ((p.source, p.arrows.clone()), i)).collect();
    BasicAlgebra { quiver, relations, basis, index, mult, peirce, path_bound }
}

impl BasicAlgebra {
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    /// Every path of at least this length is zero.
    pub fn path_bound(&self) -> usize {
        self.path_bound
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.index.get(&(p.source, p.arrows.clone())).copied()
    }

    /// Basis indices of normal-form paths from `a` to `b`, i.e. a basis of `e_a A e_b`.
    pub fn peirce(&self, a: usize, b: usize) -> &[usize] {
        &self.peirce[a][b]
    }

    pub fn vertex_index_of(&self, v: usize) -> usize {
        self.basis_index(&Path::trivial(v)).expect("trivial paths are always in the basis")
    }

    pub fn vertex_element(&self, v: usize) -> Element {
        Element::basis(self.vertex_index_of(v))
    }

    pub fn arrow_element(&self, a: usize) -> Element {
        let arr = &self.quiver.arrows()[a];
        let p = Path { source: arr.source, target: arr.target, arrows: vec![a] };
        Element::basis(self.basis_index(&p).expect("arrows are always in the basis"))
    }

    pub fn one(&self) -> Element {
        Element::from_terms((0..self.num_vertices()).map(|v| (self.vertex_index_of(v), num_traits::One::one())))
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &Element {
        &self.mult[i * self.dim() + j]
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::zero();
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                let m = self.mul_basis(*i, *j);
                if !m.is_zero() {
                    out.add_scaled(m, &(a * b));
                }
            }
        }
        out
    }

    pub fn path_element(&self, p: &Path) -> Element {
        let mut e = self.vertex_element(p.source);
        for &a in &p.arrows {
            e = self.mul(&e, &self.arrow_element(a));
            if e.is_zero() {
                break;
            }
        }
        e
    }

    pub fn relation_element(&self, r: &Relation) -> Element {
        let mut e = Element::zero();
        for (c, p) in &r.terms {
            e.add_scaled(&self.path_element(p), c);
        }
        e
    }

    /// Coefficient of the trivial path `e_v` in `x`.
    pub fn unit_coeff(&self, x: &Element, v: usize) -> Scalar {
        x.coeff(self.vertex_index_of(v))
    }

    /// True when `x` has no trivial-path component, i.e. lies in the arrow ideal.
    pub fn is_radical_element(&self, x: &Element) -> bool {
        x.terms().iter().all(|(i, _)| !self.basis[*i].is_trivial())
    }

    /// True when `x` lies in `e_a A e_b`.
    pub fn in_peirce(&self, x: &Element, a: usize, b: usize) -> bool {
        x.terms().iter().all(|(i, _)| self.basis[*i].source == a && self.basis[*i].target == b)
    }

    /// Cartan matrix, entry `(i, j) = dim e_j A e_i`.
    pub fn cartan(&self) -> Matrix {
        let n = self.num_vertices();
        let mut c = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                c.set(i, j, crate::linalg::int(self.peirce[j][i].len() as i64));
            }
        }
        c
    }
}
