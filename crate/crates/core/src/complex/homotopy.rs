use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::proj_complex::{ChainMap, ProjComplex};
use crate::algebra::{BasicAlgebra, Element};
use crate::linalg::{Matrix, Scalar, Span};
use crate::module::HomMatrix;

/// Coordinates for degree-`shift` maps between two complexes: one variable per
/// `(degree, row, col, basis path)` with the path in the matching Peirce component.
#[derive(Clone, Debug)]
pub(crate) struct Layout {
    src: Vec<(i32, Vec<usize>)>,
    tgt: Vec<(i32, Vec<usize>)>,
    vars: Vec<(i32, usize, usize, usize)>,
    index: BTreeMap<(i32, usize, usize, usize), usize>,
}

impl Layout {
    /// Maps `X^d -> Y^{d + shift}` for every degree where both are nonzero.
    pub(crate) fn new(alg: &BasicAlgebra, x: &ProjComplex, y: &ProjComplex, shift: i32) -> Layout {
        let mut vars = Vec::new();
        let mut src = Vec::new();
        let mut tgt = Vec::new();
        if !x.is_zero() {
            for d in x.degrees() {
                let (s, t) = (x.term(d), y.term(d + shift));
                src.push((d, s.to_vec()));
                tgt.push((d, t.to_vec()));
                for (k, &a) in s.iter().enumerate() {
                    for (l, &b) in t.iter().enumerate() {
                        for &p in alg.peirce(b, a) {
                            vars.push((d, k, l, p));
                        }
                    }
                }
            }
        }
        let index = vars.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        Layout { src, tgt, vars, index }
    }

    pub(crate) fn len(&self) -> usize {
        self.vars.len()
    }

    pub(crate) fn get(&self, d: i32, k: usize, l: usize, p: usize) -> Option<usize> {
        self.index.get(&(d, k, l, p)).copied()
    }

    /// Components indexed by source degree.
    pub(crate) fn to_vec(&self, comps: &BTreeMap<i32, HomMatrix>) -> Vec<Scalar> {
        self.vars
            .iter()
            .map(|&(d, k, l, p)| comps.get(&d).map(|m| m.get(k, l).coeff(p)).unwrap_or_else(Scalar::zero))
            .collect()
    }

    pub(crate) fn from_vec(&self, v: &[Scalar]) -> BTreeMap<i32, HomMatrix> {
        let mut out: BTreeMap<i32, HomMatrix> = self
            .src
            .iter()
            .zip(&self.tgt)
            .map(|((d, s), (_, t))| (*d, HomMatrix::zero(s.clone(), t.clone())))
            .collect();
        for (c, &(d, k, l, p)) in v.iter().zip(&self.vars) {
            if c.is_zero() {
                continue;
            }
            let m = out.get_mut(&d).unwrap();
            let mut e = m.get(k, l).clone();
            e.add_scaled(&Element::basis(p), c);
            m.set(k, l, e);
        }
        out
    }
}

/// `Hom_K(X, Y[n])` as the quotient of chain maps by null-homotopic maps.
#[derive(Clone, Debug)]
pub struct HomotopyHom {
    source: ProjComplex,
    target: ProjComplex,
    shift: i32,
    layout: Layout,
    reps: Vec<ChainMap>,
    span: Span,
    n_boundary: usize,
}

/// Sparse accumulator keyed by `(degree, row, col, basis path)`.
type Acc = BTreeMap<(i32, usize, usize, usize), Scalar>;

fn accumulate(acc: &mut Acc, d: i32, k: usize, l: usize, x: &Element, sign: &Scalar) {
    for (p, c) in x.terms() {
        let e = acc.entry((d, k, l, *p)).or_insert_with(Scalar::zero);
        *e += c * sign;
    }
}

/// Image of the unit map with path `p` at `(d, k, l)`, `X^d -> Z^{d + deg}`, under
/// `u -> dX ; u - sgn * u ; dZ`, landing in maps of degree `deg + 1`.
fn apply_differential(
    alg: &BasicAlgebra,
    x: &ProjComplex,
    z: &ProjComplex,
    deg: i32,
    sgn: &Scalar,
    (d, k, l, p): (i32, usize, usize, usize),
    acc: &mut Acc,
) {
    let pe = Element::basis(p);
    let one = Scalar::one();
    if let Some(dx) = x.diff_ref(d - 1) {
        for j in 0..dx.rows() {
            let xj = dx.get(j, k);
            if !xj.is_zero() {
                accumulate(acc, d - 1, j, l, &alg.mul(&pe, xj), &one);
            }
        }
    }
    if let Some(dz) = z.diff_ref(d + deg) {
        let neg = -sgn.clone();
        for m in 0..dz.cols() {
            let y = dz.get(l, m);
            if !y.is_zero() {
                accumulate(acc, d, k, m, &alg.mul(y, &pe), &neg);
            }
        }
    }
}

/// Computes `Hom_K(X, Y[n])`.
pub fn homotopy_hom(alg: &BasicAlgebra, x: &ProjComplex, y: &ProjComplex, n: i32) -> HomotopyHom {
    let target = y.shift(n);
    let layout = Layout::new(alg, x, &target, 0);
    let one = Scalar::one();

    // Chain condition: columns are variables, rows are entries of maps of degree 1.
    let mut rows: BTreeMap<(i32, usize, usize, usize), usize> = BTreeMap::new();
    let mut cols: Vec<Acc> = Vec::with_capacity(layout.len());
    for &v in &layout.vars {
        let mut acc = Acc::new();
        apply_differential(alg, x, &target, 0, &one, v, &mut acc);
        acc.retain(|_, c| !c.is_zero());
        for key in acc.keys() {
            let r = rows.len();
            rows.entry(*key).or_insert(r);
        }
        cols.push(acc);
    }
    let mut phi = Matrix::zeros(rows.len(), layout.len());
    for (j, acc) in cols.iter().enumerate() {
        for (key, c) in acc {
            phi.set(rows[key], j, c.clone());
        }
    }
    let cycles = phi.kernel_basis();

    // Boundaries: images of homotopies `X^d -> Y'^{d-1}`, i.e. maps of degree -1.
    let hl = Layout::new(alg, x, &target, -1);
    let mut span = Span::new(layout.len());
    for &v in &hl.vars {
        let mut acc = Acc::new();
        apply_differential(alg, x, &target, -1, &-one.clone(), v, &mut acc);
        let mut vec = vec![Scalar::zero(); layout.len()];
        for ((d, k, l, p), c) in acc {
            if c.is_zero() {
                continue;
            }
            let i = layout.get(d, k, l, p).expect("boundary outside layout");
            vec[i] += c;
        }
        span.insert(vec);
    }
    let n_boundary = span.dim();
    let mut reps = Vec::new();
    for z in cycles {
        if span.insert(z.clone()) {
            reps.push(ChainMap::from_comps(x, &target, layout.from_vec(&z)));
        }
    }
    HomotopyHom { source: x.clone(), target, shift: n, layout, reps, span, n_boundary }
}

impl HomotopyHom {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn basis(&self) -> &[ChainMap] {
        &self.reps
    }

    pub fn source(&self) -> &ProjComplex {
        &self.source
    }

    /// The shifted target `Y[n]`.
    pub fn target(&self) -> &ProjComplex {
        &self.target
    }

    pub fn shift(&self) -> i32 {
        self.shift
    }

    /// Class of a chain map in the basis; `None` if `f` is not a chain map `X -> Y[n]`.
    pub fn coords(&self, f: &ChainMap) -> Option<Vec<Scalar>> {
        for ((d, s), (_, t)) in self.layout.src.iter().zip(&self.layout.tgt) {
            match f.comp(*d) {
                Some(m) if m.source == *s && m.target == *t => {}
                None if s.is_empty() || t.is_empty() => {}
                _ => return None,
            }
        }
        let v = self.layout.to_vec(f.comps());
        let c = self.span.coords(&v)?;
        Some(c[self.n_boundary..].to_vec())
    }

    pub fn combine(&self, coeffs: &[Scalar]) -> ChainMap {
        let mut f = ChainMap::zero(&self.source, &self.target);
        for (c, r) in coeffs.iter().zip(&self.reps) {
            if !c.is_zero() {
                f = f.add(&r.scale(c));
            }
        }
        f
    }

    /// True when `f` is a chain map homotopic to zero.
    pub fn is_null_homotopic(&self, f: &ChainMap) -> bool {
        self.coords(f).is_some_and(|c| c.iter().all(Zero::is_zero))
    }
}

/// `dim Hom_K(X, Y[n])`.
pub fn homotopy_hom_dim(alg: &BasicAlgebra, x: &ProjComplex, y: &ProjComplex, n: i32) -> usize {
    homotopy_hom(alg, x, y, n).dim()
}
