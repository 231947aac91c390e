use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::{BasicAlgebra, Element, Path};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Span};

/// Finite-dimensional representation: a space per vertex and a matrix per arrow.
///
/// The matrix of an arrow `a: s -> t` has shape `dims[s] x dims[t]` and acts on row vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Representation {
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

/// Morphism of representations: one matrix `dim M_v x dim N_v` per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleMap {
    comps: Vec<Matrix>,
}

/// Per-vertex subspaces of a representation.
pub type Subspaces = Vec<Span>;

impl Representation {
    /// Validates shapes and that every relation (and every path at the nilpotency bound) acts as zero.
    pub fn new(alg: &BasicAlgebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        let q = alg.quiver();
        if dims.len() != q.num_vertices() || maps.len() != q.arrows().len() {
            return Err(Error::DimensionMismatch(format!(
                "expected {} vertices and {} arrows",
                q.num_vertices(),
                q.arrows().len()
            )));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if m.rows() != dims[a.source] || m.cols() != dims[a.target] {
                return Err(Error::DimensionMismatch(format!(
                    "arrow {} needs a {}x{} matrix, got {}x{}",
                    a.name,
                    dims[a.source],
                    dims[a.target],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let rep = Representation { dims, maps };
        for r in alg.relations() {
            let (s, t) = match r.terms.first() {
                Some((_, p)) => (p.source, p.target),
                None => continue,
            };
            let mut acc = Matrix::zeros(rep.dims[s], rep.dims[t]);
            for (c, p) in &r.terms {
                acc = acc.add(&rep.path_matrix(p).scale(c));
            }
            if !acc.is_zero() {
                return Err(Error::RelationViolated(r.display(q)));
            }
        }
        rep.check_nilpotent(alg)?;
        Ok(rep)
    }

    fn check_nilpotent(&self, alg: &BasicAlgebra) -> Result<()> {
        let q = alg.quiver();
        let bound = alg.path_bound();
        let mut frontier: Vec<(usize, Matrix)> =
            (0..q.num_vertices()).filter(|&v| self.dims[v] > 0).map(|v| (v, Matrix::identity(self.dims[v]))).collect();
        for _ in 0..bound {
            let mut next = Vec::new();
            for (v, m) in &frontier {
                for (ai, a) in q.arrows().iter().enumerate() {
                    if a.source == *v {
                        let p = m.mul(&self.maps[ai]);
                        if !p.is_zero() {
                            next.push((a.target, p));
                        }
                    }
                }
            }
            frontier = next;
        }
        if frontier.is_empty() {
            Ok(())
        } else {
            Err(Error::RelationViolated(format!("a path of length {bound} acts nonzero")))
        }
    }

    pub(crate) fn new_unchecked(dims: Vec<usize>, maps: Vec<Matrix>) -> Self {
        Representation { dims, maps }
    }

    pub fn zero(alg: &BasicAlgebra) -> Self {
        let q = alg.quiver();
        Representation { dims: vec![0; q.num_vertices()], maps: vec![Matrix::zeros(0, 0); q.arrows().len()] }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Matrix of a path, the product of its arrow matrices in path order.
    pub fn path_matrix(&self, p: &Path) -> Matrix {
        let mut m = Matrix::identity(self.dims[p.source]);
        for &a in &p.arrows {
            m = m.mul(&self.maps[a]);
        }
        m
    }

    /// Action of the `e_s A e_t` part of `x`, as a matrix from `M_s` to `M_t`.
    pub fn element_matrix(&self, alg: &BasicAlgebra, x: &Element, s: usize, t: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dims[s], self.dims[t]);
        for (i, c) in x.terms() {
            let p = &alg.basis()[*i];
            if p.source == s && p.target == t {
                m = m.add(&self.path_matrix(p).scale(c));
            }
        }
        m
    }

    /// `v . x` for `v` in `M_s`, landing in `M_t`.
    pub fn act(&self, alg: &BasicAlgebra, v: &[Scalar], s: usize, x: &Element, t: usize) -> Vec<Scalar> {
        self.element_matrix(alg, x, s, t).vec_mul(v)
    }

    pub fn direct_sum(parts: &[&Representation]) -> Representation {
        let nv = parts.first().map_or(0, |p| p.dims.len());
        let na = parts.first().map_or(0, |p| p.maps.len());
        let dims: Vec<usize> = (0..nv).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let maps = (0..na)
            .map(|a| {
                let (r, c) = (parts.iter().map(|p| p.maps[a].rows()).sum(), parts.iter().map(|p| p.maps[a].cols()).sum());
                let mut m = Matrix::zeros(r, c);
                let (mut ro, mut co) = (0, 0);
                for p in parts {
                    let b = &p.maps[a];
                    for i in 0..b.rows() {
                        for j in 0..b.cols() {
                            m.set(ro + i, co + j, b.get(i, j).clone());
                        }
                    }
                    ro += b.rows();
                    co += b.cols();
                }
                m
            })
            .collect();
        Representation { dims, maps }
    }

    /// Canonical injections into and projections out of a direct sum.
    pub fn direct_sum_maps(parts: &[&Representation]) -> (Representation, Vec<ModuleMap>, Vec<ModuleMap>) {
        let sum = Representation::direct_sum(parts);
        let nv = sum.dims.len();
        let mut inj = Vec::new();
        let mut proj = Vec::new();
        let mut offs = vec![0usize; nv];
        for p in parts {
            let mut ic = Vec::new();
            let mut pc = Vec::new();
            for v in 0..nv {
                let mut m = Matrix::zeros(p.dims[v], sum.dims[v]);
                for i in 0..p.dims[v] {
                    m.set(i, offs[v] + i, num_traits::One::one());
                }
                pc.push(m.transpose());
                ic.push(m);
                offs[v] += p.dims[v];
            }
            inj.push(ModuleMap { comps: ic });
            proj.push(ModuleMap { comps: pc });
        }
        (sum, inj, proj)
    }

    /// Smallest submodule containing the given vectors (per vertex).
    pub fn generated(&self, alg: &BasicAlgebra, gens: Vec<Vec<Vec<Scalar>>>) -> Subspaces {
        let q = alg.quiver();
        let mut sub: Subspaces = self.dims.iter().map(|&d| Span::new(d)).collect();
        let mut queue: Vec<(usize, Vec<Scalar>)> =
            gens.into_iter().enumerate().flat_map(|(v, vs)| vs.into_iter().map(move |x| (v, x))).collect();
        while let Some((v, x)) = queue.pop() {
            if !sub[v].insert(x.clone()) {
                continue;
            }
            for (ai, a) in q.arrows().iter().enumerate() {
                if a.source == v {
                    let y = self.maps[ai].vec_mul(&x);
                    if y.iter().any(|c| !c.is_zero()) {
                        queue.push((a.target, y));
                    }
                }
            }
        }
        sub
    }

    /// The submodule as a representation, with its inclusion.
    pub fn restrict(&self, alg: &BasicAlgebra, sub: &Subspaces) -> (Representation, ModuleMap) {
        let q = alg.quiver();
        let dims: Vec<usize> = sub.iter().map(|s| s.dim()).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let rows = sub[a.source]
                    .basis()
                    .iter()
                    .map(|b| sub[a.target].coords(&self.maps[ai].vec_mul(b)).expect("subspaces are not a submodule"))
                    .collect();
                Matrix::from_rows(rows, dims[a.target])
            })
            .collect();
        let incl = sub.iter().zip(&self.dims).map(|(s, &d)| Matrix::from_rows(s.basis().to_vec(), d)).collect();
        (Representation { dims, maps }, ModuleMap { comps: incl })
    }

    /// The quotient by a submodule, with the projection.
    pub fn quotient(&self, alg: &BasicAlgebra, sub: &Subspaces) -> (Representation, ModuleMap) {
        let q = alg.quiver();
        let comp: Vec<Vec<usize>> = sub.iter().map(|s| s.complement_units()).collect();
        let dims: Vec<usize> = comp.iter().map(|c| c.len()).collect();
        let project = |v: usize, x: &[Scalar]| -> Vec<Scalar> {
            let r = sub[v].reduce(x);
            comp[v].iter().map(|&i| r[i].clone()).collect()
        };
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let rows = comp[a.source].iter().map(|&i| project(a.target, self.maps[ai].row(i))).collect();
                Matrix::from_rows(rows, dims[a.target])
            })
            .collect();
        let proj = (0..self.dims.len())
            .map(|v| {
                let rows = (0..self.dims[v])
                    .map(|i| {
                        let mut u = vec![Scalar::zero(); self.dims[v]];
                        u[i] = num_traits::One::one();
                        project(v, &u)
                    })
                    .collect();
                Matrix::from_rows(rows, dims[v])
            })
            .collect();
        (Representation { dims, maps }, ModuleMap { comps: proj })
    }
}

impl ModuleMap {
    pub fn new(comps: Vec<Matrix>) -> Self {
        ModuleMap { comps }
    }

    /// Checks that `comps` defines a morphism `m -> n`.
    pub fn checked(alg: &BasicAlgebra, m: &Representation, n: &Representation, comps: Vec<Matrix>) -> Result<Self> {
        let f = ModuleMap { comps };
        if f.is_morphism(alg, m, n) {
            Ok(f)
        } else {
            Err(Error::DimensionMismatch(alloc::string::String::from("not a module homomorphism")))
        }
    }

    pub fn zero(m: &Representation, n: &Representation) -> Self {
        ModuleMap { comps: m.dims.iter().zip(&n.dims).map(|(&a, &b)| Matrix::zeros(a, b)).collect() }
    }

    pub fn identity(m: &Representation) -> Self {
        ModuleMap { comps: m.dims.iter().map(|&d| Matrix::identity(d)).collect() }
    }

    pub fn comps(&self) -> &[Matrix] {
        &self.comps
    }

    pub fn comp(&self, v: usize) -> &Matrix {
        &self.comps[v]
    }

    pub fn is_morphism(&self, alg: &BasicAlgebra, m: &Representation, n: &Representation) -> bool {
        if self.comps.len() != m.dims.len() {
            return false;
        }
        for v in 0..m.dims.len() {
            if self.comps[v].rows() != m.dims[v] || self.comps[v].cols() != n.dims[v] {
                return false;
            }
        }
        alg.quiver().arrows().iter().enumerate().all(|(ai, a)| {
            m.maps[ai].mul(&self.comps[a.target]) == self.comps[a.source].mul(&n.maps[ai])
        })
    }

    /// `self` followed by `then`.
    pub fn then(&self, then: &ModuleMap) -> ModuleMap {
        ModuleMap { comps: self.comps.iter().zip(&then.comps).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn add(&self, o: &ModuleMap) -> ModuleMap {
        ModuleMap { comps: self.comps.iter().zip(&o.comps).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, o: &ModuleMap) -> ModuleMap {
        ModuleMap { comps: self.comps.iter().zip(&o.comps).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> ModuleMap {
        ModuleMap { comps: self.comps.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Matrix::is_zero)
    }

    pub fn is_iso(&self) -> bool {
        self.comps.iter().all(|m| m.is_square() && (m.rows() == 0 || m.det() != Scalar::zero()))
    }

    pub fn inverse(&self) -> Option<ModuleMap> {
        let comps: Option<Vec<Matrix>> =
            self.comps.iter().map(|m| if m.rows() == 0 && m.cols() == 0 { Some(m.clone()) } else { m.inverse() }).collect();
        comps.map(|comps| ModuleMap { comps })
    }

    /// Flattened coordinates (vertex by vertex, row-major).
    pub fn to_vec(&self) -> Vec<Scalar> {
        let mut out = Vec::new();
        for m in &self.comps {
            for r in 0..m.rows() {
                out.extend_from_slice(m.row(r));
            }
        }
        out
    }

    pub fn from_vec(src: &[usize], tgt: &[usize], v: &[Scalar]) -> ModuleMap {
        let mut off = 0;
        let comps = src
            .iter()
            .zip(tgt)
            .map(|(&r, &c)| {
                let rows = (0..r).map(|i| v[off + i * c..off + (i + 1) * c].to_vec()).collect();
                off += r * c;
                Matrix::from_rows(rows, c)
            })
            .collect();
        ModuleMap { comps }
    }

    /// Kernel subspaces (row vectors killed by each component).
    pub fn kernel(&self) -> Subspaces {
        self.comps.iter().map(|m| Span::from_vectors(m.rows(), m.left_kernel_basis())).collect()
    }

    pub fn image(&self) -> Subspaces {
        self.comps.iter().map(|m| Span::from_vectors(m.cols(), m.row_vecs())).collect()
    }
}
