use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::endalg::EndAlgebra;
use super::nust::{maximal_nu_stable, ConditionWitness, NuStableReport};
use super::verify::self_orthogonality;
use crate::algebra::BasicAlgebra;
use crate::complex::{minimize, ProjComplex};
use crate::error::{Error, Profile, Result};
use crate::linalg::{Matrix, Scalar, Span};
use crate::module::{simple, socle, HomMatrix, Representation};
use crate::Config;

/// `Hom_K(C, X[i])` for a module `X`: maps `C^{-i} -> X` killing the image of the previous
/// differential, modulo those factoring through the next one.
struct StalkHom {
    labels: Vec<usize>,
    span: Span,
    n_boundary: usize,
    reps: Vec<Vec<Scalar>>,
}

fn offsets(x: &Representation, labels: &[usize]) -> (Vec<usize>, usize) {
    let mut offs = Vec::with_capacity(labels.len());
    let mut n = 0;
    for &v in labels {
        offs.push(n);
        n += x.dims()[v];
    }
    (offs, n)
}

/// Precomposition with `h: P(rows) -> P(labels)` on tuples `(x_k in X_{labels[k]})`.
fn precompose(alg: &BasicAlgebra, x: &Representation, h: &HomMatrix, f: &[Scalar]) -> Vec<Scalar> {
    let (src_offs, _) = offsets(x, &h.target);
    let (dst_offs, n) = offsets(x, &h.source);
    let mut out = vec![Scalar::zero(); n];
    for (k2, &t) in h.source.iter().enumerate() {
        for (k, &s) in h.target.iter().enumerate() {
            let y = h.get(k2, k);
            if y.is_zero() || x.dims()[s] == 0 || x.dims()[t] == 0 {
                continue;
            }
            let v = &f[src_offs[k]..src_offs[k] + x.dims()[s]];
            let img = x.act(alg, v, s, y, t);
            for (o, c) in out[dst_offs[k2]..dst_offs[k2] + x.dims()[t]].iter_mut().zip(img) {
                *o += c;
            }
        }
    }
    out
}

fn linear_map(n: usize, f: impl Fn(&[Scalar]) -> Vec<Scalar>, out_dim: usize) -> Matrix {
    let rows = (0..n)
        .map(|i| {
            let mut u = vec![Scalar::zero(); n];
            u[i] = num_traits::One::one();
            f(&u)
        })
        .collect();
    Matrix::from_rows(rows, out_dim)
}

fn stalk_hom(alg: &BasicAlgebra, c: &ProjComplex, x: &Representation, i: i32) -> StalkHom {
    let deg = -i;
    let labels = c.term(deg).to_vec();
    let (_, n) = offsets(x, &labels);
    let prev = c.diff(deg - 1);
    let (_, prev_n) = offsets(x, &prev.source);
    let constraint = linear_map(n, |f| precompose(alg, x, &prev, f), prev_n);
    let cycles = constraint.left_kernel_basis();
    let next = c.diff(deg);
    let (_, next_n) = offsets(x, &next.target);
    let mut span = Span::new(n);
    for b in linear_map(next_n, |h| precompose(alg, x, &next, h), n).row_vecs() {
        span.insert(b);
    }
    let n_boundary = span.dim();
    let reps = cycles.into_iter().filter(|z| span.insert(z.clone())).collect();
    StalkHom { labels, span, n_boundary, reps }
}

impl StalkHom {
    fn dim(&self) -> usize {
        self.reps.len()
    }

    fn coords(&self, f: &[Scalar]) -> Vec<Scalar> {
        self.span.coords(f).expect("cycle")[self.n_boundary..].to_vec()
    }
}

/// `Hom_K(T, X[i])` as a right module over `End(T)`, i.e. a representation of its quiver.
pub fn f_homology(alg: &BasicAlgebra, end: &EndAlgebra, x: &Representation, i: i32) -> Result<Representation> {
    let homs: Vec<StalkHom> = end.summands.iter().map(|s| stalk_hom(alg, s, x, i)).collect();
    let b = end.algebra();
    let dims: Vec<usize> = homs.iter().map(StalkHom::dim).collect();
    let mut maps = Vec::new();
    for (ai, arrow) in b.quiver().arrows().iter().enumerate() {
        let (s, t) = (arrow.source, arrow.target);
        let a = end.chain_map(&end.presentation.arrow_elements[ai]);
        let block = end.injections[t].then(alg, &a).then(alg, &end.projections[s]);
        let h = block.comp(-i).cloned().unwrap_or_else(|| HomMatrix::zero(end.summands[t].term(-i).to_vec(), homs[s].labels.clone()));
        let rows: Vec<Vec<Scalar>> = homs[s].reps.iter().map(|f| homs[t].coords(&precompose(alg, x, &h, f))).collect();
        maps.push(Matrix::from_rows(rows, dims[t]));
    }
    Representation::new(b, dims, maps)
}

/// `dim Hom_K(T, X[i])` for every `i` where it can be nonzero; zero entries omitted.
pub fn homology_profile(alg: &BasicAlgebra, end: &EndAlgebra, x: &Representation) -> Result<Profile> {
    let mut out = BTreeMap::new();
    if end.sum.is_zero() {
        return Ok(out);
    }
    for deg in end.sum.degrees() {
        let i = -deg;
        let m = f_homology(alg, end, x, i)?;
        if !m.is_zero() {
            out.insert(i, m.dims().to_vec());
        }
    }
    Ok(out)
}

/// Image of a module under the stable equivalence, defined when the homology is concentrated.
#[derive(Clone, Debug)]
pub struct StableImageCertificate {
    pub profile: Profile,
    /// `Hom_K(T, X)` as a module over `End(T)`.
    pub module: Representation,
    /// `dim Hom_K(T, X)` computed on the undecomposed complex.
    pub hom_dim: usize,
}

pub fn stable_image(alg: &BasicAlgebra, end: &EndAlgebra, x: &Representation, cfg: &Config) -> Result<StableImageCertificate> {
    let report = check_iterated_nu_stable(alg, &end.complex, cfg)?;
    if report.verdict != Some(true) {
        return Err(Error::PreconditionFailed(format!("complex fails the criterion for projectives {:?}", report.conditions.iter().filter(|c| !(c.a && c.b)).map(|c| c.vertex).collect::<Vec<_>>())));
    }
    let profile = homology_profile(alg, end, x)?;
    if profile.keys().any(|&i| i != 0) {
        return Err(Error::NotConcentrated(profile));
    }
    let module = f_homology(alg, end, x, 0)?;
    let hom_dim = stalk_hom(alg, &end.complex, x, 0).dim();
    Ok(StableImageCertificate { profile, module, hom_dim })
}

/// Criterion on projectives outside `add(E)`: not in nonzero degrees, exactly once in degree 0.
pub fn check_iterated_nu_stable(alg: &BasicAlgebra, t: &ProjComplex, cfg: &Config) -> Result<NuStableReport> {
    if let Some((n, _)) = self_orthogonality(alg, t).into_iter().find(|(n, d)| *n != 0 && *d != 0) {
        return Err(Error::NotTilting(format!("Hom(T, T[{n}]) != 0")));
    }
    let m = minimize(alg, t).complex;
    let mut report = maximal_nu_stable(alg, cfg);
    let off = m.off_degree_labels();
    for v in 0..alg.num_vertices() {
        if report.e.contains(&v) {
            continue;
        }
        let off_degrees: Vec<i32> = if m.is_zero() {
            Vec::new()
        } else {
            m.degrees().filter(|&d| d != 0 && m.term(d).contains(&v)).collect()
        };
        let multiplicity_t0 = m.term(0).iter().filter(|&&u| u == v).count();
        report.conditions.push(ConditionWitness {
            vertex: v,
            a: off_degrees.is_empty(),
            b: multiplicity_t0 == 1,
            off_degrees,
            multiplicity_t0,
        });
    }
    report.t_pm_in_e = Some(off.iter().all(|v| report.e.contains(v)));
    report.verdict = Some(report.conditions.iter().all(|c| c.a && c.b));
    Ok(report)
}

/// Image of `top P(v)` for one projective outside `add(E)`.
#[derive(Clone, Debug)]
pub struct SimpleImage {
    pub vertex: usize,
    pub profile: Profile,
    /// Dimension vector of the degree-0 part.
    pub h0_dims: Vec<usize>,
    pub pass: bool,
}

/// For each `P(v)` outside `add(E)`: `Hom_K(T, top P(v)[i])` vanishes for `i != 0` and is simple at 0.
pub fn check_simple_images(alg: &BasicAlgebra, end: &EndAlgebra, cfg: &Config) -> Result<Vec<SimpleImage>> {
    let e = maximal_nu_stable(alg, cfg).e;
    let b = end.algebra();
    let mut out = Vec::new();
    for v in (0..alg.num_vertices()).filter(|v| !e.contains(v)) {
        let s = simple(alg, v);
        let profile = homology_profile(alg, end, &s)?;
        let h0 = f_homology(alg, end, &s, 0)?;
        let soc: Vec<usize> = socle(b, &h0).iter().map(Span::dim).collect();
        let is_simple = h0.total_dim() == 1 && soc == h0.dims();
        let pass = is_simple && profile.keys().all(|&i| i == 0);
        out.push(SimpleImage { vertex: v, profile, h0_dims: h0.dims().to_vec(), pass });
    }
    Ok(out)
}
