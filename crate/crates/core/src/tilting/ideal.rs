use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::algebra::{BasicAlgebra, Element, Path};
use crate::linalg::{Matrix, Scalar};

/// Vertex bijection and arrow rescaling carrying one relation ideal onto the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationMatch {
    /// `vertex_map[v]` is the image of vertex `v`.
    pub vertex_map: Vec<usize>,
    /// `arrow_map[a] = (b, λ)` sends arrow `a` to `λ b`.
    pub arrow_map: Vec<(usize, Scalar)>,
}

fn pow(r: &Scalar, k: i64) -> Scalar {
    let mut out = Scalar::one();
    for _ in 0..k.unsigned_abs() {
        out *= r;
    }
    if k < 0 {
        out.recip()
    } else {
        out
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Arrow bijections compatible with the vertex map.
fn arrow_bijections(a: &BasicAlgebra, b: &BasicAlgebra, sigma: &[usize]) -> Vec<Vec<usize>> {
    let (qa, qb) = (a.quiver(), b.quiver());
    let cands: Vec<Vec<usize>> = qa
        .arrows()
        .iter()
        .map(|x| {
            (0..qb.arrows().len())
                .filter(|&j| qb.arrows()[j].source == sigma[x.source] && qb.arrows()[j].target == sigma[x.target])
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let mut used = vec![false; qb.arrows().len()];
    fn rec(i: usize, cands: &[Vec<usize>], cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if i == cands.len() {
            out.push(cur.clone());
            return;
        }
        for &j in &cands[i] {
            if !used[j] {
                used[j] = true;
                cur.push(j);
                rec(i + 1, cands, cur, used, out);
                cur.pop();
                used[j] = false;
            }
        }
    }
    rec(0, &cands, &mut cur, &mut used, &mut out);
    out
}

fn image_path(b: &BasicAlgebra, p: &Path, sigma: &[usize], tau: &[usize]) -> Path {
    if p.is_trivial() {
        return Path::trivial(sigma[p.source]);
    }
    let arrows: Vec<usize> = p.arrows.iter().map(|&x| tau[x]).collect();
    Path::from_arrows(b.quiver(), arrows).expect("composable image")
}

fn exponents(p: &Path, na: usize) -> Vec<i64> {
    let mut e = vec![0i64; na];
    for &x in &p.arrows {
        e[x] += 1;
    }
    e
}

/// Solves `∏ λ^{e} = r` using only pivots with exponent ±1; free unknowns are set to 1.
fn solve_multiplicative(mut rows: Vec<(Vec<i64>, Scalar)>, n: usize) -> Option<Vec<Scalar>> {
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut done = vec![false; rows.len()];
    loop {
        let found = (0..rows.len())
            .filter(|&i| !done[i])
            .find_map(|i| rows[i].0.iter().position(|c| c.abs() == 1).map(|c| (i, c)));
        let Some((pi, pc)) = found else { break };
        done[pi] = true;
        let (pe, pr) = rows[pi].clone();
        let s = pe[pc];
        for (i, row) in rows.iter_mut().enumerate() {
            if i == pi || row.0[pc] == 0 {
                continue;
            }
            let k = row.0[pc] * s;
            for (x, y) in row.0.iter_mut().zip(&pe) {
                *x -= k * y;
            }
            row.1 = &row.1 / pow(&pr, k);
        }
        pivots.push((pi, pc));
    }
    for (i, (e, r)) in rows.iter().enumerate() {
        if !done[i] && (e.iter().any(|&c| c != 0) || !r.is_one()) {
            return None;
        }
    }
    let mut lambda = vec![Scalar::one(); n];
    let pivot_cols: Vec<usize> = pivots.iter().map(|p| p.1).collect();
    for &(pi, pc) in &pivots {
        let (e, r) = &rows[pi];
        let mut rest = r.clone();
        for (j, &c) in e.iter().enumerate() {
            if j != pc && c != 0 && !pivot_cols.contains(&j) {
                rest = rest / pow(&lambda[j], c);
            }
        }
        lambda[pc] = pow(&rest, e[pc]);
    }
    Some(lambda)
}

fn try_match(a: &BasicAlgebra, b: &BasicAlgebra, sigma: &[usize], tau: &[usize]) -> Option<Vec<Scalar>> {
    let na = a.quiver().arrows().len();
    let mut constraints = Vec::new();
    for rel in a.relations() {
        let terms: Vec<(Scalar, Vec<i64>, Element)> = rel
            .terms
            .iter()
            .map(|(c, p)| (c.clone(), exponents(p, na), b.path_element(&image_path(b, p, sigma, tau))))
            .filter(|t| !t.2.is_zero())
            .collect();
        if terms.is_empty() {
            continue;
        }
        let rows = terms.iter().map(|t| t.2.to_dense(b.dim())).collect();
        let kernel = Matrix::from_rows(rows, b.dim()).left_kernel_basis();
        let [w] = kernel.as_slice() else { return None };
        if w.iter().any(Zero::is_zero) {
            return None;
        }
        let (c0, e0, _) = &terms[0];
        for ((c, e, _), wi) in terms.iter().zip(w).skip(1) {
            let de: Vec<i64> = e.iter().zip(e0).map(|(x, y)| x - y).collect();
            constraints.push((de, (wi / c) / (&w[0] / c0)));
        }
    }
    let lambda = solve_multiplicative(constraints, na)?;
    for rel in a.relations() {
        let mut acc = Element::zero();
        for (c, p) in &rel.terms {
            let e = exponents(p, na);
            let scale = e.iter().zip(&lambda).fold(c.clone(), |s, (k, l)| s * pow(l, *k));
            acc.add_scaled(&b.path_element(&image_path(b, p, sigma, tau)), &scale);
        }
        if !acc.is_zero() {
            return None;
        }
    }
    Some(lambda)
}

/// Finds a relabelling of `a`'s quiver onto `b`'s under which the relation ideal of `a` is
/// carried onto that of `b`, up to rescaling arrows.
///
/// Relations of `a` are mapped and reduced in `b`; equal dimensions then force the ideals to agree.
pub fn presentations_match(a: &BasicAlgebra, b: &BasicAlgebra) -> Option<PresentationMatch> {
    let (qa, qb) = (a.quiver(), b.quiver());
    if qa.num_vertices() != qb.num_vertices() || qa.arrows().len() != qb.arrows().len() || a.dim() != b.dim() {
        return None;
    }
    for sigma in permutations(qa.num_vertices()) {
        for tau in arrow_bijections(a, b, &sigma) {
            if let Some(lambda) = try_match(a, b, &sigma, &tau) {
                return Some(PresentationMatch { vertex_map: sigma, arrow_map: tau.into_iter().zip(lambda).collect() });
            }
        }
    }
    None
}
