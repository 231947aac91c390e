use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::linalg::{int, Matrix, Poly, Scalar, Span};

/// Finite-dimensional algebra given by structure constants in a fixed basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureAlgebra {
    dim: usize,
    table: Vec<Vec<(usize, Scalar)>>,
    one: Vec<Scalar>,
}

/// Complete set of orthogonal idempotents; `split` is false when some corner could not
/// be decomposed further although its semisimple quotient has dimension > 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Idempotents {
    pub elements: Vec<Vec<Scalar>>,
    pub split: bool,
}

impl StructureAlgebra {
    /// `table[i * dim + j]` is the product `b_i b_j` in basis coordinates.
    /// No associativity check; see [`StructureAlgebra::new`].
    pub fn new_unchecked(dim: usize, table: Vec<Vec<Scalar>>, one: Vec<Scalar>) -> Self {
        assert_eq!(table.len(), dim * dim);
        let table = table
            .into_iter()
            .map(|v| v.into_iter().enumerate().filter(|t| !t.1.is_zero()).collect())
            .collect();
        StructureAlgebra { dim, table, one }
    }

    /// Builds the table from `product(i, j)`, the coordinates of `b_i b_j`.
    pub fn from_products<F: FnMut(usize, usize) -> Vec<Scalar>>(dim: usize, mut product: F, one: Vec<Scalar>) -> Self {
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                table.push(product(i, j));
            }
        }
        Self::new_unchecked(dim, table, one)
    }

    /// Validates associativity and that `one` is a two-sided identity.
    pub fn new(dim: usize, table: Vec<Vec<Scalar>>, one: Vec<Scalar>) -> Result<Self> {
        if table.len() != dim * dim || table.iter().any(|v| v.len() != dim) || one.len() != dim {
            return Err(Error::DimensionMismatch(alloc::string::String::from("structure constant table shape")));
        }
        let a = Self::new_unchecked(dim, table, one);
        for i in 0..dim {
            let b = a.basis_vec(i);
            if a.mul(&a.one, &b) != b || a.mul(&b, &a.one) != b {
                return Err(Error::NoIdentity(alloc::format!("fails on basis element {i}")));
            }
        }
        for i in 0..dim {
            for j in 0..dim {
                let ij = a.product_vec(i, j);
                for k in 0..dim {
                    let left = a.mul(&ij, &a.basis_vec(k));
                    let jk = a.product_vec(j, k);
                    let right = a.mul(&a.basis_vec(i), &jk);
                    if left != right {
                        return Err(Error::NotAssociative);
                    }
                }
            }
        }
        Ok(a)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn one(&self) -> &[Scalar] {
        &self.one
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim];
        v[i] = Scalar::one();
        v
    }

    fn product_vec(&self, i: usize, j: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim];
        for (k, c) in &self.table[i * self.dim + j] {
            v[*k] = c.clone();
        }
        v
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in &self.table[i * self.dim + j] {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    /// Matrix of `y -> x y` acting on row vectors.
    pub fn left_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let rows = (0..self.dim).map(|j| self.mul(x, &self.basis_vec(j))).collect();
        Matrix::from_rows(rows, self.dim)
    }

    /// Jacobson radical as the kernel of the trace form `Tr(L_{xy})`, with its powers
    /// `[J, J^2, ...]` up to the last nonzero one.
    pub fn radical_powers(&self) -> Result<Vec<Span>> {
        let n = self.dim;
        let traces: Vec<Scalar> = (0..n)
            .map(|l| (0..n).map(|k| self.product_vec(l, k)[k].clone()).fold(Scalar::zero(), |a, b| a + b))
            .collect();
        let mut gram = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let mut s = Scalar::zero();
                for (l, c) in &self.table[i * n + j] {
                    s += c * &traces[*l];
                }
                gram.set(i, j, s);
            }
        }
        let rad = Span::from_vectors(n, gram.kernel_basis());
        let mut powers = Vec::new();
        let mut cur = rad.clone();
        while cur.dim() > 0 {
            if powers.len() > n {
                return Err(Error::RadicalNotNilpotent);
            }
            let mut next = Span::new(n);
            for x in cur.basis() {
                for y in rad.basis() {
                    next.insert(self.mul(x, y));
                }
            }
            powers.push(cur);
            if next.dim() == powers.last().unwrap().dim() {
                return Err(Error::RadicalNotNilpotent);
            }
            cur = next;
        }
        Ok(powers)
    }

    /// Evaluates `p(x)` with `e` playing the role of the identity.
    fn eval_poly(&self, p: &Poly, x: &[Scalar], e: &[Scalar]) -> Vec<Scalar> {
        let mut acc = vec![Scalar::zero(); self.dim];
        for c in p.0.iter().rev() {
            acc = self.mul(&acc, x);
            for (a, u) in acc.iter_mut().zip(e) {
                *a += c * u;
            }
        }
        acc
    }

    /// Minimal polynomial of `x` inside the corner algebra with identity `e`.
    pub fn min_poly(&self, x: &[Scalar], e: &[Scalar]) -> Poly {
        let mut span = Span::new(self.dim);
        let mut p = e.to_vec();
        loop {
            if let Some(c) = span.coords(&p) {
                let mut coeffs: Vec<Scalar> = c.into_iter().map(|v| -v).collect();
                coeffs.push(Scalar::one());
                return Poly::new(coeffs);
            }
            span.insert(p.clone());
            p = self.mul(&p, x);
        }
    }

    /// Idempotent projecting onto the part where `x` is invertible, when `x` is neither
    /// nilpotent nor invertible in the corner `eAe`.
    fn fitting_idempotent(&self, x: &[Scalar], e: &[Scalar]) -> Option<Vec<Scalar>> {
        let m = self.min_poly(x, e);
        let k = m.0.iter().position(|c| !c.is_zero())?;
        if k == 0 {
            return None;
        }
        let tk = Poly::new({
            let mut v = vec![Scalar::zero(); k];
            v.push(Scalar::one());
            v
        });
        let g = m.div_rem(&tk).0;
        if g.degree().unwrap_or(0) == 0 {
            return None;
        }
        let (one, s, _) = tk.ext_gcd(&g);
        debug_assert_eq!(one, Poly::one());
        Some(self.eval_poly(&s.mul(&tk), x, e))
    }

    fn shifted(&self, x: &[Scalar], lambda: &Scalar, e: &[Scalar]) -> Vec<Scalar> {
        x.iter().zip(e).map(|(a, u)| a - lambda * u).collect()
    }

    fn try_split(&self, x: &[Scalar], e: &[Scalar]) -> Option<Vec<Scalar>> {
        if let Some(f) = self.fitting_idempotent(x, e) {
            return Some(f);
        }
        let m = self.min_poly(x, e);
        if m.squarefree().degree().unwrap_or(0) < 2 {
            return None;
        }
        for lambda in m.rational_roots() {
            if let Some(f) = self.fitting_idempotent(&self.shifted(x, &lambda, e), e) {
                return Some(f);
            }
        }
        None
    }

    /// Splits `e` into two orthogonal nonzero idempotents if a splitting element is found.
    fn split_corner(&self, e: &[Scalar], corner: &[Vec<Scalar>], rng: &mut ChaCha8Rng) -> Option<Vec<Scalar>> {
        for c in corner {
            if let Some(f) = self.try_split(c, e) {
                return Some(f);
            }
        }
        for (i, a) in corner.iter().enumerate() {
            for b in corner.iter().skip(i) {
                let ab = self.mul(a, b);
                if ab.iter().any(|v| !v.is_zero()) {
                    if let Some(f) = self.try_split(&ab, e) {
                        return Some(f);
                    }
                }
            }
        }
        for _ in 0..64 {
            let mut x = vec![Scalar::zero(); self.dim];
            for c in corner {
                let k = int((rng.next_u32() % 7) as i64 - 3);
                for (a, v) in x.iter_mut().zip(c) {
                    *a += &k * v;
                }
            }
            if let Some(f) = self.try_split(&x, e) {
                return Some(f);
            }
        }
        None
    }

    /// Complete set of primitive orthogonal idempotents summing to the identity.
    pub fn primitive_idempotents(&self, radical: &Span, seed: u64) -> Idempotents {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut done = Vec::new();
        let mut split = true;
        let mut stack = vec![self.one.clone()];
        while let Some(e) = stack.pop() {
            let mut corner = Span::new(self.dim);
            for i in 0..self.dim {
                corner.insert(self.mul(&self.mul(&e, &self.basis_vec(i)), &e));
            }
            let mut rad_corner = Span::new(self.dim);
            for j in radical.basis() {
                rad_corner.insert(self.mul(&self.mul(&e, j), &e));
            }
            if corner.dim() - rad_corner.dim() <= 1 {
                done.push(e);
                continue;
            }
            match self.split_corner(&e, corner.basis(), &mut rng) {
                Some(f) => {
                    let rest: Vec<Scalar> = e.iter().zip(&f).map(|(a, b)| a - b).collect();
                    stack.push(rest);
                    stack.push(f);
                }
                None => {
                    split = false;
                    done.push(e);
                }
            }
        }
        Idempotents { elements: done, split }
    }

    /// Dimension of the semisimple quotient of the corner `eAe`.
    pub fn corner_top_dim(&self, e: &[Scalar], radical: &Span) -> usize {
        let mut corner = Span::new(self.dim);
        for i in 0..self.dim {
            corner.insert(self.mul(&self.mul(e, &self.basis_vec(i)), e));
        }
        let mut rad_corner = Span::new(self.dim);
        for j in radical.basis() {
            rad_corner.insert(self.mul(&self.mul(e, j), e));
        }
        corner.dim() - rad_corner.dim()
    }

    /// Lifts `y` with `y^2 - y` nilpotent to an idempotent in `k[y]`.
    pub fn lift_idempotent(&self, y: &[Scalar]) -> Vec<Scalar> {
        let mut y = y.to_vec();
        for _ in 0..64 {
            let y2 = self.mul(&y, &y);
            if y2 == y {
                return y;
            }
            let y3 = self.mul(&y2, &y);
            y = y2.iter().zip(&y3).map(|(a, b)| int(3) * a - int(2) * b).collect();
        }
        panic!("idempotent lifting did not converge");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Upper triangular 2x2 matrices: basis E11, E12, E22.
    fn upper_triangular() -> StructureAlgebra {
        let z = || vec![int(0), int(0), int(0)];
        let u = |i: usize| {
            let mut v = z();
            v[i] = int(1);
            v
        };
        let table = vec![u(0), u(1), z(), z(), z(), u(1), z(), z(), u(2)];
        StructureAlgebra::new(3, table, vec![int(1), int(0), int(1)]).unwrap()
    }

    #[test]
    fn radical_and_idempotents() {
        let a = upper_triangular();
        let pw = a.radical_powers().unwrap();
        assert_eq!(pw.len(), 1);
        assert_eq!(pw[0].dim(), 1);
        let ids = a.primitive_idempotents(&pw[0], 0);
        assert!(ids.split);
        assert_eq!(ids.elements.len(), 2);
        let sum = ids.elements.iter().fold(vec![int(0); 3], |s, e| s.iter().zip(e).map(|(a, b)| a + b).collect());
        assert_eq!(sum, a.one().to_vec());
        for e in &ids.elements {
            assert_eq!(&a.mul(e, e), e);
        }
    }

    #[test]
    fn matrix_algebra_splits() {
        // Full 2x2 matrices, basis E11 E12 E21 E22.
        let mut table = vec![vec![int(0); 4]; 16];
        let idx = |r: usize, c: usize| r * 2 + c;
        for (r1, c1, r2, c2) in (0..16).map(|t| (t >> 3 & 1, t >> 2 & 1, t >> 1 & 1, t & 1)) {
            if c1 == r2 {
                table[idx(r1, c1) * 4 + idx(r2, c2)][idx(r1, c2)] = int(1);
            }
        }
        let a = StructureAlgebra::new(4, table, vec![int(1), int(0), int(0), int(1)]).unwrap();
        let pw = a.radical_powers().unwrap();
        assert!(pw.is_empty());
        let ids = a.primitive_idempotents(&Span::new(4), 0);
        assert!(ids.split);
        assert_eq!(ids.elements.len(), 2);
    }
}
