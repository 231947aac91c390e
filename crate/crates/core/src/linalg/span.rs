use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::scalar::Scalar;

/// Incrementally built subspace of `Q^dim` with exact coordinates.
///
/// Vectors accepted by [`Span::insert`] form the basis; [`Span::coords`] expresses any
/// vector of the span in that basis.
#[derive(Clone, Debug)]
pub struct Span {
    dim: usize,
    basis: Vec<Vec<Scalar>>,
    // Fully reduced echelon rows, their pivots, and each echelon row as a combination of `basis`.
    echelon: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
    combo: Vec<Vec<Scalar>>,
}

impl Span {
    pub fn new(dim: usize) -> Self {
        Span { dim, basis: Vec::new(), echelon: Vec::new(), pivots: Vec::new(), combo: Vec::new() }
    }

    pub fn from_vectors<I: IntoIterator<Item = Vec<Scalar>>>(dim: usize, vs: I) -> Self {
        let mut s = Span::new(dim);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduced echelon rows with their pivot columns, in increasing pivot order.
    pub fn echelon(&self) -> impl Iterator<Item = (usize, &[Scalar])> {
        self.pivots.iter().copied().zip(self.echelon.iter().map(|r| r.as_slice()))
    }

    /// Residual of `v` after elimination against the echelon rows, with the
    /// combination of basis vectors that was subtracted.
    fn reduce_tracked(&self, v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
        let mut r = v.to_vec();
        let mut c = vec![Scalar::zero(); self.basis.len()];
        for (i, &p) in self.pivots.iter().enumerate() {
            let f = r[p].clone();
            if f.is_zero() {
                continue;
            }
            for (j, e) in self.echelon[i].iter().enumerate() {
                if !e.is_zero() {
                    r[j] -= &f * e;
                }
            }
            for (j, e) in self.combo[i].iter().enumerate() {
                if !e.is_zero() {
                    c[j] += &f * e;
                }
            }
        }
        (r, c)
    }

    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut r = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let f = r[p].clone();
            if f.is_zero() {
                continue;
            }
            for (j, e) in self.echelon[i].iter().enumerate() {
                if !e.is_zero() {
                    r[j] -= &f * e;
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v`; returns `false` when it was already in the span.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.dim);
        let (mut r, c) = self.reduce_tracked(&v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let k = self.basis.len();
        self.basis.push(v);
        for row in &mut self.combo {
            row.push(Scalar::zero());
        }
        // r = v - sum c_j basis_j
        let mut rc: Vec<Scalar> = c.into_iter().map(|x| -x).collect();
        rc.push(Scalar::one());
        let inv = r[p].recip();
        for x in r.iter_mut() {
            *x *= &inv;
        }
        for x in rc.iter_mut() {
            *x *= &inv;
        }
        for i in 0..self.echelon.len() {
            let f = self.echelon[i][p].clone();
            if f.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if !r[j].is_zero() {
                    let t = &f * &r[j];
                    self.echelon[i][j] -= t;
                }
            }
            for j in 0..=k {
                if !rc[j].is_zero() {
                    let t = &f * &rc[j];
                    self.combo[i][j] -= t;
                }
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.echelon.insert(pos, r);
        self.combo.insert(pos, rc);
        true
    }

    /// Coefficients of `v` in the basis, or `None` if `v` is outside the span.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let (r, c) = self.reduce_tracked(v);
        if r.iter().all(Zero::is_zero) {
            Some(c)
        } else {
            None
        }
    }

    /// Indices of standard unit vectors completing the span to the whole space.
    pub fn complement_units(&self) -> Vec<usize> {
        let mut is_p = vec![false; self.dim];
        for &p in &self.pivots {
            is_p[p] = true;
        }
        (0..self.dim).filter(|&i| !is_p[i]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn coords_roundtrip() {
        let mut s = Span::new(3);
        assert!(s.insert(v(&[1, 2, 3])));
        assert!(s.insert(v(&[0, 1, 1])));
        assert!(!s.insert(v(&[1, 3, 4])));
        assert_eq!(s.dim(), 2);
        let c = s.coords(&v(&[2, 7, 9])).unwrap();
        assert_eq!(c, v(&[2, 3]));
        assert!(s.coords(&v(&[0, 0, 1])).is_none());
        assert_eq!(s.complement_units(), vec![2]);
    }
}
