use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::linalg::Scalar;

/// Sparse algebra element: `(basis index, coefficient)` pairs sorted by index, no zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Element(Vec<(usize, Scalar)>);

impl Element {
    pub fn zero() -> Self {
        Element(Vec::new())
    }

    pub fn basis(i: usize) -> Self {
        Element(alloc::vec![(i, Scalar::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, Scalar)>>(it: I) -> Self {
        let mut v: Vec<(usize, Scalar)> = it.into_iter().collect();
        v.sort_by_key(|t| t.0);
        let mut out: Vec<(usize, Scalar)> = Vec::with_capacity(v.len());
        for (i, c) in v {
            match out.last_mut() {
                Some((j, d)) if *j == i => *d += c,
                _ => out.push((i, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        Element(out)
    }

    pub fn from_dense(v: &[Scalar]) -> Self {
        Element(v.iter().enumerate().filter(|t| !t.1.is_zero()).map(|(i, c)| (i, c.clone())).collect())
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Scalar> {
        let mut v = alloc::vec![Scalar::zero(); dim];
        for (i, c) in &self.0 {
            v[*i] = c.clone();
        }
        v
    }

    pub fn terms(&self) -> &[(usize, Scalar)] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        match self.0.binary_search_by_key(&i, |t| t.0) {
            Ok(k) => self.0[k].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Element, c: &Scalar) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y * c));
                        b.next();
                    } else {
                        let s = x + y * c;
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        self.0 = out;
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut e = self.clone();
        e.add_scaled(other, &Scalar::one());
        e
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut e = self.clone();
        e.add_scaled(other, &-Scalar::one());
        e
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element(self.0.iter().map(|(i, x)| (*i, x * c)).collect())
    }

    pub fn neg(&self) -> Element {
        Element(self.0.iter().map(|(i, x)| (*i, -x)).collect())
    }
}
