use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::scalar::Scalar;

/// Univariate polynomial over the rationals, coefficients from low to high degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(pub Vec<Scalar>);

impl Poly {
    pub fn new(mut c: Vec<Scalar>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Poly(c)
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![Scalar::one()])
    }

    /// `x - a`.
    pub fn linear(a: Scalar) -> Self {
        Poly(vec![-a, Scalar::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Scalar> {
        self.0.last()
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            None => Poly::zero(),
            Some(l) => {
                let inv = l.recip();
                Poly(self.0.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        let z = Scalar::zero();
        Poly::new((0..n).map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z)).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        let z = Scalar::zero();
        Poly::new((0..n).map(|i| self.0.get(i).unwrap_or(&z) - o.0.get(i).unwrap_or(&z)).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Scalar::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }

    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![Scalar::zero(); r.len() - dd];
        let inv = d.0[dd].recip();
        for k in (0..q.len()).rev() {
            let f = &r[k + dd] * &inv;
            if f.is_zero() {
                continue;
            }
            for (j, c) in d.0.iter().enumerate() {
                r[k + j] -= &f * c;
            }
            q[k] = f;
        }
        (Poly::new(q), Poly::new(r))
    }

    /// Monic gcd together with Bezout coefficients `(g, s, t)` where `s*self + t*o = g`.
    pub fn ext_gcd(&self, o: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = core::mem::replace(&mut r1, r);
            s0 = core::mem::replace(&mut s1, s);
            t0 = core::mem::replace(&mut t1, t);
        }
        match r0.lead().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let inv = Poly(vec![l.recip()]);
                (r0.mul(&inv), s0.mul(&inv), t0.mul(&inv))
            }
        }
    }

    pub fn gcd(&self, o: &Poly) -> Poly {
        self.ext_gcd(o).0
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.0.iter().enumerate().skip(1).map(|(i, c)| c * Scalar::from_integer(BigInt::from(i))).collect(),
        )
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Product of the distinct monic irreducible factors.
    pub fn squarefree(&self) -> Poly {
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Distinct rational roots, ascending. Gives up (returns what it has) when the
    /// integer coefficients are too large to enumerate divisors.
    pub fn rational_roots(&self) -> Vec<Scalar> {
        let mut roots = Vec::new();
        let mut p = self.squarefree();
        if p.degree().unwrap_or(0) == 0 {
            return roots;
        }
        if p.0[0].is_zero() {
            roots.push(Scalar::zero());
            p = p.div_rem(&Poly::linear(Scalar::zero())).0;
        }
        if p.degree().unwrap_or(0) == 0 {
            return roots;
        }
        let lcm = p.0.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = p.0.iter().map(|c| (c * Scalar::from_integer(lcm.clone())).to_integer()).collect();
        let (Some(a0), Some(an)) = (ints[0].abs().to_u64(), ints.last().unwrap().abs().to_u64()) else {
            return roots;
        };
        let (Some(num), Some(den)) = (divisors(a0), divisors(an)) else {
            return roots;
        };
        let mut found = Vec::new();
        for q in &den {
            for n in &num {
                for sign in [1i64, -1] {
                    let cand = Scalar::new(BigInt::from(*n) * sign, BigInt::from(*q));
                    if !found.contains(&cand) && p.eval(&cand).is_zero() {
                        found.push(cand);
                    }
                }
            }
        }
        roots.extend(found);
        roots.sort();
        roots
    }
}

fn divisors(n: u64) -> Option<Vec<u64>> {
    if n == 0 || n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    fn p(xs: &[i64]) -> Poly {
        Poly::new(xs.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn roots_and_gcd() {
        // (x-1)^2 (x+2) (2x-3) (x^2+1)
        let f = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[2, 1])).mul(&p(&[-3, 2])).mul(&p(&[1, 0, 1]));
        let r = f.rational_roots();
        assert_eq!(r, vec![int(-2), int(1), Scalar::new(3.into(), 2.into())]);
        let g = f.gcd(&p(&[-1, 1]).mul(&p(&[5, 1])));
        assert_eq!(g, p(&[-1, 1]));
        let (g, s, t) = p(&[0, 0, 1]).ext_gcd(&p(&[-1, 1]));
        assert_eq!(g, Poly::one());
        assert_eq!(s.mul(&p(&[0, 0, 1])).add(&t.mul(&p(&[-1, 1]))), Poly::one());
    }
}
