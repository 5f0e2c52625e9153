//! Dense univariate polynomials with coefficients in an arbitrary scalar.

use crate::scalar::{Rational, Scalar};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Univariate polynomial, coefficients ascending by degree.
/// Leading coefficient is nonzero unless the polynomial is zero.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPolynomial<T: Scalar> {
    coeffs: Vec<T>,
}

impl<T: Scalar> UniPolynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        UniPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPolynomial {
            coeffs: vec![T::one()],
        }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The monomial c·x^k.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut v = vec![T::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (k, c) in self.coeffs.iter().enumerate().skip(1) {
            let mut kc = T::zero();
            for _ in 0..k {
                kc = kc + c.clone();
            }
            out.push(kc);
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        Self::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> UniPolynomial<U> {
        UniPolynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl UniPolynomial<Rational> {
    /// Euclidean division; divisor must be nonzero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading().unwrap().clone();
        if rem.degree().map_or(true, |d| d < dd) {
            return (Self::zero(), rem);
        }
        let mut quot = vec![Rational::zero(); rem.degree().unwrap() - dd + 1];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading().unwrap().clone() / lead.clone();
            quot[rd - dd] = factor.clone();
            let sub = divisor.mul(&Self::monomial(factor, rd - dd));
            rem = rem.sub(&sub);
        }
        (Self::new(quot), rem)
    }

    /// Exact division; `None` when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&(Rational::one() / l.clone())),
        }
    }

    /// Clear denominators and divide by the integer content; sign of the
    /// leading coefficient is preserved.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for v in &ints {
            content = content.gcd(v);
        }
        if content.is_zero() {
            content = BigInt::one();
        }
        Self::new(
            ints.iter()
                .map(|v| Rational::from_integer(v / &content))
                .collect(),
        )
    }

    /// GCD, returned primitive with positive leading coefficient
    /// (constant `1` when coprime).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive();
        let mut b = other.primitive();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.primitive();
        }
        if a.is_zero() {
            return Self::zero();
        }
        let a = a.primitive();
        if a.leading().unwrap().is_negative() {
            a.neg()
        } else {
            a
        }
    }

    /// Square-free part: self / gcd(self, self').
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.primitive();
        }
        self.primitive()
            .div_exact(&g)
            .or_else(|| {
                // gcd is primitive; self may need a scalar adjustment first
                let (q, r) = self.primitive().div_rem(&g);
                if r.is_zero() {
                    Some(q)
                } else {
                    None
                }
            })
            .expect("gcd divides")
            .primitive()
    }

    /// Yun square-free decomposition: returns (factor, multiplicity) pairs
    /// with the factors square-free and pairwise coprime, and
    /// self = lc · Π factor^multiplicity.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let p = self.primitive();
        if p.degree().map_or(true, |d| d == 0) {
            return Vec::new();
        }
        let dp = p.derivative();
        let g = p.gcd(&dp);
        if g.degree() == Some(0) {
            return vec![(p, 1)];
        }
        let mut out = Vec::new();
        let mut w = p.div_rem(&g).0;
        let mut y = dp.div_rem(&g).0;
        let mut i = 1usize;
        loop {
            let z = y.sub(&w.derivative());
            if z.is_zero() {
                if w.degree().map_or(false, |d| d > 0) {
                    out.push((w.primitive(), i));
                }
                break;
            }
            let h = w.gcd(&z);
            if h.degree().map_or(false, |d| d > 0) {
                out.push((h.clone(), i));
            }
            w = w.div_rem(&h).0;
            y = z.div_rem(&h).0;
            i += 1;
            if w.degree().map_or(true, |d| d == 0) {
                break;
            }
        }
        out
    }

    /// Cauchy bound: every real root lies in (-b, b).
    pub fn root_bound(&self) -> Rational {
        let lead = match self.leading() {
            None => return Rational::one(),
            Some(l) => l.clone(),
        };
        let mut m = Rational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let q = (c.clone() / lead.clone()).abs();
            if q > m {
                m = q;
            }
        }
        m + Rational::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn p(coeffs: &[i64]) -> UniPolynomial<Rational> {
        UniPolynomial::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn div_rem_roundtrip() {
        let a = p(&[2, 0, -3, 1]); // x^3 - 3x^2 + 2
        let b = p(&[-1, 1]); // x - 1
        let (q, r) = a.div_rem(&b);
        assert_eq!(b.mul(&q).add(&r), a);
    }

    #[test]
    fn gcd_of_shared_factor() {
        let common = p(&[1, 1]); // x + 1
        let a = common.mul(&p(&[3, 0, 1]));
        let b = common.mul(&p(&[-2, 1]));
        let g = a.gcd(&b);
        assert_eq!(g, common.primitive());
    }

    #[test]
    fn squarefree_decomposition_of_cube() {
        // (x-2)^2 (x+1)
        let f = p(&[-2, 1]).mul(&p(&[-2, 1])).mul(&p(&[1, 1]));
        let dec = f.squarefree_decomposition();
        assert_eq!(dec.len(), 2);
        assert!(dec.iter().any(|(q, m)| *m == 2 && q == &p(&[-2, 1])));
        assert!(dec.iter().any(|(q, m)| *m == 1 && q == &p(&[1, 1])));
    }

    #[test]
    fn derivative_of_cubic() {
        let f = p(&[5, 0, 0, 2]); // 2x^3 + 5
        assert_eq!(f.derivative(), p(&[0, 0, 6]));
    }
}
