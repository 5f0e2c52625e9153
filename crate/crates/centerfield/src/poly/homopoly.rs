//! Homogeneous bivariate forms, stored by power of y.

use crate::poly::bipoly::BiPolynomial;
use crate::poly::unipoly::UniPolynomial;
use crate::scalar::Scalar;


/// Homogeneous polynomial Σ c_k x^(degree-k) y^k; `coeffs[k] = c_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct HomogeneousPoly<T: Scalar> {
    degree: u32,
    coeffs: Vec<T>,
}

impl<T: Scalar> HomogeneousPoly<T> {
    pub fn zero(degree: u32) -> Self {
        HomogeneousPoly {
            degree,
            coeffs: vec![T::zero(); degree as usize + 1],
        }
    }

    pub fn from_coeffs(degree: u32, coeffs: Vec<T>) -> Self {
        assert_eq!(coeffs.len(), degree as usize + 1);
        HomogeneousPoly { degree, coeffs }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, y_power: u32) -> T {
        self.coeffs
            .get(y_power as usize)
            .cloned()
            .unwrap_or_else(T::zero)
    }

    pub fn set_coeff(&mut self, y_power: u32, c: T) {
        self.coeffs[y_power as usize] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn to_bipoly(&self) -> BiPolynomial<T> {
        BiPolynomial::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (self.degree - k as u32, k as u32, c.clone())),
        )
    }

    pub fn from_bipoly(p: &BiPolynomial<T>) -> Option<Self> {
        if p.is_zero() {
            return Some(Self::zero(0));
        }
        let d = p.total_degree();
        let mut h = Self::zero(d);
        for (i, j, c) in p.terms() {
            if i + j != d {
                return None;
            }
            h.set_coeff(j, c.clone());
        }
        Some(h)
    }

    /// Restriction h(1, t): the dehomogenization along x = 1.
    pub fn restrict_x1(&self) -> UniPolynomial<T> {
        UniPolynomial::new(self.coeffs.clone())
    }

    /// Restriction h(t, 1).
    pub fn restrict_y1(&self) -> UniPolynomial<T> {
        let mut rev = self.coeffs.clone();
        rev.reverse();
        UniPolynomial::new(rev)
    }

    pub fn eval(&self, x: &T, y: &T) -> T {
        self.to_bipoly().eval(x, y)
    }

    pub fn scale(&self, c: &T) -> Self {
        HomogeneousPoly {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::bipoly::Var;
    use crate::scalar::{rat, Rational};

    #[test]
    fn roundtrip_bipoly() {
        // x^2 y + y^3 (degree 3)
        let p = BiPolynomial::from_terms(vec![(2, 1, rat(1)), (0, 3, rat(1))]);
        let h = HomogeneousPoly::from_bipoly(&p).unwrap();
        assert_eq!(h.degree(), 3);
        assert_eq!(h.to_bipoly(), p);
        // not homogeneous
        let q = p.add(&BiPolynomial::var(Var::X));
        assert!(HomogeneousPoly::<Rational>::from_bipoly(&q).is_none());
    }

    #[test]
    fn restrictions() {
        // h = x^2 - y^2
        let h = HomogeneousPoly::from_coeffs(2, vec![rat(1), rat(0), rat(-1)]);
        let r = h.restrict_x1();
        assert_eq!(r.eval(&rat(2)), rat(-3));
        let s = h.restrict_y1();
        assert_eq!(s.eval(&rat(2)), rat(3));
    }
}
