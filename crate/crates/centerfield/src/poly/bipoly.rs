//! Bivariate polynomials in x, y as sparse exponent maps.

use crate::poly::homopoly::HomogeneousPoly;
use crate::poly::unipoly::UniPolynomial;
use crate::scalar::{Rational, Scalar};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Which variable an operation eliminates or acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

/// Bivariate polynomial. Maps (i, j) -> coefficient of x^i y^j; never stores
/// zero coefficients. `total_degree` is kept in sync with the map.
#[derive(Clone, Debug, PartialEq)]
pub struct BiPolynomial<T: Scalar> {
    terms: BTreeMap<(u32, u32), T>,
    total_degree: u32,
}

impl<T: Scalar> BiPolynomial<T> {
    pub fn zero() -> Self {
        BiPolynomial {
            terms: BTreeMap::new(),
            total_degree: 0,
        }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        let mut p = Self::zero();
        p.insert(0, 0, c);
        p
    }

    pub fn var(v: Var) -> Self {
        let mut p = Self::zero();
        match v {
            Var::X => p.insert(1, 0, T::one()),
            Var::Y => p.insert(0, 1, T::one()),
        }
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, u32, T)>) -> Self {
        let mut p = Self::zero();
        for (i, j, c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    fn recompute_degree(&mut self) {
        self.total_degree = self.terms.keys().map(|&(i, j)| i + j).max().unwrap_or(0);
    }

    fn insert(&mut self, i: u32, j: u32, c: T) {
        if !c.is_zero() {
            self.terms.insert((i, j), c);
            self.total_degree = self.total_degree.max(i + j);
        }
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: T) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(T::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
            self.recompute_degree();
        } else {
            self.total_degree = self.total_degree.max(i + j);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i == 0 && j == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.total_degree
    }

    /// Max exponent of the given variable across all terms.
    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms
            .keys()
            .map(|&(i, j)| match v {
                Var::X => i,
                Var::Y => j,
            })
            .max()
            .unwrap_or(0)
    }

    pub fn coeff(&self, i: u32, j: u32) -> T {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &T)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (i, j, c) in rhs.terms() {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (i1, j1, c1) in self.terms() {
            for (i2, j2, c2) in rhs.terms() {
                out.add_term(i1 + i2, j1 + j2, c1.clone() * c2.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.clone() * c.clone();
        }
        out.terms.retain(|_, v| !v.is_zero());
        out.recompute_degree();
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &T, y: &T) -> T {
        // Horner in y over Horner-in-x rows.
        let rows = self.coeffs_wrt(Var::Y);
        let mut acc = T::zero();
        for row in rows.iter().rev() {
            acc = acc * y.clone() + row.eval(x);
        }
        acc
    }

    pub fn derivative(&self, v: Var) -> Self {
        let mut out = Self::zero();
        for (i, j, c) in self.terms() {
            let (e, ni, nj) = match v {
                Var::X => (i, i.wrapping_sub(1), j),
                Var::Y => (j, i, j.wrapping_sub(1)),
            };
            if e == 0 {
                continue;
            }
            let mut ec = T::zero();
            for _ in 0..e {
                ec = ec + c.clone();
            }
            out.add_term(ni, nj, ec);
        }
        out
    }

    /// Coefficients as univariate polynomials in the *other* variable,
    /// indexed by the power of `v`.
    pub fn coeffs_wrt(&self, v: Var) -> Vec<UniPolynomial<T>> {
        let deg = self.degree_in(v) as usize;
        let mut rows: Vec<Vec<T>> = vec![Vec::new(); deg + 1];
        for (i, j, c) in self.terms() {
            let (k, other) = match v {
                Var::X => (i as usize, j as usize),
                Var::Y => (j as usize, i as usize),
            };
            if rows[k].len() <= other {
                rows[k].resize(other + 1, T::zero());
            }
            rows[k][other] = c.clone();
        }
        rows.into_iter().map(UniPolynomial::new).collect()
    }

    /// Rebuild from coefficient rows: sum_k rows[k] * v^k.
    pub fn from_coeffs_wrt(v: Var, rows: &[UniPolynomial<T>]) -> Self {
        let mut out = Self::zero();
        for (k, row) in rows.iter().enumerate() {
            for (other, c) in row.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (i, j) = match v {
                    Var::X => (k as u32, other as u32),
                    Var::Y => (other as u32, k as u32),
                };
                out.add_term(i, j, c.clone());
            }
        }
        out
    }

    /// Split into homogeneous parts; index k holds the degree-k part and
    /// trailing zero parts are dropped.
    pub fn homogeneous_parts(&self) -> Vec<HomogeneousPoly<T>> {
        if self.is_zero() {
            return Vec::new();
        }
        let d = self.total_degree as usize;
        let mut parts: Vec<HomogeneousPoly<T>> =
            (0..=d).map(|k| HomogeneousPoly::zero(k as u32)).collect();
        for (i, j, c) in self.terms() {
            parts[(i + j) as usize].set_coeff(j, c.clone());
        }
        parts
    }

    /// Top homogeneous part.
    pub fn leading_form(&self) -> HomogeneousPoly<T> {
        let d = self.total_degree;
        let mut h = HomogeneousPoly::zero(d);
        for (i, j, c) in self.terms() {
            if i + j == d {
                h.set_coeff(j, c.clone());
            }
        }
        h
    }

    /// Substitute polynomials for the variables.
    pub fn compose(&self, x_sub: &Self, y_sub: &Self) -> Self {
        let mut out = Self::zero();
        // cache powers
        let dx = self.degree_in(Var::X) as usize;
        let dy = self.degree_in(Var::Y) as usize;
        let mut xp = Vec::with_capacity(dx + 1);
        let mut yp = Vec::with_capacity(dy + 1);
        xp.push(Self::one());
        for k in 1..=dx {
            let prev = xp[k - 1].clone();
            xp.push(prev.mul(x_sub));
        }
        yp.push(Self::one());
        for k in 1..=dy {
            let prev = yp[k - 1].clone();
            yp.push(prev.mul(y_sub));
        }
        for (i, j, c) in self.terms() {
            let term = xp[i as usize].mul(&yp[j as usize]).scale(c);
            out = out.add(&term);
        }
        out
    }

    /// Substitute a scalar for one variable, leaving a univariate polynomial
    /// in the other.
    pub fn substitute_scalar(&self, v: Var, value: &T) -> UniPolynomial<T> {
        let rows = self.coeffs_wrt(v);
        let mut acc = UniPolynomial::zero();
        let mut p = T::one();
        for row in rows {
            acc = acc.add(&row.scale(&p));
            p = p * value.clone();
        }
        acc
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> BiPolynomial<U> {
        BiPolynomial::from_terms(self.terms().map(|(i, j, c)| (i, j, f(c))))
    }

    pub fn to_f64_poly(&self) -> BiPolynomial<f64> {
        self.map(|c| c.to_f64())
    }
}

impl BiPolynomial<Rational> {
    /// Exact division by lex leading-term reduction; `None` when the
    /// remainder is nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let (&(di, dj), dc) = divisor.terms.iter().next_back().unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let (&(ri, rj), rc) = rem.terms.iter().next_back().unwrap();
            if ri < di || rj < dj {
                return None;
            }
            let (qi, qj) = (ri - di, rj - dj);
            let qc = rc.clone() / dc.clone();
            let mut m = Self::zero();
            m.insert(qi, qj, qc);
            rem = rem.sub(&m.mul(divisor));
            quot = quot.add(&m);
        }
        Some(quot)
    }

    /// Divergence-style check helpers live at call sites; here only the
    /// generic integral in one variable with zero constant of integration.
    pub fn integrate(&self, v: Var) -> Self {
        let mut out = Self::zero();
        for (i, j, c) in self.terms() {
            let (ni, nj, e) = match v {
                Var::X => (i + 1, j, i + 1),
                Var::Y => (i, j + 1, j + 1),
            };
            out.add_term(ni, nj, c.clone() / Rational::from_integer(e.into()));
        }
        out
    }

    /// Multiply by the smallest positive rational making all coefficients
    /// integers with gcd 1 (sign preserved).
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        use num_bigint::BigInt;
        use num_integer::Integer;
        let mut den_lcm = BigInt::one();
        for (_, _, c) in self.terms() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = BigInt::zero();
        let ints: Vec<((u32, u32), BigInt)> = self
            .terms()
            .map(|(i, j, c)| ((i, j), c.numer() * (&den_lcm / c.denom())))
            .collect();
        for (_, v) in &ints {
            content = content.gcd(v);
        }
        if content.is_zero() {
            content = BigInt::one();
        }
        Self::from_terms(
            ints.into_iter()
                .map(|((i, j), v)| (i, j, Rational::from_integer(v / &content))),
        )
    }

    /// Lowest total degree among the terms of `self` translated to `p`;
    /// this is the multiplicity of the curve {self = 0} at `p`.
    pub fn multiplicity_at(&self, px: &Rational, py: &Rational) -> u32 {
        let x_sub = Self::var(Var::X).add(&Self::constant(px.clone()));
        let y_sub = Self::var(Var::Y).add(&Self::constant(py.clone()));
        let shifted = self.compose(&x_sub, &y_sub);
        shifted
            .terms()
            .map(|(i, j, _)| i + j)
            .min()
            .unwrap_or(u32::MAX)
    }
}

impl<T: Scalar> fmt::Display for BiPolynomial<T>
where
    T: fmt::Display + Signed,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // highest total degree first, then higher x power
        let mut keys: Vec<(u32, u32)> = self.terms.keys().cloned().collect();
        keys.sort_by(|a, b| (b.0 + b.1, b.0).cmp(&(a.0 + a.1, a.0)));
        let mut first = true;
        for (i, j) in keys {
            let c = &self.terms[&(i, j)];
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            let coeff_is_one = mag.is_one();
            if !coeff_is_one || (i == 0 && j == 0) {
                parts.push(format!("{}", mag));
            }
            match i {
                0 => {}
                1 => parts.push("x".into()),
                _ => parts.push(format!("x^{}", i)),
            }
            match j {
                0 => {}
                1 => parts.push("y".into()),
                _ => parts.push(format!("y^{}", j)),
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn xy_poly() -> BiPolynomial<Rational> {
        // x^2 + x*y + 3
        BiPolynomial::from_terms(vec![
            (2, 0, rat(1)),
            (1, 1, rat(1)),
            (0, 0, rat(3)),
        ])
    }

    #[test]
    fn homogeneous_parts_reassemble() {
        let p = xy_poly();
        let parts = p.homogeneous_parts();
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0].to_bipoly(), BiPolynomial::constant(rat(3)));
        assert!(parts[1].is_zero());
        let mut sum = BiPolynomial::zero();
        for h in &parts {
            sum = sum.add(&h.to_bipoly());
        }
        assert_eq!(sum, p);
    }

    #[test]
    fn zero_has_no_parts() {
        let z: BiPolynomial<Rational> = BiPolynomial::zero();
        assert!(z.homogeneous_parts().is_empty());
    }

    #[test]
    fn exact_division() {
        let a = BiPolynomial::from_terms(vec![(1, 0, rat(1)), (0, 1, rat(1))]); // x + y
        let x = BiPolynomial::var(Var::X);
        let prod = a.mul(&x);
        assert_eq!(prod.div_exact(&a), Some(x.clone()));
        assert_eq!(prod.div_exact(&BiPolynomial::var(Var::Y)), None);
    }

    #[test]
    fn eval_matches_terms() {
        let p = xy_poly();
        let v = p.eval(&rat(2), &rat(-1));
        assert_eq!(v, rat(4 - 2 + 3));
    }

    #[test]
    fn compose_shift() {
        // p(x+1, y) of x^2 = x^2 + 2x + 1
        let p = BiPolynomial::from_terms(vec![(2, 0, rat(1))]);
        let xs = BiPolynomial::var(Var::X).add(&BiPolynomial::constant(rat(1)));
        let shifted = p.compose(&xs, &BiPolynomial::var(Var::Y));
        assert_eq!(
            shifted,
            BiPolynomial::from_terms(vec![(2, 0, rat(1)), (1, 0, rat(2)), (0, 0, rat(1))])
        );
    }

    #[test]
    fn display_is_readable() {
        let p = xy_poly();
        assert_eq!(format!("{}", p), "x^2 + x*y + 3");
    }

    #[test]
    fn multiplicity_at_origin() {
        // x^2 - y^2 has multiplicity 2 at origin, 1 at (1, 1)
        let p = BiPolynomial::from_terms(vec![(2, 0, rat(1)), (0, 2, rat(-1))]);
        assert_eq!(p.multiplicity_at(&rat(0), &rat(0)), 2);
        assert_eq!(p.multiplicity_at(&rat(1), &rat(1)), 1);
    }
}
