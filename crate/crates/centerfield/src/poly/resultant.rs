//! Sylvester resultants of bivariate polynomials by exact
//! evaluation–interpolation.
//!
//! The Sylvester matrix is laid out from the y-degrees (or x-degrees) of the
//! inputs with entries in Q[x]; evaluating the entries at a rational point
//! commutes with the determinant, so the resultant is recovered by Lagrange
//! interpolation from enough sample determinants.

use crate::poly::bipoly::{BiPolynomial, Var};
use crate::poly::unipoly::UniPolynomial;
use crate::scalar::{rat, Rational};
use num_traits::{One, Zero};

/// Resultant of p and q with respect to the eliminated variable. The result
/// is a univariate polynomial in the other variable (rows of `p` come first
/// in the Sylvester matrix). Identically zero iff p and q share a factor of
/// positive degree in the eliminated variable.
pub fn resultant(
    p: &BiPolynomial<Rational>,
    q: &BiPolynomial<Rational>,
    eliminate: Var,
) -> UniPolynomial<Rational> {
    assert!(!p.is_zero() && !q.is_zero(), "resultant of zero polynomial");
    let pc = p.coeffs_wrt(eliminate);
    let qc = q.coeffs_wrt(eliminate);
    let dp = pc.len() - 1;
    let dq = qc.len() - 1;
    if dp == 0 && dq == 0 {
        return UniPolynomial::one();
    }
    if dp == 0 {
        // Res(c, q) = c^deg(q)
        let mut acc = UniPolynomial::one();
        for _ in 0..dq {
            acc = acc.mul(&pc[0]);
        }
        return acc;
    }
    if dq == 0 {
        let mut acc = UniPolynomial::one();
        for _ in 0..dp {
            acc = acc.mul(&qc[0]);
        }
        return acc;
    }

    let degx_p = pc.iter().filter_map(|c| c.degree()).max().unwrap_or(0);
    let degx_q = qc.iter().filter_map(|c| c.degree()).max().unwrap_or(0);
    let bound = dq * degx_p + dp * degx_q;

    let mut xs = Vec::with_capacity(bound + 1);
    let mut ys = Vec::with_capacity(bound + 1);
    let mut k: i64 = 0;
    while xs.len() <= bound {
        let x = rat(k);
        ys.push(sylvester_det_at(&pc, &qc, dp, dq, &x));
        xs.push(x);
        k = if k > 0 { -k } else { -k + 1 };
    }
    lagrange_interpolate(&xs, &ys)
}

fn sylvester_det_at(
    pc: &[UniPolynomial<Rational>],
    qc: &[UniPolynomial<Rational>],
    dp: usize,
    dq: usize,
    x: &Rational,
) -> Rational {
    let n = dp + dq;
    let mut m = vec![vec![Rational::zero(); n]; n];
    // rows of p coefficients (descending in the eliminated variable)
    for r in 0..dq {
        for (k, c) in pc.iter().enumerate() {
            m[r][r + dp - k] = c.eval(x);
        }
    }
    for r in 0..dp {
        for (k, c) in qc.iter().enumerate() {
            m[dq + r][r + dq - k] = c.eval(x);
        }
    }
    determinant(m)
}

fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero());
        let pivot = match pivot {
            None => return Rational::zero(),
            Some(p) => p,
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let pv = m[col][col].clone();
        det = det * pv.clone();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &pv;
            for c in col..n {
                let sub = &m[col][c] * &f;
                m[r][c] = &m[r][c] - &sub;
            }
        }
    }
    det
}

fn lagrange_interpolate(xs: &[Rational], ys: &[Rational]) -> UniPolynomial<Rational> {
    let mut acc = UniPolynomial::zero();
    for (i, yi) in ys.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = UniPolynomial::one();
        let mut denom = Rational::one();
        for (j, xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = basis.mul(&UniPolynomial::new(vec![-xj.clone(), Rational::one()]));
            denom = denom * (&xs[i] - xj);
        }
        acc = acc.add(&basis.scale(&(yi.clone() / denom)));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_poly;

    #[test]
    fn circle_and_line() {
        // Oracle: 3x3 Sylvester determinant of x^2+y^2-1 and x-y in y expands
        // by hand to 2x^2 - 1.
        let p = parse_poly("x^2 + y^2 - 1").unwrap();
        let q = parse_poly("x - y").unwrap();
        let r = resultant(&p, &q, Var::Y);
        let expect = parse_poly("2*x^2 - 1").unwrap().coeffs_wrt(Var::Y)[0].clone();
        assert_eq!(r, expect);
    }

    #[test]
    fn shared_component_vanishes() {
        let p = parse_poly("x + y").unwrap();
        let r = resultant(&p, &p, Var::Y);
        assert!(r.is_zero());
    }

    #[test]
    fn unit_resultant_means_no_affine_zero() {
        // Oracle: 2x2 Sylvester determinant of xy-1 (coeffs x, -1) over y
        // (coeffs 1, 0) is x*0 - (-1)*1 = 1.
        let p = parse_poly("x*y - 1").unwrap();
        let q = parse_poly("y").unwrap();
        let r = resultant(&p, &q, Var::Y);
        assert_eq!(r, UniPolynomial::one());
    }

    #[test]
    fn eliminating_x_of_symmetric_pair() {
        let p = parse_poly("x^2 + y^2 - 1").unwrap();
        let q = parse_poly("y - x").unwrap();
        let r = resultant(&p, &q, Var::X);
        // by symmetry with the y case: 2y^2 - 1
        assert_eq!(r.coeff(0), rat(-1));
        assert_eq!(r.coeff(2), rat(2));
    }
}
