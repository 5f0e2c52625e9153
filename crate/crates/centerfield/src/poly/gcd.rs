//! Bivariate GCD over the rationals via a primitive remainder sequence in y
//! with univariate content stripping.

use crate::poly::bipoly::{BiPolynomial, Var};
use crate::poly::unipoly::UniPolynomial;
use crate::scalar::Rational;


/// A greatest common divisor of p and q up to rational scale, returned
/// primitive. Constant iff the polynomials share no component.
pub fn gcd(p: &BiPolynomial<Rational>, q: &BiPolynomial<Rational>) -> BiPolynomial<Rational> {
    if p.is_zero() {
        return q.primitive();
    }
    if q.is_zero() {
        return p.primitive();
    }
    // contents w.r.t. y live in Q[x]
    let (cp, pp) = content_primitive(p);
    let (cq, pq) = content_primitive(q);
    let content_gcd = cp.gcd(&cq);

    let pp_gcd = primitive_prs_gcd(pp, pq);

    let content_bi = BiPolynomial::from_coeffs_wrt(Var::Y, &[content_gcd]);
    content_bi.mul(&pp_gcd).primitive()
}

/// True when gcd(p, q) is constant.
pub fn coprime(p: &BiPolynomial<Rational>, q: &BiPolynomial<Rational>) -> bool {
    gcd(p, q).is_constant()
}

/// Split into (content in Q[x], primitive part) with respect to y.
fn content_primitive(
    p: &BiPolynomial<Rational>,
) -> (UniPolynomial<Rational>, BiPolynomial<Rational>) {
    let rows = p.coeffs_wrt(Var::Y);
    let mut content = UniPolynomial::zero();
    for row in &rows {
        if row.is_zero() {
            continue;
        }
        content = content.gcd(row);
        if content.degree() == Some(0) {
            break;
        }
    }
    if content.is_zero() {
        return (UniPolynomial::zero(), BiPolynomial::zero());
    }
    let primitive_rows: Vec<UniPolynomial<Rational>> = rows
        .iter()
        .map(|row| {
            if row.is_zero() {
                UniPolynomial::zero()
            } else {
                row.div_exact(&content).expect("content divides")
            }
        })
        .collect();
    (content, BiPolynomial::from_coeffs_wrt(Var::Y, &primitive_rows))
}

/// GCD of two y-primitive polynomials by pseudo-division in y.
fn primitive_prs_gcd(
    mut a: BiPolynomial<Rational>,
    mut b: BiPolynomial<Rational>,
) -> BiPolynomial<Rational> {
    loop {
        if b.is_zero() {
            return a.primitive();
        }
        if b.degree_in(Var::Y) == 0 {
            // y-primitive with no y: gcd in y-direction is trivial
            return BiPolynomial::one();
        }
        if a.degree_in(Var::Y) < b.degree_in(Var::Y) {
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        let r = pseudo_rem_y(&a, &b);
        let r = if r.is_zero() {
            r
        } else {
            content_primitive(&r).1
        };
        a = b;
        b = r;
    }
}

/// Pseudo-remainder of a by b with respect to y: lc(b)^k · a mod b.
fn pseudo_rem_y(a: &BiPolynomial<Rational>, b: &BiPolynomial<Rational>) -> BiPolynomial<Rational> {
    let db = b.degree_in(Var::Y);
    let lb_rows = b.coeffs_wrt(Var::Y);
    let lb = BiPolynomial::from_coeffs_wrt(Var::Y, &[lb_rows[db as usize].clone()]);
    let mut rem = a.clone();
    while !rem.is_zero() && rem.degree_in(Var::Y) >= db {
        let dr = rem.degree_in(Var::Y);
        let rows = rem.coeffs_wrt(Var::Y);
        let lr = BiPolynomial::from_coeffs_wrt(Var::Y, &[rows[dr as usize].clone()]);
        // rem := lc(b)*rem - lc(rem)*y^(dr-db)*b
        let shift = BiPolynomial::from_terms([(0u32, dr - db, Rational::from_integer(1.into()))]);
        rem = rem.mul(&lb).sub(&lr.mul(&shift).mul(b));
    }
    rem
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_poly;

    fn p(s: &str) -> BiPolynomial<Rational> {
        parse_poly(s).unwrap()
    }

    #[test]
    fn shared_linear_factor() {
        let a = p("(x + y)*x");
        let b = p("(x + y)*y");
        let g = gcd(&a, &b);
        assert_eq!(g, p("x + y"));
    }

    #[test]
    fn coprime_variables() {
        assert!(coprime(&p("x"), &p("y")));
    }

    #[test]
    fn x_only_common_factor() {
        let a = p("x^2*y + x^2");
        let b = p("x*y^2 + x");
        let g = gcd(&a, &b);
        // common factor x (no y involved)
        assert_eq!(g, p("x"));
    }

    #[test]
    fn mixed_content_and_y_factor() {
        let a = p("x^2*y + x^2"); // x^2 (y+1)
        let b = p("x*y^2 - x"); // x (y-1)(y+1)
        let g = gcd(&a, &b);
        assert_eq!(g, p("x*y + x"));
    }

    #[test]
    fn quadratic_common_component() {
        let c = p("x^2 + y^2 - 1");
        let a = c.mul(&p("x - 2*y + 1"));
        let b = c.mul(&p("y + 3"));
        let g = gcd(&a, &b);
        assert_eq!(g.primitive(), c.primitive());
    }
}
