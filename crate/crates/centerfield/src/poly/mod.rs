//! Exact bivariate polynomial arithmetic: homogeneous decomposition,
//! differentiation, resultants, GCD, real-root isolation and real linear
//! factors of homogeneous forms.

pub mod bipoly;
pub mod gcd;
pub mod homopoly;
pub mod parse;
pub mod resultant;
pub mod roots;
pub mod unipoly;

pub use bipoly::{BiPolynomial, Var};
pub use gcd::{coprime, gcd};
pub use homopoly::HomogeneousPoly;
pub use parse::{parse_poly, poly_to_string, ParseError};
pub use resultant::resultant;
pub use roots::{real_roots, real_roots_with, RealRoot, RootConfig};
pub use unipoly::UniPolynomial;

use crate::scalar::{rational_to_f64, Rational};
use num_traits::Signed;
use serde::Serialize;

/// A real linear factor of a homogeneous form, reported as the projective
/// direction spanned by its zero line. The factor b·x - a·y vanishes along
/// span{(a, b)}; the factor x maps to [0 : 1] and y - t·x to [1 : t].
#[derive(Clone, Debug)]
pub struct LinearFactor {
    /// Unit vector spanning the zero line (antipode identified).
    pub direction: [f64; 2],
    /// Slope root for [1 : t] directions; `None` for [0 : 1].
    pub slope: Option<RealRoot>,
    pub multiplicity: usize,
}

/// Real linear factors of a nonzero homogeneous form, with multiplicities.
/// The number of entries is the count of distinct real linear factors.
pub fn homo_real_linear_factors(h: &HomogeneousPoly<Rational>) -> Vec<LinearFactor> {
    assert!(!h.is_zero(), "factors of the zero form");
    let w = h.restrict_x1();
    let mut out = Vec::new();
    let x_mult = h.degree() as usize - w.degree().unwrap_or(0);
    if x_mult > 0 {
        out.push(LinearFactor {
            direction: [0.0, 1.0],
            slope: None,
            multiplicity: x_mult,
        });
    }
    if w.degree().map_or(false, |d| d > 0) {
        for root in real_roots(&w) {
            let t = root.value();
            let norm = (1.0 + t * t).sqrt();
            let multiplicity = root.multiplicity;
            out.push(LinearFactor {
                direction: [1.0 / norm, t / norm],
                slope: Some(root),
                multiplicity,
            });
        }
    }
    out
}

/// Serde view of one term for the JSON term-list format
/// `[{"i":…, "j":…, "num":"…", "den":"…"}]`.
#[derive(Serialize)]
pub struct TermJson {
    pub i: u32,
    pub j: u32,
    pub num: String,
    pub den: String,
}

pub fn poly_to_terms_json(p: &BiPolynomial<Rational>) -> Vec<TermJson> {
    p.terms()
        .map(|(i, j, c)| TermJson {
            i,
            j,
            num: c.numer().to_string(),
            den: c.denom().to_string(),
        })
        .collect()
}

pub fn poly_from_terms_json(terms: &[serde_json::Value]) -> Option<BiPolynomial<Rational>> {
    let mut p = BiPolynomial::zero();
    for t in terms {
        let i = t.get("i")?.as_u64()? as u32;
        let j = t.get("j")?.as_u64()? as u32;
        let num: num_bigint::BigInt = t.get("num")?.as_str()?.parse().ok()?;
        let den: num_bigint::BigInt = t.get("den")?.as_str()?.parse().ok()?;
        if den.is_negative() || den == 0.into() {
            return None;
        }
        p.add_term(i, j, Rational::new(num, den));
    }
    Some(p)
}

/// Evaluate a rational polynomial at f64 coordinates through an exact
/// rational path (sound for moderate magnitudes).
pub fn eval_f64_exact(p: &BiPolynomial<Rational>, x: f64, y: f64) -> f64 {
    let xr = Rational::from_float(x).expect("finite");
    let yr = Rational::from_float(y).expect("finite");
    rational_to_f64(&p.eval(&xr, &yr))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn factors_of_axis_product() {
        // h = x*y*(x^2+y^2): factors x and y, multiplicity 1 each; r = 2
        let h = HomogeneousPoly::from_bipoly(&parse_poly("x^3*y + x*y^3").unwrap()).unwrap();
        let fs = homo_real_linear_factors(&h);
        assert_eq!(fs.len(), 2);
        // x factor -> [0:1], y factor (slope 0) -> [1:0]
        assert!(fs
            .iter()
            .any(|f| f.slope.is_none() && f.multiplicity == 1 && f.direction[0] == 0.0));
        assert!(fs.iter().any(
            |f| f.slope.is_some() && f.multiplicity == 1 && (f.direction[1]).abs() < 1e-12
        ));
    }

    #[test]
    fn no_real_factors() {
        // (4x^2 + y^2/4)(16x^2 + y^2/16): positive definite, r = 0
        let e1 = parse_poly("4*x^2 + y^2/4").unwrap();
        let e2 = parse_poly("16*x^2 + y^2/16").unwrap();
        let h = HomogeneousPoly::from_bipoly(&e1.mul(&e2)).unwrap();
        assert!(homo_real_linear_factors(&h).is_empty());
    }

    #[test]
    fn repeated_and_sloped_factors() {
        // y^2 (x + y): y-factor (line y=0, direction [1:0]) with multiplicity
        // 2, and x+y (line y=-x, direction [1:-1]) simple
        let h = HomogeneousPoly::from_bipoly(&parse_poly("y^2*(x + y)").unwrap()).unwrap();
        let mut fs = homo_real_linear_factors(&h);
        fs.sort_by(|a, b| a.multiplicity.cmp(&b.multiplicity));
        assert_eq!(fs.len(), 2);
        let simple = &fs[0];
        assert_eq!(simple.multiplicity, 1);
        assert!((simple.direction[0] + simple.direction[1]).abs() < 1e-10);
        let double = &fs[1];
        assert_eq!(double.multiplicity, 2);
        assert!(double.direction[1].abs() < 1e-10);
    }

    #[test]
    fn product_of_factors_divides() {
        // y^2 (x+y) * (x^2 + y^2): product of real factors divides h exactly,
        // quotient has no real linear factor
        let h_poly = parse_poly("y^2*(x + y)*(x^2 + y^2)").unwrap();
        let h = HomogeneousPoly::from_bipoly(&h_poly).unwrap();
        let fs = homo_real_linear_factors(&h);
        let w = h.restrict_x1();
        let mut product = BiPolynomial::one();
        for f in &fs {
            let factor = match &f.slope {
                None => BiPolynomial::var(Var::X),
                Some(r) => {
                    // slopes here are rational (0 and -1); snap to exact value
                    let t = r.exact_rational(&w).expect("rational slope");
                    parse_poly("y").unwrap().sub(&BiPolynomial::var(Var::X).scale(&t))
                }
            };
            product = product.mul(&factor.pow(f.multiplicity as u32));
        }
        let q = h_poly.div_exact(&product).expect("product divides");
        let qh = HomogeneousPoly::from_bipoly(&q).unwrap();
        assert!(homo_real_linear_factors(&qh).is_empty());
        assert_eq!(q.coeff(2, 0), rat(1));
    }
}
