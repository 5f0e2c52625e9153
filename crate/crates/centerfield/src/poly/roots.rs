//! Certified real-root isolation for rational univariate polynomials.
//!
//! Multiplicities come from Yun's square-free decomposition; each distinct
//! root is isolated with a Sturm chain on its square-free factor and then
//! narrowed by exact bisection to the requested width.

use crate::poly::unipoly::UniPolynomial;
use crate::scalar::{rational_to_f64, Rational};
use num_traits::{One, Signed, Zero};

/// An isolated real root of a univariate polynomial.
#[derive(Clone, Debug)]
pub struct RealRoot {
    /// Isolating interval (lo, hi]; contains exactly one distinct real root
    /// of the source polynomial.
    pub interval: (Rational, Rational),
    pub multiplicity: usize,
}

impl RealRoot {
    pub fn mid(&self) -> Rational {
        (&self.interval.0 + &self.interval.1) / Rational::from_integer(2.into())
    }

    /// The exact rational value of this root, when it is rational and simple
    /// enough to be the smallest-denominator rational in its interval.
    pub fn exact_rational(&self, source: &UniPolynomial<Rational>) -> Option<Rational> {
        let candidate = crate::scalar::simplest_rational_in(&self.interval.0, &self.interval.1);
        if source.eval(&candidate).is_zero() {
            Some(candidate)
        } else {
            None
        }
    }

    pub fn value(&self) -> f64 {
        rational_to_f64(&self.mid())
    }

    pub fn width(&self) -> Rational {
        &self.interval.1 - &self.interval.0
    }

    pub fn contains(&self, v: &Rational) -> bool {
        *v > self.interval.0 && *v <= self.interval.1
    }
}

/// Sturm chain of a square-free polynomial.
struct SturmChain {
    chain: Vec<UniPolynomial<Rational>>,
}

impl SturmChain {
    fn new(p: &UniPolynomial<Rational>) -> Self {
        let mut chain = vec![p.primitive()];
        let d = p.derivative().primitive();
        if !d.is_zero() {
            chain.push(d);
        }
        loop {
            let n = chain.len();
            if n < 2 || chain[n - 1].degree().map_or(true, |d| d == 0) {
                break;
            }
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.neg().primitive());
        }
        SturmChain { chain }
    }

    fn variations_at(&self, x: &Rational) -> usize {
        let mut count = 0;
        let mut last: Option<bool> = None; // sign > 0
        for p in &self.chain {
            let v = p.eval(x);
            if v.is_zero() {
                continue;
            }
            let s = v.is_positive();
            if let Some(prev) = last {
                if prev != s {
                    count += 1;
                }
            }
            last = Some(s);
        }
        count
    }

    /// Number of distinct real roots in (a, b].
    fn count(&self, a: &Rational, b: &Rational) -> usize {
        let va = self.variations_at(a);
        let vb = self.variations_at(b);
        va.saturating_sub(vb)
    }
}

/// Configuration for refinement width.
#[derive(Clone, Debug)]
pub struct RootConfig {
    /// Target isolating-interval width.
    pub width: Rational,
}

impl Default for RootConfig {
    fn default() -> Self {
        RootConfig {
            // 2^-53
            width: Rational::new(1.into(), num_bigint::BigInt::one() << 53),
        }
    }
}

impl RootConfig {
    pub fn with_bits(bits: u32) -> Self {
        RootConfig {
            width: Rational::new(1.into(), num_bigint::BigInt::one() << bits),
        }
    }
}

/// All distinct real roots of `u` with multiplicities, sorted increasing.
pub fn real_roots(u: &UniPolynomial<Rational>) -> Vec<RealRoot> {
    real_roots_with(u, &RootConfig::default())
}

pub fn real_roots_with(u: &UniPolynomial<Rational>, cfg: &RootConfig) -> Vec<RealRoot> {
    assert!(!u.is_zero(), "real_roots of the zero polynomial");
    struct Pending {
        interval: (Rational, Rational),
        mult: usize,
        factor: UniPolynomial<Rational>,
    }
    let mut roots: Vec<Pending> = Vec::new();
    for (factor, mult) in u.squarefree_decomposition() {
        for interval in isolate_squarefree(&factor, cfg) {
            roots.push(Pending {
                interval,
                mult,
                factor: factor.clone(),
            });
        }
    }
    roots.sort_by(|a, b| a.interval.0.cmp(&b.interval.0));
    // roots of coprime factors are distinct reals; shrink intervals until
    // pairwise disjoint
    loop {
        let mut overlapped = None;
        for k in 1..roots.len() {
            if roots[k].interval.0 < roots[k - 1].interval.1 {
                overlapped = Some(k);
                break;
            }
        }
        match overlapped {
            None => break,
            Some(k) => {
                let w0 = &roots[k - 1].interval.1 - &roots[k - 1].interval.0;
                let w1 = &roots[k].interval.1 - &roots[k].interval.0;
                let tighter = RootConfig {
                    width: w0.min(w1) / Rational::from_integer(4.into()),
                };
                for idx in [k - 1, k] {
                    let refined =
                        refine_in(&roots[idx].factor, roots[idx].interval.clone(), &tighter);
                    roots[idx].interval = refined;
                }
                roots.sort_by(|a, b| a.interval.0.cmp(&b.interval.0));
            }
        }
    }
    roots
        .into_iter()
        .map(|p| RealRoot {
            interval: p.interval,
            multiplicity: p.mult,
        })
        .collect()
}

/// Isolating intervals (lo, hi] of a square-free polynomial, refined to the
/// configured width.
fn isolate_squarefree(
    p: &UniPolynomial<Rational>,
    cfg: &RootConfig,
) -> Vec<(Rational, Rational)> {
    if p.degree().map_or(true, |d| d == 0) {
        return Vec::new();
    }
    if p.degree() == Some(1) {
        let root = -(p.coeff(0) / p.coeff(1));
        let half = &cfg.width / Rational::from_integer(2.into());
        return vec![(&root - &half, &root + &half)];
    }
    let chain = SturmChain::new(p);
    let bound = p.root_bound();
    let mut out = Vec::new();
    let mut stack = vec![(-&bound, bound.clone())];
    while let Some((lo, hi)) = stack.pop() {
        let n = chain.count(&lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push(refine_bisect(&chain, lo, hi, cfg));
            continue;
        }
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn refine_bisect(
    chain: &SturmChain,
    mut lo: Rational,
    mut hi: Rational,
    cfg: &RootConfig,
) -> (Rational, Rational) {
    while &hi - &lo > cfg.width {
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        if chain.count(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

/// Narrow an existing isolating interval of a square-free polynomial by sign
/// bisection (cheaper than re-running the chain).
pub fn refine_in(
    p: &UniPolynomial<Rational>,
    (mut lo, mut hi): (Rational, Rational),
    cfg: &RootConfig,
) -> (Rational, Rational) {
    let flo = p.eval(&lo);
    if flo.is_zero() {
        // root sits at the open end; fall back to chain-based refinement
        let chain = SturmChain::new(p);
        return refine_bisect(&chain, lo, hi, cfg);
    }
    let lo_positive = flo.is_positive();
    while &hi - &lo > cfg.width {
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        let fm = p.eval(&mid);
        if fm.is_zero() {
            let quarter = (&hi - &lo) / Rational::from_integer(4.into());
            lo = &mid - &quarter;
            hi = &mid + &quarter;
            if (&hi - &lo) <= cfg.width {
                break;
            }
            continue;
        }
        if fm.is_positive() == lo_positive {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// Convenience: the real roots of a polynomial given by f64 midpoint values.
pub fn real_root_values(u: &UniPolynomial<Rational>) -> Vec<f64> {
    real_roots(u).iter().map(|r| r.value()).collect()
}

/// All complex roots of an f64 polynomial by Durand–Kerner iteration.
/// Used only to seed Newton refinement; never trusted on its own.
pub fn complex_roots_f64(u: &UniPolynomial<f64>) -> Vec<(f64, f64)> {
    let d = match u.degree() {
        None | Some(0) => return Vec::new(),
        Some(d) => d,
    };
    let lead = *u.leading().unwrap();
    let monic: Vec<f64> = u.coeffs().iter().map(|c| c / lead).collect();
    let eval = |re: f64, im: f64| -> (f64, f64) {
        let (mut ar, mut ai) = (0.0f64, 0.0f64);
        for c in monic.iter().rev() {
            let nr = ar * re - ai * im + c;
            let ni = ar * im + ai * re;
            ar = nr;
            ai = ni;
        }
        (ar, ai)
    };
    // deterministic non-real starting spread
    let mut roots: Vec<(f64, f64)> = (0..d)
        .map(|k| {
            let ang = 0.4 + 2.0 * std::f64::consts::PI * (k as f64) / (d as f64);
            (1.3 * ang.cos(), 1.3 * ang.sin())
        })
        .collect();
    for _ in 0..200 {
        let mut max_step = 0.0f64;
        for i in 0..d {
            let (pi_r, pi_i) = eval(roots[i].0, roots[i].1);
            let (mut dr, mut di) = (1.0f64, 0.0f64);
            for j in 0..d {
                if i == j {
                    continue;
                }
                let (er, ei) = (roots[i].0 - roots[j].0, roots[i].1 - roots[j].1);
                let nr = dr * er - di * ei;
                let ni = dr * ei + di * er;
                dr = nr;
                di = ni;
            }
            let denom = dr * dr + di * di;
            if denom < 1e-300 {
                continue;
            }
            let sr = (pi_r * dr + pi_i * di) / denom;
            let si = (pi_i * dr - pi_r * di) / denom;
            roots[i].0 -= sr;
            roots[i].1 -= si;
            max_step = max_step.max(sr.hypot(si));
        }
        if max_step < 1e-13 {
            break;
        }
    }
    roots
}

/// Count sign changes of u on the isolating interval; used by tests to check
/// certification.
pub fn interval_sign_change(u: &UniPolynomial<Rational>, r: &RealRoot) -> bool {
    let lo = u.eval(&r.interval.0);
    let hi = u.eval(&r.interval.1);
    if hi.is_zero() {
        return true;
    }
    lo.is_positive() != hi.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn p(coeffs: &[i64]) -> UniPolynomial<Rational> {
        UniPolynomial::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn quadratic_pm_one() {
        let roots = real_roots(&p(&[-1, 0, 1]));
        assert_eq!(roots.len(), 2);
        assert!((roots[0].value() + 1.0).abs() < 1e-12);
        assert!((roots[1].value() - 1.0).abs() < 1e-12);
        assert!(roots.iter().all(|r| r.multiplicity == 1));
    }

    #[test]
    fn double_root() {
        // (x-2)^2
        let roots = real_roots(&p(&[4, -4, 1]));
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].multiplicity, 2);
        assert!((roots[0].value() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn sqrt_half() {
        // 2x^2 - 1 -> ±1/√2 ≈ ±0.70711 (closed form oracle)
        let roots = real_roots(&p(&[-1, 0, 2]));
        assert_eq!(roots.len(), 2);
        let expect = 0.5f64.sqrt();
        assert!((roots[0].value() + expect).abs() < 1e-10);
        assert!((roots[1].value() - expect).abs() < 1e-10);
    }

    #[test]
    fn no_real_roots() {
        let roots = real_roots(&p(&[1, 0, 1]));
        assert!(roots.is_empty());
    }

    #[test]
    fn rational_root_at_bisection_point() {
        // roots at 0 and ±2: bisection midpoints hit 0 exactly
        let f = p(&[0, -4, 0, 1]); // x(x^2 - 4)
        let roots = real_roots(&f);
        assert_eq!(roots.len(), 3);
        let vals: Vec<f64> = roots.iter().map(|r| r.value()).collect();
        assert!((vals[0] + 2.0).abs() < 1e-10);
        assert!(vals[1].abs() < 1e-10);
        assert!((vals[2] - 2.0).abs() < 1e-10);
    }

    #[test]
    fn multiplicity_sum_and_sign_change() {
        // (x-1)^3 (x+3) degree 4
        let f = p(&[-1, 1]).mul(&p(&[-1, 1])).mul(&p(&[-1, 1])).mul(&p(&[3, 1]));
        let roots = real_roots(&f);
        let total: usize = roots.iter().map(|r| r.multiplicity).sum();
        assert!(total <= 4);
        assert_eq!(total, 4);
        for r in &roots {
            if r.multiplicity % 2 == 1 {
                assert!(interval_sign_change(&f, r));
            } else {
                assert!(interval_sign_change(&f.squarefree_part(), r));
            }
        }
    }
}
