//! Scalar abstraction for polynomial coefficients.
//!
//! All algebra runs over a field-like scalar. The exact instantiation is
//! [`Rational`] (arbitrary-precision rationals), used everywhere a result
//! feeds an integer identity (resultants, Sturm chains, index audits).
//! The `f64` instantiation backs the numeric paths: sampling, contouring
//! and orbit integration.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::ops::{Div, Neg, Sub};

/// Exact rational scalar used by the algebraic core.
pub type Rational = BigRational;

/// Field-like coefficient scalar.
pub trait Scalar:
    Clone
    + PartialEq
    + std::fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
{
    fn from_rational(r: &Rational) -> Self;
    fn to_f64(&self) -> f64;
}

impl Scalar for f64 {
    fn from_rational(r: &Rational) -> Self {
        rational_to_f64(r)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn to_f64(&self) -> f64 {
        rational_to_f64(self)
    }
}

/// Convert without overflowing on large numerators/denominators: scale both
/// sides down by a common power of two first.
pub fn rational_to_f64(r: &Rational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    if let Some(v) = ToPrimitive::to_f64(r) {
        if v.is_finite() {
            return v;
        }
    }
    let num = r.numer();
    let den = r.denom();
    let shift = (num.bits() as i64 - den.bits() as i64).max(0) as u64;
    let scaled_den: BigInt = den << shift;
    let approx =
        ToPrimitive::to_f64(&BigRational::new(num.clone(), scaled_den)).unwrap_or(0.0);
    approx * 2f64.powi(shift.min(16_000) as i32)
}

/// Shorthand constructors used across the crate.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact conversion of an `f64` (must be finite).
pub fn rational_from_f64(v: f64) -> Rational {
    Rational::from_float(v).expect("finite float")
}

/// Round to the nearest multiple of 2^-bits. Keeps Newton iterates from
/// accumulating unbounded denominators.
pub fn round_dyadic(r: &Rational, bits: u32) -> Rational {
    let scale = BigInt::one() << bits;
    let scaled = r * Rational::from_integer(scale.clone());
    let rounded = round_to_integer(&scaled);
    Rational::new(rounded, scale)
}

/// The rational with the smallest denominator in the closed interval
/// [lo, hi] (ties broken toward smaller numerator magnitude).
pub fn simplest_rational_in(lo: &Rational, hi: &Rational) -> Rational {
    assert!(lo <= hi);
    if lo <= &Rational::zero() && &Rational::zero() <= hi {
        return Rational::zero();
    }
    if hi < &Rational::zero() {
        return -simplest_positive(&-hi.clone(), &-lo.clone());
    }
    simplest_positive(lo, hi)
}

fn simplest_positive(lo: &Rational, hi: &Rational) -> Rational {
    // 0 < lo <= hi
    let n = lo.ceil();
    if &n <= hi {
        return n;
    }
    let a = lo.floor();
    let inv = simplest_positive(
        &(Rational::one() / (hi - &a)),
        &(Rational::one() / (lo - &a)),
    );
    a + Rational::one() / inv
}

fn round_to_integer(r: &Rational) -> BigInt {
    let (num, den) = (r.numer(), r.denom());
    let (q, rem) = num_integer::Integer::div_rem(num, den);
    let twice: BigInt = rem.abs() * 2;
    if twice >= *den {
        if num.sign() == Sign::Minus {
            q - 1
        } else {
            q + 1
        }
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dyadic_rounding_is_close() {
        let x = ratio(1, 3);
        let r = round_dyadic(&x, 20);
        let err = (&r - &x).abs();
        assert!(err < ratio(1, 1 << 20));
    }

    #[test]
    fn huge_rational_to_f64() {
        let big = Rational::from_integer(BigInt::from(10).pow(400));
        assert!(rational_to_f64(&big).is_infinite() || rational_to_f64(&big) > 1e300);
        let tiny = Rational::new(BigInt::one(), BigInt::from(10).pow(400));
        let v = rational_to_f64(&tiny);
        assert!(v >= 0.0 && v < 1e-300);
    }
}
