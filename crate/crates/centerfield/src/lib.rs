//! Analysis of planar real polynomial vector fields.
//!
//! The crate locates and classifies the finite and infinite critical points
//! of a field (f, g), computes indices by the winding method, audits the
//! index identity 2·Σf + Σinf = 2 and the Bézout count, bounds and certifies
//! center configurations, derives first integrals of cubic Kolmogorov
//! systems, and renders phase portraits on the Poincaré disk as SVG.
//!
//! Coefficient arithmetic is generic over the scalar: the exact instantiation
//! uses arbitrary-precision rationals and backs every integer identity; the
//! `f64` instantiation backs sampling and rendering.

pub mod scalar;

pub mod poly;

pub mod field;

pub mod classify;

pub mod hamiltonian;

pub mod config;

pub mod kolmogorov;

pub mod constructors;

pub mod portrait;

pub mod report;

pub mod verify;

pub use scalar::{rat, ratio, Rational};

/// Exact bivariate polynomial: the carrier for every field component,
/// Hamiltonian and first-integral part.
pub type BiPoly = poly::BiPolynomial<Rational>;
/// Exact univariate polynomial (resultants, chart restrictions).
pub type UniPoly = poly::UniPolynomial<Rational>;
/// Exact homogeneous form.
pub type HomoPoly = poly::HomogeneousPoly<Rational>;
/// Numeric instantiations used by sampling, contouring and rendering.
pub type BiPolyF = poly::BiPolynomial<f64>;
pub type UniPolyF = poly::UniPolynomial<f64>;
