//! Random polynomials with i.i.d. coefficients and the statistics of their zeros.
//!
//! - [`polygen`] samples coefficient vectors from named laws with
//!   reproducible per-trial streams.
//! - [`rootsolve`] finds all complex zeros (Aberth–Ehrlich) and checks them
//!   against coefficient identities.
//! - [`zerostats`] turns zeros into radial, angular and box counts, Weyl
//!   sums and a Kolmogorov–Smirnov distance.
//! - [`realroots`] counts real zeros (certified from inclusion disks, with an
//!   exact Sturm fallback) and evaluates the Budan–Fourier bound.
//! - [`experiments`] runs Monte Carlo sweeps and the acceptance checks.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod experiments;
pub mod polygen;
pub mod realroots;
pub mod rootsolve;
pub mod zerostats;

pub use error::{Error, Result};
pub use polygen::{CoeffDistribution, CoefficientVector, SeedPath};
pub use realroots::RealPoly;
pub use rootsolve::{ExtComplex, Polynomial, RootSet};
pub use zerostats::ZeroMeasure;
