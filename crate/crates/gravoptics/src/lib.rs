//! Gravitational optics from Fermat's principle.
//!
//! A static gravitational field acts on light like a refractive medium
//! whose index encodes the potential. This crate builds that analogy out
//! into a small numerics library:
//!
//! - [`medium`]: index-of-refraction laws and conic orbit elements;
//! - [`trajectories`]: conics, anomalies, turning points, sampled ray
//!   paths and their conserved quantities;
//! - [`eikonal`]: closed-form optical phase functions for every index law,
//!   plus the tractrix geometry of the shadow branch;
//! - [`asymptotics`]: WKB/Debye phases and amplitudes, a high-precision
//!   reference Bessel evaluator, and Hankel-integral saddle points;
//! - [`relativity`]: radar time delay, light deflection and perihelion
//!   advance with reference figures;
//! - [`variational`]: a discrete Fermat-functional minimizer that serves
//!   as a brute-force cross-check on the analytic trajectories;
//! - [`oracle`]: direct quadrature routes for everything the closed forms
//!   claim, kept separate from the implementations they validate;
//! - [`acceptance`]: the end-to-end verification suite behind
//!   `report-all` and the `acceptance` test target.
//!
//! All internal math is in gravitational units (c = G = 1); conversions
//! live in [`units`].

pub mod acceptance;
pub mod asymptotics;
pub mod eikonal;
mod error;
pub mod medium;
pub mod oracle;
pub mod quadrature;
pub mod relativity;
pub mod roots;
pub mod trajectories;
pub mod units;
pub mod variational;

pub use error::{Error, Result};
pub use medium::{orbit_elements, MediumLaw, MediumModel, OrbitElements, RadialInterval};
pub use trajectories::{PathKind, RayPath};
