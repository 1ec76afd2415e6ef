//! Numerical laboratory for fractional diffusion: Mittag-Leffler and Wright
//! functions, L1 and Galerkin forward solvers, discrete forward maps and
//! their singular spectra, and a handful of inverse-problem drivers.

pub mod error;
pub mod inverse_lab;
pub mod numcore;
pub mod sfd_solver;
pub mod specfun;
pub mod tfd_solver;

pub use error::{FracError, Result};

/// Complex scalar used for Mittag-Leffler arguments, zeros and eigenvalues.
pub type ComplexValue = num_complex::Complex64;
