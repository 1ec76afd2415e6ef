//! Special functions: Gamma, Mittag-Leffler (with derivative and zeros),
//! Wright, and the fundamental solution of time-fractional diffusion.

mod gamma;
mod mittag_leffler;
mod wright;
mod zeros;

pub use gamma::{gamma, ln_gamma, rgamma, sin_pi};
pub use mittag_leffler::{ml, ml_derivative, ml_real, regimes, MlPolicy};
pub use wright::{fundamental_solution, wright_neg, WrightParams};
pub use zeros::ml_zeros;
