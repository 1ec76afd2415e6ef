//! Space-fractional diffusion `u_t - ∂_x^β u + q u = f` (left Caputo
//! derivative, `1 < β < 2`) on `(0, 1)`: Petrov-Galerkin P1 elements with
//! analytic Riemann-Liouville half-derivatives, backward Euler in time.

mod evolve;
mod fem;

pub use evolve::{evolve_sfd, map_backward_space, map_sideways_space, CauchySite, SfdProblem};
pub use fem::{fem_assemble, steady_solve, FemSystem};
