//! Time-fractional diffusion `∂_t^α u - u_xx + q u = f` on `(0, 1)`: L1 scheme
//! in time, central differences in space, and the discrete forward maps of
//! the backward, sideways and inverse source problems.

mod maps;
mod solver;

pub use maps::{map_backward, map_sideways, map_source_space, map_source_time, sideways_kernel, SourceData};
pub use solver::{
    caputo_l1_final, l1_weights, solve_tfd, Boundary, L1Weights, SpaceTimeFn, SpaceTimeSolution, TfdProblem,
    TimeFn,
};
pub(crate) use solver::{solve_core, BcCore};
