//! Grids, dense and banded linear algebra, singular value decomposition,
//! Gauss quadrature rules and numerical Laplace inversion.

mod csv;
mod grid;
mod linalg;
mod matrix;
pub mod quadrature;
mod svd;
mod talbot;

pub use self::csv::{fmt17, write_csv, write_matrix_csv};
pub use grid::Grid1D;
pub use linalg::{tridiag_solve, LuFactorization};
pub use matrix::DenseMatrix;
pub use svd::{svd, SvdResult, DEFAULT_RANK_TOL};
pub use talbot::{talbot_invert, DEFAULT_TALBOT_NODES};
