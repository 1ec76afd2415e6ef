use rayon::prelude::*;

use super::solver::{solve_core, BcCore, SpaceTimeSolution};
use crate::error::{FracError, Result};
use crate::numcore::{DenseMatrix, Grid1D};
use crate::specfun::{wright_neg, WrightParams};

/// Which observation the time-dependent source map produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SourceData {
    FinalTime,
    FluxAt0,
}

fn zero(_: usize) -> f64 {
    0.0
}

fn delta(j: usize) -> impl Fn(usize) -> f64 + Sync {
    move |k| if k == j { 1.0 } else { 0.0 }
}

fn interior_final(sol: &SpaceTimeSolution) -> Vec<f64> {
    let u = sol.final_state();
    u[1..u.len() - 1].to_vec()
}

/// `-u_x(0, t_k)` for `k = 1..=K`.
fn flux_trace(sol: &SpaceTimeSolution) -> Vec<f64> {
    (1..sol.values.len()).map(|k| -sol.flux_left(k)).collect()
}

fn assemble<F>(rows: usize, cols: usize, column: F) -> Result<DenseMatrix>
where
    F: Fn(usize) -> Result<Vec<f64>> + Sync,
{
    let columns: Vec<Vec<f64>> = (0..cols).into_par_iter().map(&column).collect::<Result<_>>()?;
    let m = DenseMatrix::from_columns(&columns)?;
    debug_assert_eq!(m.rows(), rows);
    Ok(m)
}

/// Initial data (interior hat functions) to final-time interior values.
pub fn map_backward(alpha: f64, grid: &Grid1D, final_time: f64, n_steps: usize) -> Result<DenseMatrix> {
    let nn = grid.n_nodes();
    let q = vec![0.0; nn];
    assemble(nn - 2, nn - 2, |c| {
        let mut v = vec![0.0; nn];
        v[c + 1] = 1.0;
        let s = solve_core(
            alpha,
            grid,
            final_time,
            n_steps,
            &q,
            None,
            &v,
            &BcCore::Dirichlet(&zero),
            &BcCore::Dirichlet(&zero),
        )?;
        Ok(interior_final(&s))
    })
}

/// Dirichlet data at `x = 1` (time hats at `t_1..t_K`) to the flux trace at `x = 0`.
pub fn map_sideways(alpha: f64, grid: &Grid1D, final_time: f64, n_steps: usize) -> Result<DenseMatrix> {
    let nn = grid.n_nodes();
    let q = vec![0.0; nn];
    let v = vec![0.0; nn];
    assemble(n_steps, n_steps, |c| {
        let g = delta(c + 1);
        let s = solve_core(
            alpha,
            grid,
            final_time,
            n_steps,
            &q,
            None,
            &v,
            &BcCore::Dirichlet(&zero),
            &BcCore::Dirichlet(&g),
        )?;
        Ok(flux_trace(&s))
    })
}

/// Space-only source (interior hats) to final-time interior values.
pub fn map_source_space(alpha: f64, grid: &Grid1D, final_time: f64, n_steps: usize) -> Result<DenseMatrix> {
    let nn = grid.n_nodes();
    let q = vec![0.0; nn];
    let v = vec![0.0; nn];
    assemble(nn - 2, nn - 2, |c| {
        let f = move |i: usize, _k: usize| if i == c + 1 { 1.0 } else { 0.0 };
        let s = solve_core(
            alpha,
            grid,
            final_time,
            n_steps,
            &q,
            Some(&f),
            &v,
            &BcCore::Dirichlet(&zero),
            &BcCore::Dirichlet(&zero),
        )?;
        Ok(interior_final(&s))
    })
}

/// Source `qx(x) p(t)` with `p` a time hat at `t_j`, `j = 1..=K`, to the
/// chosen observation.
pub fn map_source_time(
    alpha: f64,
    grid: &Grid1D,
    final_time: f64,
    n_steps: usize,
    qx: &[f64],
    data: SourceData,
) -> Result<DenseMatrix> {
    let nn = grid.n_nodes();
    if qx.len() != nn {
        return Err(FracError::Shape(format!("spatial profile has {} values for {nn} nodes", qx.len())));
    }
    let q = vec![0.0; nn];
    let v = vec![0.0; nn];
    let rows = match data {
        SourceData::FinalTime => nn - 2,
        SourceData::FluxAt0 => n_steps,
    };
    assemble(rows, n_steps, |c| {
        let f = move |i: usize, k: usize| if k == c + 1 { qx[i] } else { 0.0 };
        let s = solve_core(
            alpha,
            grid,
            final_time,
            n_steps,
            &q,
            Some(&f),
            &v,
            &BcCore::Dirichlet(&zero),
            &BcCore::Dirichlet(&zero),
        )?;
        Ok(match data {
            SourceData::FinalTime => interior_final(&s),
            SourceData::FluxAt0 => flux_trace(&s),
        })
    })
}

/// Half-line sideways kernel `R_α(s) = s^{-1} W_{-α/2,0}(-L s^{-α/2})`, the
/// inverse Laplace transform of `exp(-L z^{α/2})`.
pub fn sideways_kernel(alpha: f64, l: f64, s: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(FracError::Domain(format!("alpha must lie in (0, 1], got {alpha}")));
    }
    if !(l > 0.0 && l.is_finite()) {
        return Err(FracError::Domain(format!("distance L must be > 0, got {l}")));
    }
    if !(s > 0.0 && s.is_finite()) {
        return Err(FracError::Domain(format!("kernel argument s must be > 0, got {s}")));
    }
    let nu = alpha / 2.0;
    let x = l * s.powf(-nu);
    if alpha == 1.0 {
        // W_{-1/2,0}(-x) = x e^{-x²/4} / (2√π).
        return Ok(x * (-x * x / 4.0).exp() / (2.0 * std::f64::consts::PI.sqrt()) / s);
    }
    let p = WrightParams::new(-nu, 0.0)?;
    Ok(wright_neg(&p, x)? / s)
}
