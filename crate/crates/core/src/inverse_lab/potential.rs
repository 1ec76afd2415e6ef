use crate::error::{FracError, Result};
use crate::numcore::Grid1D;
use crate::tfd_solver::{caputo_l1_final, solve_core, BcCore, SpaceTimeSolution};

const DEFAULT_G_MIN: f64 = 1e-6;

/// Recovery of `q` in `∂_t^α u - u_xx + q u = 0` with homogeneous Neumann
/// data and known initial state from the final-time data `g = u(·, T)`.
#[derive(Debug, Clone)]
pub struct PotentialProblem {
    pub alpha: f64,
    pub final_time: f64,
    pub grid: Grid1D,
    pub n_steps: usize,
    pub initial: Vec<f64>,
    pub data: Vec<f64>,
    pub g_min: f64,
}

impl PotentialProblem {
    pub fn new(alpha: f64, final_time: f64, grid: Grid1D, n_steps: usize, initial: Vec<f64>, data: Vec<f64>) -> Self {
        Self { alpha, final_time, grid, n_steps, initial, data, g_min: DEFAULT_G_MIN }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PotentialRun {
    /// `q^0, q^1, ...` at the nodes.
    pub iterates: Vec<Vec<f64>>,
    /// Relative L2 error of each iterate when a reference potential is given.
    pub errors: Option<Vec<f64>>,
}

/// `1 + 2x` on `[0, 1/2]`, `1 + 2(1 - x)` on `(1/2, 1]`.
pub fn tent_potential(x: f64) -> f64 {
    if x <= 0.5 {
        1.0 + 2.0 * x
    } else {
        1.0 + 2.0 * (1.0 - x)
    }
}

fn neumann_solve(
    alpha: f64,
    grid: &Grid1D,
    final_time: f64,
    n_steps: usize,
    q: &[f64],
    v: &[f64],
) -> Result<SpaceTimeSolution> {
    let zero = |_: usize| 0.0;
    solve_core(alpha, grid, final_time, n_steps, q, None, v, &BcCore::Neumann(&zero), &BcCore::Neumann(&zero))
}

/// Final-time data of the forward problem with potential `q`.
pub fn synthetic_final_data(
    alpha: f64,
    final_time: f64,
    grid: &Grid1D,
    n_steps: usize,
    q: &[f64],
    v: &[f64],
) -> Result<Vec<f64>> {
    Ok(neumann_solve(alpha, grid, final_time, n_steps, q, v)?.final_state().to_vec())
}

/// Trapezoidal relative L2 error of `q` against `q_ref`.
pub fn relative_l2_error(q: &[f64], q_ref: &[f64]) -> f64 {
    let n = q.len();
    let w = |i: usize| if i == 0 || i + 1 == n { 0.5 } else { 1.0 };
    let (mut num, mut den) = (0.0, 0.0);
    for i in 0..n {
        num += w(i) * (q[i] - q_ref[i]).powi(2);
        den += w(i) * q_ref[i].powi(2);
    }
    (num / den).sqrt()
}

/// `g''` with ghost values mirrored across both Neumann ends.
fn second_derivative(g: &[f64], h: f64) -> Vec<f64> {
    let n = g.len() - 1;
    let h2 = h * h;
    (0..=n)
        .map(|i| {
            let l = if i == 0 { g[1] } else { g[i - 1] };
            let r = if i == n { g[n - 1] } else { g[i + 1] };
            (l - 2.0 * g[i] + r) / h2
        })
        .collect()
}

/// Iterates `q^{k+1} = (g'' - ∂_t^α u(·, T; q^k)) / g` from `q0`.
pub fn potential_fixed_point(
    p: &PotentialProblem,
    q0: &[f64],
    iterations: usize,
    truth: Option<&[f64]>,
) -> Result<PotentialRun> {
    let nn = p.grid.n_nodes();
    for (name, len) in [("data", p.data.len()), ("initial data", p.initial.len()), ("initial guess", q0.len())] {
        if len != nn {
            return Err(FracError::Shape(format!("{name} has {len} values for {nn} nodes")));
        }
    }
    if let Some(t) = truth {
        if t.len() != nn {
            return Err(FracError::Shape(format!("reference potential has {} values for {nn} nodes", t.len())));
        }
    }
    if let Some((i, g)) = p.data.iter().enumerate().find(|(_, g)| g.abs() < p.g_min) {
        return Err(FracError::SmallDivisor { index: i, value: *g });
    }
    let g2 = second_derivative(&p.data, p.grid.h());
    let mut iterates = vec![q0.to_vec()];
    for _ in 0..iterations {
        let q = iterates.last().expect("seeded");
        let sol = neumann_solve(p.alpha, &p.grid, p.final_time, p.n_steps, q, &p.initial)?;
        let d = caputo_l1_final(&sol, p.alpha)?;
        let next: Vec<f64> = (0..nn).map(|i| (g2[i] - d[i]) / p.data[i]).collect();
        if next.iter().any(|v| !v.is_finite()) {
            return Err(FracError::NonFinite("potential update"));
        }
        iterates.push(next);
    }
    let errors = truth.map(|t| iterates.iter().map(|q| relative_l2_error(q, t)).collect());
    Ok(PotentialRun { iterates, errors })
}
