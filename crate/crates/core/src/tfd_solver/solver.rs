use crate::error::{FracError, Result};
use crate::numcore::{tridiag_solve, DenseMatrix, Grid1D};
use crate::specfun::gamma;

pub type TimeFn<'a> = Box<dyn Fn(f64) -> f64 + Send + Sync + 'a>;
pub type SpaceTimeFn<'a> = Box<dyn Fn(f64, f64) -> f64 + Send + Sync + 'a>;

/// Boundary condition at one end: prescribed value or prescribed `u_x`.
pub enum Boundary<'a> {
    Dirichlet(TimeFn<'a>),
    Neumann(TimeFn<'a>),
}

impl Boundary<'_> {
    pub fn zero_dirichlet() -> Self {
        Boundary::Dirichlet(Box::new(|_| 0.0))
    }

    pub fn zero_neumann() -> Self {
        Boundary::Neumann(Box::new(|_| 0.0))
    }
}

/// Full description of a time-fractional initial-boundary value problem.
pub struct TfdProblem<'a> {
    pub alpha: f64,
    pub grid: Grid1D,
    pub final_time: f64,
    pub n_steps: usize,
    /// Potential at every node (boundary values are used only with Neumann data).
    pub potential: Vec<f64>,
    pub source: Option<SpaceTimeFn<'a>>,
    pub initial: Vec<f64>,
    pub left: Boundary<'a>,
    pub right: Boundary<'a>,
}

impl<'a> TfdProblem<'a> {
    /// `q = 0`, `f = 0`, homogeneous Dirichlet data.
    pub fn homogeneous(alpha: f64, grid: Grid1D, final_time: f64, n_steps: usize, initial: Vec<f64>) -> Self {
        Self {
            alpha,
            grid,
            final_time,
            n_steps,
            potential: vec![0.0; grid.n_nodes()],
            source: None,
            initial,
            left: Boundary::zero_dirichlet(),
            right: Boundary::zero_dirichlet(),
        }
    }
}

/// L1 weights `b_j = ((j+1)^{1-α} - j^{1-α}) / Γ(2-α)`, `j < K`.
#[derive(Debug, Clone, PartialEq)]
pub struct L1Weights {
    pub alpha: f64,
    pub b: Vec<f64>,
}

pub fn l1_weights(alpha: f64, k: usize) -> Result<L1Weights> {
    check_alpha(alpha)?;
    if k == 0 {
        return Err(FracError::Domain("L1 weights need K >= 1".into()));
    }
    if alpha == 1.0 {
        let mut b = vec![0.0; k];
        b[0] = 1.0;
        return Ok(L1Weights { alpha, b });
    }
    let e = 1.0 - alpha;
    let g = gamma(2.0 - alpha)?;
    let b = (0..k)
        .map(|j| {
            let j = j as f64;
            ((j + 1.0).powf(e) - j.powf(e)) / g
        })
        .collect();
    Ok(L1Weights { alpha, b })
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(FracError::Domain(format!("fractional order alpha must lie in (0, 1], got {alpha}")));
    }
    Ok(())
}

/// Nodal values at every time level.
#[derive(Debug, Clone, PartialEq)]
pub struct SpaceTimeSolution {
    pub grid: Grid1D,
    pub times: Vec<f64>,
    /// `values[k][i]` is the value at node `i` and time level `k`.
    pub values: Vec<Vec<f64>>,
}

impl SpaceTimeSolution {
    pub fn final_state(&self) -> &[f64] {
        self.values.last().expect("at least the initial level")
    }

    /// `u_x(0, t_k)` by the one-sided second-order formula.
    pub fn flux_left(&self, k: usize) -> f64 {
        let u = &self.values[k];
        (-3.0 * u[0] + 4.0 * u[1] - u[2]) / (2.0 * self.grid.h())
    }

    /// `u_x(1, t_k)` by the one-sided second-order formula.
    pub fn flux_right(&self, k: usize) -> f64 {
        let u = &self.values[k];
        let n = u.len() - 1;
        (3.0 * u[n] - 4.0 * u[n - 1] + u[n - 2]) / (2.0 * self.grid.h())
    }

    /// Matrix with one row per node and one column per time level.
    pub fn to_matrix(&self) -> DenseMatrix {
        let mut m = DenseMatrix::zeros(self.grid.n_nodes(), self.values.len());
        for (k, level) in self.values.iter().enumerate() {
            for (i, v) in level.iter().enumerate() {
                m[(i, k)] = *v;
            }
        }
        m
    }
}

/// Boundary data as a function of the time level.
pub(crate) enum BcCore<'a> {
    Dirichlet(&'a (dyn Fn(usize) -> f64 + Sync)),
    Neumann(&'a (dyn Fn(usize) -> f64 + Sync)),
}

/// Scheme on index-based samplers: `src(i, k)` is `f(x_i, t_k)`.
#[allow(clippy::too_many_arguments)]
pub(crate) fn solve_core(
    alpha: f64,
    grid: &Grid1D,
    final_time: f64,
    n_steps: usize,
    q: &[f64],
    src: Option<&(dyn Fn(usize, usize) -> f64 + Sync)>,
    initial: &[f64],
    left: &BcCore,
    right: &BcCore,
) -> Result<SpaceTimeSolution> {
    check_alpha(alpha)?;
    let nn = grid.n_nodes();
    if nn < 3 {
        return Err(FracError::Domain("the scheme needs at least 2 cells".into()));
    }
    if !(final_time > 0.0 && final_time.is_finite()) {
        return Err(FracError::Domain(format!("final time must be > 0, got {final_time}")));
    }
    if n_steps == 0 {
        return Err(FracError::Domain("n_steps must be >= 1".into()));
    }
    if q.len() != nn || initial.len() != nn {
        return Err(FracError::Shape(format!(
            "potential/initial lengths {}/{} for {nn} nodes",
            q.len(),
            initial.len()
        )));
    }
    let n = nn - 1;
    let h = grid.h();
    let h2 = 1.0 / (h * h);
    let tau = final_time / n_steps as f64;
    let w = l1_weights(alpha, n_steps)?;
    let b = &w.b;
    let c = tau.powf(-alpha);
    let lo = if matches!(left, BcCore::Neumann(_)) { 0 } else { 1 };
    let hi = if matches!(right, BcCore::Neumann(_)) { n } else { n - 1 };
    let m = hi - lo + 1;

    // Fixed tridiagonal operator over the unknown nodes lo..=hi.
    let mut sub = vec![-h2; m - 1];
    let mut sup = vec![-h2; m - 1];
    let diag: Vec<f64> = (lo..=hi).map(|i| c * b[0] + 2.0 * h2 + q[i]).collect();
    if lo == 0 {
        sup[0] = -2.0 * h2;
    }
    if hi == n {
        sub[m - 2] = -2.0 * h2;
    }

    let times: Vec<f64> = (0..=n_steps).map(|k| if k == n_steps { final_time } else { k as f64 * tau }).collect();
    let mut values: Vec<Vec<f64>> = Vec::with_capacity(n_steps + 1);
    values.push(initial.to_vec());
    let mut rhs = vec![0.0; m];
    for k in 1..=n_steps {
        // Memory: b_{k-1} u^0 - Σ_{j=1}^{k-1} (b_j - b_{j-1}) u^{k-j}.
        for (r, i) in rhs.iter_mut().zip(lo..=hi) {
            *r = b[k - 1] * values[0][i];
        }
        for j in 1..k {
            let cj = b[j] - b[j - 1];
            let level = &values[k - j];
            for (r, i) in rhs.iter_mut().zip(lo..=hi) {
                *r -= cj * level[i];
            }
        }
        for (r, i) in rhs.iter_mut().zip(lo..=hi) {
            *r *= c;
            if let Some(f) = src {
                *r += f(i, k);
            }
        }
        let mut u = vec![0.0; nn];
        match left {
            BcCore::Dirichlet(g) => {
                u[0] = g(k);
                rhs[0] += h2 * u[0];
            }
            BcCore::Neumann(g) => rhs[0] -= 2.0 * g(k) / h,
        }
        match right {
            BcCore::Dirichlet(g) => {
                u[n] = g(k);
                rhs[m - 1] += h2 * u[n];
            }
            BcCore::Neumann(g) => rhs[m - 1] += 2.0 * g(k) / h,
        }
        let x = tridiag_solve(&sub, &diag, &sup, &rhs)?;
        u[lo..=hi].copy_from_slice(&x);
        values.push(u);
    }
    Ok(SpaceTimeSolution { grid: *grid, times, values })
}

/// Solves the problem, returning all time levels.
pub fn solve_tfd(p: &TfdProblem) -> Result<SpaceTimeSolution> {
    let nodes = p.grid.nodes();
    let tau = p.final_time / p.n_steps.max(1) as f64;
    let t = |k: usize| if k == p.n_steps { p.final_time } else { k as f64 * tau };
    let src = p.source.as_ref().map(|f| move |i: usize, k: usize| f(nodes[i], t(k)));
    let lf = |k: usize| match &p.left {
        Boundary::Dirichlet(g) | Boundary::Neumann(g) => g(t(k)),
    };
    let rf = |k: usize| match &p.right {
        Boundary::Dirichlet(g) | Boundary::Neumann(g) => g(t(k)),
    };
    let left = match p.left {
        Boundary::Dirichlet(_) => BcCore::Dirichlet(&lf),
        Boundary::Neumann(_) => BcCore::Neumann(&lf),
    };
    let right = match p.right {
        Boundary::Dirichlet(_) => BcCore::Dirichlet(&rf),
        Boundary::Neumann(_) => BcCore::Neumann(&rf),
    };
    let sol = solve_core(
        p.alpha,
        &p.grid,
        p.final_time,
        p.n_steps,
        &p.potential,
        src.as_ref().map(|f| f as &(dyn Fn(usize, usize) -> f64 + Sync)),
        &p.initial,
        &left,
        &right,
    )?;
    if sol.values.iter().flatten().any(|v| !v.is_finite()) {
        return Err(FracError::NonFinite("time-fractional solve"));
    }
    Ok(sol)
}

/// L1 approximation of `∂_t^α u` at the final level from the stored history.
pub fn caputo_l1_final(sol: &SpaceTimeSolution, alpha: f64) -> Result<Vec<f64>> {
    let k = sol.values.len() - 1;
    if k == 0 {
        return Err(FracError::Domain("history has no time steps".into()));
    }
    let tau = sol.times[1] - sol.times[0];
    let w = l1_weights(alpha, k)?;
    let c = tau.powf(-alpha);
    let nn = sol.grid.n_nodes();
    let mut d = vec![0.0; nn];
    for (j, bj) in w.b.iter().enumerate() {
        let (a, p) = (&sol.values[k - j], &sol.values[k - j - 1]);
        for i in 0..nn {
            d[i] += bj * (a[i] - p[i]);
        }
    }
    d.iter_mut().for_each(|v| *v *= c);
    Ok(d)
}
