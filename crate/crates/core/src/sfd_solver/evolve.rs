use rayon::prelude::*;

use super::fem::{fem_assemble, FemSystem};
use crate::error::{FracError, Result};
use crate::numcore::{DenseMatrix, Grid1D, LuFactorization};
use crate::tfd_solver::{SpaceTimeFn, SpaceTimeSolution, TimeFn};

/// Evolution problem with Dirichlet data `u(0,t) = g(t)`, `u(1,t) = h(t)`.
pub struct SfdProblem<'a> {
    pub beta: f64,
    pub grid: Grid1D,
    pub final_time: f64,
    pub n_steps: usize,
    pub potential: Box<dyn Fn(f64) -> f64 + Send + Sync + 'a>,
    pub source: Option<SpaceTimeFn<'a>>,
    pub initial: Vec<f64>,
    pub left: TimeFn<'a>,
    pub right: TimeFn<'a>,
}

impl<'a> SfdProblem<'a> {
    /// `q = 0`, `f = 0`, `g = h = 0`.
    pub fn homogeneous(beta: f64, grid: Grid1D, final_time: f64, n_steps: usize, initial: Vec<f64>) -> Self {
        Self {
            beta,
            grid,
            final_time,
            n_steps,
            potential: Box::new(|_| 0.0),
            source: None,
            initial,
            left: Box::new(|_| 0.0),
            right: Box::new(|_| 0.0),
        }
    }
}

/// Location of the Cauchy data (Dirichlet and flux) in the sideways map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CauchySite {
    /// Unknown Dirichlet trace at `x = 1`, flux observed at `x = 0`.
    At0,
    /// Unknown Dirichlet trace at `x = 0`, flux observed at `x = 1`.
    At1,
}

/// The fixed step matrix `M/τ + A` and its factorization.
struct Stepper<'s> {
    sys: &'s FemSystem,
    lu: LuFactorization,
    tau: f64,
}

impl<'s> Stepper<'s> {
    fn new(sys: &'s FemSystem, tau: f64) -> Result<Self> {
        let m = sys.n_interior();
        let mut a = sys.stiffness.clone();
        for i in 0..m {
            for j in 0..m {
                a[(i, j)] += sys.mass[(i, j)] / tau;
            }
        }
        Ok(Self { sys, lu: LuFactorization::new(&a)?, tau })
    }

    /// One step from `prev` (all nodes) with boundary values `(g, h)` and load `f`.
    fn step(&self, prev: &[f64], g: f64, h: f64, load: Option<&[f64]>) -> Result<Vec<f64>> {
        let grid = &self.sys.grid;
        let lift: Vec<f64> = grid.nodes().iter().map(|x| g + (h - g) * x).collect();
        let diff: Vec<f64> = prev.iter().zip(&lift).map(|(u, s)| u - s).collect();
        let mut rhs = self.sys.project(&diff);
        let qs = self.sys.potential_full.matvec(&lift)?;
        for (i, r) in rhs.iter_mut().enumerate() {
            *r = *r / self.tau - qs[i] + load.map_or(0.0, |f| f[i]);
        }
        let w = self.lu.solve(&rhs)?;
        let mut u = lift;
        for (i, wi) in w.iter().enumerate() {
            u[i + 1] += wi;
        }
        Ok(u)
    }

    fn run<L, B>(&self, initial: &[f64], n_steps: usize, load: L, bc: B) -> Result<Vec<Vec<f64>>>
    where
        L: Fn(usize) -> Option<Vec<f64>>,
        B: Fn(usize) -> (f64, f64),
    {
        let mut levels = Vec::with_capacity(n_steps + 1);
        levels.push(initial.to_vec());
        for k in 1..=n_steps {
            let (g, h) = bc(k);
            let f = load(k);
            let u = self.step(&levels[k - 1], g, h, f.as_deref())?;
            levels.push(u);
        }
        Ok(levels)
    }
}

fn check_time(final_time: f64, n_steps: usize) -> Result<f64> {
    if !(final_time > 0.0 && final_time.is_finite()) {
        return Err(FracError::Domain(format!("final time must be > 0, got {final_time}")));
    }
    if n_steps == 0 {
        return Err(FracError::Domain("n_steps must be >= 1".into()));
    }
    Ok(final_time / n_steps as f64)
}

/// Backward Euler evolution; returns all time levels.
pub fn evolve_sfd(p: &SfdProblem) -> Result<SpaceTimeSolution> {
    let tau = check_time(p.final_time, p.n_steps)?;
    let nn = p.grid.n_nodes();
    if p.initial.len() != nn {
        return Err(FracError::Shape(format!("initial data has {} values for {nn} nodes", p.initial.len())));
    }
    let sys = fem_assemble(p.beta, &p.grid, &p.potential)?;
    let stepper = Stepper::new(&sys, tau)?;
    let t = |k: usize| if k == p.n_steps { p.final_time } else { k as f64 * tau };
    let values = stepper.run(
        &p.initial,
        p.n_steps,
        |k| p.source.as_ref().map(|f| sys.load(|x| f(x, t(k)))),
        |k| ((p.left)(t(k)), (p.right)(t(k))),
    )?;
    if values.iter().flatten().any(|v| !v.is_finite()) {
        return Err(FracError::NonFinite("space-fractional evolution"));
    }
    let times = (0..=p.n_steps).map(t).collect();
    Ok(SpaceTimeSolution { grid: p.grid, times, values })
}

/// Initial data (interior hats) to final-time interior values; the identity at `T = 0`.
pub fn map_backward_space(beta: f64, grid: &Grid1D, final_time: f64, n_steps: usize) -> Result<DenseMatrix> {
    let sys = fem_assemble(beta, grid, |_| 0.0)?;
    let m = sys.n_interior();
    if final_time == 0.0 {
        return Ok(DenseMatrix::identity(m));
    }
    let tau = check_time(final_time, n_steps)?;
    let stepper = Stepper::new(&sys, tau)?;
    let columns: Vec<Vec<f64>> = (0..m)
        .into_par_iter()
        .map(|c| {
            let mut v = vec![0.0; m + 2];
            v[c + 1] = 1.0;
            let levels = stepper.run(&v, n_steps, |_| None, |_| (0.0, 0.0))?;
            let last = levels.last().expect("n_steps >= 1");
            Ok(last[1..=m].to_vec())
        })
        .collect::<Result<_>>()?;
    DenseMatrix::from_columns(&columns)
}

/// Dirichlet time hats on the inaccessible side to the flux trace on the
/// accessible side, `k = 1..=K`. The flux is the outward derivative
/// (`-u_x(0)` or `u_x(1)`) by one-sided 3-point differences.
pub fn map_sideways_space(
    beta: f64,
    grid: &Grid1D,
    final_time: f64,
    n_steps: usize,
    site: CauchySite,
) -> Result<DenseMatrix> {
    let tau = check_time(final_time, n_steps)?;
    let sys = fem_assemble(beta, grid, |_| 0.0)?;
    let stepper = Stepper::new(&sys, tau)?;
    let nn = grid.n_nodes();
    let h = grid.h();
    let v = vec![0.0; nn];
    let columns: Vec<Vec<f64>> = (1..=n_steps)
        .into_par_iter()
        .map(|j| {
            let hat = move |k: usize| if k == j { 1.0 } else { 0.0 };
            let levels = match site {
                CauchySite::At0 => stepper.run(&v, n_steps, |_| None, |k| (0.0, hat(k)))?,
                CauchySite::At1 => stepper.run(&v, n_steps, |_| None, |k| (hat(k), 0.0))?,
            };
            Ok(levels[1..]
                .iter()
                .map(|u| match site {
                    CauchySite::At0 => -(-3.0 * u[0] + 4.0 * u[1] - u[2]) / (2.0 * h),
                    CauchySite::At1 => (3.0 * u[nn - 1] - 4.0 * u[nn - 2] + u[nn - 3]) / (2.0 * h),
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    DenseMatrix::from_columns(&columns)
}
