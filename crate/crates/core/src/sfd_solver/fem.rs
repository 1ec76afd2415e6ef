use rayon::prelude::*;

use crate::error::{FracError, Result};
use crate::numcore::quadrature::{gauss_jacobi, gauss_legendre, GaussRule};
use crate::numcore::{DenseMatrix, Grid1D, LuFactorization};
use crate::specfun::{gamma, ln_gamma};

const GAUSS_POINTS: usize = 4;
const ORTHO_TOL: f64 = 1e-10;

/// Assembled Petrov-Galerkin system with test functions
/// `φ̃_i = φ_i - γ_i (1 - x)`, `i = 1..n-1`. Square blocks act on interior
/// nodal values; the `*_full` blocks act on all nodes `0..=n`.
#[derive(Debug, Clone)]
pub struct FemSystem {
    pub beta: f64,
    pub grid: Grid1D,
    /// `-(D_0^{β/2} φ_j, D_1^{β/2} φ̃_i) + (q φ_j, φ̃_i)`.
    pub stiffness: DenseMatrix,
    /// `(φ_j, φ̃_i)`; not symmetric.
    pub mass: DenseMatrix,
    /// `(φ_j, φ_i)`, the symmetric positive definite P1 mass matrix.
    pub gram: DenseMatrix,
    pub gamma: Vec<f64>,
    pub(crate) mass_full: DenseMatrix,
    pub(crate) potential_full: DenseMatrix,
}

impl FemSystem {
    pub fn n_interior(&self) -> usize {
        self.gamma.len()
    }

    /// `(w_h, φ̃_i)` for a P1 function given by its values at all nodes.
    pub fn project(&self, w: &[f64]) -> Vec<f64> {
        self.mass_full.matvec(w).expect("node count checked by caller")
    }

    /// `(f, φ̃_i)` by Gauss-Legendre on every cell.
    pub fn load<F: Fn(f64) -> f64>(&self, f: F) -> Vec<f64> {
        let rule = gauss_legendre(GAUSS_POINTS);
        let (local, global) = tested_integrals(&self.grid, &rule, |x, _| f(x));
        local
            .iter()
            .zip(&self.gamma)
            .map(|(l, g)| l - g * global)
            .collect()
    }
}

/// For `w(x, cell)`: `(w, φ_i)` for interior `i`, and `(w, 1 - x)`.
fn tested_integrals<W: Fn(f64, usize) -> f64>(grid: &Grid1D, rule: &GaussRule, w: W) -> (Vec<f64>, f64) {
    let n = grid.n_cells();
    let h = grid.h();
    let mut local = vec![0.0; n + 1];
    let mut global = 0.0;
    for c in 0..n {
        let a = grid.node(c);
        for (t, wt) in rule.nodes.iter().zip(&rule.weights) {
            let s = 0.5 * (t + 1.0);
            let x = a + s * h;
            let v = w(x, c) * wt * 0.5 * h;
            local[c] += v * (1.0 - s);
            local[c + 1] += v * s;
            global += v * (1.0 - x);
        }
    }
    (local[1..n].to_vec(), global)
}

/// `γ_i = (x^{1-β}, φ_i) / (x^{1-β}, 1 - x)` by Gauss-Jacobi on the singular
/// cell and Gauss-Legendre elsewhere.
fn gamma_by_quadrature(beta: f64, grid: &Grid1D) -> Vec<f64> {
    let n = grid.n_cells();
    let h = grid.h();
    let s = 1.0 - beta;
    let den = gauss_jacobi(2, 1.0, s).weights.iter().sum::<f64>() * 0.5f64.powf(3.0 - beta);
    let jac = gauss_jacobi(GAUSS_POINTS, 0.0, s);
    // Cells next to the singular one still need a high-order rule.
    let leg = gauss_legendre(12);
    let scale = (0.5 * h).powf(s) * 0.5 * h;
    (1..n)
        .map(|i| {
            let mut num = 0.0;
            for c in [i - 1, i] {
                let a = grid.node(c);
                let rising = c + 1 == i;
                let hat = |x: f64| if rising { (x - a) / h } else { 1.0 - (x - a) / h };
                if c == 0 {
                    // x^{1-β} = ((h/2)(1+t))^{1-β}.
                    for (t, w) in jac.nodes.iter().zip(&jac.weights) {
                        num += w * scale * hat(0.5 * h * (1.0 + t));
                    }
                } else {
                    num += leg.integrate(|x| x.powf(s) * hat(x), a, a + h);
                }
            }
            num / den
        })
        .collect()
}

fn gamma_closed_form(beta: f64, grid: &Grid1D) -> Vec<f64> {
    let e = 3.0 - beta;
    let hp = grid.h().powf(2.0 - beta);
    (1..grid.n_cells())
        .map(|i| {
            let i = i as f64;
            hp * ((i - 1.0).powf(e) + (i + 1.0).powf(e) - 2.0 * i.powf(e))
        })
        .collect()
}

/// Assembles the system for order `beta` and potential `q`.
pub fn fem_assemble<Q>(beta: f64, grid: &Grid1D, q: Q) -> Result<FemSystem>
where
    Q: Fn(f64) -> f64 + Sync,
{
    if !(beta > 1.0 && beta < 2.0) {
        return Err(FracError::Domain(format!("beta must lie in (1, 2), got {beta}")));
    }
    if grid.a() != 0.0 || grid.b() != 1.0 {
        return Err(FracError::Domain("the fractional elliptic operator is set on (0, 1)".into()));
    }
    let n = grid.n_cells();
    if n < 2 {
        return Err(FracError::Domain("need at least 2 cells".into()));
    }
    let h = grid.h();
    let m = n - 1;

    let gam = gamma_by_quadrature(beta, grid);
    for (i, (a, b)) in gam.iter().zip(gamma_closed_form(beta, grid)).enumerate() {
        // The closed form is a second difference and loses digits as β → 2.
        let floor = 64.0 * f64::EPSILON * h.powf(2.0 - beta) * (i as f64 + 2.0).powf(3.0 - beta);
        if (a - b).abs() > ORTHO_TOL * b.abs() + floor {
            return Err(FracError::Precondition {
                index: i + 1,
                what: format!("test-function coefficient mismatch: quadrature {a}, closed form {b}"),
            });
        }
    }

    // Leading block: hats are second differences of ramps, so every entry is
    // a combination of ∫ (x - a)_+^p (b - x)_+^p dx = B(p+1, p+1) (b - a)_+^{2p+1}.
    let p = 1.0 - beta / 2.0;
    let e = 2.0 * p + 1.0;
    let beta_fn = (2.0 * ln_gamma(p + 1.0) - ln_gamma(2.0 * p + 2.0)).exp();
    let g2 = gamma(2.0 - beta / 2.0)?.powi(2);
    let pw = |k: i64| if k > 0 { (k as f64).powf(e) } else { 0.0 };
    let c = [1.0, -2.0, 1.0];
    let toeplitz: Vec<f64> = (-(m as i64)..=(m as i64))
        .map(|d| {
            let mut s = 0.0;
            for (k, ck) in c.iter().enumerate() {
                for (l, cl) in c.iter().enumerate() {
                    s += ck * cl * pw(d + l as i64 - k as i64);
                }
            }
            s
        })
        .collect();
    let tail: Vec<f64> = (1..n)
        .map(|j| {
            c.iter()
                .enumerate()
                .map(|(k, ck)| ck * pw(n as i64 - (j as i64 + k as i64 - 1)))
                .sum()
        })
        .collect();
    let lead = beta_fn * h.powf(e - 2.0) / g2;
    let tail_scale = beta_fn * h.powf(e - 1.0) / g2;

    // Potential block over all nodes: (q φ_j, φ_i) - γ_i (q φ_j, 1 - x).
    let rule = gauss_legendre(GAUSS_POINTS);
    let mut qloc = vec![[0.0; 3]; n + 1];
    let mut qglob = vec![0.0; n + 1];
    for cell in 0..n {
        let a = grid.node(cell);
        for (t, wt) in rule.nodes.iter().zip(&rule.weights) {
            let s = 0.5 * (t + 1.0);
            let x = a + s * h;
            let v = q(x) * wt * 0.5 * h;
            let (l, r) = (1.0 - s, s);
            qloc[cell][1] += v * l * l;
            qloc[cell][2] += v * l * r;
            qloc[cell + 1][0] += v * r * l;
            qloc[cell + 1][1] += v * r * r;
            qglob[cell] += v * l * (1.0 - x);
            qglob[cell + 1] += v * r * (1.0 - x);
        }
    }

    let rows: Vec<(Vec<f64>, Vec<f64>, Vec<f64>)> = (0..m)
        .into_par_iter()
        .map(|r| {
            let i = r + 1;
            let gi = gam[r];
            let mut pot = vec![0.0; n + 1];
            let mut mass = vec![0.0; n + 1];
            for (j, (pj, mj)) in pot.iter_mut().zip(mass.iter_mut()).enumerate() {
                // (1 - x, φ_j) for the full P1 basis, half hats at the ends.
                let one_minus = if j == 0 {
                    h * (1.0 / 3.0 + (1.0 - h) / 6.0)
                } else if j == n {
                    h * h / 6.0
                } else {
                    h * (1.0 - grid.node(j))
                };
                let local_q = if j + 1 >= i && j <= i + 1 { qloc[i][j + 1 - i] } else { 0.0 };
                *pj = local_q - gi * qglob[j];
                let local_m = match i.abs_diff(j) {
                    0 => 2.0 * h / 3.0,
                    1 => h / 6.0,
                    _ => 0.0,
                };
                *mj = local_m - gi * one_minus;
            }
            let stiff = (1..n)
                .map(|j| {
                    let d = i as i64 - j as i64 + m as i64;
                    -(lead * toeplitz[d as usize] - gi * tail_scale * tail[j - 1]) + pot[j]
                })
                .collect();
            (stiff, mass, pot)
        })
        .collect();

    let mut stiffness = DenseMatrix::zeros(m, m);
    let mut mass_full = DenseMatrix::zeros(m, n + 1);
    let mut potential_full = DenseMatrix::zeros(m, n + 1);
    for (r, (s, mf, pf)) in rows.into_iter().enumerate() {
        for j in 0..m {
            stiffness[(r, j)] = s[j];
        }
        for j in 0..=n {
            mass_full[(r, j)] = mf[j];
            potential_full[(r, j)] = pf[j];
        }
    }
    let mut mass = DenseMatrix::zeros(m, m);
    let mut gram = DenseMatrix::zeros(m, m);
    for r in 0..m {
        for j in 0..m {
            mass[(r, j)] = mass_full[(r, j + 1)];
        }
        gram[(r, r)] = 2.0 * h / 3.0;
        if r + 1 < m {
            gram[(r, r + 1)] = h / 6.0;
            gram[(r + 1, r)] = h / 6.0;
        }
    }

    let sys = FemSystem { beta, grid: *grid, stiffness, mass, gram, gamma: gam, mass_full, potential_full };
    check_orthogonality(&sys)?;
    if sys.stiffness.as_slice().iter().any(|v| !v.is_finite()) {
        return Err(FracError::NonFinite("fractional stiffness matrix"));
    }
    Ok(sys)
}

/// `(x^{1-β}, φ̃_i) = 0`, integrated independently of the assembly path.
fn check_orthogonality(sys: &FemSystem) -> Result<()> {
    let beta = sys.beta;
    let g = &sys.grid;
    let h = g.h();
    let e = 3.0 - beta;
    let den = 1.0 / ((2.0 - beta) * (3.0 - beta));
    for (r, gi) in sys.gamma.iter().enumerate() {
        // ∫ x^{1-β} φ_i = (1/h) Δ² [x_k^{3-β}] / ((2-β)(3-β)).
        let i = r + 1;
        let d2 = g.node(i - 1).powf(e) - 2.0 * g.node(i).powf(e) + g.node(i + 1).powf(e);
        let num = d2 / h * den;
        let res = num - gi * den;
        let floor = 64.0 * f64::EPSILON * g.node(i + 1).powf(e) / h * den;
        if res.abs() > ORTHO_TOL * num.abs() + floor {
            return Err(FracError::Precondition {
                index: i,
                what: format!("test function not orthogonal to x^(1-beta): residual {res}"),
            });
        }
    }
    Ok(())
}

/// Galerkin solution with homogeneous Dirichlet data; values at all nodes.
pub fn steady_solve<F: Fn(f64) -> f64>(sys: &FemSystem, f: F) -> Result<Vec<f64>> {
    let lu = LuFactorization::new(&sys.stiffness)?;
    let u = lu.solve(&sys.load(f))?;
    let mut full = vec![0.0; sys.n_interior() + 2];
    full[1..=u.len()].copy_from_slice(&u);
    Ok(full)
}
