use super::DenseMatrix;
use crate::error::{FracError, Result};

pub const DEFAULT_RANK_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 80;
const ROT_TOL: f64 = 1e-15;

/// Thin singular value decomposition `A = U diag(σ) Vᵀ` with
/// `k = min(rows, cols)` singular triplets.
#[derive(Debug, Clone, PartialEq)]
pub struct SvdResult {
    pub singular_values: Vec<f64>,
    /// `rows × k`, orthonormal columns.
    pub left_vectors: DenseMatrix,
    /// `cols × k`, orthonormal columns.
    pub right_vectors: DenseMatrix,
    pub numerical_rank: usize,
    /// `σ_1 / σ_r` with `r` the numerical rank; infinite for the zero matrix.
    pub cond: f64,
}

/// One-sided (Hestenes) Jacobi SVD.
pub fn svd(a: &DenseMatrix, rank_tol: f64) -> Result<SvdResult> {
    if a.rows() == 0 || a.cols() == 0 {
        return Err(FracError::Shape("SVD of an empty matrix".into()));
    }
    if !(rank_tol >= 0.0 && rank_tol.is_finite()) {
        return Err(FracError::Domain(format!("rank_tol must be finite and >= 0, got {rank_tol}")));
    }
    if a.as_slice().iter().any(|v| !v.is_finite()) {
        return Err(FracError::NonFinite("SVD input"));
    }
    if a.rows() < a.cols() {
        let t = svd(&a.transpose(), rank_tol)?;
        let mut r = SvdResult {
            singular_values: t.singular_values,
            left_vectors: t.right_vectors,
            right_vectors: t.left_vectors,
            numerical_rank: t.numerical_rank,
            cond: t.cond,
        };
        fix_signs(&mut r);
        return Ok(r);
    }
    let m = a.rows();
    let n = a.cols();
    // Columns stored contiguously.
    let mut u: Vec<Vec<f64>> = (0..n).map(|j| a.column(j)).collect();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|j| {
            let mut e = vec![0.0; n];
            e[j] = 1.0;
            e
        })
        .collect();
    let mut norms: Vec<f64> = u.iter().map(|c| dot(c, c)).collect();
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let alpha = norms[p];
                let beta = norms[q];
                if alpha == 0.0 || beta == 0.0 {
                    continue;
                }
                let gamma = dot(&u[p], &u[q]);
                if gamma.abs() <= ROT_TOL * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                let (lo, hi) = u.split_at_mut(q);
                rotate(&mut lo[p], &mut hi[0], c, s);
                let (lo, hi) = v.split_at_mut(q);
                rotate(&mut lo[p], &mut hi[0], c, s);
                norms[p] = dot(&u[p], &u[p]);
                norms[q] = dot(&u[q], &u[q]);
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(FracError::NonConvergence {
            what: "Jacobi SVD",
            detail: format!("{MAX_SWEEPS} sweeps exceeded"),
        });
    }
    let mut sigma: Vec<f64> = u.iter().map(|c| dot(c, c).sqrt()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| sigma[j].total_cmp(&sigma[i]).then(i.cmp(&j)));
    sigma = order.iter().map(|&i| sigma[i]).collect();
    let mut ucols: Vec<Vec<f64>> = order.iter().map(|&i| u[i].clone()).collect();
    let vcols: Vec<Vec<f64>> = order.iter().map(|&i| v[i].clone()).collect();

    // Normalise left vectors; complete an orthonormal set where σ vanishes.
    let smax = sigma[0];
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(n);
    for (j, col) in ucols.iter_mut().enumerate() {
        if sigma[j] > smax * f64::EPSILON * 1e-3 && sigma[j] > 0.0 {
            let s = sigma[j];
            col.iter_mut().for_each(|x| *x /= s);
            reorthogonalise(col, &basis);
        } else {
            *col = complete_basis(&basis, m);
        }
        basis.push(col.clone());
    }

    let numerical_rank = sigma.iter().filter(|&&s| s > rank_tol * smax).count();
    let cond = if numerical_rank == 0 { f64::INFINITY } else { smax / sigma[numerical_rank - 1] };
    let mut r = SvdResult {
        singular_values: sigma,
        left_vectors: DenseMatrix::from_columns(&ucols)?,
        right_vectors: DenseMatrix::from_columns(&vcols)?,
        numerical_rank,
        cond,
    };
    fix_signs(&mut r);
    Ok(r)
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn rotate(x: &mut [f64], y: &mut [f64], c: f64, s: f64) {
    for (a, b) in x.iter_mut().zip(y.iter_mut()) {
        let (xa, yb) = (*a, *b);
        *a = c * xa - s * yb;
        *b = s * xa + c * yb;
    }
}

fn reorthogonalise(col: &mut [f64], basis: &[Vec<f64>]) {
    for b in basis {
        let d = dot(col, b);
        col.iter_mut().zip(b).for_each(|(x, y)| *x -= d * y);
    }
    let nrm = dot(col, col).sqrt();
    if nrm > 0.0 {
        col.iter_mut().for_each(|x| *x /= nrm);
    }
}

fn complete_basis(basis: &[Vec<f64>], m: usize) -> Vec<f64> {
    let mut best = vec![0.0; m];
    let mut best_norm = -1.0;
    for e in 0..m {
        let mut c = vec![0.0; m];
        c[e] = 1.0;
        for _ in 0..2 {
            for b in basis {
                let d = dot(&c, b);
                c.iter_mut().zip(b).for_each(|(x, y)| *x -= d * y);
            }
        }
        let nrm = dot(&c, &c).sqrt();
        if nrm > best_norm {
            best_norm = nrm;
            best = c;
        }
        if nrm > 0.5 {
            break;
        }
    }
    best.iter_mut().for_each(|x| *x /= best_norm);
    best
}

fn fix_signs(r: &mut SvdResult) {
    let k = r.singular_values.len();
    for j in 0..k {
        let first = (0..r.left_vectors.rows())
            .map(|i| r.left_vectors[(i, j)])
            .find(|v| v.abs() > 1e-14)
            .unwrap_or(1.0);
        if first < 0.0 {
            for i in 0..r.left_vectors.rows() {
                r.left_vectors[(i, j)] = -r.left_vectors[(i, j)];
            }
            for i in 0..r.right_vectors.rows() {
                r.right_vectors[(i, j)] = -r.right_vectors[(i, j)];
            }
        }
    }
}
