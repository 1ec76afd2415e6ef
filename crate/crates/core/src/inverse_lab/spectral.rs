use std::f64::consts::PI;

use crate::error::{FracError, Result};
use crate::specfun::{ml_derivative, ml_real, MlPolicy};
use num_complex::Complex64;

/// One Dirichlet-Laplacian mode on `(0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralData {
    pub index: usize,
    pub lambda: f64,
    pub coefficient: f64,
}

/// Attaches `λ_j = (jπ)²` to coefficients of modes `j = 1, 2, ...`.
pub fn laplace_modes(coefficients: &[f64]) -> Vec<SpectralData> {
    coefficients
        .iter()
        .enumerate()
        .map(|(i, c)| SpectralData { index: i + 1, lambda: lambda(i + 1), coefficient: *c })
        .collect()
}

fn lambda(j: usize) -> f64 {
    let x = j as f64 * PI;
    x * x
}

fn decay(alpha: f64, j: usize, t: f64) -> Result<f64> {
    if alpha == 1.0 {
        return Ok((-lambda(j) * t).exp());
    }
    ml_real(alpha, 1.0, -lambda(j) * t.powf(alpha), &MlPolicy::default())
}

fn check(alpha: f64, t: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(FracError::Domain(format!("alpha must lie in (0, 1], got {alpha}")));
    }
    if !(t > 0.0 && t.is_finite()) {
        return Err(FracError::Domain(format!("time must be > 0, got {t}")));
    }
    Ok(())
}

/// `D(t) = exp(-λ_J t) - E_{α,1}(-λ_J t^α)`.
fn crossing(alpha: f64, j: usize, t: f64) -> Result<f64> {
    Ok((-lambda(j) * t).exp() - decay(alpha, j, t)?)
}

fn crossing_slope(alpha: f64, j: usize, t: f64) -> Result<f64> {
    let l = lambda(j);
    let z = Complex64::new(-l * t.powf(alpha), 0.0);
    let d = ml_derivative(alpha, 1.0, z, &MlPolicy::default())?.re;
    Ok(-l * (-l * t).exp() + l * alpha * t.powf(alpha - 1.0) * d)
}

/// Time at which fractional and classical decay of mode `J` coincide.
pub fn critical_time(alpha: f64, j: usize, bracket: (f64, f64)) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(FracError::Domain(format!("alpha must lie in (0, 1), got {alpha}")));
    }
    if j == 0 {
        return Err(FracError::Domain("mode index J must be >= 1".into()));
    }
    let (mut lo, mut hi) = bracket;
    if !(lo > 0.0 && hi > lo && hi.is_finite()) {
        return Err(FracError::Domain(format!("invalid bracket ({lo}, {hi})")));
    }
    let (f_lo, f_hi) = (crossing(alpha, j, lo)?, crossing(alpha, j, hi)?);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(FracError::NoSignChange { lo, hi, f_lo, f_hi });
    }
    let s_lo = f_lo.signum();
    while hi - lo > 1e-9 * hi {
        let mid = 0.5 * (lo + hi);
        let f = crossing(alpha, j, mid)?;
        if f == 0.0 {
            return Ok(mid);
        }
        if f.signum() == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut t = 0.5 * (lo + hi);
    for _ in 0..3 {
        let step = crossing(alpha, j, t)? / crossing_slope(alpha, j, t)?;
        let next = t - step;
        if !(next > lo && next < hi) {
            break;
        }
        t = next;
    }
    Ok(t)
}

/// `(exp(λ_J T), 1 / E_{α,1}(-λ_J T^α))`.
pub fn growth_factors(alpha: f64, j: usize, t: f64) -> Result<(f64, f64)> {
    check(alpha, t)?;
    Ok(((lambda(j) * t).exp(), 1.0 / decay(alpha, j, t)?))
}

/// Final-time modes of the backward problem: `v_j E_{α,1}(-λ_j T^α)`.
pub fn forward_backward_modes(alpha: f64, t: f64, v: &[f64]) -> Result<Vec<f64>> {
    check(alpha, t)?;
    v.iter().enumerate().map(|(i, c)| Ok(c * decay(alpha, i + 1, t)?)).collect()
}

/// Initial-data modes `(g, φ_j) / E_{α,1}(-λ_j T^α)` for `j = 1..=J`.
pub fn backward_reconstruct(alpha: f64, t: f64, data: &[f64]) -> Result<Vec<f64>> {
    check(alpha, t)?;
    data.iter().enumerate().map(|(i, g)| Ok(g / decay(alpha, i + 1, t)?)).collect()
}

/// Final-time modes for a space-only source: `f_j (1 - E_{α,1}(-λ_j T^α)) / λ_j`.
pub fn forward_source_modes(alpha: f64, t: f64, f: &[f64]) -> Result<Vec<f64>> {
    check(alpha, t)?;
    f.iter()
        .enumerate()
        .map(|(i, c)| Ok(c * (1.0 - decay(alpha, i + 1, t)?) / lambda(i + 1)))
        .collect()
}

/// Source modes `λ_j (g, φ_j) / (1 - E_{α,1}(-λ_j T^α))`.
pub fn source_space_reconstruct(alpha: f64, t: f64, data: &[f64]) -> Result<Vec<f64>> {
    check(alpha, t)?;
    data.iter()
        .enumerate()
        .map(|(i, g)| Ok(lambda(i + 1) * g / (1.0 - decay(alpha, i + 1, t)?)))
        .collect()
}
