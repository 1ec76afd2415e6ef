use std::f64::consts::PI;

use crate::error::{FracError, Result};

/// Iterates of Jones' operator on a uniform grid `t_n = n T / N`.
#[derive(Debug, Clone, PartialEq)]
pub struct JonesRun {
    pub times: Vec<f64>,
    /// `h(t_n)` for `n >= 1`; entry 0 repeats `h(t_1)`.
    pub h: Vec<f64>,
    /// `(inf h², sup h²)`, the bounds every iterate is clamped to.
    pub bounds: (f64, f64),
    pub iterates: Vec<Vec<f64>>,
}

/// Nodal `ψ'`: central differences inside, 3-point one-sided at the ends.
fn derivative(psi: &[f64], dt: f64) -> Vec<f64> {
    let n = psi.len() - 1;
    (0..=n)
        .map(|i| {
            if i == 0 {
                (-3.0 * psi[0] + 4.0 * psi[1] - psi[2]) / (2.0 * dt)
            } else if i == n {
                (3.0 * psi[n] - 4.0 * psi[n - 1] + psi[n - 2]) / (2.0 * dt)
            } else {
                (psi[i + 1] - psi[i - 1]) / (2.0 * dt)
            }
        })
        .collect()
}

/// `∫_0^{t_n} ψ'(τ) [∫_τ^{t_n} a]^{-1/2} dτ` with `a` constant on cells
/// (`a[m]` on `(t_{m-1}, t_m]`) and `ψ'` linear on cells; exact per cell.
fn denominator(a: &[f64], dpsi: &[f64], dt: f64, n: usize) -> f64 {
    let mut acc = 0.0;
    let mut tail = 0.0;
    for m in (1..=n).rev() {
        // s = t_m - τ; ψ' = p + κ s, ∫_τ^{t_n} a = tail + a_m s.
        let p = dpsi[m];
        let kappa = (dpsi[m - 1] - dpsi[m]) / dt;
        let u0 = tail;
        let u1 = tail + a[m] * dt;
        let (r0, r1) = (u0.sqrt(), u1.sqrt());
        let sum = r0 + r1;
        acc += dt / sum * (2.0 * p + 2.0 * kappa * dt / 3.0 * (1.0 + r0 / sum));
        tail = u1;
    }
    acc
}

fn validate(final_time: f64, g: &[f64], psi: &[f64]) -> Result<f64> {
    if g.len() != psi.len() {
        return Err(FracError::Shape(format!("{} flux samples vs {} temperature samples", g.len(), psi.len())));
    }
    if g.len() < 3 {
        return Err(FracError::Shape("need at least 3 time samples".into()));
    }
    if !(final_time > 0.0 && final_time.is_finite()) {
        return Err(FracError::Domain(format!("final time must be > 0, got {final_time}")));
    }
    let scale = psi.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if psi[0].abs() > 1e-14 * scale {
        return Err(FracError::Precondition { index: 0, what: format!("psi(0) = {} must vanish", psi[0]) });
    }
    for i in 1..g.len() {
        if g[i].is_nan() || g[i] <= 0.0 {
            return Err(FracError::Precondition { index: i, what: format!("flux must be positive, got {}", g[i]) });
        }
        if psi[i].is_nan() || psi[i] <= psi[i - 1] {
            return Err(FracError::Precondition { index: i, what: "temperature must increase strictly".into() });
        }
    }
    Ok(final_time / (g.len() - 1) as f64)
}

/// `h(t) = √π g(t) / ∫_0^t (t - τ)^{-1/2} ψ'(τ) dτ` at the nodes.
pub fn jones_h(final_time: f64, g: &[f64], psi: &[f64]) -> Result<Vec<f64>> {
    let dt = validate(final_time, g, psi)?;
    let dpsi = derivative(psi, dt);
    let ones = vec![1.0; g.len()];
    let mut h: Vec<f64> = (1..g.len())
        .map(|n| PI.sqrt() * g[n] / denominator(&ones, &dpsi, dt, n))
        .collect();
    if let Some((i, v)) = h.iter().enumerate().find(|(_, v)| !(**v > 0.0 && v.is_finite())) {
        return Err(FracError::Precondition { index: i + 1, what: format!("h = {v} must be positive") });
    }
    h.insert(0, h[0]);
    Ok(h)
}

/// One application of `𝒯a(t) = √π g(t) / ∫_0^t ψ'(τ) [∫_τ^t a]^{-1/2} dτ`
/// at the nodes `t_1..t_N`; entry 0 copies entry 1.
pub fn jones_operator(final_time: f64, g: &[f64], psi: &[f64], a: &[f64]) -> Result<Vec<f64>> {
    let dt = validate(final_time, g, psi)?;
    if a.len() != g.len() {
        return Err(FracError::Shape(format!("coefficient has {} samples, data {}", a.len(), g.len())));
    }
    if let Some((i, v)) = a.iter().enumerate().skip(1).find(|(_, v)| v.is_nan() || **v <= 0.0) {
        return Err(FracError::Precondition { index: i, what: format!("coefficient {v} must be positive") });
    }
    let dpsi = derivative(psi, dt);
    let mut out: Vec<f64> = (1..g.len()).map(|n| PI.sqrt() * g[n] / denominator(a, &dpsi, dt, n)).collect();
    out.insert(0, out[0]);
    Ok(out)
}

/// Fixed-point iteration of `𝒯` from `a_0 = sup h²`, clamped to `[inf h², sup h²]`.
pub fn jones_fixed_point(final_time: f64, g: &[f64], psi: &[f64], iterations: usize) -> Result<JonesRun> {
    let h = jones_h(final_time, g, psi)?;
    let lo = h.iter().fold(f64::INFINITY, |m, v| m.min(v * v));
    let hi = h.iter().fold(0.0f64, |m, v| m.max(v * v));
    let mut iterates = vec![vec![hi; g.len()]];
    for _ in 0..iterations {
        let a = iterates.last().expect("seeded");
        let next: Vec<f64> = jones_operator(final_time, g, psi, a)?.into_iter().map(|v| v.clamp(lo, hi)).collect();
        iterates.push(next);
    }
    let dt = final_time / (g.len() - 1) as f64;
    let times = (0..g.len()).map(|i| i as f64 * dt).collect();
    Ok(JonesRun { times, h, bounds: (lo, hi), iterates })
}
