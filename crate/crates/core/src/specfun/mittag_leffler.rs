//! Two-parameter Mittag-Leffler function `E_{α,β}(z) = Σ z^k / Γ(αk + β)`.
//!
//! Three evaluators are combined: the power series, the large-argument
//! exponential/algebraic expansion, and inversion of the Laplace transform
//! `s^{α-β} / (s^α - z)` on an optimally placed parabolic contour. The first
//! two are used when their own error estimates admit it; the contour method
//! covers everything else.

use super::gamma::rgamma;
use crate::error::{FracError, Result};
use crate::ComplexValue as C;
use std::f64::consts::PI;

/// Relative error an evaluator must certify before its value is used.
const ACCEPT_REL: f64 = 1e-13;
const MAX_SERIES_TERMS: usize = 3000;

/// Region and truncation parameters for [`ml`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MlPolicy {
    /// Series is tried first for `|z| <= series_radius`.
    pub series_radius: f64,
    /// Asymptotic expansion is tried first for `|z| >= asympt_radius`.
    pub asympt_radius: f64,
    /// Maximum number of algebraic terms in the expansion.
    pub asympt_terms: usize,
    /// Series truncation: stop once the tail bound is below this times `|sum|`.
    pub series_tol: f64,
    /// Half-opening of the sector in which the exponential term is kept.
    /// `None` picks the midpoint of `(απ/2, min(π, απ))`.
    pub sector_mu: Option<f64>,
}

impl Default for MlPolicy {
    fn default() -> Self {
        Self { series_radius: 5.0, asympt_radius: 25.0, asympt_terms: 60, series_tol: 1e-16, sector_mu: None }
    }
}

impl MlPolicy {
    pub fn validate(&self, alpha: f64) -> Result<()> {
        if !(self.series_radius > 0.0 && self.series_radius <= self.asympt_radius) {
            return Err(FracError::Domain("policy needs 0 < series_radius <= asympt_radius".into()));
        }
        if self.series_tol.is_nan() || self.series_tol <= 0.0 || self.asympt_terms == 0 {
            return Err(FracError::Domain("policy needs series_tol > 0 and asympt_terms >= 1".into()));
        }
        if let Some(mu) = self.sector_mu {
            let lo = alpha * PI / 2.0;
            let hi = PI.min(alpha * PI);
            if alpha < 2.0 && !(mu > lo && mu < hi) {
                return Err(FracError::Domain(format!("sector_mu {mu} outside ({lo}, {hi})")));
            }
        }
        Ok(())
    }

    pub fn mu_for(&self, alpha: f64) -> f64 {
        self.sector_mu.unwrap_or(0.5 * (alpha * PI / 2.0 + PI.min(alpha * PI)))
    }
}

fn check_args(alpha: f64, beta: f64, z: C) -> Result<()> {
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(FracError::Domain(format!("Mittag-Leffler order alpha must be > 0, got {alpha}")));
    }
    if !beta.is_finite() || !z.re.is_finite() || !z.im.is_finite() {
        return Err(FracError::Domain("Mittag-Leffler arguments must be finite".into()));
    }
    Ok(())
}

/// `E_{α,β}(z)`.
pub fn ml(alpha: f64, beta: f64, z: C, policy: &MlPolicy) -> Result<C> {
    check_args(alpha, beta, z)?;
    policy.validate(alpha)?;
    let v = ml_unchecked(alpha, beta, z, policy)?;
    finish(v, z)
}

/// `E_{α,β}(x)` for real `x`.
pub fn ml_real(alpha: f64, beta: f64, x: f64, policy: &MlPolicy) -> Result<f64> {
    ml(alpha, beta, C::new(x, 0.0), policy).map(|v| v.re)
}

fn finish(v: C, z: C) -> Result<C> {
    if !(v.re.is_finite() && v.im.is_finite()) {
        return Err(FracError::NonFinite("Mittag-Leffler value"));
    }
    Ok(if z.im == 0.0 { C::new(v.re, 0.0) } else { v })
}

fn ml_unchecked(alpha: f64, beta: f64, z: C, policy: &MlPolicy) -> Result<C> {
    let r = z.norm();
    if r == 0.0 {
        return Ok(C::new(rgamma(beta), 0.0));
    }
    if alpha == 1.0 && beta == 1.0 {
        return Ok(z.exp());
    }
    if r >= policy.asympt_radius {
        if let Some((v, err)) = regimes::asymptotic(alpha, beta, z, policy) {
            if err <= ACCEPT_REL * v.norm() {
                return Ok(v);
            }
        }
    } else if let Some((v, err)) = regimes::series(alpha, beta, z, policy.series_tol) {
        // Below r0 this is the plain series; in the annulus the same
        // compensated sum is accepted only when cancellation is harmless.
        if err <= ACCEPT_REL * v.norm() {
            return Ok(v);
        }
    }
    regimes::laplace(alpha, beta, z)
}

/// `dE_{α,β}/dz`.
pub fn ml_derivative(alpha: f64, beta: f64, z: C, policy: &MlPolicy) -> Result<C> {
    check_args(alpha, beta, z)?;
    policy.validate(alpha)?;
    let r = z.norm();
    if r <= policy.series_radius {
        if let Some((v, err)) = regimes::derivative_series(alpha, beta, z, policy.series_tol) {
            if err <= ACCEPT_REL * v.norm() || r < 1e-3 {
                return finish(v, z);
            }
        }
    }
    // α z E'_{α,β}(z) = E_{α,β-1}(z) - (β-1) E_{α,β}(z)
    let e1 = ml_unchecked(alpha, beta - 1.0, z, policy)?;
    let e0 = ml_unchecked(alpha, beta, z, policy)?;
    finish((e1 - (beta - 1.0) * e0) / (alpha * z), z)
}

/// Compensated complex summation.
#[derive(Default)]
struct Neumaier {
    sum: C,
    comp: C,
}

impl Neumaier {
    fn add(&mut self, x: C) {
        self.sum.re = two_sum(self.sum.re, x.re, &mut self.comp.re);
        self.sum.im = two_sum(self.sum.im, x.im, &mut self.comp.im);
    }

    fn value(&self) -> C {
        self.sum + self.comp
    }
}

fn two_sum(s: f64, x: f64, comp: &mut f64) -> f64 {
    let t = s + x;
    if s.abs() >= x.abs() {
        *comp += (s - t) + x;
    } else {
        *comp += (x - t) + s;
    }
    t
}

/// The individual evaluators, each returning its own error estimate.
pub mod regimes {
    use super::*;

    /// Power series with compensated summation. Returns `(value, error
    /// estimate)`, or `None` if the terms overflow or do not settle.
    pub fn series(alpha: f64, beta: f64, z: C, tol: f64) -> Option<(C, f64)> {
        power_series(z, tol, |k| rgamma(alpha * k as f64 + beta))
    }

    /// Term-wise differentiated series `Σ (k+1) z^k / Γ(αk + α + β)`.
    pub fn derivative_series(alpha: f64, beta: f64, z: C, tol: f64) -> Option<(C, f64)> {
        power_series(z, tol, |k| (k as f64 + 1.0) * rgamma(alpha * (k as f64 + 1.0) + beta))
    }

    fn power_series(z: C, tol: f64, coef: impl Fn(usize) -> f64) -> Option<(C, f64)> {
        let r = z.norm();
        if r == 0.0 {
            return Some((C::new(coef(0), 0.0), 0.0));
        }
        let mut acc = Neumaier::default();
        let mut zk = C::new(1.0, 0.0);
        let mut rk = 1.0f64;
        let mut abs_sum = 0.0;
        for k in 0..MAX_SERIES_TERMS {
            let c = coef(k);
            let term = zk * c;
            acc.add(term);
            abs_sum += term.norm();
            let next = rk * r * coef(k + 1).abs();
            let after = rk * r * r * coef(k + 2).abs();
            if !abs_sum.is_finite() {
                return None;
            }
            if k > 2 && after < next && next <= (c.abs() * rk).max(f64::MIN_POSITIVE) {
                let ratio = if next > 0.0 { after / next } else { 0.0 };
                let tail = next / (1.0 - ratio);
                let s = acc.value().norm();
                if tail <= tol * s || (s == 0.0 && tail == 0.0) {
                    let err = tail + 4.0 * f64::EPSILON * abs_sum;
                    return Some((acc.value(), err));
                }
            }
            zk *= z;
            rk *= r;
        }
        None
    }

    /// Large-argument expansion: exponential terms on every sheet with
    /// `|arg z + 2πm| < απ`, kept inside the sector `|·| <= μ` and counted
    /// as error outside it, plus `-Σ_{k=1}^N z^{-k}/Γ(β-αk)`.
    pub fn asymptotic(alpha: f64, beta: f64, z: C, policy: &MlPolicy) -> Option<(C, f64)> {
        if alpha >= 2.0 {
            return None;
        }
        let r = z.norm();
        let theta = z.arg();
        let mu = policy.mu_for(alpha);
        let mut val = C::new(0.0, 0.0);
        let mut err = 0.0;
        for m in -1..=1 {
            let phi = theta + 2.0 * PI * m as f64;
            if phi.abs() > alpha * PI * (1.0 + 1e-12) {
                continue;
            }
            let ln_zm = C::new(r.ln() / alpha, phi / alpha);
            let zm = ln_zm.exp();
            let x = ((1.0 - beta) * ln_zm + zm).exp() / alpha;
            if !(x.re.is_finite() && x.im.is_finite()) {
                return None;
            }
            if phi.abs() <= mu {
                val += x;
            } else {
                err += x.norm();
            }
        }
        let zinv = 1.0 / z;
        let mut p = zinv;
        let mut prev = f64::INFINITY;
        let mut abs_sum = 0.0;
        let mut truncated = false;
        for k in 1..=policy.asympt_terms {
            let term = -p * rgamma(beta - alpha * k as f64);
            let mag = term.norm();
            if mag > 0.0 {
                if mag > prev {
                    err += mag;
                    truncated = true;
                    break;
                }
                prev = mag;
            }
            val += term;
            abs_sum += mag;
            p *= zinv;
        }
        if !truncated {
            let n1 = policy.asympt_terms as f64 + 1.0;
            let nxt = r.powf(-n1) * rgamma(beta - alpha * n1).abs();
            let nxt2 = r.powf(-n1 - 1.0) * rgamma(beta - alpha * (n1 + 1.0)).abs();
            err += nxt.max(nxt2);
        }
        err += 4.0 * f64::EPSILON * (abs_sum + val.norm());
        Some((val, err))
    }

    /// Inversion of the Laplace transform `s^{α-β}/(s^α - z)` along the
    /// parabola `s = μ(1 + iu)^2`, with contour parameters chosen to balance
    /// discretisation and round-off error against the poles
    /// `s* = z^{1/α}` on every sheet (plus the branch point at the origin).
    pub fn laplace(alpha: f64, beta: f64, z: C) -> Result<C> {
        let t = 1.0;
        let log_mach = f64::EPSILON.ln();
        let mut log_eps = (1e-15f64).ln();
        let r = z.norm();
        let theta = z.arg();
        let kmin = (-alpha / 2.0 - theta / (2.0 * PI)).ceil() as i64;
        let kmax = (alpha / 2.0 - theta / (2.0 * PI)).floor() as i64;
        let mut poles: Vec<(f64, C)> = (kmin..=kmax)
            .map(|k| {
                let s = C::from_polar(r.powf(1.0 / alpha), (theta + 2.0 * PI * k as f64) / alpha);
                ((s.re + s.norm()) / 2.0, s)
            })
            .filter(|(phi, _)| *phi > 1e-15)
            .collect();
        poles.sort_by(|a, b| a.0.total_cmp(&b.0));
        let n_poles = poles.len();
        let n_regions = n_poles + 1;
        let mut phis = Vec::with_capacity(n_poles + 2);
        phis.push(0.0);
        phis.extend(poles.iter().map(|p| p.0));
        phis.push(f64::INFINITY);
        let mut pstr = vec![1.0; n_regions];
        pstr[0] = (-2.0 * (alpha - beta + 1.0)).max(0.0);
        let mut qstr = vec![1.0; n_regions];
        qstr[n_regions - 1] = f64::INFINITY;

        let admissible: Vec<usize> = (0..n_regions)
            .filter(|&j| phis[j] < (log_eps - log_mach) / t && phis[j] < phis[j + 1])
            .collect();
        let (mut best_n, mut best) = (f64::INFINITY, (0.0, 0.0, 0usize));
        loop {
            for &j in &admissible {
                let (mu, h, n) = if j + 1 < n_regions {
                    optimal_rb(t, phis[j], phis[j + 1], pstr[j], qstr[j], log_eps)
                } else {
                    optimal_ru(t, phis[j], pstr[j], log_eps)
                };
                if n < best_n {
                    best_n = n;
                    best = (mu, h, j);
                }
            }
            if best_n > 200.0 {
                log_eps += 10f64.ln();
                best_n = f64::INFINITY;
                if log_eps > -2.0 {
                    return Err(FracError::NonConvergence {
                        what: "Mittag-Leffler contour inversion",
                        detail: format!("no admissible contour for z = {z}"),
                    });
                }
            } else {
                break;
            }
        }
        let (mu, h, region) = best;
        let n = best_n as i64;
        let mut acc = Neumaier::default();
        for k in -n..=n {
            let u = h * k as f64;
            let s = mu * C::new(1.0, u).powi(2);
            let ds = C::new(-2.0 * mu * u, 2.0 * mu);
            let ln_s = s.ln();
            let f = ((alpha - beta) * ln_s).exp() / ((alpha * ln_s).exp() - z);
            acc.add((s * t).exp() * f * ds);
        }
        let integral = acc.value() * h / C::new(0.0, 2.0 * PI);
        let residues: C = poles[region..]
            .iter()
            .map(|(_, s)| (s.ln() * (1.0 - beta)).exp() * (s * t).exp() / alpha)
            .sum();
        let v = integral + residues;
        if !(v.re.is_finite() && v.im.is_finite()) {
            return Err(FracError::NonFinite("Mittag-Leffler contour inversion"));
        }
        Ok(v)
    }

    /// Contour parameters for a region bounded by two singularities.
    fn optimal_rb(t: f64, phi_j: f64, phi_j1: f64, pj: f64, qj: f64, log_eps: f64) -> (f64, f64, f64) {
        let log_mach = f64::EPSILON.ln();
        let fac = 1.01;
        let f_max = (log_eps - log_mach).exp();
        let sq_j = phi_j.sqrt();
        let threshold = 2.0 * ((log_eps - log_mach) / t).sqrt();
        let sq_j1 = phi_j1.sqrt().min(threshold - sq_j);
        let (sqb_j, sqb_j1, f_bar) = if pj < 1e-14 && qj < 1e-14 {
            (sq_j, sq_j1, 1.0)
        } else if pj < 1e-14 {
            let f_min = if sq_j > 0.0 { fac * (sq_j / (sq_j1 - sq_j)).powf(qj) } else { fac };
            if f_min >= f_max {
                return (0.0, 0.0, f64::INFINITY);
            }
            let f_bar = f_min + f_min / f_max * (f_max - f_min);
            let fq = f_bar.powf(-1.0 / qj);
            (sq_j, (2.0 * sq_j1 - fq * sq_j) / (2.0 + fq), f_bar)
        } else if qj < 1e-14 {
            let f_min = fac * (sq_j1 / (sq_j1 - sq_j)).powf(pj);
            if f_min >= f_max {
                return (0.0, 0.0, f64::INFINITY);
            }
            let f_bar = f_min + f_min / f_max * (f_max - f_min);
            let fp = f_bar.powf(-1.0 / pj);
            ((2.0 * sq_j + fp * sq_j1) / (2.0 - fp), sq_j1, f_bar)
        } else {
            let mut f_min = fac * ((sq_j + sq_j1) / (sq_j1 - sq_j)).powf(pj.max(qj));
            if f_min >= f_max {
                return (0.0, 0.0, f64::INFINITY);
            }
            f_min = f_min.max(1.5);
            let f_bar = f_min + f_min / f_max * (f_max - f_min);
            let fp = f_bar.powf(-1.0 / pj);
            let fq = f_bar.powf(-1.0 / qj);
            let w = -phi_j1 * t / log_eps;
            let den = 2.0 + w - (1.0 + w) * fp + fq;
            let a = ((2.0 + w + fq) * sq_j + fp * sq_j1) / den;
            let b = (-(1.0 + w) * fq * sq_j + (2.0 + w - (1.0 + w) * fp) * sq_j1) / den;
            (a, b, f_bar)
        };
        let log_eps = log_eps - f_bar.ln();
        let w = -sqb_j1 * sqb_j1 * t / log_eps;
        let mu = (((1.0 + w) * sqb_j + sqb_j1) / (2.0 + w)).powi(2);
        let h = -2.0 * PI / log_eps * (sqb_j1 - sqb_j) / ((1.0 + w) * sqb_j + sqb_j1);
        let n = ((1.0 - log_eps / t / mu).sqrt() / h).ceil();
        if !(mu > 0.0 && h > 0.0 && n.is_finite()) {
            return (0.0, 0.0, f64::INFINITY);
        }
        (mu, h, n)
    }

    /// Contour parameters for the unbounded region right of the last
    /// singularity.
    fn optimal_ru(t: f64, phi_j: f64, pj: f64, log_eps: f64) -> (f64, f64, f64) {
        let sq_phi = phi_j.sqrt();
        let mut phibar = if phi_j > 0.0 { phi_j * 1.01 } else { 0.01 };
        let mut sq_phibar = phibar.sqrt();
        let (f_min, f_max, f_tar) = (1.0, 10.0, 5.0f64);
        let (mut n, mut a, mut sq_mu);
        let mut guard = 0;
        loop {
            let phi_t = phibar * t;
            let lept = log_eps / phi_t;
            n = (phi_t / PI * (1.0 - 3.0 * lept / 2.0 + (1.0 - 2.0 * lept).sqrt())).ceil();
            a = PI * n / phi_t;
            sq_mu = sq_phibar * (4.0 - a).abs() / (7.0 - (1.0 + 12.0 * a).sqrt()).abs();
            let fbar = ((sq_phibar - sq_phi) / sq_mu).powf(-pj);
            guard += 1;
            if pj < 1e-14 || (f_min < fbar && fbar < f_max) || guard > 100 {
                break;
            }
            sq_phibar = f_tar.powf(-1.0 / pj) * sq_mu + sq_phi;
            phibar = sq_phibar * sq_phibar;
        }
        let mut mu = sq_mu * sq_mu;
        let mut h = (-3.0 * a - 2.0 + 2.0 * (1.0 + 12.0 * a).sqrt()) / (4.0 - a) / n;
        let log_mach = f64::EPSILON.ln();
        let threshold = (log_eps - log_mach) / t;
        if mu > threshold {
            let q = if pj.abs() < 1e-14 { 0.0 } else { f_tar.powf(-1.0 / pj) * mu.sqrt() };
            let phibar = (q + sq_phi).powi(2);
            if phibar < threshold {
                let w = (log_mach / (log_mach - log_eps)).sqrt();
                let u = (-phibar * t / log_mach).sqrt();
                mu = threshold;
                n = (w * log_eps / 2.0 / PI / (u * w - 1.0)).ceil();
                h = (log_mach / (log_mach - log_eps)).sqrt() / n;
            } else {
                return (0.0, 0.0, f64::INFINITY);
            }
        }
        if !(mu > 0.0 && h > 0.0 && n.is_finite() && n >= 1.0) {
            return (0.0, 0.0, f64::INFINITY);
        }
        (mu, h, n)
    }
}
