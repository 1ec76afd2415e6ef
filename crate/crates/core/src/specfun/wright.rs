//! Wright function `W_{ρ,μ}(z) = Σ z^k / (k! Γ(ρk + μ))` on the negative real
//! axis for `-1 < ρ < 0`, evaluated from its Hankel-contour integral.

use super::gamma::rgamma;
use crate::error::{FracError, Result};
use crate::numcore::quadrature::{gauss_jacobi, gauss_legendre, GaussRule};
use std::f64::consts::PI;
use std::sync::OnceLock;

const TAIL_TOL: f64 = 1e-14;
const ABS_TOL: f64 = 1e-12;
const REL_TOL: f64 = 1e-10;

/// Parameters `(ρ, μ)` with `-1 < ρ < 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WrightParams {
    rho: f64,
    mu: f64,
}

impl WrightParams {
    pub fn new(rho: f64, mu: f64) -> Result<Self> {
        if !(rho > -1.0 && rho < 0.0) {
            return Err(FracError::Domain(format!("Wright rho must lie in (-1, 0), got {rho}")));
        }
        if !mu.is_finite() {
            return Err(FracError::Domain(format!("Wright mu must be finite, got {mu}")));
        }
        Ok(Self { rho, mu })
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }
}

struct Rules {
    lo: GaussRule,
    hi: GaussRule,
}

fn rules() -> &'static Rules {
    static R: OnceLock<Rules> = OnceLock::new();
    R.get_or_init(|| Rules { lo: gauss_legendre(16), hi: gauss_legendre(24) })
}

/// `W_{ρ,μ}(-x)` for `x >= 0`.
///
/// With `ν = -ρ` and `s = r^ν`, the ray integral
/// `(1/π) ∫_0^∞ r^{-μ} e^{-r - x r^ν cos πν} sin(πμ + x r^ν sin πν) dr`
/// becomes `(1/(πν)) ∫_0^∞ s^a e^{-s^{1/ν} - x cos(πν) s} sin(πμ + x sin(πν) s) ds`
/// with `a = (1-μ)/ν - 1`, valid for `μ < 1`. For `μ >= 1` the contour keeps
/// the unit circle and only the ray beyond `r = 1` is used.
///
/// The result is accurate in the absolute sense relative to the size of the
/// integrand; tiny values such as `e^{-x²/4}` for large `x` lose relative
/// digits to cancellation.
pub fn wright_neg(params: &WrightParams, x: f64) -> Result<f64> {
    if !(x >= 0.0 && x.is_finite()) {
        return Err(FracError::Domain(format!("wright_neg needs finite x >= 0, got {x}")));
    }
    let nu = -params.rho;
    let mu = params.mu;
    if x == 0.0 {
        return Ok(rgamma(mu));
    }
    let c1 = x * (PI * nu).cos();
    let c2 = x * (PI * nu).sin();
    let p = 1.0 / nu;
    let (value, err, scale) = if mu < 1.0 {
        let a = (1.0 - mu) / nu - 1.0;
        let f = |s: f64| (-s.powf(p) - c1 * s).exp() * (PI * mu + c2 * s).sin();
        let (v, e, sc) = ray_integral(f, a, 0.0, p, c1, c2)?;
        (v / (PI * nu), e / (PI * nu), sc / (PI * nu))
    } else {
        let (circ, ce, cs) = circle_integral(nu, mu, x);
        // Ray r ∈ [1, ∞) in the variable s = r^ν ∈ [1, ∞).
        let a = (1.0 - mu) / nu - 1.0;
        let f = |s: f64| s.powf(a) * (-s.powf(p) - c1 * s).exp() * (PI * mu + c2 * s).sin();
        let (v, e, sc) = ray_integral(f, 0.0, 1.0, p, c1, c2)?;
        (circ + v / (PI * nu), ce + e / (PI * nu), cs + sc / (PI * nu))
    };
    let err = err + 16.0 * f64::EPSILON * scale;
    if !value.is_finite() || !err.is_finite() || err > ABS_TOL + REL_TOL * value.abs() {
        return Err(FracError::Tolerance { achieved: err, requested: ABS_TOL + REL_TOL * value.abs() });
    }
    Ok(value)
}

/// `∫_{s0}^∞ s^a f(s) ds` where `f` contains the factor `e^{-s^p - c1 s}`;
/// `s0` is 0 (with Gauss-Jacobi on the first panel) or 1.
fn ray_integral<F: Fn(f64) -> f64>(f: F, a: f64, s0: f64, p: f64, c1: f64, c2: f64) -> Result<(f64, f64, f64)> {
    if c1 < 0.0 {
        // Peak of e^{-s^p - c1 s}: round-off is amplified by its height.
        let sp = (-c1 / p).powf(1.0 / (p - 1.0));
        let peak = -sp.powf(p) - c1 * sp;
        if peak > 20.0 {
            return Err(FracError::Tolerance { achieved: f64::EPSILON * peak.exp(), requested: ABS_TOL });
        }
    }
    let s_max = truncation(a, s0, p, c1)?;
    // Panel width resolves both the oscillation and the decay scale.
    let width = (PI / c2.abs().max(1.0)).min(1.0 / c1.abs().max(1.0)).min((s_max - s0) / 4.0);
    let mut breaks = Vec::new();
    if s0 == 0.0 {
        // Geometric grading towards the origin.
        let mut b = width;
        let mut g = Vec::new();
        while b > s_max * 1e-14 && g.len() < 60 {
            g.push(b);
            b *= 0.5;
        }
        g.push(0.0);
        g.reverse();
        breaks.extend(g);
    } else {
        breaks.push(s0);
    }
    let mut s = *breaks.last().unwrap();
    while s < s_max {
        s = (s + width).min(s_max);
        breaks.push(s);
    }
    let r = rules();
    let jac = if s0 == 0.0 && a != 0.0 { Some(jacobi_rules(a)) } else { None };
    let (mut lo, mut hi, mut scale) = (0.0, 0.0, 0.0);
    for (i, w) in breaks.windows(2).enumerate() {
        let (l, u) = (w[0], w[1]);
        if i == 0 && s0 == 0.0 {
            if let Some((j16, j24)) = &jac {
                // ∫_0^u s^a g(s) ds = (u/2)^{a+1} ∫ (1+t)^a g dt
                let m = 0.5 * u;
                let fac = m.powf(a + 1.0);
                let ev = |rule: &GaussRule| {
                    rule.nodes.iter().zip(&rule.weights).map(|(&t, &wt)| wt * f(m * (1.0 + t))).sum::<f64>()
                };
                lo += fac * ev(j16);
                hi += fac * ev(j24);
                scale += fac * j16.nodes.iter().zip(&j16.weights).map(|(&t, &wt)| wt * f(m * (1.0 + t)).abs()).sum::<f64>();
                continue;
            }
        }
        let g = |s: f64| if a == 0.0 { f(s) } else { s.powf(a) * f(s) };
        lo += r.lo.integrate(g, l, u);
        hi += r.hi.integrate(g, l, u);
        scale += r.lo.integrate(|s| g(s).abs(), l, u);
    }
    Ok((hi, (hi - lo).abs(), scale))
}

fn jacobi_rules(a: f64) -> (GaussRule, GaussRule) {
    (gauss_jacobi(16, 0.0, a), gauss_jacobi(24, 0.0, a))
}

/// Doubles the cut-off until the tail `∫_S^∞ s^a e^{-φ(s)} ds`,
/// `φ(s) = s^p + c1 s`, is bounded by `TAIL_TOL` via
/// `S^a e^{-φ(S)} / (φ'(S) - a/S)`.
fn truncation(a: f64, s0: f64, p: f64, c1: f64) -> Result<f64> {
    let mut s = s0 + 1.0;
    for _ in 0..80 {
        let phi = s.powf(p) + c1 * s;
        let dphi = p * s.powf(p - 1.0) + c1 - a / s;
        if dphi > 0.0 {
            let bound = (a * s.ln() - phi).exp() / dphi;
            if bound < TAIL_TOL {
                return Ok(s);
            }
        }
        s *= 2.0;
    }
    Err(FracError::Tolerance { achieved: f64::INFINITY, requested: TAIL_TOL })
}

/// `(1/2π) ∫_{-π}^{π} e^{cos φ - x cos νφ} cos(sin φ - x sin νφ + (1-μ)φ) dφ`;
/// the integrand is even in φ.
fn circle_integral(nu: f64, mu: f64, x: f64) -> (f64, f64, f64) {
    let f = |phi: f64| {
        (phi.cos() - x * (nu * phi).cos()).exp() * (phi.sin() - x * (nu * phi).sin() + (1.0 - mu) * phi).cos()
    };
    let r = rules();
    let panels = 8 + (x * nu) as usize;
    let lo = crate::numcore::quadrature::composite(&r.lo, f, 0.0, PI, panels);
    let hi = crate::numcore::quadrature::composite(&r.hi, f, 0.0, PI, panels);
    let sc = crate::numcore::quadrature::composite(&r.lo, |p| f(p).abs(), 0.0, PI, panels);
    (hi / PI, (hi - lo).abs() / PI, sc / PI)
}

/// Free-space fundamental solution
/// `K_α(x,t) = W_{-α/2, 1-α/2}(-|x| t^{-α/2}) / (2 t^{α/2})`.
pub fn fundamental_solution(alpha: f64, x: f64, t: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(FracError::Domain(format!("fundamental solution needs alpha in (0, 1], got {alpha}")));
    }
    if !(t > 0.0 && t.is_finite() && x.is_finite()) {
        return Err(FracError::Domain(format!("fundamental solution needs t > 0, got t = {t}")));
    }
    let par = WrightParams::new(-alpha / 2.0, 1.0 - alpha / 2.0)?;
    let th = t.powf(alpha / 2.0);
    let w = wright_neg(&par, x.abs() / th)?;
    Ok((w / (2.0 * th)).max(0.0))
}
