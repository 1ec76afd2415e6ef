use crate::error::{FracError, Result};
use crate::ComplexValue;
use std::f64::consts::PI;

pub const DEFAULT_TALBOT_NODES: usize = 32;

// Contour shape constants of the optimised cotangent contour.
const C_SHIFT: f64 = -0.6122;
const C_COT: f64 = 0.5017;
const C_ARG: f64 = 0.6407;
const C_IM: f64 = 0.2645;

/// Inverse Laplace transform `f(t) = (1/2πi) ∫ F(z) e^{zt} dz` by the
/// midpoint rule on a Talbot-type contour scaled by `n_nodes / t`.
///
/// `F` must be analytic to the right of the contour and satisfy
/// `F(conj z) = conj F(z)` (real-valued `f`).
pub fn talbot_invert<F>(f: F, t: f64, n_nodes: usize) -> Result<f64>
where
    F: Fn(ComplexValue) -> ComplexValue,
{
    if !(t > 0.0 && t.is_finite()) {
        return Err(FracError::Domain(format!("Talbot inversion needs t > 0, got {t}")));
    }
    if n_nodes < 2 {
        return Err(FracError::Domain("Talbot inversion needs at least 2 nodes".into()));
    }
    let half = n_nodes / 2;
    let scale = (2 * half) as f64 / t;
    let mut acc = 0.0;
    for k in 0..half {
        // Midpoints in (0, π); the reflected half is the conjugate.
        let theta = (k as f64 + 0.5) * PI / half as f64;
        let at = C_ARG * theta;
        let cot = at.cos() / at.sin();
        let z = ComplexValue::new(scale * (C_SHIFT + C_COT * theta * cot), scale * C_IM * theta);
        let dz = ComplexValue::new(scale * C_COT * (cot - at / at.sin().powi(2)), scale * C_IM);
        let fz = f(z);
        if !(fz.re.is_finite() && fz.im.is_finite()) {
            return Err(FracError::NonFinite("Laplace transform on the Talbot contour"));
        }
        acc += ((z * t).exp() * fz * dz).im;
    }
    // Conjugate pairs of midpoints contribute 2i·Im, so the sum collapses to
    // (2/N)·Σ Im over the upper half.
    let v = acc / half as f64;
    if !v.is_finite() {
        return Err(FracError::NonFinite("Talbot sum"));
    }
    Ok(v)
}
