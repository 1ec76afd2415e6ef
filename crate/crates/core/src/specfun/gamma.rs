use crate::error::{FracError, Result};
use std::f64::consts::PI;

const SQRT_2PI: f64 = 2.506_628_274_631_000_7;

const STIRLING_FROM: f64 = 10.0;
// B_{2k} / (2k (2k-1)) for k = 1..9.
const STIRLING: [f64; 9] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
];

/// Factors with `Γ(x) = √(2π)·p·q·a` for `x >= 0.5`, the power split so that
/// no factor overflows before the product does. Stirling's series, after
/// shifting `x` up to `STIRLING_FROM` by the recurrence.
fn gamma_factors(x: f64) -> (f64, f64, f64) {
    let (z, prod) = shift_up(x);
    let p = z.powf((z - 0.5) / 2.0);
    let q = p * (-z).exp();
    (p, q, stirling_series(z).exp() / prod)
}

/// `(x + n, x (x+1) ... (x+n-1))` with the smallest `n` reaching `STIRLING_FROM`.
fn shift_up(x: f64) -> (f64, f64) {
    let mut z = x;
    let mut prod = 1.0;
    while z < STIRLING_FROM {
        prod *= z;
        z += 1.0;
    }
    (z, prod)
}

fn stirling_series(x: f64) -> f64 {
    let r = 1.0 / (x * x);
    let mut acc = 0.0;
    for c in STIRLING.iter().rev() {
        acc = acc * r + c;
    }
    acc / x
}

/// `sin(πx)` with exact argument reduction.
pub fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * (x / 2.0).round();
    if r > 0.5 {
        (PI * (1.0 - r)).sin()
    } else if r < -0.5 {
        -(PI * (1.0 + r)).sin()
    } else {
        (PI * r).sin()
    }
}

fn is_pole(x: f64) -> bool {
    x <= 0.0 && x == x.round()
}

/// Euler's Gamma function.
pub fn gamma(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(FracError::Domain(format!("gamma of non-finite {x}")));
    }
    if is_pole(x) {
        return Err(FracError::PoleArgument(x));
    }
    if x == x.round() && x <= 23.0 {
        // Exact factorials.
        let mut f = 1.0;
        for k in 2..(x as i64) {
            f *= k as f64;
        }
        return Ok(f);
    }
    if x < 0.5 {
        let (p, q, a) = gamma_factors(1.0 - x);
        let v = PI / sin_pi(x) / SQRT_2PI / p / q / a;
        return Ok(v);
    }
    let (p, q, a) = gamma_factors(x);
    Ok(SQRT_2PI * p * q * a)
}

/// Reciprocal Gamma, an entire function: zero at the poles of Γ.
pub fn rgamma(x: f64) -> f64 {
    if is_pole(x) {
        return 0.0;
    }
    if x > 170.0 {
        return (-ln_gamma(x)).exp();
    }
    if x < -170.0 {
        // 1/Γ(x) = sin(πx) Γ(1-x) / π, computed in logs.
        return sin_pi(x) / PI * ln_gamma(1.0 - x).exp();
    }
    match gamma(x) {
        Ok(g) => 1.0 / g,
        Err(_) => 0.0,
    }
}

/// `ln Γ(x)` for `x > 0`.
pub fn ln_gamma(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if x < 0.5 {
        return (PI / sin_pi(x)).ln() - ln_gamma(1.0 - x);
    }
    let (z, prod) = shift_up(x);
    0.5 * (2.0 * PI).ln() + (z - 0.5) * z.ln() - z + stirling_series(z) - prod.ln()
}
