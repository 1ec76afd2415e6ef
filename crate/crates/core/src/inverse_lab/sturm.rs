use num_complex::Complex64;

use crate::error::{FracError, Result};
use crate::specfun::{ml, ml_zeros, MlPolicy};

/// Which fractional derivative defines the Sturm-Liouville operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlVariant {
    Caputo,
    RiemannLiouville,
}

/// Dirichlet eigenvalues of `-∂_x^β` on `(0, 1)` with `q = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct SlSpectrum {
    pub beta: f64,
    pub variant: SlVariant,
    pub eigenvalues: Vec<Complex64>,
}

impl SlSpectrum {
    /// `x E_{β,2}(-λ x^β)` or `x^{β-1} E_{β,β}(-λ x^β)` for eigenvalue `j` (0-based).
    pub fn eigenfunction(&self, j: usize, x: f64) -> Result<Complex64> {
        let lambda = *self
            .eigenvalues
            .get(j)
            .ok_or_else(|| FracError::Domain(format!("eigenvalue index {j} out of range")))?;
        if !(0.0..=1.0).contains(&x) {
            return Err(FracError::Domain(format!("x = {x} outside [0, 1]")));
        }
        let z = -lambda * x.powf(self.beta);
        let p = MlPolicy::default();
        Ok(match self.variant {
            SlVariant::Caputo => ml(self.beta, 2.0, z, &p)? * x,
            SlVariant::RiemannLiouville => {
                if x == 0.0 {
                    return Ok(Complex64::new(0.0, 0.0));
                }
                ml(self.beta, self.beta, z, &p)? * x.powf(self.beta - 1.0)
            }
        })
    }
}

pub fn sturm_liouville_spectrum(beta: f64, variant: SlVariant, count: usize) -> Result<SlSpectrum> {
    let w = match variant {
        SlVariant::Caputo => 2.0,
        SlVariant::RiemannLiouville => beta,
    };
    Ok(SlSpectrum { beta, variant, eigenvalues: ml_zeros(beta, w, count)? })
}

/// For the `j`-th eigenvalue with `Im λ >= 0` (1-based): the sup over `x`
/// of `|h_j(x)| = |x E_{β,2}(-λ_j x^β) / λ_j|`, and `|u_j(1/2, y)|` for the
/// separated Cauchy solution `x E(-λ x^β) y E(λ y^β) / λ²`.
pub fn cauchy_growth_demo(beta: f64, j: usize, y: f64) -> Result<(f64, f64)> {
    if j == 0 {
        return Err(FracError::Domain("mode index starts at 1".into()));
    }
    if !(y > 0.0 && y <= 1.0) {
        return Err(FracError::Domain(format!("height y = {y} outside (0, 1]")));
    }
    let mut count = 2 * j;
    let lambda = loop {
        let s = sturm_liouville_spectrum(beta, SlVariant::Caputo, count.min(64))?;
        let upper: Vec<Complex64> = s.eigenvalues.iter().copied().filter(|l| l.im >= 0.0).collect();
        if upper.len() >= j {
            break upper[j - 1];
        }
        if count >= 64 {
            return Err(FracError::ZeroNotFound { index: j });
        }
        count *= 2;
    };
    let p = MlPolicy::default();
    let nodes = 200;
    let mut sup = 0.0f64;
    for i in 0..=nodes {
        let x = i as f64 / nodes as f64;
        let v = ml(beta, 2.0, -lambda * x.powf(beta), &p)? * x / lambda;
        sup = sup.max(v.norm());
    }
    let xpart = ml(beta, 2.0, -lambda * 0.5f64.powf(beta), &p)? * 0.5;
    let ypart = ml(beta, 2.0, lambda * y.powf(beta), &p)? * y;
    Ok((sup, (xpart * ypart / (lambda * lambda)).norm()))
}
