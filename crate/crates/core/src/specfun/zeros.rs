//! Zeros of `λ ↦ E_{β,w}(-λ)` for `β ∈ (1, 2]`, `w ∈ {2, β}`.

use super::gamma::{gamma, rgamma};
use super::mittag_leffler::{ml, ml_derivative, MlPolicy};
use crate::error::{FracError, Result};
use crate::ComplexValue as C;
use std::f64::consts::PI;

const NEWTON_TOL: f64 = 1e-12;
const MAX_NEWTON: usize = 100;
const RETRIES: usize = 10;
const MAX_COUNT: usize = 64;

/// The first `count` zeros of `E_{β,w}(-λ)` ordered by modulus, conjugate
/// pairs adjacent with the positive imaginary part first. When `count`
/// would split a pair, the partner is returned as well.
pub fn ml_zeros(beta: f64, weight_beta: f64, count: usize) -> Result<Vec<C>> {
    if !(beta > 1.0 && beta <= 2.0) {
        return Err(FracError::Domain(format!("ml_zeros needs beta in (1, 2], got {beta}")));
    }
    let rl = (weight_beta - beta).abs() < 1e-14;
    if !(rl || weight_beta == 2.0) {
        return Err(FracError::Domain(format!("weight_beta must be 2 or beta, got {weight_beta}")));
    }
    if count == 0 || count > MAX_COUNT {
        return Err(FracError::Domain(format!("count must lie in 1..={MAX_COUNT}, got {count}")));
    }
    let z = ZeroFinder { beta, w: weight_beta, rl, policy: MlPolicy::default() };
    let mut found: Vec<C> = Vec::new();

    // Complex pairs from the large-λ balance of the exponential and the
    // leading algebraic term; skipped when the algebraic coefficient vanishes.
    let seeds_ok = beta < 2.0;
    if seeds_ok {
        for k in 1..=count {
            let seed = z.seed(k);
            match z.refine(seed, &found) {
                Some(lam) => z.push(&mut found, lam),
                None => return Err(FracError::ZeroNotFound { index: k }),
            }
        }
    }
    // Real zeros by sign changes up to the modulus of the count-th candidate.
    let mut limit = if seeds_ok && found.len() >= count {
        let mut m: Vec<f64> = found.iter().map(|v| v.norm()).collect();
        m.sort_by(f64::total_cmp);
        m[count - 1] * 1.05
    } else {
        ((count as f64 + 1.0) * PI).powf(beta) * 1.05
    };
    loop {
        for r in z.real_scan(limit)? {
            z.push(&mut found, C::new(r, 0.0));
        }
        found.sort_by(|a, b| a.norm().total_cmp(&b.norm()).then(b.im.total_cmp(&a.im)));
        if found.len() >= count {
            break;
        }
        limit *= 2.0;
        if limit > 1e8 {
            return Err(FracError::ZeroNotFound { index: found.len() + 1 });
        }
    }
    let mut n = count;
    if found[n - 1].im > 0.0 && n < found.len() {
        n += 1;
    }
    found.truncate(n);
    for (i, v) in found.iter().enumerate() {
        if z.eval(*v)?.norm() > 1e-10 {
            return Err(FracError::ZeroNotFound { index: i + 1 });
        }
    }
    Ok(found)
}

struct ZeroFinder {
    beta: f64,
    w: f64,
    rl: bool,
    policy: MlPolicy,
}

impl ZeroFinder {
    fn eval(&self, lam: C) -> Result<C> {
        ml(self.beta, self.w, -lam, &self.policy)
    }

    fn deriv(&self, lam: C) -> Result<C> {
        ml_derivative(self.beta, self.w, -lam, &self.policy).map(|d| -d)
    }

    /// Fixed point of `Z = c + e Log Z + 2πik` with `λ = -Z^β`.
    fn seed(&self, k: usize) -> C {
        let (c, e) = if self.rl {
            ((self.beta / gamma(-self.beta).unwrap_or(1.0)).ln(), -1.0 - self.beta)
        } else {
            ((self.beta * rgamma(2.0 - self.beta).recip()).ln(), 1.0 - self.beta)
        };
        let shift = C::new(0.0, 2.0 * PI * k as f64);
        let mut zz = shift + c;
        for _ in 0..50 {
            zz = c + e * zz.ln() + shift;
        }
        -(zz.ln() * self.beta).exp()
    }

    /// Plain Newton from the seed first: deflation can push a good seed
    /// past its own zero onto a farther one.
    fn refine(&self, seed: C, known: &[C]) -> Option<C> {
        if let Some(l) = self.newton(seed, &[]) {
            let dup = known.iter().any(|k| (k - l).norm() <= 1e-8 * l.norm().max(1.0));
            if !dup {
                return Some(l);
            }
        }
        for attempt in 0..=RETRIES {
            let scale = if attempt == 0 {
                1.0
            } else {
                let j = attempt.div_ceil(2) as f64;
                1.0 + if attempt % 2 == 1 { 0.05 * j } else { -0.05 * j }
            };
            if let Some(l) = self.newton(seed * scale, known) {
                return Some(l);
            }
        }
        None
    }

    fn newton(&self, start: C, known: &[C]) -> Option<C> {
        let mut lam = start;
        for _ in 0..MAX_NEWTON {
            let f = self.eval(lam).ok()?;
            let d = self.deriv(lam).ok()?;
            if f.norm() == 0.0 {
                break;
            }
            let mut g = d / f;
            for &k in known {
                g -= 1.0 / (lam - k);
            }
            let step = 1.0 / g;
            if !(step.re.is_finite() && step.im.is_finite()) {
                return None;
            }
            lam -= step;
            if step.norm() <= 1e-14 * lam.norm() {
                break;
            }
        }
        if lam.im.abs() <= 1e-10 * lam.norm() {
            lam.im = 0.0;
        }
        let f = self.eval(lam).ok()?;
        let dup = known.iter().any(|k| (k - lam).norm() <= 1e-8 * lam.norm().max(1.0));
        if f.norm() < NEWTON_TOL && !dup && lam.re > 0.0 {
            Some(lam)
        } else {
            None
        }
    }

    fn push(&self, found: &mut Vec<C>, lam: C) {
        let close = |a: &C| (a - lam).norm() <= 1e-8 * lam.norm().max(1.0);
        if found.iter().any(close) {
            return;
        }
        found.push(lam);
        if lam.im != 0.0 {
            found.push(lam.conj());
        }
    }

    /// Real zeros in `(0, limit]` from sign changes on a grid uniform in
    /// `λ^{1/β}`, polished by bisection and Newton.
    fn real_scan(&self, limit: f64) -> Result<Vec<f64>> {
        let f = |x: f64| self.eval(C::new(x, 0.0)).map(|v| v.re);
        let umax = limit.powf(1.0 / self.beta);
        let du = 0.02;
        let steps = (umax / du).ceil() as usize;
        let mut roots = Vec::new();
        let mut x0 = 0.0;
        let mut f0 = f(x0)?;
        for i in 1..=steps {
            let x1 = (i as f64 * du).powf(self.beta);
            let f1 = f(x1)?;
            if f0 == 0.0 {
                roots.push(x0);
            } else if f0 * f1 < 0.0 {
                roots.push(self.bisect(x0, x1, f0)?);
            }
            x0 = x1;
            f0 = f1;
        }
        Ok(roots.into_iter().filter(|&r| r > 0.0).collect())
    }

    fn bisect(&self, mut a: f64, mut b: f64, mut fa: f64) -> Result<f64> {
        let f = |x: f64| self.eval(C::new(x, 0.0)).map(|v| v.re);
        for _ in 0..200 {
            let m = 0.5 * (a + b);
            if b - a <= 1e-15 * m {
                break;
            }
            let fm = f(m)?;
            if fm == 0.0 {
                return Ok(m);
            }
            if fa * fm < 0.0 {
                b = m;
            } else {
                a = m;
                fa = fm;
            }
        }
        Ok(0.5 * (a + b))
    }
}
