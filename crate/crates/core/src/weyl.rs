//! Diagonal Weyl coefficients `μ_m(z) = Σ_n c_{n,m} / (Λ_n − z)`, their energy
//! derivative, the regular remainder `h_{n,m}` and pole residues.
//!
//! The coefficients decay only like `n^{-3/2}` (the Laguerre factor oscillates with
//! an amplitude `~ n^{-1/4}`), so plain partial sums converge algebraically. With
//! `Λ_n − z = 2B(n + s)` the series is written as
//!
//! ```text
//! Σ_n g_n/(n+s) = Σ_{n<N} g_n/(n+s) + Σ_{n≥N} g_n t0^{n+s}/(n+s)
//!               + ∫_{t0}^1 t^{s−1} (G(t) − P_N(t)) dt
//! ```
//!
//! where `G(t) = Σ g_n t^n` has the closed Hardy–Hille form and `P_N` is its
//! degree-`N−1` truncation. The middle sum converges geometrically and is
//! certified through `|g_n| ≤ G(t1)/t1^n`; the integral is done by adaptive
//! Gauss–Kronrod in `u = √(1−t)`, which removes the `(1−t)^{-1/2}` endpoint
//! behaviour of `G`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::landau::{abs_m, boundary_coeff, landau_level, Params};
use crate::quad::integrate;
use crate::specfun::{ln_factorial, log_bessel_i_scaled, LaguerreRatios, SignedLog};

/// Truncation policy for the Weyl series.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeylSettings {
    pub term_tol: f64,
    pub n_max_cap: usize,
    pub tail_safety: usize,
}

impl Default for WeylSettings {
    fn default() -> Self {
        Self {
            term_tol: 1e-12,
            n_max_cap: 20_000,
            tail_safety: 8,
        }
    }
}

impl WeylSettings {
    pub fn validate(&self) -> Result<()> {
        if !(self.term_tol > 0.0) || self.n_max_cap == 0 {
            return Err(Error::InvalidParams(format!(
                "term_tol must be positive and n_max_cap at least 1 (got {}, {})",
                self.term_tol, self.n_max_cap
            )));
        }
        Ok(())
    }

    /// Settings with the cap doubled and the tolerance halved.
    pub fn refined(&self) -> Self {
        Self {
            term_tol: 0.5 * self.term_tol,
            n_max_cap: 2 * self.n_max_cap,
            tail_safety: self.tail_safety,
        }
    }
}

/// An evaluated series with its truncation diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeylEval<T> {
    pub value: T,
    /// Coefficients summed explicitly.
    pub n_used: usize,
    /// Bound on the truncation and quadrature error of `value`.
    pub tail_bound: f64,
}

impl WeylEval<Complex64> {
    fn real(self) -> WeylEval<f64> {
        WeylEval {
            value: self.value.re,
            n_used: self.n_used,
            tail_bound: self.tail_bound,
        }
    }
}

/// `s = −level + frac`, kept split so that `n + s` is exact for `n` near `level`.
#[derive(Debug, Clone, Copy)]
struct Shift {
    level: u32,
    frac: Complex64,
}

impl Shift {
    fn new(b: f64, level: u32, offset: Complex64) -> Self {
        Self {
            level,
            frac: -offset / (2.0 * b),
        }
    }

    fn plus(&self, n: u64) -> Complex64 {
        Complex64::new((n as f64 - f64::from(self.level)) + self.frac.re, self.frac.im)
    }

    fn value(&self) -> Complex64 {
        self.plus(0)
    }
}

/// Running coefficients `g_n = (ρ1ρ2)^{m/2} e^{−(ρ1+ρ2)/2} binom(n+m,n)/m! ℓ_n(ρ1) ℓ_n(ρ2)`.
struct Coefficients {
    log_pref: f64,
    log_binom: f64,
    n: u64,
    m: f64,
    first: LaguerreRatios,
    second: Option<LaguerreRatios>,
}

impl Coefficients {
    fn new(m: u32, rho1: f64, rho2: f64) -> Self {
        let mf = f64::from(m);
        let log_pow = if m == 0 { 0.0 } else { 0.5 * mf * (rho1.ln() + rho2.ln()) };
        Self {
            log_pref: log_pow - 0.5 * (rho1 + rho2) - ln_factorial(u64::from(m)),
            log_binom: 0.0,
            n: 0,
            m: mf,
            first: LaguerreRatios::new(m, rho1),
            second: (rho1 != rho2).then(|| LaguerreRatios::new(m, rho2)),
        }
    }
}

impl Iterator for Coefficients {
    type Item = f64;

    fn next(&mut self) -> Option<f64> {
        let l1 = self.first.next()?;
        let l2 = match self.second.as_mut() {
            Some(it) => it.next()?,
            None => l1,
        };
        let prod = l1 * l2;
        let value = if prod == 0.0 {
            0.0
        } else {
            prod.signum() * (self.log_pref + self.log_binom + prod.abs().ln()).exp()
        };
        self.n += 1;
        let n = self.n as f64;
        self.log_binom += ((n + self.m) / n).ln();
        Some(value)
    }
}

/// Series `S_k = Σ_{n ≠ excluded} g_n(ρ1, ρ2) / (n+s)^k`, `k ∈ {1, 2}`.
struct Kernel {
    m: u32,
    rho1: f64,
    rho2: f64,
    excluded: Option<u32>,
    power: u32,
}

impl Kernel {
    /// `ln G(t)` for the pair `(r1, r2)`, with `t = 1 − u²`.
    fn log_generating(m: u32, r1: f64, r2: f64, t: f64, u: f64) -> f64 {
        let sqrt_t = t.sqrt();
        let pq = (r1 * r2).sqrt();
        let diff = (r1.sqrt() - r2.sqrt()).powi(2);
        let u2 = u * u;
        let z = 2.0 * pq * sqrt_t / u2;
        let expo = -diff * (1.0 + t) / (2.0 * u2) - pq * u2 / (1.0 + sqrt_t).powi(2) + log_bessel_i_scaled(m, z);
        -0.5 * f64::from(m) * t.ln() - 2.0 * u.ln() + expo
    }

    /// Upper bound of `|g_n| t1^n` over all `n`.
    fn coefficient_bound(&self, t1: f64) -> f64 {
        let u1 = (1.0 - t1).sqrt();
        let g11 = Self::log_generating(self.m, self.rho1, self.rho1, t1, u1);
        if self.rho1 == self.rho2 {
            g11.exp()
        } else {
            let g22 = Self::log_generating(self.m, self.rho2, self.rho2, t1, u1);
            (0.5 * (g11 + g22)).exp()
        }
    }

    fn factor(&self, p: Complex64) -> Complex64 {
        if self.power == 1 {
            p.inv()
        } else {
            (p * p).inv()
        }
    }

    /// Returns `(S, n_used, error bound)`; `scale` converts `S` to the reported quantity.
    fn sum(&self, shift: Shift, settings: &WeylSettings, scale: f64) -> Result<(Complex64, usize, f64)> {
        settings.validate()?;
        if self.m > 0 && self.rho1 * self.rho2 == 0.0 {
            return Ok((Complex64::new(0.0, 0.0), 0, 0.0));
        }
        let s = shift.value();
        let from_shift = (-s.re + 0.5).ceil().max(0.0) as u64;
        let n_head = from_shift
            .max(u64::from(shift.level) + 1)
            .max(self.excluded.map_or(0, |e| u64::from(e) + 1))
            .max(1);
        if n_head as usize > settings.n_max_cap {
            return Err(Error::NonConvergence {
                terms: n_head as usize,
                last_term: f64::NAN,
                tail_bound: f64::INFINITY,
            });
        }
        let mut coeffs = Coefficients::new(self.m, self.rho1, self.rho2);
        let mut poly = Vec::with_capacity(n_head as usize);
        let mut head = Complex64::new(0.0, 0.0);
        for n in 0..n_head {
            let g = coeffs.next().unwrap_or(0.0);
            poly.push(g);
            if self.excluded == Some(n as u32) {
                continue;
            }
            head += g * self.factor(shift.plus(n));
        }

        let t0 = 0.5_f64.max((-4.0 * std::f64::consts::LN_2 / n_head as f64).exp());
        let t1 = 0.5 * (1.0 + t0);
        let ln_t0 = t0.ln();
        let ratio = t0 / t1;
        let g_bound = self.coefficient_bound(t1);
        let pref = g_bound * (s.re * ln_t0).exp() / (1.0 - ratio);
        let phi = |p: Complex64| {
            let a = p.norm();
            if self.power == 1 {
                1.0 / a
            } else {
                1.0 / (a * a) + ln_t0.abs() / a
            }
        };

        let mut geo = Complex64::new(0.0, 0.0);
        let mut n = n_head;
        let mut quiet = 0;
        let mut last_term;
        let mut bound;
        loop {
            let g = coeffs.next().unwrap_or(0.0);
            let p = shift.plus(n);
            let t0p = (p * ln_t0).exp();
            let weight = if self.power == 1 {
                t0p / p
            } else {
                t0p * ((p * p).inv() - ln_t0 / p)
            };
            let term = g * weight;
            geo += term;
            last_term = term.norm();
            n += 1;
            let target = 0.25 * settings.term_tol * (1.0 / scale).max((head + geo).norm());
            bound = pref * ratio.powf(n as f64) * phi(shift.plus(n));
            quiet = if last_term < target { quiet + 1 } else { 0 };
            if bound <= target && quiet >= settings.tail_safety {
                break;
            }
            if n as usize >= settings.n_max_cap {
                return Err(Error::NonConvergence {
                    terms: n as usize,
                    last_term: last_term * scale,
                    tail_bound: bound * scale,
                });
            }
        }

        let u_max = (1.0 - t0).sqrt();
        let m = self.m;
        let (r1, r2) = (self.rho1, self.rho2);
        let power = self.power;
        let integrand = |u: f64| -> Result<Complex64> {
            let u2 = u * u;
            let t = 1.0 - u2;
            let ln_t = (-u2).ln_1p();
            let gen = 2.0 * (Self::log_generating(m, r1, r2, t, u) + u.ln()).exp();
            let mut acc = 0.0;
            for &g in poly.iter().rev() {
                acc = acc * t + g;
            }
            let tail = gen - 2.0 * u * acc;
            let mut w = ((s - 1.0) * ln_t).exp();
            if power == 2 {
                w *= -ln_t;
            }
            Ok(w * tail)
        };
        let quad_tol = 0.25 * settings.term_tol * (1.0 / scale).max((head + geo).norm());
        let res = integrate(integrand, 0.0, u_max, quad_tol, 0.0, 4000)?;
        if !res.converged || !res.value.re.is_finite() {
            return Err(Error::NonConvergence {
                terms: n as usize,
                last_term: last_term * scale,
                tail_bound: res.error * scale,
            });
        }
        Ok((head + geo + res.value, n as usize, bound + res.error))
    }
}

/// Nearest Landau level to `re` and the offset of `z` from it.
fn locate(b: f64, z: Complex64) -> (u32, Complex64) {
    let level = ((z.re / b - 1.0) / 2.0).round().max(0.0);
    let level = if level > f64::from(u32::MAX - 1) { u32::MAX - 1 } else { level as u32 };
    (level, z - landau_level(b, level))
}

fn pole_guard(b: f64, z: Complex64, excluded: Option<u32>) -> Result<(u32, Complex64)> {
    let (level, offset) = locate(b, z);
    if offset.norm() < 1e-12 * b && excluded != Some(level) {
        return Err(Error::Pole {
            energy: z.re,
            level,
            distance: offset.norm(),
        });
    }
    Ok((level, offset))
}

fn eval(
    params: &Params,
    m: i32,
    level: u32,
    offset: Complex64,
    excluded: Option<u32>,
    power: u32,
    rho1: f64,
    settings: &WeylSettings,
) -> Result<WeylEval<Complex64>> {
    params.validate()?;
    let x = params.x();
    let kernel = Kernel {
        m: abs_m(m),
        rho1,
        rho2: x,
        excluded,
        power,
    };
    let scale = if power == 1 {
        0.5 * params.a
    } else {
        params.a / (4.0 * params.b)
    };
    let (value, n_used, err) = kernel.sum(Shift::new(params.b, level, offset), settings, scale)?;
    Ok(WeylEval {
        value: value * scale,
        n_used,
        tail_bound: err * scale,
    })
}

/// `μ_m(E)` for real `E` at least `1e-12·B` away from every Landau level.
pub fn mu(params: &Params, m: i32, e: f64, settings: &WeylSettings) -> Result<WeylEval<f64>> {
    let (level, offset) = pole_guard(params.b, Complex64::new(e, 0.0), None)?;
    Ok(eval(params, m, level, offset, None, 1, params.x(), settings)?.real())
}

/// `μ_m(z)` for complex `z`.
pub fn mu_complex(params: &Params, m: i32, z: Complex64, settings: &WeylSettings) -> Result<WeylEval<Complex64>> {
    let (level, offset) = pole_guard(params.b, z, None)?;
    eval(params, m, level, offset, None, 1, params.x(), settings)
}

/// `μ_m(Λ_level + offset)` with the offset passed exactly; only `offset = 0` is refused.
pub fn mu_offset(params: &Params, m: i32, level: u32, offset: f64, settings: &WeylSettings) -> Result<WeylEval<f64>> {
    if offset == 0.0 {
        return Err(Error::Pole {
            energy: landau_level(params.b, level),
            level,
            distance: 0.0,
        });
    }
    Ok(eval(params, m, level, Complex64::new(offset, 0.0), None, 1, params.x(), settings)?.real())
}

/// `dμ_m/dE = Σ c_{n,m}/(Λ_n − E)²`.
pub fn mu_derivative(params: &Params, m: i32, e: f64, settings: &WeylSettings) -> Result<WeylEval<f64>> {
    let (level, offset) = pole_guard(params.b, Complex64::new(e, 0.0), None)?;
    Ok(eval(params, m, level, offset, None, 2, params.x(), settings)?.real())
}

/// Derivative at `Λ_level + offset`.
pub fn mu_derivative_offset(
    params: &Params,
    m: i32,
    level: u32,
    offset: f64,
    settings: &WeylSettings,
) -> Result<WeylEval<f64>> {
    if offset == 0.0 {
        return Err(Error::Pole {
            energy: landau_level(params.b, level),
            level,
            distance: 0.0,
        });
    }
    Ok(eval(params, m, level, Complex64::new(offset, 0.0), None, 2, params.x(), settings)?.real())
}

/// `h_{n,m}(E) = Σ_{k≠n} c_{k,m}/(Λ_k − E)`; finite at `E = Λ_n`.
pub fn h_remainder(params: &Params, m: i32, n: u32, e: f64, settings: &WeylSettings) -> Result<WeylEval<f64>> {
    let (level, offset) = pole_guard(params.b, Complex64::new(e, 0.0), Some(n))?;
    Ok(eval(params, m, level, offset, Some(n), 1, params.x(), settings)?.real())
}

/// `h_{n,m}(Λ_n + offset)` with an exact offset (zero allowed).
pub fn h_remainder_offset(
    params: &Params,
    m: i32,
    n: u32,
    offset: f64,
    settings: &WeylSettings,
) -> Result<WeylEval<f64>> {
    Ok(eval(params, m, n, Complex64::new(offset, 0.0), Some(n), 1, params.x(), settings)?.real())
}

/// Radial profile `w(r) = 2πa Σ_n R_{n,m}(r) R_{n,m}(a) / (Λ_n − E)` at
/// `E = Λ_level + offset`; `w(a) = μ_m(E)`.
pub fn resolvent_profile(
    params: &Params,
    m: i32,
    r: f64,
    level: u32,
    offset: f64,
    settings: &WeylSettings,
) -> Result<WeylEval<f64>> {
    if offset == 0.0 {
        return Err(Error::Pole {
            energy: landau_level(params.b, level),
            level,
            distance: 0.0,
        });
    }
    if r < 0.0 {
        return Err(Error::Domain(format!("radius must be nonnegative, got {r}")));
    }
    let rho = 0.5 * params.b * r * r;
    Ok(eval(params, m, level, Complex64::new(offset, 0.0), None, 1, rho, settings)?.real())
}

/// Residue of `μ_m` at `Λ_n`, with its numerical confirmation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PoleResidue {
    /// `c_{n,m}` as a real number (zero when it underflows).
    pub coefficient: f64,
    pub log_coefficient: SignedLog,
    /// Richardson limit of `(Λ_n − E) μ_m(E)` along `E = Λ_n + 2^{−j} B`.
    pub extrapolated: f64,
    /// `|extrapolated − coefficient| / coefficient` (absolute when the coefficient is 0).
    pub discrepancy: f64,
    pub underflow: bool,
    pub verified: bool,
}

/// `c_{n,m}` together with a check that `(Λ_n − E)·μ_m(E) → c_{n,m}` as `E ↓ Λ_n`.
pub fn pole_residue(params: &Params, m: i32, n: u32, settings: &WeylSettings) -> Result<PoleResidue> {
    params.validate()?;
    let log_c = boundary_coeff(params.b, params.a, n, m);
    let coefficient = log_c.to_real();
    let underflow = log_c.underflows() || (!log_c.is_zero() && coefficient == 0.0);
    let tight = WeylSettings {
        term_tol: settings.term_tol.min(1e-14),
        ..*settings
    };
    let mut samples = Vec::new();
    for j in 10..=20 {
        let delta = params.b * 0.5_f64.powi(j);
        let value = mu_offset(params, m, n, delta, &tight)?.value;
        samples.push(-delta * value);
    }
    let extrapolated = richardson(&samples);
    let discrepancy = if coefficient > 0.0 {
        (extrapolated - coefficient).abs() / coefficient
    } else {
        extrapolated.abs()
    };
    Ok(PoleResidue {
        coefficient,
        log_coefficient: log_c,
        extrapolated,
        discrepancy,
        underflow,
        verified: discrepancy <= 1e-8,
    })
}

/// Richardson extrapolation to step zero for samples at steps halving each time.
fn richardson(samples: &[f64]) -> f64 {
    let mut table: Vec<Vec<f64>> = Vec::with_capacity(samples.len());
    let mut best = *samples.last().unwrap_or(&0.0);
    let mut best_change = f64::INFINITY;
    for (i, &f) in samples.iter().enumerate() {
        let mut row = vec![f];
        for k in 1..=i {
            let factor = 2.0_f64.powi(k as i32) - 1.0;
            let v = row[k - 1] + (row[k - 1] - table[i - 1][k - 1]) / factor;
            let change = (v - row[k - 1]).abs();
            if change < best_change {
                best_change = change;
                best = v;
            }
            row.push(v);
        }
        table.push(row);
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(b: f64, a: f64) -> Params {
        Params::new(b, a, -1.0).unwrap()
    }

    fn close(got: f64, want: f64, tol: f64) {
        assert!((got - want).abs() <= tol * want.abs().max(1e-300), "{got} vs {want}");
    }

    #[test]
    fn real_reference_values() {
        // 40-digit confluent-hypergeometric closed form
        let s = WeylSettings::default();
        close(mu(&p(1.0, 1.1), 0, 2.0, &s).unwrap().value, -0.353_029_435_563_981_659_68, 1e-11);
        close(mu(&p(1.0, 1.1), 3, 0.3, &s).unwrap().value, 0.257_000_631_869_377_114_955, 1e-11);
        close(mu(&p(1.0, 3.0), 5, 6.5, &s).unwrap().value, 0.377_077_841_051_906_043_253, 1e-11);
        close(mu(&p(2.0, 0.7), 2, -3.0, &s).unwrap().value, 0.176_001_175_088_293_360_278, 1e-11);
        close(mu(&p(1.0, 1.0), 0, 0.0, &s).unwrap().value, 0.782_843_521_922_764_371_82, 1e-11);
        close(mu(&p(1.0, 1.1), 2, 9.5, &s).unwrap().value, -0.408_547_265_701_346_975_88, 1e-11);
        close(mu(&p(1.0, 1.1), 0, -1e6, &s).unwrap().value, 4.999_999_760_279_270_688e-4, 1e-10);
        close(mu_offset(&p(1.0, 1.1), 1, 10, 1e-6, &s).unwrap().value, -128_077.917_905_721_062_63, 1e-11);
    }

    #[test]
    fn complex_reference_values() {
        let s = WeylSettings::default();
        let v = mu_complex(&p(1.0, 1.0), 0, Complex64::new(2.0, 0.1), &s).unwrap().value;
        close(v.re, -0.310_252_714_248_633_341_59, 1e-11);
        close(v.im, 0.075_949_992_322_297_571_283, 1e-11);
        let v = mu_complex(&p(1.3, 2.0), 7, Complex64::new(-4.0, 2.0), &s).unwrap().value;
        close(v.re, 0.164_217_838_967_947_747_88, 1e-11);
        close(v.im, 0.018_576_275_089_858_828_834, 1e-10);
    }

    #[test]
    fn derivative_reference_values() {
        let s = WeylSettings::default();
        close(mu_derivative(&p(1.0, 1.0), 0, 2.0, &s).unwrap().value, 0.767_008_546_723_046_179_82, 1e-11);
        close(mu_derivative(&p(1.0, 1.1), 3, 4.2, &s).unwrap().value, 0.264_278_634_972_114_460_28, 1e-11);
    }

    #[test]
    fn remainder_reference_values() {
        let s = WeylSettings::default();
        let params = p(1.0, 1.1);
        for (m, want) in [
            (0, 0.190_915_565_735_844_377_58),
            (5, 0.131_042_038_072_011_176_66),
            (12, 0.048_517_779_225_319_410_859),
            (20, 0.028_406_178_432_281_279_695),
            (40, 0.013_966_753_741_483_655_779),
        ] {
            close(h_remainder(&params, m, 0, 1.0, &s).unwrap().value, want, 1e-11);
        }
    }

    #[test]
    fn profile_reference_values() {
        let s = WeylSettings::default();
        let params = p(1.0, 1.1);
        let w = |r: f64| resolvent_profile(&params, 1, r, 1, 2.3 - 3.0, &s).unwrap().value;
        close(w(0.5), 0.301_430_607_563_223_398_10, 1e-11);
        close(w(2.0), -0.350_075_558_197_601_832_55, 1e-11);
        close(w(1.1), 0.432_912_861_119_050_709_77, 1e-11);
        assert_eq!(resolvent_profile(&params, 2, 0.0, 1, -0.7, &s).unwrap().value, 0.0);
    }

    #[test]
    fn pole_is_refused() {
        let s = WeylSettings::default();
        assert!(matches!(mu(&p(1.0, 1.1), 0, 3.0, &s), Err(Error::Pole { level: 1, .. })));
        assert!(matches!(mu(&p(1.0, 1.1), 0, 3.0 + 1e-13, &s), Err(Error::Pole { .. })));
        assert!(mu_offset(&p(1.0, 1.1), 0, 1, 0.0, &s).is_err());
        assert!(mu_offset(&p(1.0, 1.1), 0, 1, 1e-14, &s).is_ok());
    }

    #[test]
    fn symmetric_in_m() {
        let s = WeylSettings::default();
        for m in 1..6 {
            let a = mu(&p(1.4, 0.9), m, 4.1, &s).unwrap();
            let b = mu(&p(1.4, 0.9), -m, 4.1, &s).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn herglotz_example() {
        let v = mu_complex(&p(1.0, 1.0), 0, Complex64::new(2.0, 0.1), &WeylSettings::default()).unwrap();
        assert!(v.value.im > 0.0);
    }

    #[test]
    fn remainder_identity() {
        let s = WeylSettings::default();
        let params = p(1.0, 1.1);
        for &(m, n, e) in &[(0, 0, 2.0), (2, 1, 2.7), (4, 2, 6.0)] {
            let full = mu(&params, m, e, &s).unwrap().value;
            let h = h_remainder(&params, m, n, e, &s).unwrap().value;
            let c = boundary_coeff(1.0, 1.1, n, m).to_real();
            let pole = c / (landau_level(1.0, n) - e);
            assert!((full - h - pole).abs() <= 1e-10 * full.abs().max(pole.abs()));
        }
    }

    #[test]
    fn residue_examples() {
        let s = WeylSettings::default();
        let r = pole_residue(&p(1.0, 1.0), 0, 0, &s).unwrap();
        assert!((r.coefficient - (-0.5_f64).exp()).abs() < 1e-15);
        assert!(r.verified, "{r:?}");
        let r = pole_residue(&p(1.0, 2.0_f64.sqrt()), 0, 1, &s).unwrap();
        assert!(r.coefficient < 1e-30);
        let r = pole_residue(&p(1.0, 1.1), 2, 1, &s).unwrap();
        assert!(r.discrepancy <= 1e-8, "{r:?}");
    }

    #[test]
    fn richardson_removes_polynomial_terms() {
        let f = |h: f64| 2.0 - 3.0 * h + 0.5 * h * h - h * h * h;
        let samples: Vec<f64> = (0..8).map(|j| f(0.5_f64.powi(j))).collect();
        assert!((richardson(&samples) - 2.0).abs() < 1e-12);
    }
}
