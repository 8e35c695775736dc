//! Landau levels, the radial factors of the level eigenfunctions, the boundary
//! coefficients `c_{n,m}` and the semiclassical resonance index.
//!
//! Angular momentum `m` enters every formula through `|m|` only, so results for
//! `m` and `-m` are bit-identical.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::{brent, golden_section_max};
use crate::specfun::{laguerre, laguerre_scaled, ln_binomial, ln_factorial, log_bessel_i_scaled, SignedLog};
use crate::weyl::WeylSettings;

/// Physical configuration: field `b`, wall radius `a`, coupling `alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Params {
    #[serde(rename = "B")]
    pub b: f64,
    pub a: f64,
    pub alpha: f64,
}

impl Params {
    pub fn new(b: f64, a: f64, alpha: f64) -> Result<Self> {
        let p = Self { b, a, alpha };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.b > 0.0 && self.b.is_finite()) {
            return Err(Error::InvalidParams(format!("B must be positive and finite, got {}", self.b)));
        }
        if !(self.a > 0.0 && self.a.is_finite()) {
            return Err(Error::InvalidParams(format!("a must be positive and finite, got {}", self.a)));
        }
        if !self.alpha.is_finite() {
            return Err(Error::InvalidParams(format!("alpha must be finite, got {}", self.alpha)));
        }
        Ok(())
    }

    /// Laguerre argument `x = B a² / 2`.
    pub fn x(&self) -> f64 {
        0.5 * self.b * self.a * self.a
    }

    pub fn with_alpha(&self, alpha: f64) -> Self {
        Self { alpha, ..*self }
    }

    /// Magnetic length `1/√B`.
    pub fn magnetic_length(&self) -> f64 {
        self.b.sqrt().recip()
    }
}

pub(crate) fn abs_m(m: i32) -> u32 {
    m.unsigned_abs()
}

/// `Λ_n = B(2n+1)`.
pub fn landau_level(b: f64, n: u32) -> f64 {
    b * (2.0 * f64::from(n) + 1.0)
}

/// `|C_{n,m}|² = B^{|m|+1} n! / (2^{|m|+1} π (n+|m|)!)`.
pub fn norm_const_sq(b: f64, n: u32, m: i32) -> SignedLog {
    let k = f64::from(abs_m(m));
    let log = (k + 1.0) * (0.5 * b).ln() + ln_factorial(u64::from(n))
        - ln_factorial(u64::from(n) + u64::from(abs_m(m)))
        - PI.ln();
    SignedLog::from_log(log)
}

/// Radial factor `C_{n,m} r^{|m|} e^{−Br²/4} L_n^{(|m|)}(Br²/2)` as a signed log.
pub fn eigenfunction_radial_log(b: f64, n: u32, m: i32, r: f64) -> SignedLog {
    let k = abs_m(m);
    if r == 0.0 && k > 0 {
        return SignedLog::ZERO;
    }
    let rho = 0.5 * b * r * r;
    let lag = laguerre_scaled(n, k, rho).to_signed_log();
    let radial = if k == 0 { 0.0 } else { f64::from(k) * r.ln() };
    SignedLog::from_log(0.5 * norm_const_sq(b, n, m).log_abs() + radial - 0.5 * rho).mul(lag)
}

pub fn eigenfunction_radial(b: f64, n: u32, m: i32, r: f64) -> f64 {
    eigenfunction_radial_log(b, n, m, r).to_real()
}

/// `2π r |R_{n,m}(r)|²`, the radial probability density.
pub fn radial_probability(b: f64, n: u32, m: i32, r: f64) -> f64 {
    if r <= 0.0 {
        return 0.0;
    }
    let psi = eigenfunction_radial_log(b, n, m, r);
    if psi.is_zero() {
        return 0.0;
    }
    ((2.0 * PI * r).ln() + 2.0 * psi.log_abs()).exp()
}

/// Argmax over `r > 0` of [`radial_probability`].
///
/// A coarse scan picks the global lobe, golden-section narrows it, and a Brent
/// solve on the logarithmic derivative polishes the result.
pub fn peak_radius(b: f64, n: u32, m: i32) -> f64 {
    let k = abs_m(m);
    let upper = 3.0 * ((2.0 * f64::from(n) + 2.0 * f64::from(k) + 2.0) / b).sqrt();
    let log_p = |r: f64| {
        let v = eigenfunction_radial_log(b, n, m, r);
        if v.is_zero() {
            f64::NEG_INFINITY
        } else {
            (2.0 * PI * r).ln() + 2.0 * v.log_abs()
        }
    };
    let samples = 400 * (n as usize + 1);
    let step = upper / samples as f64;
    let (best, _) = (1..samples).fold((1, f64::NEG_INFINITY), |acc, i| {
        let v = log_p(i as f64 * step);
        if v > acc.1 {
            (i, v)
        } else {
            acc
        }
    });
    let lo = (best as f64 - 1.0) * step;
    let hi = (best as f64 + 1.0) * step;
    let coarse = golden_section_max(log_p, lo.max(1e-3 * step), hi, 1e-10);
    let dlog = |r: f64| {
        let rho = 0.5 * b * r * r;
        let kf = f64::from(k);
        let l = laguerre(n, k, rho);
        let dl = if n == 0 { 0.0 } else { laguerre(n - 1, k + 1, rho) };
        Ok(((2.0 * kf + 1.0) / r - b * r) * l - 2.0 * b * r * dl)
    };
    let width = 4.0 * step;
    let (a0, b0) = ((coarse - width).max(1e-3 * step), (coarse + width).min(upper));
    match brent(dlog, a0, b0, 0.0, 1e-15, 200) {
        Ok(root) if (root.x - coarse).abs() <= width => root.x,
        _ => coarse,
    }
}

/// The `√(2|m|/B)` concentration radius quoted in the semiclassical heuristic.
pub fn heuristic_radius(b: f64, m: i32) -> f64 {
    (2.0 * f64::from(abs_m(m)) / b).sqrt()
}

/// `c_{n,m} = a B e^{−x} x^{|m|} [n!/(n+|m|)!] L_n^{(|m|)}(x)²`, `x = Ba²/2`.
pub fn boundary_coeff(b: f64, a: f64, n: u32, m: i32) -> SignedLog {
    let k = abs_m(m);
    let x = 0.5 * b * a * a;
    let lag = laguerre_scaled(n, k, x);
    if lag.ratio == 0.0 {
        return SignedLog::ZERO;
    }
    let log_l = lag.ratio.abs().ln() + lag.log_binom;
    let log = (a * b).ln() - x + f64::from(k) * x.ln() + ln_factorial(u64::from(n))
        - ln_factorial(u64::from(n) + u64::from(k))
        + 2.0 * log_l;
    SignedLog::from_log(log)
}

/// Prefactor `K_n = a n! B e^{−x}` of the large-`|m|` asymptotics.
pub fn asymptotic_prefactor(b: f64, a: f64, n: u32) -> f64 {
    (a.ln() + ln_factorial(u64::from(n)) + b.ln() - 0.5 * b * a * a).exp()
}

/// The prefactor in its printed form `n! B e^{−x} / 2`; it differs from
/// [`asymptotic_prefactor`] by the factor `2a`.
pub fn printed_asymptotic_prefactor(b: f64, a: f64, n: u32) -> f64 {
    (ln_factorial(u64::from(n)) + b.ln() - 0.5 * b * a * a).exp() / 2.0
}

/// `K_n x^{|m|} binom(n+|m|, n)² / (n+|m|)!`, the leading behaviour of
/// [`boundary_coeff`] as `|m| → ∞`.
pub fn boundary_coeff_asymptotic(b: f64, a: f64, n: u32, m: i32) -> SignedLog {
    let k = u64::from(abs_m(m));
    let n64 = u64::from(n);
    let x = 0.5 * b * a * a;
    let log_binom = ln_factorial(n64 + k) - ln_factorial(n64) - ln_factorial(k);
    let log = asymptotic_prefactor(b, a, n).ln() + k as f64 * x.ln() + 2.0 * log_binom
        - ln_factorial(n64 + k);
    SignedLog::from_log(log)
}

/// Semiclassical resonance index `m_* = B a²/2 − (n + 1/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Resonance {
    pub value: f64,
    /// Nearest integer, ties to even.
    pub nearest: i64,
}

pub fn resonance_index(b: f64, a: f64, n: u32) -> Resonance {
    let value = 0.5 * b * a * a - (f64::from(n) + 0.5);
    Resonance {
        value,
        nearest: value.round_ties_even() as i64,
    }
}

/// `r_c = √(2n+1)/√B`.
pub fn cyclotron_radius(b: f64, n: u32) -> f64 {
    (2.0 * f64::from(n) + 1.0).sqrt() / b.sqrt()
}

/// Weighted Hardy–Hille sum rule for one mode: the series `Σ_n c_{n,m} tⁿ` and its
/// closed form `aB e^{−x} t^{−|m|/2} (1−t)^{−1} e^{−2xt/(1−t)} I_{|m|}(2x√t/(1−t))`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SumRule {
    pub series: f64,
    pub closed_form: f64,
    pub n_used: usize,
    /// Bound on the omitted tail from `|L_n^{(k)}(x)| ≤ binom(n+k, n) e^{x/2}`.
    pub tail_bound: f64,
}

impl SumRule {
    pub fn relative_error(&self) -> f64 {
        ((self.series - self.closed_form) / self.closed_form).abs()
    }
}

pub fn hardy_hille_sum(b: f64, a: f64, m: i32, t: f64, settings: &WeylSettings) -> Result<SumRule> {
    if !(b > 0.0 && a > 0.0) {
        return Err(Error::InvalidParams(format!("need B > 0 and a > 0, got B = {b}, a = {a}")));
    }
    if !(t > 0.0 && t < 1.0) {
        return Err(Error::Domain(format!("sum rule needs 0 < t < 1, got {t}")));
    }
    settings.validate()?;
    let k = abs_m(m);
    let kf = f64::from(k);
    let x = 0.5 * b * a * a;
    let z = 2.0 * x * t.sqrt() / (1.0 - t);
    let closed_form = ((a * b).ln() - x - 0.5 * kf * t.ln() - (1.0 - t).ln() - 2.0 * x * t / (1.0 - t)
        + log_bessel_i_scaled(k, z)
        + z)
        .exp();
    // majorant aB xᵏ/k! · binom(n+k, n) tⁿ
    let log_major = (a * b).ln() + kf * x.ln() - ln_factorial(u64::from(k));
    let mut series = 0.0;
    let mut quiet = 0;
    for n in 0..settings.n_max_cap.min(u32::MAX as usize) as u32 {
        let term = boundary_coeff(b, a, n, m).to_real() * t.powi(n as i32);
        series += term;
        let target = settings.term_tol * series.abs();
        quiet = if term.abs() < target { quiet + 1 } else { 0 };
        let next = n + 1;
        let rho = t * f64::from(next + k + 1) / f64::from(next + 1);
        if quiet >= settings.tail_safety && rho < 1.0 {
            let lead = (log_major + ln_binomial(u64::from(next + k), u64::from(next)) + f64::from(next) * t.ln()).exp();
            let tail_bound = lead / (1.0 - rho);
            if tail_bound <= target {
                return Ok(SumRule {
                    series,
                    closed_form,
                    n_used: next as usize,
                    tail_bound,
                });
            }
        }
    }
    Err(Error::NonConvergence {
        terms: settings.n_max_cap,
        last_term: 0.0,
        tail_bound: f64::INFINITY,
    })
}
