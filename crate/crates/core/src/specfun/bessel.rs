use super::{ln_factorial, log_gamma};
use crate::error::{Error, Result};

/// Modified Bessel function `I_m(z)` by the ascending series, `0 <= z <= 700`.
pub fn bessel_i(m: u32, z: f64) -> Result<f64> {
    if !(0.0..=700.0).contains(&z) {
        return Err(Error::Domain(format!("bessel_i needs 0 <= z <= 700, got {z}")));
    }
    if z == 0.0 {
        return Ok(if m == 0 { 1.0 } else { 0.0 });
    }
    let half = 0.5 * z;
    let quarter_sq = half * half;
    let mf = f64::from(m);
    let lead = mf * half.ln() - ln_factorial(u64::from(m));
    let mut term = 1.0_f64;
    let mut sum = 1.0_f64;
    let mut j = 0.0_f64;
    loop {
        j += 1.0;
        term *= quarter_sq / (j * (mf + j));
        sum += term;
        if term < 1e-17 * sum {
            break;
        }
    }
    Ok((lead + sum.ln()).exp())
}

/// `ln I_m(z) − z`, finite for every `z > 0` and any order.
///
/// Large arguments (`z > max(30, m²/2)`) use the Hankel asymptotic series summed to
/// its smallest term; otherwise the ascending series is accumulated with periodic
/// rescaling so that neither the terms nor the partial sum overflow.
pub fn log_bessel_i_scaled(m: u32, z: f64) -> f64 {
    if z <= 0.0 {
        return if m == 0 { 0.0 } else { f64::NEG_INFINITY };
    }
    let mf = f64::from(m);
    if z > (0.5 * mf * mf).max(30.0) {
        return hankel_scaled(mf, z);
    }
    const RESCALE: f64 = 1e280;
    let half = 0.5 * z;
    let quarter_sq = half * half;
    let lead = mf * half.ln() - log_gamma(mf + 1.0).unwrap_or(0.0);
    let mut term = 1.0_f64;
    let mut sum = 1.0_f64;
    let mut shifts = 0.0_f64;
    let mut j = 0.0_f64;
    loop {
        j += 1.0;
        term *= quarter_sq / (j * (mf + j));
        sum += term;
        if sum > RESCALE {
            sum /= RESCALE;
            term /= RESCALE;
            shifts += 1.0;
        }
        if term < 1e-17 * sum {
            break;
        }
    }
    lead + sum.ln() + shifts * RESCALE.ln() - z
}

fn hankel_scaled(m: f64, z: f64) -> f64 {
    let mu = 4.0 * m * m;
    let mut term = 1.0_f64;
    let mut sum = 1.0_f64;
    let mut k = 0.0_f64;
    loop {
        k += 1.0;
        let odd = 2.0 * k - 1.0;
        let next = -term * (mu - odd * odd) / (8.0 * k * z);
        if next.abs() >= term.abs() || next == 0.0 {
            break;
        }
        term = next;
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    sum.ln() - 0.5 * (2.0 * std::f64::consts::PI * z).ln()
}
