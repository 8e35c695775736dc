//! Special-function kernels: log-gamma, generalized Laguerre polynomials (plain,
//! binomially scaled and as a running sequence), modified Bessel `I_m`, and the
//! zeros of `L_n^{(k)}`.
//!
//! Everything that multiplies factorials, `x^k` or `B^k` for large `k` goes through
//! the log domain ([`SignedLog`]); the boundary coefficients fall far below the
//! binary64 range well before `|m| = 200`.

mod bessel;
mod laguerre;

pub use bessel::{bessel_i, log_bessel_i_scaled};
pub use laguerre::{laguerre, laguerre_scaled, laguerre_zeros, LaguerreRatios, ScaledLaguerre};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A real number stored as `sign · exp(log_abs)`.
///
/// Zero is represented by `sign = 0` together with `log_abs = -∞`.
#[derive(Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SignedLog {
    sign: i8,
    log_abs: f64,
}

impl SignedLog {
    pub const ZERO: SignedLog = SignedLog {
        sign: 0,
        log_abs: f64::NEG_INFINITY,
    };
    pub const ONE: SignedLog = SignedLog { sign: 1, log_abs: 0.0 };

    /// Build from parts; a `-∞` magnitude or zero sign collapses to [`SignedLog::ZERO`].
    pub fn new(sign: i8, log_abs: f64) -> Self {
        if sign == 0 || log_abs == f64::NEG_INFINITY {
            Self::ZERO
        } else {
            Self {
                sign: sign.signum(),
                log_abs,
            }
        }
    }

    /// Positive number `exp(log_abs)`.
    pub fn from_log(log_abs: f64) -> Self {
        Self::new(1, log_abs)
    }

    pub fn from_real(x: f64) -> Self {
        if x == 0.0 {
            Self::ZERO
        } else {
            Self::new(if x > 0.0 { 1 } else { -1 }, x.abs().ln())
        }
    }

    /// Back to binary64; underflows to a signed zero, overflows to ±∞.
    pub fn to_real(self) -> f64 {
        if self.sign == 0 {
            0.0
        } else {
            f64::from(self.sign) * self.log_abs.exp()
        }
    }

    pub fn sign(self) -> i8 {
        self.sign
    }

    pub fn log_abs(self) -> f64 {
        self.log_abs
    }

    pub fn is_zero(self) -> bool {
        self.sign == 0
    }

    /// True when the value cannot be represented as a nonzero binary64.
    pub fn underflows(self) -> bool {
        self.sign != 0 && self.log_abs < f64::MIN_POSITIVE.ln() - 52.0 * std::f64::consts::LN_2
    }

    pub fn abs(self) -> Self {
        Self::new(self.sign.abs(), self.log_abs)
    }

    pub fn mul(self, other: Self) -> Self {
        Self::new(self.sign * other.sign, self.log_abs + other.log_abs)
    }

    pub fn div(self, other: Self) -> Self {
        assert!(!other.is_zero(), "division by a zero SignedLog");
        Self::new(self.sign * other.sign, self.log_abs - other.log_abs)
    }

    pub fn powi(self, k: i32) -> Self {
        if k == 0 {
            return Self::ONE;
        }
        let sign = if k % 2 == 0 { self.sign.abs() } else { self.sign };
        Self::new(sign, self.log_abs * f64::from(k))
    }

    pub fn neg(self) -> Self {
        Self::new(-self.sign, self.log_abs)
    }
}

impl fmt::Debug for SignedLog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedLog({:+}·e^{})", self.sign, self.log_abs)
    }
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln Γ(x)` for `x > 0` (Lanczos, g = 7). Exact factorial products are used for
/// small positive integers.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("log_gamma requires x > 0, got {x}")));
    }
    if x.fract() == 0.0 && x <= 171.0 {
        return Ok(ln_factorial(x as u64 - 1));
    }
    if x < 0.5 {
        return Ok(lanczos(x + 1.0) - x.ln());
    }
    Ok(lanczos(x))
}

fn lanczos(x: f64) -> f64 {
    let z = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (z + 0.5) * t.ln() - t + acc.ln()
}

/// `ln n!`. Exact running product up to 170!, Lanczos beyond.
pub fn ln_factorial(n: u64) -> f64 {
    if n < 2 {
        return 0.0;
    }
    if n <= 170 {
        let mut prod = 1.0_f64;
        for k in 2..=n {
            prod *= k as f64;
        }
        prod.ln()
    } else {
        lanczos(n as f64 + 1.0)
    }
}

/// `ln binom(n, k)` for `0 <= k <= n`.
pub fn ln_binomial(n: u64, k: u64) -> f64 {
    assert!(k <= n, "binomial requires k <= n");
    let k = k.min(n - k);
    if k == 0 {
        return 0.0;
    }
    if n <= 170 {
        return ln_factorial(n) - ln_factorial(k) - ln_factorial(n - k);
    }
    // product form avoids the cancellation of three huge log-factorials for small k
    if k <= 64 {
        let mut acc = 0.0;
        for j in 0..k {
            acc += ((n - j) as f64 / (k - j) as f64).ln();
        }
        return acc;
    }
    lanczos(n as f64 + 1.0) - lanczos(k as f64 + 1.0) - lanczos((n - k) as f64 + 1.0)
}
