use serde::{Deserialize, Serialize};

use super::{ln_binomial, SignedLog};
use crate::tridiag::SymTridiagonal;

/// `L_n^{(k)}(x)` by the forward three-term recurrence.
pub fn laguerre(n: u32, k: u32, x: f64) -> f64 {
    let k = f64::from(k);
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + k - x;
    for j in 1..n {
        let j = f64::from(j);
        let next = ((2.0 * j + 1.0 + k - x) * cur - (j + k) * prev) / (j + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// `L_n^{(k)}(x)` split as `ratio · binom(n+k, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScaledLaguerre {
    pub ratio: f64,
    pub log_binom: f64,
}

impl ScaledLaguerre {
    pub fn to_signed_log(self) -> SignedLog {
        SignedLog::from_real(self.ratio).mul(SignedLog::from_log(self.log_binom))
    }
}

/// Ratio `L_n^{(k)}(x) / binom(n+k, n)` from the finite sum, with each summand's
/// binomial ratio built up as a running product. When the alternating sum cancels
/// by more than four digits the value is recomputed from the scaled recurrence.
pub fn laguerre_scaled(n: u32, k: u32, x: f64) -> ScaledLaguerre {
    let log_binom = ln_binomial(u64::from(n) + u64::from(k), u64::from(n));
    let kf = f64::from(k);
    let mut term = 1.0_f64;
    let mut sum = 1.0_f64;
    let mut abs_sum = 1.0_f64;
    for j in 1..=n {
        let jf = f64::from(j);
        term *= -x * f64::from(n - j + 1) / ((kf + jf) * jf);
        sum += term;
        abs_sum += term.abs();
    }
    let ratio = if abs_sum > 1e4 * sum.abs() {
        LaguerreRatios::new(k, x).nth(n as usize).unwrap_or(0.0)
    } else {
        sum
    };
    ScaledLaguerre { ratio, log_binom }
}

/// Running sequence `ℓ_n = L_n^{(k)}(x) / binom(n+k, n)` for `n = 0, 1, 2, …`.
///
/// `ℓ_{n+1} = ((2n+1+k−x) ℓ_n − n ℓ_{n−1}) / (n+k+1)`; the scaled values stay
/// bounded by `e^{x/2}` so the sequence never overflows.
#[derive(Debug, Clone)]
pub struct LaguerreRatios {
    k: f64,
    x: f64,
    n: u64,
    prev: f64,
    cur: f64,
}

impl LaguerreRatios {
    pub fn new(k: u32, x: f64) -> Self {
        Self {
            k: f64::from(k),
            x,
            n: 0,
            prev: 0.0,
            cur: 1.0,
        }
    }
}

impl Iterator for LaguerreRatios {
    type Item = f64;

    fn next(&mut self) -> Option<f64> {
        let out = self.cur;
        let n = self.n as f64;
        let next = ((2.0 * n + 1.0 + self.k - self.x) * self.cur - n * self.prev) / (n + self.k + 1.0);
        self.prev = self.cur;
        self.cur = next;
        self.n += 1;
        Some(out)
    }
}

/// The `n` zeros of `L_n^{(k)}`, ascending, as eigenvalues of the Jacobi matrix.
pub fn laguerre_zeros(n: u32, k: u32) -> Vec<f64> {
    if n == 0 {
        return Vec::new();
    }
    let kf = f64::from(k);
    let diag: Vec<f64> = (0..n).map(|j| 2.0 * f64::from(j) + kf + 1.0).collect();
    let off: Vec<f64> = (1..n)
        .map(|j| (f64::from(j) * (f64::from(j) + kf)).sqrt())
        .collect();
    let jacobi = SymTridiagonal::new(diag, off);
    (0..n as usize)
        .map(|i| {
            let root = jacobi.kth_eigenvalue(i, 0.0, 4.0 * f64::EPSILON);
            polish_zero(n, k, root)
        })
        .collect()
}

/// One Newton step using `d/dx L_n^{(k)} = −L_{n−1}^{(k+1)}`, kept only if it
/// reduces the residual.
fn polish_zero(n: u32, k: u32, root: f64) -> f64 {
    let f = laguerre(n, k, root);
    let df = -laguerre(n - 1, k + 1, root);
    if df == 0.0 {
        return root;
    }
    let candidate = root - f / df;
    if candidate > 0.0 && laguerre(n, k, candidate).abs() < f.abs() {
        candidate
    } else {
        root
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Direct finite sum `Σ (−1)^j binom(n+k, n−j) x^j / j!` in exact rational
    /// arithmetic, `x` taken as a decimal with four fractional digits.
    fn direct_sum(n: u32, k: u32, x: f64) -> f64 {
        use num_bigint::BigInt;
        use num_rational::BigRational;
        use num_traits::{One, ToPrimitive, Zero};
        let xr = BigRational::new(BigInt::from((x * 1e4).round() as i64), BigInt::from(10_000));
        let mut total = BigRational::zero();
        for j in 0..=n {
            let mut binom = BigRational::one();
            for i in 0..(n - j) {
                binom = binom * BigInt::from(k + j + 1 + i) / BigInt::from(i + 1);
            }
            let mut power = BigRational::one();
            for i in 1..=j {
                power = power * &xr / BigInt::from(i);
            }
            let term = binom * power;
            if j % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total.to_f64().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(laguerre(0, 7, 2.5), 1.0);
        assert_eq!(laguerre(1, 2, 1.0), 2.0);
        assert!((laguerre(2, 0, 2.0) + 1.0).abs() < 1e-15);
        assert_eq!(laguerre_scaled(0, 100, 5.0).ratio, 1.0);
        assert!((laguerre_scaled(1, 10, 1.0).ratio - 10.0 / 11.0).abs() < 1e-15);
        let big = laguerre_scaled(2, 1000, 0.55).ratio;
        assert!((big - (1.0 - 0.55 * 2.0 / 1000.0)).abs() <= 1e-4);
    }

    #[test]
    fn recurrence_matches_direct_sum() {
        for n in 0..=20 {
            for k in 0..=50 {
                for &x in &[0.1, 1.0, 5.0, 20.0] {
                    let d = direct_sum(n, k, x);
                    let r = laguerre(n, k, x);
                    assert!((r - d).abs() <= 1e-11 * d.abs().max(1.0), "n={n} k={k} x={x}: {r} vs {d}");
                }
            }
        }
    }

    #[test]
    fn reference_values() {
        // 30-digit reference evaluations
        let v = laguerre(10, 3, 7.5);
        assert!((v - 13.455_643_245_152_064_732).abs() < 1e-12 * 13.46);
        let big = laguerre_scaled(40, 150, 30.0).to_signed_log().to_real();
        assert!(((big - 2.075_485_820_972_361_612_1e37) / 2.075_485_820_972_361_612_1e37).abs() < 1e-12);
    }

    #[test]
    fn scaled_consistency() {
        for n in 0..=30 {
            for &k in &[0, 1, 5, 40, 200] {
                for &x in &[0.05, 0.7, 3.0, 12.0, 60.0] {
                    let plain = laguerre(n, k, x);
                    let back = laguerre_scaled(n, k, x).to_signed_log().to_real();
                    let tol = 1e-10 * plain.abs().max(1e-300);
                    // values that are themselves cancellation-dominated are compared absolutely
                    let scale = direct_scale(n, k, x);
                    assert!(
                        (back - plain).abs() <= tol.max(1e-13 * scale),
                        "n={n} k={k} x={x}: {back} vs {plain}"
                    );
                }
            }
        }
    }

    fn direct_scale(n: u32, k: u32, x: f64) -> f64 {
        (0..=n)
            .map(|j| {
                let lb = ln_binomial(u64::from(n + k), u64::from(n - j));
                (lb + f64::from(j) * x.ln() - super::super::ln_factorial(u64::from(j))).exp()
            })
            .sum()
    }

    #[test]
    fn ratio_sequence_matches_scaled() {
        for &k in &[0, 3, 17] {
            for &x in &[0.4, 2.5, 9.0] {
                for (n, ell) in LaguerreRatios::new(k, x).take(25).enumerate() {
                    let plain = laguerre(n as u32, k, x);
                    let binom = ln_binomial(n as u64 + u64::from(k), n as u64).exp();
                    assert!((ell * binom - plain).abs() <= 1e-11 * plain.abs().max(1.0));
                }
            }
        }
    }

    #[test]
    fn zero_examples() {
        assert_eq!(laguerre_zeros(0, 4), Vec::<f64>::new());
        assert!((laguerre_zeros(1, 0)[0] - 1.0).abs() < 1e-14);
        assert!((laguerre_zeros(1, 2)[0] - 3.0).abs() < 1e-14);
        let z = laguerre_zeros(2, 0);
        assert!((z[0] - (2.0 - 2.0_f64.sqrt())).abs() < 1e-14);
        assert!((z[1] - (2.0 + 2.0_f64.sqrt())).abs() < 1e-13);
    }

    #[test]
    fn zeros_are_simple_and_verified() {
        for n in 1..=12 {
            for &k in &[0, 1, 4, 20] {
                let z = laguerre_zeros(n, k);
                assert_eq!(z.len(), n as usize);
                assert!(z[0] > 0.0);
                assert!(z.windows(2).all(|w| w[0] < w[1]));
                for &root in &z {
                    assert!(laguerre(n, k, root).abs() <= 1e-9 * direct_scale(n, k, root));
                    let left = laguerre(n, k, root - 1e-6);
                    let right = laguerre(n, k, root + 1e-6);
                    assert!(left * right < 0.0, "no sign change at {root} (n={n}, k={k})");
                }
            }
        }
    }
}
