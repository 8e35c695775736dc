#![allow(dead_code)]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `L_n^{(k)}(x)` from the explicit finite sum in plain arithmetic.
pub fn laguerre_sum(n: u32, k: u32, x: f64) -> f64 {
    let mut total = 0.0;
    for j in 0..=n {
        let mut binom = 1.0;
        for i in 0..(n - j) {
            binom *= f64::from(k + j + 1 + i) / f64::from(i + 1);
        }
        let mut power = 1.0;
        for i in 1..=j {
            power *= x / f64::from(i);
        }
        let term = binom * power;
        total += if j % 2 == 0 { term } else { -term };
    }
    total
}

/// `c_{n,m}` straight from its definition `2πa |C|² a^{2|m|} e^{−x} L²`.
pub fn c_direct(b: f64, a: f64, n: u32, m: i32) -> f64 {
    let k = m.unsigned_abs();
    let x = 0.5 * b * a * a;
    let mut ratio = 1.0;
    for i in 1..=k {
        ratio /= f64::from(n + i);
    }
    let norm_sq = b.powi(k as i32 + 1) * ratio / (2f64.powi(k as i32 + 1) * std::f64::consts::PI);
    let l = laguerre_sum(n, k, x);
    2.0 * std::f64::consts::PI * a * norm_sq * a.powi(2 * k as i32) * (-x).exp() * l * l
}

/// Plain bisection to an absolute width.
pub fn bisect(mut f: impl FnMut(f64) -> f64, mut lo: f64, mut hi: f64, width: f64) -> f64 {
    let mut f_lo = f(lo);
    while hi - lo > width {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if (fm < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
