//! Symmetric tridiagonal eigenvalues by Sturm-sequence bisection.
//!
//! The count of negative pivots in the LDLᵀ factorisation of `T - σI` equals the
//! number of eigenvalues of `T` strictly below `σ`. Bisection on that count finds
//! every eigenvalue in an interval with no risk of missing one, which is what the
//! finite-difference oracle and the Laguerre-zero computation rely on.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymTridiagonal {
    pub diag: Vec<f64>,
    /// Sub/super diagonal, length `diag.len() - 1`.
    pub offdiag: Vec<f64>,
}

impl SymTridiagonal {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Self {
        assert!(
            diag.is_empty() && offdiag.is_empty() || offdiag.len() + 1 == diag.len(),
            "offdiag must have exactly one entry fewer than diag"
        );
        Self { diag, offdiag }
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Number of eigenvalues strictly less than `shift`.
    pub fn sturm_count(&self, shift: f64) -> usize {
        let mut count = 0;
        let mut pivot = 1.0_f64;
        for (i, &d) in self.diag.iter().enumerate() {
            let coupling = if i == 0 {
                0.0
            } else {
                let e = self.offdiag[i - 1];
                e * e / pivot
            };
            pivot = d - shift - coupling;
            if pivot == 0.0 {
                pivot = -f64::EPSILON * (d.abs() + shift.abs()).max(f64::MIN_POSITIVE);
            }
            if pivot < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin interval containing the whole spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.offdiag[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.offdiag[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    /// The `k`-th smallest eigenvalue (0-based), bisected until the bracket is
    /// narrower than `abs_tol + rel_tol·|λ|`.
    pub fn kth_eigenvalue(&self, k: usize, abs_tol: f64, rel_tol: f64) -> f64 {
        assert!(k < self.len(), "eigenvalue index out of range");
        let (mut lo, mut hi) = self.gershgorin();
        let pad = 1e-12 * (lo.abs() + hi.abs()) + f64::MIN_POSITIVE;
        lo -= pad;
        hi += pad;
        self.bisect(k, lo, hi, abs_tol, rel_tol)
    }

    fn bisect(&self, k: usize, mut lo: f64, mut hi: f64, abs_tol: f64, rel_tol: f64) -> f64 {
        // invariant: count(lo) <= k < count(hi)
        for _ in 0..2000 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if hi - lo <= abs_tol + rel_tol * mid.abs() {
                break;
            }
            if self.sturm_count(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// All eigenvalues below `cut` (at most `max_count`), ascending.
    pub fn eigenvalues_below(&self, cut: f64, max_count: usize, abs_tol: f64) -> Vec<f64> {
        let (glo, _) = self.gershgorin();
        let n_below = self.sturm_count(cut).min(max_count);
        let lo = glo - 1e-12 * glo.abs() - f64::MIN_POSITIVE;
        (0..n_below)
            .map(|k| self.bisect(k, lo, cut, abs_tol, 0.0))
            .collect()
    }

    /// All eigenvalues in the open interval `(lo, hi)`, ascending.
    pub fn eigenvalues_in(&self, lo: f64, hi: f64, abs_tol: f64) -> Vec<f64> {
        if hi <= lo {
            return Vec::new();
        }
        let first = self.sturm_count(lo);
        let last = self.sturm_count(hi);
        (first..last)
            .map(|k| self.bisect(k, lo, hi, abs_tol, 0.0))
            .filter(|&e| e > lo && e < hi)
            .collect()
    }

    /// Eigenvector for an eigenvalue estimate by inverse iteration, normalised to
    /// unit Euclidean norm with a positive largest component.
    pub fn eigenvector(&self, eigenvalue: f64) -> Vec<f64> {
        let n = self.len();
        if n == 0 {
            return Vec::new();
        }
        let scale = self
            .diag
            .iter()
            .map(|d| d.abs())
            .fold(0.0_f64, f64::max)
            .max(1.0);
        let shift = eigenvalue + 1e-13 * scale;
        let mut v = vec![1.0 / (n as f64).sqrt(); n];
        for _ in 0..4 {
            v = self.solve_shifted(shift, &v);
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm == 0.0 || !norm.is_finite() {
                break;
            }
            v.iter_mut().for_each(|x| *x /= norm);
        }
        let (imax, _) = v
            .iter()
            .enumerate()
            .fold((0, 0.0_f64), |acc, (i, x)| if x.abs() > acc.1 { (i, x.abs()) } else { acc });
        if v[imax] < 0.0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
        v
    }

    /// Solve `(T - shift I) x = rhs` with partial-pivoting Gaussian elimination
    /// specialised to the tridiagonal band.
    fn solve_shifted(&self, shift: f64, rhs: &[f64]) -> Vec<f64> {
        let n = self.len();
        // rows hold [diag, super, super2] after pivoting
        let mut a: Vec<[f64; 3]> = (0..n)
            .map(|i| {
                [
                    self.diag[i] - shift,
                    if i + 1 < n { self.offdiag[i] } else { 0.0 },
                    0.0,
                ]
            })
            .collect();
        let mut sub: Vec<f64> = (0..n)
            .map(|i| if i + 1 < n { self.offdiag[i] } else { 0.0 })
            .collect();
        let mut b = rhs.to_vec();
        let tiny = f64::EPSILON * self.gershgorin().1.abs().max(1.0);
        for i in 0..n.saturating_sub(1) {
            let below = sub[i];
            if below.abs() > a[i][0].abs() {
                // swap rows i and i+1
                let next = a[i + 1];
                let cur = a[i];
                a[i] = [below, next[0], next[1]];
                a[i + 1] = [cur[1], cur[2], 0.0];
                let cur_sub = cur[0];
                b.swap(i, i + 1);
                sub[i] = cur_sub;
            }
            if a[i][0] == 0.0 {
                a[i][0] = tiny;
            }
            let factor = sub[i] / a[i][0];
            a[i + 1][0] -= factor * a[i][1];
            a[i + 1][1] -= factor * a[i][2];
            b[i + 1] -= factor * b[i];
        }
        if a[n - 1][0] == 0.0 {
            a[n - 1][0] = tiny;
        }
        let mut x = vec![0.0; n];
        for i in (0..n).rev() {
            let mut acc = b[i];
            if i + 1 < n {
                acc -= a[i][1] * x[i + 1];
            }
            if i + 2 < n {
                acc -= a[i][2] * x[i + 2];
            }
            x[i] = acc / a[i][0];
        }
        x
    }
}
