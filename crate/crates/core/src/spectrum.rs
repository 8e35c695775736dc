//! Per-mode eigenvalues in spectral gaps, clusters at Landau levels, special radii
//! and bound-state profiles.
//!
//! Both condition forms reduce to `μ_m(E) = μ*` with `μ*` equal to `α` (paper form)
//! or `−1/α` (Birman–Schwinger form). Since `μ_m` increases strictly on each gap,
//! a sign change of `μ_m − μ*` between the two gap edges is necessary and sufficient
//! for a (unique) root.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::landau::{abs_m, boundary_coeff, landau_level, Params};
use crate::quad::integrate_real;
use crate::roots::brent;
use crate::specfun::{laguerre, laguerre_zeros, ln_binomial, ln_factorial};
use crate::weyl::{h_remainder_offset, mu_offset, resolvent_profile, WeylSettings};

/// Sentinel gap index for `(−∞, Λ_0)`.
pub const BELOW_LOWEST: i64 = -1;

/// Log-magnitude below which a boundary coefficient is treated as zero.
pub const UNDERFLOW_LOG: f64 = -745.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ScalarCondition {
    /// `α − μ_m(E) = 0`.
    #[serde(rename = "paper")]
    PaperForm,
    /// `1 + α μ_m(E) = 0`.
    #[serde(rename = "bs")]
    BirmanSchwinger,
}

impl ScalarCondition {
    /// The value `μ*` that `μ_m(E)` must reach.
    pub fn target(self, alpha: f64) -> f64 {
        match self {
            Self::PaperForm => alpha,
            Self::BirmanSchwinger => -1.0 / alpha,
        }
    }

    /// Value of the scalar condition at a given `μ`.
    pub fn residual(self, alpha: f64, mu: f64) -> f64 {
        match self {
            Self::PaperForm => alpha - mu,
            Self::BirmanSchwinger => 1.0 + alpha * mu,
        }
    }

    /// Leading shift `E − Λ_n` for a residue `c` at `Λ_n`.
    pub fn leading_shift(self, alpha: f64, c: f64) -> f64 {
        match self {
            Self::PaperForm => -c / alpha,
            Self::BirmanSchwinger => alpha * c,
        }
    }

    /// True if, for this sign of `α`, the cluster at a level sits in the gap above it.
    pub fn accumulates_above(self, alpha: f64) -> bool {
        match self {
            Self::PaperForm => alpha < 0.0,
            Self::BirmanSchwinger => alpha > 0.0,
        }
    }
}

impl fmt::Display for ScalarCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::PaperForm => "paper",
            Self::BirmanSchwinger => "bs",
        })
    }
}

impl FromStr for ScalarCondition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper" => Ok(Self::PaperForm),
            "bs" => Ok(Self::BirmanSchwinger),
            other => Err(Error::InvalidParams(format!("unknown condition form '{other}' (paper|bs)"))),
        }
    }
}

/// An open spectral gap.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Gap {
    /// Lower edge index `n` (gap `(Λ_n, Λ_{n+1})`) or [`BELOW_LOWEST`].
    pub n_gap: i64,
    pub lower: f64,
    pub upper: f64,
}

impl Gap {
    /// `(Λ_n, Λ_{n+1})`.
    pub fn above(b: f64, n: u32) -> Self {
        Self {
            n_gap: i64::from(n),
            lower: landau_level(b, n),
            upper: landau_level(b, n + 1),
        }
    }

    /// `(−∞, Λ_0)`.
    pub fn below_lowest(b: f64) -> Self {
        Self {
            n_gap: BELOW_LOWEST,
            lower: f64::NEG_INFINITY,
            upper: landau_level(b, 0),
        }
    }

    /// The gap that has `Λ_n` as its upper edge.
    pub fn below(b: f64, n: u32) -> Self {
        if n == 0 {
            Self::below_lowest(b)
        } else {
            Self::above(b, n - 1)
        }
    }

    pub fn is_below_lowest(&self) -> bool {
        self.n_gap == BELOW_LOWEST
    }

    pub fn contains(&self, e: f64) -> bool {
        e > self.lower && e < self.upper
    }
}

/// One solved mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EigenvalueRecord {
    pub n_gap: i64,
    pub m: i32,
    #[serde(rename = "E")]
    pub energy: f64,
    /// Level the shift is measured from.
    pub reference_level: u32,
    /// `E − Λ_{reference_level}`, computed without cancellation.
    pub shift: f64,
    pub predicted_shift: f64,
    pub c_nm: f64,
    /// 1 for `m = 0`, 2 otherwise (the `±m` pair shares one energy).
    pub multiplicity: u32,
    pub condition: ScalarCondition,
    pub iterations: usize,
    pub residual: f64,
    pub n_used: usize,
}

/// Root-finding controls.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolveOptions {
    /// Relative tolerance on the root's offset from the nearer gap edge.
    pub root_tol: f64,
    /// First rung `10^{-first_rung}·B` of the edge ladder.
    pub first_rung: u32,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            root_tol: 1e-10,
            first_rung: 2,
        }
    }
}

/// Root located as an offset from a level.
#[derive(Debug, Clone, Copy)]
struct Located {
    level: u32,
    offset: f64,
    mu: f64,
    iterations: usize,
    n_used: usize,
}

struct Solver<'a> {
    params: &'a Params,
    m: i32,
    target: f64,
    settings: &'a WeylSettings,
    opts: &'a SolveOptions,
    evaluations: usize,
    n_used: usize,
}

impl Solver<'_> {
    fn f(&mut self, level: u32, offset: f64) -> Result<f64> {
        self.evaluations += 1;
        let eval = mu_offset(self.params, self.m, level, offset, self.settings)?;
        self.n_used = self.n_used.max(eval.n_used);
        Ok(eval.value - self.target)
    }

    fn residue_vanishes(&self, level: u32) -> bool {
        let c = boundary_coeff(self.params.b, self.params.a, level, self.m);
        c.is_zero() || c.log_abs() < UNDERFLOW_LOG
    }

    /// Walk towards `level` from the `side` (+1 above, −1 below) until `f` has the
    /// sign `want`. Returns `Ok(None)` when the edge limit rules out a root.
    fn ladder(&mut self, level: u32, side: f64, want: f64) -> Result<Option<(f64, f64)>> {
        if self.residue_vanishes(level) {
            let limit = h_remainder_offset(self.params, self.m, level, 0.0, self.settings)?.value - self.target;
            self.evaluations += 1;
            if limit * want <= 0.0 {
                return Ok(None);
            }
        }
        let b = self.params.b;
        let mut k = self.opts.first_rung;
        loop {
            let eps = b * 10f64.powi(-(k as i32));
            if eps < 1e-320 * b.max(1.0) || eps == 0.0 {
                return Err(Error::RootFinding(format!(
                    "no sign change found within 1e-320 of level {level} (m = {})",
                    self.m
                )));
            }
            let offset = side * eps;
            let val = self.f(level, offset)?;
            if val * want > 0.0 || val == 0.0 {
                return Ok(Some((offset, val)));
            }
            k += 2;
        }
    }

    fn refine(&mut self, level: u32, lo: f64, hi: f64) -> Result<Located> {
        let params = self.params;
        let m = self.m;
        let target = self.target;
        let settings = self.settings;
        let mut evals = 0;
        let mut used = 0;
        let root = brent(
            |y| {
                evals += 1;
                let eval = mu_offset(params, m, level, y, settings)?;
                used = used.max(eval.n_used);
                Ok(eval.value - target)
            },
            lo,
            hi,
            0.0,
            self.opts.root_tol,
            400,
        )?;
        self.evaluations += evals;
        self.n_used = self.n_used.max(used);
        Ok(Located {
            level,
            offset: root.x,
            mu: root.fx + target,
            iterations: self.evaluations,
            n_used: self.n_used,
        })
    }

    fn bounded(&mut self, n: u32) -> Result<Option<Located>> {
        let b = self.params.b;
        let Some((lo, f_lo)) = self.ladder(n, 1.0, -1.0)? else {
            return Ok(None);
        };
        if f_lo == 0.0 {
            return Ok(Some(self.exact(n, lo)));
        }
        let Some((hi, f_hi)) = self.ladder(n + 1, -1.0, 1.0)? else {
            return Ok(None);
        };
        if f_hi == 0.0 {
            return Ok(Some(self.exact(n + 1, hi)));
        }
        let f_mid = self.f(n, b)?;
        if f_mid == 0.0 {
            return Ok(Some(self.exact(n, b)));
        }
        if f_mid > 0.0 {
            self.refine(n, lo, b).map(Some)
        } else {
            self.refine(n + 1, -b, hi).map(Some)
        }
    }

    fn below_lowest(&mut self) -> Result<Option<Located>> {
        if self.target <= 0.0 {
            // μ_m > 0 below Λ_0
            return Ok(None);
        }
        let Some((hi, f_hi)) = self.ladder(0, -1.0, 1.0)? else {
            return Ok(None);
        };
        if f_hi == 0.0 {
            return Ok(Some(self.exact(0, hi)));
        }
        let p = self.params;
        let lambda0 = landau_level(p.b, 0);
        let mut e_min = -10.0 * p.alpha.powi(2).max(p.b).max(1.0);
        for _ in 0..40 {
            let f = self.f(0, e_min - lambda0)?;
            if f == 0.0 {
                return Ok(Some(self.exact(0, e_min - lambda0)));
            }
            if f < 0.0 {
                return self.refine(0, e_min - lambda0, hi).map(Some);
            }
            e_min *= 10.0;
        }
        Err(Error::RootFinding(format!(
            "μ stays above the target {} down to E = {e_min:e}",
            self.target
        )))
    }

    fn exact(&self, level: u32, offset: f64) -> Located {
        Located {
            level,
            offset,
            mu: self.target,
            iterations: self.evaluations,
            n_used: self.n_used,
        }
    }
}

fn validate_coupling(params: &Params) -> Result<()> {
    params.validate()?;
    if params.alpha == 0.0 {
        return Err(Error::InvalidCoupling);
    }
    Ok(())
}

fn locate(
    params: &Params,
    m: i32,
    gap: &Gap,
    cond: ScalarCondition,
    settings: &WeylSettings,
    opts: &SolveOptions,
) -> Result<Option<Located>> {
    validate_coupling(params)?;
    settings.validate()?;
    if !(opts.root_tol > 0.0) {
        return Err(Error::InvalidParams(format!("root_tol must be positive, got {}", opts.root_tol)));
    }
    let mut solver = Solver {
        params,
        m,
        target: cond.target(params.alpha),
        settings,
        opts,
        evaluations: 0,
        n_used: 0,
    };
    if gap.is_below_lowest() {
        solver.below_lowest()
    } else {
        let n = u32::try_from(gap.n_gap).map_err(|_| Error::InvalidParams(format!("bad gap index {}", gap.n_gap)))?;
        solver.bounded(n)
    }
}

fn record(
    params: &Params,
    m: i32,
    gap: &Gap,
    cond: ScalarCondition,
    root: Located,
    reference: Option<u32>,
) -> EigenvalueRecord {
    let b = params.b;
    let reference_level = reference.unwrap_or(root.level);
    let shift = if reference_level == root.level {
        root.offset
    } else {
        (landau_level(b, root.level) - landau_level(b, reference_level)) + root.offset
    };
    let c = boundary_coeff(b, params.a, reference_level, m).to_real();
    EigenvalueRecord {
        n_gap: gap.n_gap,
        m,
        energy: landau_level(b, root.level) + root.offset,
        reference_level,
        shift,
        predicted_shift: cond.leading_shift(params.alpha, c),
        c_nm: c,
        multiplicity: if m == 0 { 1 } else { 2 },
        condition: cond,
        iterations: root.iterations,
        residual: cond.residual(params.alpha, root.mu),
        n_used: root.n_used,
    }
}

/// The unique eigenvalue of mode `m` in `gap`, if any.
pub fn solve_mode(
    params: &Params,
    m: i32,
    gap: &Gap,
    cond: ScalarCondition,
    settings: &WeylSettings,
) -> Result<Option<EigenvalueRecord>> {
    solve_mode_with(params, m, gap, cond, settings, &SolveOptions::default())
}

/// [`solve_mode`] with explicit root-finding controls.
pub fn solve_mode_with(
    params: &Params,
    m: i32,
    gap: &Gap,
    cond: ScalarCondition,
    settings: &WeylSettings,
    opts: &SolveOptions,
) -> Result<Option<EigenvalueRecord>> {
    Ok(locate(params, m, gap, cond, settings, opts)?.map(|root| record(params, m, gap, cond, root, None)))
}

/// Controls for [`cluster`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClusterOptions {
    /// Stop once `|shift|` falls below this (absolute energy).
    pub stop_tol: f64,
    /// Modes `0..m_cap` are scanned at most.
    pub m_cap: u32,
    pub solve: SolveOptions,
}

impl ClusterOptions {
    pub fn for_field(b: f64) -> Self {
        Self {
            stop_tol: 1e-13 * b,
            m_cap: 400,
            solve: SolveOptions::default(),
        }
    }
}

/// Gap on the side of `Λ_n` where the cluster forms, or `None` where it is absent.
pub fn cluster_gap(params: &Params, n: u32, cond: ScalarCondition) -> Option<Gap> {
    if cond.accumulates_above(params.alpha) {
        Some(Gap::above(params.b, n))
    } else if n == 0 && cond == ScalarCondition::PaperForm {
        None
    } else {
        Some(Gap::below(params.b, n))
    }
}

/// Eigenvalues accumulating at `Λ_n`, one record per `m >= 0`, sorted by `|shift|`
/// descending (ties by `m`).
pub fn cluster(
    params: &Params,
    n: u32,
    cond: ScalarCondition,
    settings: &WeylSettings,
    opts: &ClusterOptions,
) -> Result<Vec<EigenvalueRecord>> {
    validate_coupling(params)?;
    if !(opts.stop_tol > 0.0) {
        return Err(Error::InvalidParams(format!("stop_tol must be positive, got {}", opts.stop_tol)));
    }
    let Some(gap) = cluster_gap(params, n, cond) else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    for m in 0..opts.m_cap.min(i32::MAX as u32) {
        let m = m as i32;
        let c = boundary_coeff(params.b, params.a, n, m);
        let underflow = c.log_abs() < UNDERFLOW_LOG && !c.is_zero();
        if let Some(root) = locate(params, m, &gap, cond, settings, &opts.solve)? {
            let rec = record(params, m, &gap, cond, root, Some(n));
            out.push(rec);
            if rec.shift.abs() < opts.stop_tol {
                break;
            }
        }
        if underflow {
            break;
        }
    }
    out.sort_by(|x, y| {
        y.shift
            .abs()
            .partial_cmp(&x.shift.abs())
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(x.m.cmp(&y.m))
    });
    Ok(out)
}

/// Leading shift `−c_{n,m}/α` of the paper-form cluster (0 when `c` underflows).
pub fn predicted_shift(params: &Params, n: u32, m: i32) -> Result<f64> {
    validate_coupling(params)?;
    let c = boundary_coeff(params.b, params.a, n, m);
    if c.is_zero() {
        return Ok(0.0);
    }
    let log = c.log_abs() - params.alpha.abs().ln();
    Ok(-params.alpha.signum() * log.exp())
}

/// Radii `a` with `L_n^{(|m|)}(B a²/2) = 0`, ascending.
pub fn special_radii(b: f64, n: u32, m: i32) -> Vec<f64> {
    laguerre_zeros(n, abs_m(m))
        .into_iter()
        .map(|x| (2.0 * x / b).sqrt())
        .collect()
}

/// Size scale `Σ_j binom(n+k, n−j) x^j / j!` of the terms in the finite sum of `L_n^{(k)}(x)`.
pub fn laguerre_term_scale(n: u32, k: u32, x: f64) -> f64 {
    (0..=n)
        .map(|j| {
            let lb = ln_binomial(u64::from(n + k), u64::from(n - j));
            let lx = if j == 0 { 0.0 } else { f64::from(j) * x.ln() };
            (lb + lx - ln_factorial(u64::from(j))).exp()
        })
        .sum()
}

/// Dimension of the kernel of `H − Λ_n` in the scalar model: the number of channels
/// `|m| <= m_scan` whose boundary coefficient vanishes, counting `±m` twice.
pub fn embedded_kernel_dim(b: f64, a: f64, n: u32, tol: f64, m_scan: u32) -> Result<usize> {
    if n == 0 {
        return Ok(0);
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidParams(format!("tol must be positive, got {tol}")));
    }
    let x = 0.5 * b * a * a;
    let mut dim = 0;
    for k in 0..=m_scan {
        let value = laguerre(n, k, x);
        if value.abs() < tol * laguerre_term_scale(n, k, x) {
            dim += if k == 0 { 1 } else { 2 };
        }
    }
    if dim > 2 * n as usize {
        return Err(Error::Postcondition(format!(
            "kernel dimension {dim} exceeds 2n = {} at B = {b}, a = {a}; tolerance {tol} too loose",
            2 * n
        )));
    }
    Ok(dim)
}

/// Roots of every mode `0 <= m < m_cap` below `Λ_0`.
pub fn below_lowest(
    params: &Params,
    cond: ScalarCondition,
    settings: &WeylSettings,
    m_cap: u32,
) -> Result<Vec<EigenvalueRecord>> {
    validate_coupling(params)?;
    let gap = Gap::below_lowest(params.b);
    let mut out = Vec::new();
    for m in 0..m_cap as i32 {
        if let Some(rec) = solve_mode(params, m, &gap, cond, settings)? {
            out.push(rec);
        }
    }
    Ok(out)
}

/// Unnormalised radial profile `w(r) = 2πa Σ_n R_{n,m}(r) R_{n,m}(a)/(Λ_n − E)`.
pub fn bound_state_radial(params: &Params, m: i32, e: f64, r: f64, settings: &WeylSettings) -> Result<f64> {
    params.validate()?;
    let level = ((e / params.b - 1.0) / 2.0).round().max(0.0) as u32;
    let offset = e - landau_level(params.b, level);
    if offset.abs() < 1e-12 * params.b {
        return Err(Error::Pole {
            energy: e,
            level,
            distance: offset.abs(),
        });
    }
    Ok(resolvent_profile(params, m, r, level, offset, settings)?.value)
}

/// Bound-state radial profile attached to a solved mode, normalised so that
/// `∫ |w|² 2πr dr = 1`.
#[derive(Debug, Clone, Copy)]
pub struct BoundStateProfile {
    pub params: Params,
    pub m: i32,
    pub level: u32,
    pub offset: f64,
    /// `(∫ |w|² 2πr dr)^{1/2}` of the unnormalised profile.
    pub norm: f64,
    /// Integration cut-off used for the norm.
    pub r_max: f64,
    pub settings: WeylSettings,
}

impl BoundStateProfile {
    pub fn from_record(params: &Params, rec: &EigenvalueRecord, settings: &WeylSettings) -> Result<Self> {
        Self::new(params, rec.m, rec.reference_level, rec.shift, settings)
    }

    pub fn new(params: &Params, m: i32, level: u32, offset: f64, settings: &WeylSettings) -> Result<Self> {
        params.validate()?;
        let e = landau_level(params.b, level) + offset;
        let spread = (e.abs().max(params.b) * 2.0 / params.b).sqrt() / params.b.sqrt();
        let r_max = params.a + 8.0 * spread + 12.0 / params.b.sqrt();
        let mut failure = None;
        let mut density = |r: f64| match resolvent_profile(params, m, r, level, offset, settings) {
            Ok(w) => 2.0 * std::f64::consts::PI * r * w.value * w.value,
            Err(e) => {
                failure.get_or_insert(e);
                0.0
            }
        };
        let (inner, _) = integrate_real(&mut density, 0.0, params.a, 0.0, 1e-11, 400);
        let (outer, _) = integrate_real(&mut density, params.a, r_max, 0.0, 1e-11, 400);
        if let Some(e) = failure {
            return Err(e);
        }
        let norm = (inner + outer).sqrt();
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::Postcondition(format!("profile norm is {norm}")));
        }
        Ok(Self {
            params: *params,
            m,
            level,
            offset,
            norm,
            r_max,
            settings: *settings,
        })
    }

    pub fn energy(&self) -> f64 {
        landau_level(self.params.b, self.level) + self.offset
    }

    /// Unnormalised value `w(r)`.
    pub fn raw(&self, r: f64) -> Result<f64> {
        Ok(resolvent_profile(&self.params, self.m, r, self.level, self.offset, &self.settings)?.value)
    }

    /// Normalised value.
    pub fn at(&self, r: f64) -> Result<f64> {
        Ok(self.raw(r)? / self.norm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> WeylSettings {
        WeylSettings::default()
    }

    #[test]
    fn condition_parsing() {
        assert_eq!("paper".parse::<ScalarCondition>().unwrap(), ScalarCondition::PaperForm);
        assert_eq!("bs".parse::<ScalarCondition>().unwrap(), ScalarCondition::BirmanSchwinger);
        assert!("x".parse::<ScalarCondition>().is_err());
    }

    #[test]
    fn zero_coupling_rejected() {
        let p = Params::new(1.0, 1.1, 0.0).unwrap();
        let gap = Gap::above(1.0, 0);
        assert_eq!(
            solve_mode(&p, 0, &gap, ScalarCondition::PaperForm, &s()),
            Err(Error::InvalidCoupling)
        );
    }

    #[test]
    fn birman_schwinger_reference_roots() {
        // roots of 1 + αμ = 0 from the confluent-hypergeometric closed form
        let p = Params::new(1.0, 1.1, -1.0).unwrap();
        let gap = Gap::above(1.0, 0);
        let want = [2.918_342_169, 2.645_756_862, 2.719_189_399, 2.913_204_918, 2.983_911_760, 2.997_706_182];
        for (m, &e) in want.iter().enumerate() {
            let rec = solve_mode(&p, m as i32, &gap, ScalarCondition::BirmanSchwinger, &s())
                .unwrap()
                .unwrap();
            assert!((rec.energy - e).abs() < 2e-9, "m={m}: {} vs {e}", rec.energy);
            assert!(rec.residual.abs() <= 1e-8);
        }
    }

    #[test]
    fn half_line_range() {
        // c_{1,0} vanishes exactly at B = 2, a = 1, so μ_0 is bounded above on (Λ_0, Λ_1)
        let probe = Params::new(2.0, 1.0, 1.0).unwrap();
        assert!(boundary_coeff(2.0, 1.0, 1, 0).is_zero());
        let limit = h_remainder_offset(&probe, 0, 1, 0.0, &s()).unwrap().value;
        let gap = Gap::above(2.0, 0);
        let above = probe.with_alpha(limit + 0.05);
        assert!(solve_mode(&above, 0, &gap, ScalarCondition::PaperForm, &s()).unwrap().is_none());
        let below = probe.with_alpha(limit - 0.05);
        let rec = solve_mode(&below, 0, &gap, ScalarCondition::PaperForm, &s()).unwrap().unwrap();
        assert!(gap.contains(rec.energy));
        assert!(rec.residual.abs() < 1e-8);
    }

    #[test]
    fn special_radius_examples() {
        let r = special_radii(1.0, 1, 0);
        assert_eq!(r.len(), 1);
        assert!((r[0] - 2.0_f64.sqrt()).abs() < 1e-14);
        assert!((special_radii(2.0, 1, 0)[0] - 1.0).abs() < 1e-14);
        let r = special_radii(1.0, 2, 0);
        assert!((r[0] - (2.0 * (2.0 - 2.0_f64.sqrt())).sqrt()).abs() < 1e-14);
        assert!((r[1] - (2.0 * (2.0 + 2.0_f64.sqrt())).sqrt()).abs() < 1e-14);
        assert!(special_radii(1.0, 0, 3).is_empty());
    }

    #[test]
    fn kernel_dimension_examples() {
        assert_eq!(embedded_kernel_dim(1.0, 1.0, 0, 1e-10, 50).unwrap(), 0);
        assert_eq!(embedded_kernel_dim(1.0, 2.0_f64.sqrt(), 1, 1e-10, 50).unwrap(), 1);
        assert_eq!(embedded_kernel_dim(1.0, 2.0, 1, 1e-10, 50).unwrap(), 2);
    }

    #[test]
    fn predicted_shift_sign() {
        let neg = Params::new(1.0, 1.0, -1.0).unwrap();
        assert!((predicted_shift(&neg, 0, 0).unwrap() - (-0.5_f64).exp()).abs() < 1e-15);
        let pos = Params::new(1.0, 1.0, 2.0).unwrap();
        assert!(predicted_shift(&pos, 0, 3).unwrap() < 0.0);
    }
}
