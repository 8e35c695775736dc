//! Independent finite-volume check of the channel spectrum.
//!
//! Channel `m` of the symmetric-gauge operator is
//! `−u'' − u'/r + (m/r − Br/2)² u` on `(0, R)` with a Dirichlet face at `R`.
//! Cells of width `h` are centred at `r_i = (i − ½)h`; integrating over cell `i`
//! against the weight `r` gives the flux form
//!
//! ```text
//! −[r_{i+½}(u_{i+1} − u_i) − r_{i−½}(u_i − u_{i−1})]/h² + r_i V_i u_i = E r_i u_i
//! ```
//!
//! which is symmetrised by `v_i = √r_i u_i`. The face at `r = 0` has zero weight, so
//! no boundary condition is imposed at the origin for any `m`. The wall sits at the
//! centre of cell `wall_index` and contributes `α/h` to that diagonal entry.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::landau::{landau_level, Params};
use crate::spectrum::{solve_mode, Gap, ScalarCondition};
use crate::tridiag::SymTridiagonal;
use crate::weyl::WeylSettings;

/// Cell-centred radial grid with the wall at a cell centre.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleGrid {
    /// Dirichlet face `K·h`.
    pub r_max: f64,
    /// Number of cells.
    pub k: usize,
    pub h: f64,
    /// `(wall_index − ½)·h = a`.
    pub wall_index: usize,
}

impl OracleGrid {
    /// Grid with `wall_index` cells up to and including the wall cell, extending to at
    /// least `r_max`.
    pub fn with_wall_index(a: f64, wall_index: usize, r_max: f64) -> Result<Self> {
        if !(a > 0.0) || wall_index == 0 {
            return Err(Error::Grid(format!("need a > 0 and wall_index >= 1 (a = {a}, index {wall_index})")));
        }
        let h = a / (wall_index as f64 - 0.5);
        let k = (r_max / h).ceil() as usize;
        if k <= wall_index {
            return Err(Error::Grid(format!("r_max = {r_max} does not extend past the wall at {a}")));
        }
        Ok(Self {
            r_max: k as f64 * h,
            k,
            h,
            wall_index,
        })
    }

    /// Finest grid with `h <= h_max` and the wall on a cell centre.
    pub fn with_spacing(a: f64, h_max: f64, r_max: f64) -> Result<Self> {
        if !(h_max > 0.0) {
            return Err(Error::Grid(format!("h_max must be positive, got {h_max}")));
        }
        Self::with_wall_index(a, (a / h_max + 0.5).ceil() as usize, r_max)
    }

    /// `h <= min(0.005, a/200)` and `R >= a + 8√((2n+1)/B)`, at least `a + 20`.
    pub fn default_for(params: &Params, n_target: u32) -> Result<Self> {
        params.validate()?;
        let spread = 8.0 * ((2.0 * f64::from(n_target) + 1.0) / params.b).sqrt();
        Self::with_spacing(params.a, 0.005_f64.min(params.a / 200.0), params.a + spread.max(20.0))
    }

    /// The grid with roughly half the spacing and the same wall position.
    pub fn refined(&self, a: f64) -> Result<Self> {
        Self::with_wall_index(a, 2 * self.wall_index - 1, self.r_max)
    }

    pub fn center(&self, i: usize) -> f64 {
        (i as f64 + 0.5) * self.h
    }

    fn check_wall(&self, a: f64) -> Result<()> {
        let at = (self.wall_index as f64 - 0.5) * self.h;
        if self.wall_index == 0 || self.wall_index > self.k || (at - a).abs() > 1e-12 * a {
            return Err(Error::Grid(format!(
                "wall cell {} is centred at {at}, not at a = {a}",
                self.wall_index
            )));
        }
        Ok(())
    }
}

/// Symmetric tridiagonal discretisation of one channel.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelMatrix {
    pub matrix: SymTridiagonal,
    pub grid: OracleGrid,
}

impl ChannelMatrix {
    pub fn diag(&self) -> &[f64] {
        &self.matrix.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.matrix.offdiag
    }
}

/// Discretised channel `m` with field `b` (any sign, zero allowed).
pub fn build_channel_raw(b: f64, a: f64, alpha: f64, m: i32, grid: &OracleGrid) -> Result<ChannelMatrix> {
    grid.check_wall(a)?;
    let h = grid.h;
    let h2 = h * h;
    let mf = f64::from(m);
    let diag = (0..grid.k)
        .map(|i| {
            let r = grid.center(i);
            let faces = (i as f64) * h + (i as f64 + 1.0) * h;
            let pot = mf / r - 0.5 * b * r;
            let mut d = faces / (h2 * r) + pot * pot;
            if i + 1 == grid.wall_index {
                d += alpha / h;
            }
            d
        })
        .collect();
    let offdiag = (0..grid.k - 1)
        .map(|i| {
            let face = (i as f64 + 1.0) * h;
            -face / (h2 * (grid.center(i) * grid.center(i + 1)).sqrt())
        })
        .collect();
    Ok(ChannelMatrix {
        matrix: SymTridiagonal::new(diag, offdiag),
        grid: *grid,
    })
}

pub fn build_channel(params: &Params, m: i32, grid: &OracleGrid) -> Result<ChannelMatrix> {
    params.validate()?;
    build_channel_raw(params.b, params.a, params.alpha, m, grid)
}

/// Bisection tolerance of the oracle eigenvalues.
pub const EIGEN_TOL: f64 = 1e-10;

/// Eigenvalues below `e_cut`, ascending, at most `max_count`.
pub fn eigenvalues_below(mat: &ChannelMatrix, e_cut: f64, max_count: usize) -> Vec<f64> {
    mat.matrix.eigenvalues_below(e_cut, max_count, EIGEN_TOL)
}

/// Eigenvalues in `(lo, hi)`, ascending.
pub fn eigenvalues_in(mat: &ChannelMatrix, lo: f64, hi: f64) -> Vec<f64> {
    mat.matrix.eigenvalues_in(lo, hi, EIGEN_TOL)
}

/// Radial values `u_i = v_i/√r_i` of the eigenvector for `eigenvalue`.
pub fn radial_eigenvector(mat: &ChannelMatrix, eigenvalue: f64) -> Vec<f64> {
    mat.matrix
        .eigenvector(eigenvalue)
        .into_iter()
        .enumerate()
        .map(|(i, v)| v / mat.grid.center(i).sqrt())
        .collect()
}

/// Richardson limit of an `O(h²)` quantity from two spacings.
pub fn richardson(h1: f64, e1: f64, h2: f64, e2: f64) -> f64 {
    let (s1, s2) = (h1 * h1, h2 * h2);
    (e2 * s1 - e1 * s2) / (s1 - s2)
}

/// Oracle eigenvalues on a grid and its refinement, paired by index.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Extrapolated {
    pub coarse: Vec<f64>,
    pub fine: Vec<f64>,
    /// Empty when the two grids disagree on the count.
    pub extrapolated: Vec<f64>,
    pub h_coarse: f64,
    pub h_fine: f64,
}

pub fn extrapolated_in(b: f64, a: f64, alpha: f64, m: i32, grid: &OracleGrid, lo: f64, hi: f64) -> Result<Extrapolated> {
    let fine_grid = grid.refined(a)?;
    let coarse = eigenvalues_in(&build_channel_raw(b, a, alpha, m, grid)?, lo, hi);
    let fine = eigenvalues_in(&build_channel_raw(b, a, alpha, m, &fine_grid)?, lo, hi);
    let extrapolated = if coarse.len() == fine.len() {
        coarse
            .iter()
            .zip(&fine)
            .map(|(&c, &f)| richardson(grid.h, c, fine_grid.h, f))
            .collect()
    } else {
        Vec::new()
    };
    Ok(Extrapolated {
        coarse,
        fine,
        extrapolated,
        h_coarse: grid.h,
        h_fine: fine_grid.h,
    })
}

/// Lowest `count` extrapolated eigenvalues of channel `m`.
pub fn lowest_extrapolated(b: f64, a: f64, alpha: f64, m: i32, grid: &OracleGrid, count: usize) -> Result<Vec<f64>> {
    let fine_grid = grid.refined(a)?;
    let coarse = build_channel_raw(b, a, alpha, m, grid)?;
    let fine = build_channel_raw(b, a, alpha, m, &fine_grid)?;
    Ok((0..count.min(grid.k))
        .map(|j| {
            let c = coarse.matrix.kth_eigenvalue(j, EIGEN_TOL, 0.0);
            let f = fine.matrix.kth_eigenvalue(j, EIGEN_TOL, 0.0);
            richardson(grid.h, c, fine_grid.h, f)
        })
        .collect())
}

/// Which condition form reproduced the oracle eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Paper,
    BirmanSchwinger,
    Both,
    Neither,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModeAudit {
    pub m: i32,
    pub oracle: Extrapolated,
    pub paper_root: Option<f64>,
    pub bs_root: Option<f64>,
    /// Distance to the nearest extrapolated oracle eigenvalue.
    pub paper_diff: Option<f64>,
    pub bs_diff: Option<f64>,
    pub verdict: Verdict,
    /// Extrapolated oracle eigenvalues of channel `−m` in the same gap.
    pub mirror: Option<Vec<f64>>,
    /// Largest `|E_m − E_{−m}|` over paired eigenvalues, or `None` if the counts differ.
    pub mirror_diff: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditReport {
    pub params: Params,
    pub gap: Gap,
    pub tolerance: f64,
    pub grid: OracleGrid,
    pub modes: Vec<ModeAudit>,
    /// The single form matching every mode that has an oracle eigenvalue, if any.
    pub matching_form: Option<ScalarCondition>,
}

fn nearest(values: &[f64], x: Option<f64>) -> Option<f64> {
    let x = x?;
    values
        .iter()
        .map(|v| (v - x).abs())
        .min_by(|a, b| a.total_cmp(b))
}

/// Compare both scalar-condition roots with the oracle for every mode in `m_list`.
pub fn channel_audit(
    params: &Params,
    m_list: &[i32],
    gap: &Gap,
    settings: &WeylSettings,
    tolerance: f64,
) -> Result<AuditReport> {
    params.validate()?;
    if params.alpha == 0.0 {
        return Err(Error::InvalidCoupling);
    }
    let n_target = if gap.is_below_lowest() { 0 } else { gap.n_gap as u32 + 1 };
    let grid = OracleGrid::default_for(params, n_target)?;
    let lo = if gap.is_below_lowest() {
        -10.0 * params.alpha.powi(2).max(params.b).max(1.0)
    } else {
        gap.lower
    };
    let mut modes = Vec::with_capacity(m_list.len());
    for &m in m_list {
        let oracle = extrapolated_in(params.b, params.a, params.alpha, m, &grid, lo, gap.upper)?;
        let paper_root = solve_mode(params, m, gap, ScalarCondition::PaperForm, settings)?.map(|r| r.energy);
        let bs_root = solve_mode(params, m, gap, ScalarCondition::BirmanSchwinger, settings)?.map(|r| r.energy);
        let paper_diff = nearest(&oracle.extrapolated, paper_root);
        let bs_diff = nearest(&oracle.extrapolated, bs_root);
        // an empty oracle window agrees only with a form that also finds nothing
        let empty = oracle.extrapolated.is_empty();
        let hit = |root: Option<f64>, d: Option<f64>| if empty { root.is_none() } else { d.is_some_and(|d| d <= tolerance) };
        let verdict = match (hit(paper_root, paper_diff), hit(bs_root, bs_diff)) {
            (true, true) => Verdict::Both,
            (true, false) => Verdict::Paper,
            (false, true) => Verdict::BirmanSchwinger,
            (false, false) => Verdict::Neither,
        };
        let (mirror, mirror_diff) = if m != 0 {
            let other = extrapolated_in(params.b, params.a, params.alpha, -m, &grid, lo, gap.upper)?;
            let diff = (other.extrapolated.len() == oracle.extrapolated.len()).then(|| {
                other
                    .extrapolated
                    .iter()
                    .zip(&oracle.extrapolated)
                    .map(|(x, y)| (x - y).abs())
                    .fold(0.0, f64::max)
            });
            (Some(other.extrapolated), diff)
        } else {
            (None, None)
        };
        modes.push(ModeAudit {
            m,
            oracle,
            paper_root,
            bs_root,
            paper_diff,
            bs_diff,
            verdict,
            mirror,
            mirror_diff,
        });
    }
    let decided: Vec<Verdict> = modes.iter().map(|a| a.verdict).filter(|v| *v != Verdict::Both).collect();
    let matching_form = if decided.is_empty() {
        None
    } else if decided.iter().all(|v| *v == Verdict::Paper) {
        Some(ScalarCondition::PaperForm)
    } else if decided.iter().all(|v| *v == Verdict::BirmanSchwinger) {
        Some(ScalarCondition::BirmanSchwinger)
    } else {
        None
    };
    Ok(AuditReport {
        params: *params,
        gap: *gap,
        tolerance,
        grid,
        modes,
        matching_form,
    })
}

/// One field value of [`small_b_track`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrackPoint {
    #[serde(rename = "B")]
    pub b: f64,
    /// Lowest extrapolated eigenvalue below `Λ_0(B)`, if any.
    #[serde(rename = "E")]
    pub energy: Option<f64>,
    /// The same eigenvalue computed with `(B, m) → (−B, −m)`.
    pub mirrored: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SmallBTrack {
    pub a: f64,
    pub alpha: f64,
    pub m: i32,
    pub grid: OracleGrid,
    /// Field-free reference `E(0)`.
    pub e0: Option<f64>,
    pub points: Vec<TrackPoint>,
    /// Least-squares fit `E ≈ intercept + quadratic·B²` over `B = 0` and the grid.
    pub intercept: f64,
    pub quadratic: f64,
    /// `min_B (E(B) − E(0))`.
    pub min_rise: f64,
    /// Largest `|E(B,m) − E(−B,−m)|`.
    pub evenness: f64,
}

fn lowest_bound_state(b: f64, a: f64, alpha: f64, m: i32, grid: &OracleGrid) -> Result<Option<f64>> {
    let fine_grid = grid.refined(a)?;
    let cut = landau_level(b.abs(), 0);
    let coarse = eigenvalues_below(&build_channel_raw(b, a, alpha, m, grid)?, cut, 1);
    let fine = eigenvalues_below(&build_channel_raw(b, a, alpha, m, &fine_grid)?, cut, 1);
    Ok(match (coarse.first(), fine.first()) {
        (Some(&c), Some(&f)) => Some(richardson(grid.h, c, fine_grid.h, f)),
        _ => None,
    })
}

/// Track the lowest bound state of channel `m` below `Λ_0(B)` as the field is
/// switched on. All fields share one grid.
pub fn small_b_track(a: f64, alpha: f64, m: i32, b_grid: &[f64]) -> Result<SmallBTrack> {
    if !(alpha < 0.0) {
        return Err(Error::InvalidParams(format!("small-B tracking needs alpha < 0, got {alpha}")));
    }
    if b_grid.is_empty() || b_grid.iter().any(|&b| !(b > 0.0)) || b_grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParams("B grid must be positive and strictly ascending".into()));
    }
    let grid = OracleGrid::with_spacing(a, 0.005_f64.min(a / 200.0), a + 60.0)?;
    let e0 = lowest_bound_state(0.0, a, alpha, m, &grid)?;
    let mut points = Vec::with_capacity(b_grid.len());
    for &b in b_grid {
        points.push(TrackPoint {
            b,
            energy: lowest_bound_state(b, a, alpha, m, &grid)?,
            mirrored: lowest_bound_state(-b, a, alpha, -m, &grid)?,
        });
    }
    let mut samples: Vec<(f64, f64)> = e0.map(|e| (0.0, e)).into_iter().collect();
    samples.extend(points.iter().filter_map(|p| p.energy.map(|e| (p.b * p.b, e))));
    let (intercept, quadratic) = linear_fit(&samples);
    let min_rise = match e0 {
        Some(e0) => points
            .iter()
            .filter_map(|p| p.energy.map(|e| e - e0))
            .fold(f64::INFINITY, f64::min),
        None => f64::NAN,
    };
    let evenness = points
        .iter()
        .filter_map(|p| Some((p.energy? - p.mirrored?).abs()))
        .fold(0.0, f64::max);
    Ok(SmallBTrack {
        a,
        alpha,
        m,
        grid,
        e0,
        points,
        intercept,
        quadratic,
        min_rise,
        evenness,
    })
}

/// Least-squares line `y ≈ p + q x`.
fn linear_fit(samples: &[(f64, f64)]) -> (f64, f64) {
    let n = samples.len() as f64;
    if samples.len() < 2 {
        return (samples.first().map_or(f64::NAN, |s| s.1), f64::NAN);
    }
    let mx = samples.iter().map(|s| s.0).sum::<f64>() / n;
    let my = samples.iter().map(|s| s.1).sum::<f64>() / n;
    let sxy: f64 = samples.iter().map(|s| (s.0 - mx) * (s.1 - my)).sum();
    let sxx: f64 = samples.iter().map(|s| (s.0 - mx).powi(2)).sum();
    let q = sxy / sxx;
    (my - q * mx, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wall_on_cell_centre() {
        let g = OracleGrid::with_spacing(1.1, 0.005, 15.0).unwrap();
        assert!(((g.wall_index as f64 - 0.5) * g.h - 1.1).abs() < 1e-14);
        assert!(g.h <= 0.005);
        let f = g.refined(1.1).unwrap();
        assert!(((f.wall_index as f64 - 0.5) * f.h - 1.1).abs() < 1e-14);
        assert!(f.r_max >= g.r_max - f.h);
        let bad = OracleGrid { wall_index: g.wall_index + 1, ..g };
        assert!(matches!(build_channel_raw(1.0, 1.1, 0.0, 0, &bad), Err(Error::Grid(_))));
    }

    #[test]
    fn two_by_two() {
        let m = SymTridiagonal::new(vec![2.0, 2.0], vec![-1.0]);
        let mat = ChannelMatrix {
            matrix: m,
            grid: OracleGrid {
                r_max: 1.0,
                k: 2,
                h: 0.5,
                wall_index: 1,
            },
        };
        let ev = eigenvalues_below(&mat, 10.0, 5);
        assert_eq!(ev.len(), 2);
        assert!((ev[0] - 1.0).abs() < 1e-10 && (ev[1] - 3.0).abs() < 1e-10);
        assert_eq!(mat.matrix.sturm_count(10.0), ev.len());
    }

    #[test]
    fn free_levels() {
        let p = Params::new(1.0, 1.1, 0.0).unwrap();
        let grid = OracleGrid::default_for(&p, 1).unwrap();
        for m in 0..4 {
            let ev = lowest_extrapolated(1.0, 1.1, 0.0, m, &grid, 2).unwrap();
            assert!((ev[0] - 1.0).abs() < 1e-4, "m={m}: {ev:?}");
            assert!((ev[1] - 3.0).abs() < 1e-4, "m={m}: {ev:?}");
        }
    }

    #[test]
    fn linear_fit_exact() {
        let (p, q) = linear_fit(&[(0.0, 1.0), (1.0, 3.0), (2.0, 5.0)]);
        assert!((p - 1.0).abs() < 1e-14 && (q - 2.0).abs() < 1e-14);
    }
}
