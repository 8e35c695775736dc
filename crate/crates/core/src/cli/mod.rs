//! Command-line front end: argument parsing, configuration merging and the
//! table-producing commands.

mod figure;
pub mod svg;
pub mod table;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::landau::{
    boundary_coeff, boundary_coeff_asymptotic, cyclotron_radius, hardy_hille_sum, heuristic_radius, landau_level,
    peak_radius, radial_probability, resonance_index, Params,
};
use crate::oracle::{channel_audit, extrapolated_in, small_b_track, OracleGrid};
use crate::spectrum::{
    cluster, embedded_kernel_dim, solve_mode_with, special_radii, BoundStateProfile, ClusterOptions, EigenvalueRecord,
    Gap, ScalarCondition, SolveOptions,
};
use crate::weyl::{mu, WeylSettings};

pub use figure::{cmd_figure, FigureName};
pub use table::{Cell, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

/// Effective run configuration: defaults, then the config file, then flags.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    #[serde(rename = "B")]
    pub b: f64,
    pub a: f64,
    pub alpha: f64,
    pub condition: ScalarCondition,
    pub format: Format,
    pub term_tol: f64,
    pub root_tol: f64,
    pub output_path: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            b: 1.0,
            a: 1.1,
            alpha: -1.0,
            condition: ScalarCondition::PaperForm,
            format: Format::Csv,
            term_tol: 1e-12,
            root_tol: 1e-10,
            output_path: None,
        }
    }
}

/// Failure of a command, mapped onto the process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error(transparent)]
    Compute(#[from] Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Compute(e) if e.is_numerical() => 3,
            CliError::Compute(_) => 2,
            CliError::Io(_) => 1,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

impl RunConfig {
    /// Apply `key = value` lines; `#` starts a comment.
    pub fn apply_file_text(&mut self, text: &str) -> CliResult<()> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(CliError::Config(format!("line {}: expected key = value", lineno + 1)));
            };
            let (key, value) = (key.trim(), value.trim());
            let real = || {
                value
                    .parse::<f64>()
                    .map_err(|_| CliError::Config(format!("line {}: '{value}' is not a number", lineno + 1)))
            };
            match key {
                "B" => self.b = real()?,
                "a" => self.a = real()?,
                "alpha" => self.alpha = real()?,
                "term_tol" | "term-tol" => self.term_tol = real()?,
                "root_tol" | "root-tol" => self.root_tol = real()?,
                "condition" => self.condition = value.parse().map_err(|e: Error| CliError::Config(e.to_string()))?,
                "format" => {
                    self.format = Format::from_str(value, true)
                        .map_err(|_| CliError::Config(format!("unknown format '{value}'")))?
                }
                "out" | "output_path" => self.output_path = Some(PathBuf::from(value)),
                other => return Err(CliError::Config(format!("line {}: unknown key '{other}'", lineno + 1))),
            }
        }
        Ok(())
    }

    pub fn params(&self) -> CliResult<Params> {
        Params::new(self.b, self.a, self.alpha).map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn settings(&self) -> CliResult<WeylSettings> {
        let s = WeylSettings {
            term_tol: self.term_tol,
            ..WeylSettings::default()
        };
        s.validate().map_err(|e| CliError::Config(e.to_string()))?;
        Ok(s)
    }

    pub fn solve_options(&self) -> CliResult<SolveOptions> {
        if !(self.root_tol > 0.0) {
            return Err(CliError::Config(format!("root-tol must be positive, got {}", self.root_tol)));
        }
        Ok(SolveOptions {
            root_tol: self.root_tol,
            ..SolveOptions::default()
        })
    }

    fn stamp(&self, table: &mut Table) {
        table.meta("B", self.b);
        table.meta("a", self.a);
        table.meta("alpha", self.alpha);
        table.meta("condition", self.condition);
        table.meta("term_tol", self.term_tol);
        table.meta("root_tol", self.root_tol);
    }
}

#[derive(Debug, Parser)]
#[command(name = "landau-wall", version, about = "Landau levels perturbed by a circular delta wall")]
pub struct Cli {
    #[arg(long = "B", global = true, allow_hyphen_values = true)]
    pub b: Option<f64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub a: Option<f64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    #[arg(long, global = true)]
    pub condition: Option<ConditionArg>,
    #[arg(long, global = true)]
    pub format: Option<Format>,
    #[arg(long = "term-tol", global = true)]
    pub term_tol: Option<f64>,
    #[arg(long = "root-tol", global = true)]
    pub root_tol: Option<f64>,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConditionArg {
    Paper,
    Bs,
}

impl From<ConditionArg> for ScalarCondition {
    fn from(c: ConditionArg) -> Self {
        match c {
            ConditionArg::Paper => ScalarCondition::PaperForm,
            ConditionArg::Bs => ScalarCondition::BirmanSchwinger,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Landau levels Λ_0..Λ_{n-max}.
    Levels {
        #[arg(long = "n-max", default_value_t = 3)]
        n_max: u32,
    },
    /// Boundary coefficients c_{n,m} for m = 0..m-max.
    Coeff {
        #[arg(long, default_value_t = 0)]
        n: u32,
        #[arg(long = "m-max", default_value_t = 20)]
        m_max: u32,
    },
    /// Weyl coefficient μ_m(E) on a list or a range of energies.
    Mu {
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        m: i32,
        #[arg(long = "E", value_delimiter = ',', allow_hyphen_values = true)]
        energies: Vec<f64>,
        #[arg(long = "e-min", allow_hyphen_values = true)]
        e_min: Option<f64>,
        #[arg(long = "e-max", allow_hyphen_values = true)]
        e_max: Option<f64>,
        #[arg(long, default_value_t = 101)]
        points: usize,
    },
    /// Eigenvalue of one mode in one gap.
    Solve {
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        m: i32,
        #[arg(long, default_value = "0")]
        gap: String,
    },
    /// Eigenvalues accumulating at Λ_n.
    Cluster {
        #[arg(long, default_value_t = 0)]
        n: u32,
        #[arg(long = "m-cap", default_value_t = 400)]
        m_cap: u32,
        #[arg(long = "stop-tol")]
        stop_tol: Option<f64>,
    },
    /// Normalised bound-state radial profile of one mode.
    Profile {
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        m: i32,
        #[arg(long, default_value = "0")]
        gap: String,
        #[arg(long = "r-max")]
        r_max: Option<f64>,
        #[arg(long, default_value_t = 401)]
        points: usize,
    },
    /// Radial probability 2πr|ψ_{n,m}|².
    Density {
        #[arg(long, default_value_t = 0)]
        n: u32,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        m: i32,
        #[arg(long = "r-max")]
        r_max: Option<f64>,
        #[arg(long, default_value_t = 401)]
        points: usize,
    },
    /// Semiclassical resonance index and peak radii.
    Resonance {
        #[arg(long, default_value_t = 0)]
        n: u32,
    },
    /// Wall radii at which c_{n,m} vanishes.
    SpecialRadii {
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        m: i32,
    },
    /// Number of channels with vanishing boundary coefficient at Λ_n.
    KernelDim {
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long = "m-scan", default_value_t = 100)]
        m_scan: u32,
    },
    /// Weighted Hardy–Hille sum rule for the boundary coefficients.
    SumRule {
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        m: i32,
        #[arg(long, value_delimiter = ',', default_value = "0.3,0.5,0.7")]
        t: Vec<f64>,
    },
    /// Finite-volume channel eigenvalues in a gap.
    Oracle {
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        m: i32,
        #[arg(long, default_value = "0")]
        gap: String,
    },
    /// Compare both condition forms against the finite-volume oracle.
    Audit {
        #[arg(long = "m-list", value_delimiter = ',', default_value = "0,1,2,3,4,5", allow_hyphen_values = true)]
        m_list: Vec<i32>,
        #[arg(long, default_value = "0")]
        gap: String,
        #[arg(long, default_value_t = 5e-3)]
        tol: f64,
    },
    /// Lowest bound state below Λ_0 as the field is switched on.
    SmallB {
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        m: i32,
        #[arg(long = "b-max", default_value_t = 0.2)]
        b_max: f64,
        #[arg(long = "b-step", default_value_t = 0.01)]
        b_step: f64,
    },
    /// Figure data files (written into the --out directory).
    Figure {
        name: FigureName,
        /// Also render an SVG next to the data.
        #[arg(long)]
        svg: bool,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Levels { .. } => "levels",
            Command::Coeff { .. } => "coeff",
            Command::Mu { .. } => "mu",
            Command::Solve { .. } => "solve",
            Command::Cluster { .. } => "cluster",
            Command::Profile { .. } => "profile",
            Command::Density { .. } => "density",
            Command::Resonance { .. } => "resonance",
            Command::SpecialRadii { .. } => "special-radii",
            Command::KernelDim { .. } => "kernel-dim",
            Command::SumRule { .. } => "sum-rule",
            Command::Oracle { .. } => "oracle",
            Command::Audit { .. } => "audit",
            Command::SmallB { .. } => "small-b",
            Command::Figure { .. } => "figure",
        }
    }
}

/// Merge defaults, the optional config file and the flags.
pub fn resolve_config(cli: &Cli) -> CliResult<RunConfig> {
    let mut cfg = RunConfig::default();
    if let Some(path) = &cli.config {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read config {}: {e}", path.display())))?;
        cfg.apply_file_text(&text)?;
    }
    if let Some(v) = cli.b {
        cfg.b = v;
    }
    if let Some(v) = cli.a {
        cfg.a = v;
    }
    if let Some(v) = cli.alpha {
        cfg.alpha = v;
    }
    if let Some(v) = cli.condition {
        cfg.condition = v.into();
    }
    if let Some(v) = cli.format {
        cfg.format = v;
    }
    if let Some(v) = cli.term_tol {
        cfg.term_tol = v;
    }
    if let Some(v) = cli.root_tol {
        cfg.root_tol = v;
    }
    if let Some(v) = &cli.out {
        cfg.output_path = Some(v.clone());
    }
    Ok(cfg)
}

/// `below` or a level index `n` for `(Λ_n, Λ_{n+1})`.
pub fn parse_gap(b: f64, text: &str) -> CliResult<Gap> {
    match text {
        "below" | "-1" => Ok(Gap::below_lowest(b)),
        _ => text
            .parse::<u32>()
            .map(|n| Gap::above(b, n))
            .map_err(|_| CliError::Config(format!("gap must be 'below' or a level index, got '{text}'"))),
    }
}

fn sample_grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    if points <= 1 {
        return vec![lo];
    }
    (0..points)
        .map(|i| lo + (hi - lo) * i as f64 / (points - 1) as f64)
        .collect()
}

pub const RECORD_COLUMNS: [&str; 9] = [
    "m",
    "n_gap",
    "E",
    "shift",
    "predicted_shift",
    "c_nm",
    "multiplicity",
    "n_used",
    "residual",
];

fn record_row(r: &EigenvalueRecord) -> Vec<Cell> {
    vec![
        r.m.into(),
        r.n_gap.into(),
        r.energy.into(),
        r.shift.into(),
        r.predicted_shift.into(),
        r.c_nm.into(),
        r.multiplicity.into(),
        r.n_used.into(),
        r.residual.into(),
    ]
}

fn multiplicity_note(t: &mut Table) {
    t.meta(
        "multiplicity_model",
        "scalar model: every m is attached to every level, so m and -m share one energy",
    );
}

pub fn cmd_levels(_cfg: &RunConfig, b: f64, n_max: u32) -> CliResult<Table> {
    if !(b > 0.0) {
        return Err(CliError::Config(format!("B must be positive, got {b}")));
    }
    let mut t = Table::new(&["n", "Lambda_n"]);
    for n in 0..=n_max {
        t.push(vec![n.into(), landau_level(b, n).into()]);
    }
    t.meta("B", b);
    Ok(t)
}

pub fn cmd_coeff(cfg: &RunConfig, n: u32, m_max: u32) -> CliResult<Table> {
    let p = cfg.params()?;
    let mut t = Table::new(&["n", "m", "c_nm", "log_c_nm", "c_asymptotic", "ratio"]);
    for m in 0..=m_max as i32 {
        let c = boundary_coeff(p.b, p.a, n, m);
        let asym = boundary_coeff_asymptotic(p.b, p.a, n, m);
        let log = if c.is_zero() { f64::NEG_INFINITY } else { c.log_abs() };
        t.push(vec![
            n.into(),
            m.into(),
            c.to_real().into(),
            log.into(),
            asym.to_real().into(),
            c.div(asym).to_real().into(),
        ]);
    }
    cfg.stamp(&mut t);
    Ok(t)
}

pub fn cmd_mu(cfg: &RunConfig, m: i32, energies: &[f64]) -> CliResult<Table> {
    let p = cfg.params()?;
    let s = cfg.settings()?;
    let mut t = Table::new(&["E", "mu", "n_used", "tail_bound"]);
    for &e in energies {
        let v = mu(&p, m, e, &s)?;
        t.push(vec![e.into(), v.value.into(), v.n_used.into(), v.tail_bound.into()]);
    }
    cfg.stamp(&mut t);
    t.meta("m", m);
    Ok(t)
}

pub fn cmd_solve(cfg: &RunConfig, m: i32, gap: &Gap) -> CliResult<Table> {
    let p = cfg.params()?;
    let rec = solve_mode_with(&p, m, gap, cfg.condition, &cfg.settings()?, &cfg.solve_options()?)?;
    let mut t = Table::new(&RECORD_COLUMNS);
    if let Some(r) = &rec {
        t.push(record_row(r));
        t.meta("iterations", r.iterations);
    }
    cfg.stamp(&mut t);
    t.meta("gap", gap);
    multiplicity_note(&mut t);
    Ok(t)
}

pub fn cmd_cluster(cfg: &RunConfig, n: u32, m_cap: u32, stop_tol: Option<f64>) -> CliResult<Table> {
    let p = cfg.params()?;
    let mut opts = ClusterOptions::for_field(p.b);
    opts.m_cap = m_cap;
    opts.solve = cfg.solve_options()?;
    if let Some(tol) = stop_tol {
        opts.stop_tol = tol;
    }
    let records = cluster(&p, n, cfg.condition, &cfg.settings()?, &opts)?;
    let mut t = Table::new(&RECORD_COLUMNS);
    for r in &records {
        t.push(record_row(r));
    }
    cfg.stamp(&mut t);
    t.meta("n", n);
    t.meta("stop_tol", opts.stop_tol);
    t.meta("m_cap", opts.m_cap);
    multiplicity_note(&mut t);
    Ok(t)
}

pub fn cmd_profile(cfg: &RunConfig, m: i32, gap: &Gap, r_max: Option<f64>, points: usize) -> CliResult<Table> {
    let p = cfg.params()?;
    let s = cfg.settings()?;
    let Some(rec) = solve_mode_with(&p, m, gap, cfg.condition, &s, &cfg.solve_options()?)? else {
        return Err(CliError::Config(format!("mode {m} has no eigenvalue in the requested gap")));
    };
    let prof = BoundStateProfile::from_record(&p, &rec, &s)?;
    let r_max = r_max.unwrap_or(p.a + 6.0 / p.b.sqrt());
    let mut t = Table::new(&["r", "value"]);
    for r in sample_grid(0.0, r_max, points) {
        t.push(vec![r.into(), prof.at(r)?.into()]);
    }
    cfg.stamp(&mut t);
    t.meta("m", m);
    t.meta("E", rec.energy);
    t.meta("norm", prof.norm);
    t.meta("n_used", rec.n_used);
    Ok(t)
}

pub fn cmd_density(cfg: &RunConfig, n: u32, m: i32, r_max: Option<f64>, points: usize) -> CliResult<Table> {
    let b = cfg.b;
    if !(b > 0.0) {
        return Err(CliError::Config(format!("B must be positive, got {b}")));
    }
    let r_max = r_max.unwrap_or(3.0 * ((2.0 * f64::from(n) + 2.0 * f64::from(m.unsigned_abs()) + 2.0) / b).sqrt());
    let mut t = Table::new(&["r", "value"]);
    for r in sample_grid(0.0, r_max, points) {
        t.push(vec![r.into(), radial_probability(b, n, m, r).into()]);
    }
    t.meta("B", b);
    t.meta("n", n);
    t.meta("m", m);
    t.meta("peak_radius", peak_radius(b, n, m));
    Ok(t)
}

pub fn cmd_resonance(cfg: &RunConfig, n: u32) -> CliResult<Table> {
    let p = cfg.params()?;
    let res = resonance_index(p.b, p.a, n);
    let mut t = Table::new(&["n", "m_star", "m_nearest", "cyclotron_radius", "peak_radius", "heuristic_radius"]);
    let m = res.nearest.max(0) as i32;
    t.push(vec![
        n.into(),
        res.value.into(),
        res.nearest.into(),
        cyclotron_radius(p.b, n).into(),
        peak_radius(p.b, n, m).into(),
        heuristic_radius(p.b, m).into(),
    ]);
    cfg.stamp(&mut t);
    Ok(t)
}

pub fn cmd_special_radii(cfg: &RunConfig, n: u32, m: i32) -> CliResult<Table> {
    let b = cfg.b;
    if !(b > 0.0) {
        return Err(CliError::Config(format!("B must be positive, got {b}")));
    }
    let mut t = Table::new(&["index", "a", "c_nm"]);
    for (i, a) in special_radii(b, n, m).into_iter().enumerate() {
        t.push(vec![i.into(), a.into(), boundary_coeff(b, a, n, m).to_real().into()]);
    }
    t.meta("B", b);
    t.meta("n", n);
    t.meta("m", m);
    Ok(t)
}

pub fn cmd_kernel_dim(cfg: &RunConfig, n: u32, tol: f64, m_scan: u32) -> CliResult<Table> {
    let p = cfg.params()?;
    let dim = embedded_kernel_dim(p.b, p.a, n, tol, m_scan)?;
    let mut t = Table::new(&["n", "dim", "bound"]);
    t.push(vec![n.into(), dim.into(), (2 * n).into()]);
    cfg.stamp(&mut t);
    t.meta("tol", tol);
    t.meta("m_scan", m_scan);
    Ok(t)
}

pub fn cmd_sum_rule(cfg: &RunConfig, m: i32, ts: &[f64]) -> CliResult<Table> {
    let p = cfg.params()?;
    let s = cfg.settings()?;
    let mut t = Table::new(&["t", "series", "closed_form", "relative_error", "n_used"]);
    for &x in ts {
        let rule = hardy_hille_sum(p.b, p.a, m, x, &s)?;
        t.push(vec![
            x.into(),
            rule.series.into(),
            rule.closed_form.into(),
            rule.relative_error().into(),
            rule.n_used.into(),
        ]);
    }
    cfg.stamp(&mut t);
    t.meta("m", m);
    Ok(t)
}

pub fn cmd_oracle(cfg: &RunConfig, m: i32, gap: &Gap) -> CliResult<Table> {
    let p = cfg.params()?;
    let n_target = if gap.is_below_lowest() { 0 } else { gap.n_gap as u32 + 1 };
    let grid = OracleGrid::default_for(&p, n_target)?;
    let lo = if gap.is_below_lowest() { -10.0 * p.alpha.powi(2).max(p.b).max(1.0) } else { gap.lower };
    let ex = extrapolated_in(p.b, p.a, p.alpha, m, &grid, lo, gap.upper)?;
    let mut t = Table::new(&["index", "E_coarse", "E_fine", "E_extrapolated"]);
    for i in 0..ex.coarse.len().max(ex.fine.len()) {
        t.push(vec![
            i.into(),
            ex.coarse.get(i).copied().into(),
            ex.fine.get(i).copied().into(),
            ex.extrapolated.get(i).copied().into(),
        ]);
    }
    cfg.stamp(&mut t);
    t.meta("m", m);
    t.meta("gap", gap);
    t.meta("h_coarse", ex.h_coarse);
    t.meta("h_fine", ex.h_fine);
    Ok(t)
}

pub fn cmd_audit(cfg: &RunConfig, m_list: &[i32], gap: &Gap, tol: f64) -> CliResult<Table> {
    let p = cfg.params()?;
    let rep = channel_audit(&p, m_list, gap, &cfg.settings()?, tol)?;
    let mut t = Table::new(&[
        "m",
        "oracle_E",
        "oracle_count",
        "paper_E",
        "bs_E",
        "paper_diff",
        "bs_diff",
        "verdict",
        "mirror_E",
        "mirror_diff",
    ]);
    for a in &rep.modes {
        let verdict = serde_json::to_value(a.verdict)
            .ok()
            .and_then(|v| v.as_str().map(str::to_owned))
            .unwrap_or_default();
        t.push(vec![
            a.m.into(),
            a.oracle.extrapolated.first().copied().into(),
            a.oracle.extrapolated.len().into(),
            a.paper_root.into(),
            a.bs_root.into(),
            a.paper_diff.into(),
            a.bs_diff.into(),
            Cell::Text(verdict),
            a.mirror.as_ref().and_then(|v| v.first().copied()).into(),
            a.mirror_diff.into(),
        ]);
    }
    cfg.stamp(&mut t);
    t.meta("gap", gap);
    t.meta("tolerance", tol);
    t.meta("grid", rep.grid);
    t.meta("matching_form", rep.matching_form);
    Ok(t)
}

pub fn cmd_small_b(cfg: &RunConfig, m: i32, b_max: f64, b_step: f64) -> CliResult<Table> {
    if !(b_step > 0.0 && b_max >= b_step) {
        return Err(CliError::Config(format!("need 0 < b-step <= b-max, got {b_step}, {b_max}")));
    }
    let count = (b_max / b_step + 1e-9).floor() as usize;
    let grid: Vec<f64> = (1..=count).map(|i| i as f64 * b_step).collect();
    let track = small_b_track(cfg.a, cfg.alpha, m, &grid)?;
    let mut t = Table::new(&["B", "E", "E_mirrored"]);
    t.push(vec![0.0.into(), track.e0.into(), track.e0.into()]);
    for pt in &track.points {
        t.push(vec![pt.b.into(), pt.energy.into(), pt.mirrored.into()]);
    }
    t.meta("a", cfg.a);
    t.meta("alpha", cfg.alpha);
    t.meta("m", m);
    t.meta("quadratic", track.quadratic);
    t.meta("intercept", track.intercept);
    t.meta("min_rise", track.min_rise);
    t.meta("evenness", track.evenness);
    t.meta("grid", track.grid);
    Ok(t)
}

fn emit(cfg: &RunConfig, command: &str, table: &Table) -> CliResult<()> {
    let text = match cfg.format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(command),
    };
    match &cfg.output_path {
        Some(path) => write_file(path, &text),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

pub(crate) fn write_file(path: &Path, text: &str) -> CliResult<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    fs::write(path, text)?;
    Ok(())
}

/// Run one parsed invocation.
pub fn execute(cli: &Cli) -> CliResult<()> {
    let cfg = resolve_config(cli)?;
    let name = cli.command.name();
    let table = match &cli.command {
        Command::Levels { n_max } => cmd_levels(&cfg, cfg.b, *n_max)?,
        Command::Coeff { n, m_max } => cmd_coeff(&cfg, *n, *m_max)?,
        Command::Mu {
            m,
            energies,
            e_min,
            e_max,
            points,
        } => {
            let mut es = energies.clone();
            match (e_min, e_max) {
                (Some(lo), Some(hi)) => es.extend(sample_grid(*lo, *hi, *points)),
                (None, None) => {}
                _ => return Err(CliError::Config("--e-min and --e-max go together".into())),
            }
            if es.is_empty() {
                return Err(CliError::Config("give --E or --e-min/--e-max".into()));
            }
            cmd_mu(&cfg, *m, &es)?
        }
        Command::Solve { m, gap } => cmd_solve(&cfg, *m, &parse_gap(cfg.b, gap)?)?,
        Command::Cluster { n, m_cap, stop_tol } => cmd_cluster(&cfg, *n, *m_cap, *stop_tol)?,
        Command::Profile { m, gap, r_max, points } => cmd_profile(&cfg, *m, &parse_gap(cfg.b, gap)?, *r_max, *points)?,
        Command::Density { n, m, r_max, points } => cmd_density(&cfg, *n, *m, *r_max, *points)?,
        Command::Resonance { n } => cmd_resonance(&cfg, *n)?,
        Command::SpecialRadii { n, m } => cmd_special_radii(&cfg, *n, *m)?,
        Command::KernelDim { n, tol, m_scan } => cmd_kernel_dim(&cfg, *n, *tol, *m_scan)?,
        Command::SumRule { m, t } => cmd_sum_rule(&cfg, *m, t)?,
        Command::Oracle { m, gap } => cmd_oracle(&cfg, *m, &parse_gap(cfg.b, gap)?)?,
        Command::Audit { m_list, gap, tol } => cmd_audit(&cfg, m_list, &parse_gap(cfg.b, gap)?, *tol)?,
        Command::SmallB { m, b_max, b_step } => cmd_small_b(&cfg, *m, *b_max, *b_step)?,
        Command::Figure { name, svg } => {
            let dir = cfg.output_path.clone().unwrap_or_else(|| PathBuf::from("."));
            for path in cmd_figure(&cfg, *name, &dir, *svg)? {
                println!("{}", path.display());
            }
            return Ok(());
        }
    };
    emit(&cfg, name, &table)
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
